#ifndef CMCOMM_CORPUS_HPP_
#define CMCOMM_CORPUS_HPP_

#include <string>
#include <vector>

#include "cmcomm/algebra.hpp"

namespace cmcomm {

  // Groups use the signature (*, inv, e) except the abelian ones, which use
  // (+, -, 0).  Dihedral elements are ordered r^0..r^{m-1}, s r^0..s r^{m-1},
  // acting on Z_m by r(x) = x + 1, s(x) = -x; products compose right to left.
  FiniteAlgebra trivial_algebra();
  FiniteAlgebra cyclic_group(std::size_t n);
  FiniteAlgebra klein_group();  // Z2 x Z2, element 2a + b for (a, b)
  FiniteAlgebra dihedral_group(std::size_t m);  // m = 3 gives S3
  FiniteAlgebra z4_ring();
  FiniteAlgebra semilattice2();

  struct CorpusEntry {
    FiniteAlgebra algebra;
    std::string   file_name;  // under data/algebras
    bool          group       = false;
    bool          binary_only = false;
  };

  // trivial, Z2, Z3, Z4, Z2xZ2, S3, Z4ring, semilattice2, D4.
  std::vector<CorpusEntry> builtin_corpus();

}  // namespace cmcomm

#endif  // CMCOMM_CORPUS_HPP_

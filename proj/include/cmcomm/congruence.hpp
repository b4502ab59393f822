#ifndef CMCOMM_CONGRUENCE_HPP_
#define CMCOMM_CONGRUENCE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "cmcomm/algebra.hpp"
#include "cmcomm/partition.hpp"

namespace cmcomm {

  // Least congruence containing the pairs.
  //
  // Pairs are merged in a union-find structure and pushed through every basic
  // translation x -> f(c_0, ..., x, ..., c_{r-1}) until nothing new merges;
  // unary polynomials are compositions of these, so the fixpoint is Cg.
  Partition cg(FiniteAlgebra const& alg, std::vector<Pair> const& pairs);

  // Least congruence above p containing the pairs.
  Partition cg(FiniteAlgebra const& alg, Partition const& p, std::vector<Pair> const& pairs);

  //! All congruences of a finite algebra with their order and lattice tables.
  //!
  //! Elements are sorted by decreasing number of blocks, ties broken by the
  //! representative arrays, so index 0 is the equality relation and the last
  //! index is the full relation.
  class CongruenceLattice {
   public:
    explicit CongruenceLattice(std::vector<Partition> elements);

    std::size_t size() const noexcept {
      return _elements.size();
    }
    Partition const& operator[](std::size_t i) const {
      return _elements.at(i);
    }
    std::vector<Partition> const& elements() const noexcept {
      return _elements;
    }

    bool leq(std::size_t i, std::size_t j) const {
      return _leq[i * size() + j];
    }
    std::size_t join(std::size_t i, std::size_t j) const {
      return _join[i * size() + j];
    }
    std::size_t meet(std::size_t i, std::size_t j) const {
      return _meet[i * size() + j];
    }
    std::size_t bottom() const noexcept {
      return 0;
    }
    std::size_t top() const noexcept {
      return size() - 1;
    }

    std::optional<std::size_t> index_of(Partition const& p) const;

    // Elements that are not the join of two strictly smaller elements
    // (the bottom is excluded).
    std::vector<std::size_t> join_irreducibles() const;

   private:
    std::vector<Partition> _elements;
    std::vector<bool>      _leq;
    std::vector<std::size_t> _join;
    std::vector<std::size_t> _meet;
  };

  // Principal congruences of all pairs, closed under join.
  CongruenceLattice congruence_lattice(FiniteAlgebra const& alg);

  struct ModularityReport {
    bool holds = true;
    // (x, y, z) with x <= z and x v (y ^ z) != (x v y) ^ z, as lattice indices
    std::optional<std::array<std::size_t, 3>> counterexample;
  };

  //! Checks the modular law on an abstract finite lattice given by its order
  //! relation; join and meet tables are derived from the order.
  ModularityReport is_modular_lattice(std::size_t size, std::vector<bool> const& leq);
  ModularityReport is_modular_lattice(CongruenceLattice const& lat);

}  // namespace cmcomm

#endif  // CMCOMM_CONGRUENCE_HPP_

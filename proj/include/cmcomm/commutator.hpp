#ifndef CMCOMM_COMMUTATOR_HPP_
#define CMCOMM_COMMUTATOR_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "cmcomm/algebra.hpp"
#include "cmcomm/congruence.hpp"
#include "cmcomm/cube.hpp"
#include "cmcomm/partition.hpp"

namespace cmcomm {

  //! Outcome of a centrality scan.  When the condition fails, the witness is
  //! the first offending cube in ascending code order.
  struct CentralityReport {
    struct Witness {
      Cube              cube;
      std::size_t       coordinate = 0;
      Line              pivot;
      std::vector<Line> supporting;
    };

    struct TwoTermWitness {
      Cube h;
      Cube g;
    };

    bool                          holds = true;
    std::optional<Witness>        witness;
    std::optional<TwoTermWitness> two_term_witness;
  };

  // C(T; j; delta): for every m in M, if all (j)-supporting lines are delta
  // pairs then so is the (j)-pivot line.  Throws CoordinateError.
  CentralityReport centrality(MatrixAlgebra const& m, std::size_t j, Partition const& delta);

  // Least delta with C(T; j; delta), computed as a Horn fixpoint: starting
  // from the equality relation, add the pivot of every cube whose supporting
  // lines are already in delta and regenerate the congruence, until stable.
  Partition commutator_at(FiniteAlgebra const& alg, MatrixAlgebra const& m, std::size_t j);

  // [T] at the pivot coordinate k-1.
  Partition higher_commutator(FiniteAlgebra const&      alg,
                              CongruenceSequence const& t,
                              CubeOptions const&        options = {});
  Partition higher_commutator(FiniteAlgebra const& alg, MatrixAlgebra const& m);

  // Meet of every delta in the lattice with C(T; k-1; delta).  Independent
  // of the fixpoint; serves as its oracle.
  Partition commutator_by_lattice_scan(MatrixAlgebra const& m, CongruenceLattice const& lat);

  // C_tt(T; delta): any h, g in M agreeing modulo delta off the all-ones
  // vertex agree modulo delta there as well.  Cubes are bucketed by the delta
  // classes of their first 2^k - 1 entries, so the scan is linear in |M|.
  CentralityReport two_term_centrality(MatrixAlgebra const& m, Partition const& delta);

  // Least delta with C_tt(T; delta), by the same Horn iteration.
  Partition two_term_commutator(FiniteAlgebra const&      alg,
                                CongruenceSequence const& t,
                                CubeOptions const&        options = {});
  Partition two_term_commutator(FiniteAlgebra const& alg, MatrixAlgebra const& m);

  //! [T]_j for every pivot coordinate j, as reported for algebras where
  //! modularity (and with it symmetry) has not been established.
  struct CoordinateCommutators {
    std::vector<Partition> per_coordinate;

    bool all_equal() const;
  };

  CoordinateCommutators commutators_per_coordinate(FiniteAlgebra const& alg, MatrixAlgebra const& m);

}  // namespace cmcomm

#endif  // CMCOMM_COMMUTATOR_HPP_

#ifndef CMCOMM_PROPS_HPP_
#define CMCOMM_PROPS_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmcomm/algebra.hpp"
#include "cmcomm/congruence.hpp"
#include "cmcomm/cube.hpp"
#include "cmcomm/dayterms.hpp"

namespace cmcomm {

  //! One algebra with its congruence lattice and memoized M(T) and [T], keyed
  //! by the lattice indices of T.
  class Workbench {
   public:
    using Indices = std::vector<std::size_t>;

    explicit Workbench(FiniteAlgebra alg, CubeOptions options = {});

    FiniteAlgebra const& algebra() const noexcept {
      return _alg;
    }
    CongruenceLattice const& lattice() const noexcept {
      return _lattice;
    }
    CubeOptions const& options() const noexcept {
      return _options;
    }

    CongruenceSequence   sequence(Indices const& t) const;
    MatrixAlgebra const& matrices(Indices const& t);
    // Lattice index of [T] at the pivot k-1.
    std::size_t commutator(Indices const& t);
    std::size_t index_of(Partition const& p) const;

    // Every element of Con^k, in lexicographic order of indices.
    std::vector<Indices> sequences(std::size_t k) const;
    // Quantification cap: k <= 3 when |Con| <= 5, else k <= 2.
    std::size_t default_kmax() const noexcept {
      return _lattice.size() <= 5 ? 3 : 2;
    }
    // Whether M(T) for k coordinates fits the cube budget.
    bool fits(std::size_t k) const;

    void release_matrices() {
      _matrices.clear();
    }

   private:
    FiniteAlgebra                                     _alg;
    CubeOptions                                       _options;
    CongruenceLattice                                 _lattice;
    std::map<Indices, std::unique_ptr<MatrixAlgebra>> _matrices;
    std::map<Indices, std::size_t>                    _commutators;
  };

  struct TheoremFailure {
    std::string sequence;  // the T (and further parameters) at fault
    std::string details;
  };

  struct TheoremReport {
    std::string                 theorem;
    std::string                 algebra;
    std::size_t                 instances  = 0;
    bool                        applicable = true;
    std::string                 note;
    std::vector<TheoremFailure> failures;

    bool passed() const noexcept {
      return !applicable || failures.empty();
    }
  };

  std::string to_string(CongruenceSequence const& t);

  // The checks below quantify over all T in Con^k for 1 <= k <= kmax (k >= 2
  // where the statement needs two coordinates), skipping k whose cubes exceed
  // the budget.  Those that need a Day chain are reported not applicable
  // when ops is empty.

  // [T] <= meet of T; monotonicity in every coordinate; [a_0,...] <= [a_1,...].
  TheoremReport check_basic_properties(Workbench& bench, std::size_t kmax);

  // [sigma T] = [T] for every permutation, and [T]_j = [T]_{k-1} for every j.
  TheoremReport check_symmetry(Workbench& bench, std::size_t kmax, DayOperations const* ops);

  // [.., g_1 v g_2] = [.., g_1] v [.., g_2] over pairs (triples when |Con| <= 5)
  // in the last and first coordinate, and over join-irreducible decompositions.
  TheoremReport check_additivity(Workbench& bench, std::size_t kmax, DayOperations const* ops);

  // [T] v pi = f^-1([f(T v pi)]) for every pi, with f: A -> A/pi.
  TheoremReport check_homomorphism_property(Workbench& bench, std::size_t kmax, DayOperations const* ops);
  // f([T] v pi) = [f(T)] for every pi and every T with all entries above pi.
  TheoremReport check_homomorphism_image(Workbench& bench, std::size_t kmax, DayOperations const* ops);

  // C(T; k-1; delta) iff C_tt(T; delta) for every delta, and equal fixpoints.
  TheoremReport check_two_term_equivalence(Workbench& bench, std::size_t kmax, DayOperations const* ops);

  // Cg(X(T)) = [T].
  TheoremReport check_generators(Workbench& bench, std::size_t kmax, DayOperations const* ops);

  // Fixpoint = meet of all delta in Con with C(T; k-1; delta).
  TheoremReport check_lattice_scan(Workbench& bench, std::size_t kmax);

  // Every cube of M(T) has its edges across coordinate i in theta_i, and
  // M(T) contains its generators.
  TheoremReport check_edge_invariants(Workbench& bench, std::size_t kmax);

  // Shift rotations: the square formula, membership in M(T), propagation of
  // delta-pairs from (j)- to (l)-supporting lines, and the pivot equivalence.
  TheoremReport check_shift_rotations(Workbench& bench, std::size_t kmax, DayOperations const* ops);

  // Along every branch of the tree, the (i+1)-supporting lines at f with
  // f(j) = 0 for some j <= i are constant.
  TheoremReport check_tree_rotations(Workbench& bench, std::size_t kmax, DayOperations const* ops);

  // <a,c> in delta iff <m_e(a,a,c,c), m_e(a,b,d,c)> in delta for all e,
  // whenever <b,d> in delta.  Exhaustive over A^4 for |A| <= 6.
  TheoremReport check_shift_pairs(Workbench& bench, DayOperations const* ops);

  // The shifting configuration over theta_1, theta_2 and gamma >= their meet.
  TheoremReport check_shifting_lemma(Workbench& bench, DayOperations const* ops);

  // All of the above in a fixed order.
  std::vector<TheoremReport> run_harness(Workbench& bench, std::size_t kmax, DayOperations const* ops);

}  // namespace cmcomm

#endif  // CMCOMM_PROPS_HPP_

#ifndef CMCOMM_DAYTERMS_HPP_
#define CMCOMM_DAYTERMS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "cmcomm/algebra.hpp"
#include "cmcomm/cube.hpp"
#include "cmcomm/partition.hpp"
#include "cmcomm/term.hpp"

namespace cmcomm {

  //! Day terms m_0, ..., m_n over the variables x, y, z, u (indices 0..3):
  //!
  //!   (1) m_e(x,y,y,x) = x           (2) m_0(x,y,z,u) = x
  //!   (3) m_n(x,y,z,u) = u           (4) m_e(x,x,u,u) = m_{e+1}(x,x,u,u), e even
  //!   (5) m_e(x,y,y,u) = m_{e+1}(x,y,y,u), e odd
  struct DayChain {
    std::vector<Term> terms;

    std::size_t length() const noexcept {
      return terms.empty() ? 0 : terms.size() - 1;
    }

    friend bool operator==(DayChain const&, DayChain const&) = default;
  };

  inline std::vector<std::string> const& day_variable_names() {
    static std::vector<std::string> const names{"x", "y", "z", "u"};
    return names;
  }

  struct DaySearchResult {
    std::optional<DayChain> chain;
    // False if the search stopped at the cap before deciding.
    bool complete = false;
    // Number of 4-ary term operations generated, as restrictions to the
    // argument tuples the identities mention.
    std::size_t explored = 0;
  };

  // Searches the 4-ary term operations for a shortest chain from x to u.
  // Members are compared on the tuples (x,x,u,u) and (x,y,y,u) only, which is
  // all the identities look at; the enumeration stops as soon as u becomes
  // reachable.  A returned chain is verified on all of A^4.
  DaySearchResult find_day_chain(FiniteAlgebra const& alg, std::size_t cap = default_clone_cap);

  struct ChainFailure {
    int                  identity = 0;  // 1..5
    std::size_t          e        = 0;
    std::vector<Element> tuple;  // values of the identity's variables
  };

  struct ChainVerification {
    bool                        holds = true;
    std::optional<ChainFailure> failure;
  };

  // Exhaustive check of (1)-(5); the first failure in identity order, then e,
  // then ascending tuple, is reported.  Throws SignatureError.
  ChainVerification verify_day_chain(FiniteAlgebra const& alg, DayChain const& chain);

  //! A chain tabulated over one algebra.
  class DayOperations {
   public:
    DayOperations(FiniteAlgebra const& alg, DayChain chain);

    DayChain const& chain() const noexcept {
      return _chain;
    }
    std::size_t length() const noexcept {
      return _chain.length();
    }
    std::size_t universe_size() const noexcept {
      return _n;
    }

    Element operator()(std::size_t e, Element x, Element y, Element z, Element u) const {
      return _tables[e][((x * _n + y) * _n + z) * _n + u];
    }

   private:
    DayChain                          _chain;
    std::size_t                       _n;
    std::vector<std::vector<Element>> _tables;
  };

  // Whether <m_e(a,a,c,c), m_e(a,b,d,c)> lies in delta for every e.  Throws
  // ContractError unless <b,d> is in delta.
  bool shift_pair_test(DayOperations const& ops,
                       Partition const&     delta,
                       Element              a,
                       Element              b,
                       Element              c,
                       Element              d);

  // R^e_{j,l}(h): the (j,l)-square [[r,s],[u,v]] at each f* becomes
  // [[s,s],[m_e(s,r,u,v), m_e(s,s,v,v)]].  Throws CoordinateError.
  Cube shift_rotation(Cube const& h, std::size_t j, std::size_t l, std::size_t e, DayOperations const& ops);

  // A vertex of the tree of sequences over 0..n of length below k.
  using TreeAddress = std::vector<std::size_t>;

  // h^d: rotations at (0,1), (1,2), ... with the Day term indices d(0),
  // d(1), ...  Throws TreeError if d is too long or has entries above n.
  Cube rotate_along_tree(Cube const& h, TreeAddress const& d, DayOperations const& ops);

  // X(T): the (k-1)-pivot lines of h^d for every h in M(T) and every leaf d,
  // ascending and without duplicates.
  std::vector<Pair> generator_set(MatrixAlgebra const& m, DayOperations const& ops);

}  // namespace cmcomm

#endif  // CMCOMM_DAYTERMS_HPP_

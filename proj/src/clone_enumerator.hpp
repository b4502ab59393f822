#ifndef CMCOMM_SRC_CLONE_ENUMERATOR_HPP_
#define CMCOMM_SRC_CLONE_ENUMERATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "cmcomm/algebra.hpp"

namespace cmcomm::detail {

  //! Incremental enumeration of m-ary term operations, each represented by its
  //! values on a fixed list of argument tuples (the domain).
  //!
  //! Term operations compose pointwise, so restricting every member to a
  //! subset of A^m yields the subuniverse of A^domain generated by the
  //! restricted projections; with the full domain this is the clone itself.
  //! Members are discovered in semi-naive order, so witness terms have the
  //! minimal depth among the discovery routes taken.
  class CloneEnumerator {
   public:
    using Id = std::uint32_t;

    CloneEnumerator(FiniteAlgebra const&                     alg,
                    std::size_t                              m,
                    std::vector<std::vector<Element>> const& domain,
                    std::size_t                              cap);

    // Processes the next member; returns false once nothing is left to
    // process (closure complete or cap reached).
    bool step();

    std::size_t size() const noexcept {
      return _count;
    }
    // True iff the closure finished without hitting the cap.
    bool complete() const noexcept {
      return _next >= _count && !_truncated;
    }
    bool truncated() const noexcept {
      return _truncated;
    }

    std::span<std::uint8_t const> values(Id id) const {
      return {_arena.data() + std::size_t(id) * _width, _width};
    }
    Term witness(Id id) const;

    std::size_t domain_size() const noexcept {
      return _width;
    }

   private:
    struct Origin {
      std::size_t      op;  // operation index, or npos for a projection
      std::vector<Id> children;
      std::size_t      variable = 0;
    };

    struct Hash {
      CloneEnumerator const* self;
      std::size_t            operator()(Id id) const noexcept;
    };
    struct Equal {
      CloneEnumerator const* self;
      bool                   operator()(Id a, Id b) const noexcept;
    };

    void add_scratch(Origin origin);

    FiniteAlgebra const&            _alg;
    std::size_t                     _width;
    std::size_t                     _cap;
    std::vector<std::uint8_t>       _arena;
    std::vector<Origin>             _origin;
    std::unordered_set<Id, Hash, Equal> _index;
    std::size_t                     _count     = 0;
    std::size_t                     _next      = 0;
    bool                            _truncated = false;
  };

}  // namespace cmcomm::detail

#endif  // CMCOMM_SRC_CLONE_ENUMERATOR_HPP_

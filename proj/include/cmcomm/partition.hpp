#ifndef CMCOMM_PARTITION_HPP_
#define CMCOMM_PARTITION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cmcomm {

  using Element = std::uint32_t;
  using Pair    = std::pair<Element, Element>;

  //! An equivalence relation on {0, ..., n-1} in canonical form.
  //!
  //! The representation is the array `rep` with `rep[a]` the least element of
  //! the block of `a`.  Two partitions are equal if and only if their arrays
  //! are equal, so the default comparison operators are the lattice-agnostic
  //! identity tests used for hashing and deduplication.
  class Partition {
   public:
    Partition() = default;

    // Throws UniverseError unless rep is canonical.
    explicit Partition(std::vector<Element> rep);

    static Partition equality(std::size_t n);
    static Partition full(std::size_t n);

    // Canonical partition from an arbitrary block labelling (label[a] equal
    // for a, b iff they share a block).
    template <typename Label>
    static Partition from_labels(std::vector<Label> const& label);

    // Finest partition containing every pair.
    static Partition from_pairs(std::size_t n, std::vector<Pair> const& pairs);

    std::size_t size() const noexcept {
      return _rep.size();
    }
    Element rep(Element a) const {
      return _rep[a];
    }
    std::vector<Element> const& reps() const noexcept {
      return _rep;
    }

    bool related(Element a, Element b) const {
      return _rep[a] == _rep[b];
    }

    std::size_t number_of_blocks() const;
    std::vector<std::vector<Element>> blocks() const;

    // Block index of each element, blocks numbered by ascending least element.
    std::vector<Element> block_indices() const;

    bool is_equality() const;
    bool is_full() const;

    // Refinement order: *this <= other.
    bool leq(Partition const& other) const;

    // Pairs (a, b) with a < b related by the partition, spanning the blocks:
    // (rep, x) for every non-least x.
    std::vector<Pair> spanning_pairs() const;

    friend bool operator==(Partition const&, Partition const&) = default;
    friend auto operator<=>(Partition const&, Partition const&) = default;

   private:
    std::vector<Element> _rep;
  };

  // Smallest equivalence containing both.  Throws UniverseError on size
  // mismatch.
  Partition join(Partition const& p, Partition const& q);
  Partition meet(Partition const& p, Partition const& q);

  // "|0 2|1 3|": blocks by ascending least element, elements ascending.
  std::string to_string(Partition const& p);

  // Parses the block form.  The universe size is the number of elements
  // mentioned, unless n is given, in which case every element of 0..n-1 must
  // appear exactly once.  Throws ParseError.
  Partition parse_partition(std::string_view text, std::size_t n = 0);

  //! Union-find over a fixed universe, used to build partitions by merging.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n);
    explicit UnionFind(Partition const& p);

    Element find(Element a);
    // Returns true if a merge happened.
    bool unite(Element a, Element b);
    Partition partition();

   private:
    std::vector<Element> _parent;
  };

  template <typename Label>
  Partition Partition::from_labels(std::vector<Label> const& label) {
    std::vector<Element> rep(label.size());
    for (std::size_t a = 0; a < label.size(); ++a) {
      rep[a] = static_cast<Element>(a);
      for (std::size_t b = 0; b < a; ++b) {
        if (label[b] == label[a]) {
          rep[a] = rep[b];
          break;
        }
      }
    }
    return Partition(std::move(rep));
  }

}  // namespace cmcomm

template <>
struct std::hash<cmcomm::Partition> {
  std::size_t operator()(cmcomm::Partition const& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : p.reps()) {
      h = (h ^ x) * 0x100000001b3ULL;
    }
    return h;
  }
};

#endif  // CMCOMM_PARTITION_HPP_

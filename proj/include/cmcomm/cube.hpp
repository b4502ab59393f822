#ifndef CMCOMM_CUBE_HPP_
#define CMCOMM_CUBE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cmcomm/algebra.hpp"
#include "cmcomm/partition.hpp"

namespace cmcomm {

  // T = (theta_0, ..., theta_{k-1}); all entries are congruences of one
  // algebra.
  using CongruenceSequence = std::vector<Partition>;

  // A vertex f of the cube 2^k, as the integer with bit i equal to f(i).
  // Bit i = 0 is the a-side of coordinate i.
  using CubeIndex = std::uint32_t;

  //! An element of A^(2^k): entry f is the vertex m_f.
  class Cube {
   public:
    Cube() = default;
    Cube(std::size_t k, std::vector<Element> entries);

    // The k = 2 cube whose (0,1)-square displays as [[r, s], [u, v]]: rows
    // follow coordinate 0, columns coordinate 1.
    static Cube from_square(Element r, Element s, Element u, Element v);
    static Cube constant(std::size_t k, Element a);

    std::size_t dimension() const noexcept {
      return _k;
    }
    Element operator[](CubeIndex f) const {
      return _entries[f];
    }
    std::vector<Element> const& entries() const noexcept {
      return _entries;
    }

    friend bool operator==(Cube const&, Cube const&) = default;
    friend auto operator<=>(Cube const&, Cube const&) = default;

   private:
    std::size_t          _k = 0;
    std::vector<Element> _entries;
  };

  // "[m_0,m_1,...]" in ascending index order.
  std::string to_string(Cube const& c);

  //! A (j)-cross-section line: (entry with f(j) = 0, entry with f(j) = 1).
  struct Line {
    Element     first  = 0;
    Element     second = 0;
    CubeIndex   position   = 0;  // the index with bit j cleared
    std::size_t coordinate = 0;

    friend bool operator==(Line const&, Line const&) = default;
  };

  //! A (j,l)-cross-section square [[r, s], [u, v]]: rows follow coordinate j,
  //! columns coordinate l, so r = (a_j, a_l), s = (a_j, b_l), u = (b_j, a_l),
  //! v = (b_j, b_l).
  struct Square {
    Element     r = 0, s = 0, u = 0, v = 0;
    CubeIndex   position = 0;  // the index with bits j and l cleared
    std::size_t j = 0, l = 0;

    friend bool operator==(Square const&, Square const&) = default;
  };

  enum class CrossSection { pivot, supporting };

  // All 2^{k-1} (j)-lines, ascending position.  Throws CoordinateError.
  std::vector<Line> lines(Cube const& m, std::size_t j);
  // All 2^{k-2} (j,l)-squares, ascending position.  Throws CoordinateError.
  std::vector<Square> squares(Cube const& m, std::size_t j, std::size_t l);

  // Pivot iff every coordinate outside the free ones is on the b-side.
  CrossSection classify(std::size_t k, CubeIndex position, std::size_t j);
  CrossSection classify(std::size_t k, CubeIndex position, std::size_t j, std::size_t l);

  // Index of the (j)-pivot line's a-side vertex: all ones except bit j.
  inline CubeIndex pivot_position(std::size_t k, std::size_t j) {
    return ((CubeIndex(1) << k) - 1) & ~(CubeIndex(1) << j);
  }

  //! Bit-packed encoding of cubes: entry f occupies bits [f*b, (f+1)*b) with
  //! b = max(1, ceil(log2 n)).  Numeric order of codes is lexicographic
  //! order of entries read from the highest index down.
  class CubeCodec {
   public:
    CubeCodec(std::size_t k, std::size_t n);

    std::size_t dimension() const noexcept {
      return _k;
    }
    std::size_t bits_per_entry() const noexcept {
      return _bits;
    }
    std::size_t total_bits() const noexcept {
      return _bits << _k;
    }

    std::uint64_t encode(Cube const& c) const;
    Cube          decode(std::uint64_t code) const;
    Element       entry(std::uint64_t code, CubeIndex f) const {
      return static_cast<Element>((code >> (f * _bits)) & _mask);
    }

   private:
    std::size_t   _k;
    std::size_t   _n;
    std::size_t   _bits;
    std::uint64_t _mask;
  };

  struct CubeOptions {
    // Budget for 2^k * ceil(log2 n); at most 64.
    std::size_t capacity_bits = 32;
  };

  // For each coordinate i and each ordered pair (a, b) in theta_i, the cube
  // equal to a where f(i) = 0 and b where f(i) = 1.  Deduplicated, ascending
  // by packed code.  Reflexive pairs contribute every constant cube, so term
  // closure of this set equals polynomial closure.
  std::vector<Cube> one_coordinate_generators(CongruenceSequence const& t);

  //! The subalgebra M(T) of A^(2^k), held as sorted packed codes.
  class MatrixAlgebra {
   public:
    MatrixAlgebra(CongruenceSequence t, CubeCodec codec, std::vector<std::uint64_t> codes);

    CongruenceSequence const& sequence() const noexcept {
      return _t;
    }
    std::size_t dimension() const noexcept {
      return _t.size();
    }
    CubeCodec const& codec() const noexcept {
      return _codec;
    }
    std::vector<std::uint64_t> const& codes() const noexcept {
      return _codes;
    }
    std::size_t size() const noexcept {
      return _codes.size();
    }
    Cube cube(std::size_t i) const {
      return _codec.decode(_codes.at(i));
    }

    bool contains(Cube const& c) const;
    bool contains_code(std::uint64_t code) const;

   private:
    CongruenceSequence         _t;
    CubeCodec                  _codec;
    std::vector<std::uint64_t> _codes;
  };

  // Throws CapacityError when 2^k ceil(log2 n) exceeds options.capacity_bits,
  // or ContractError when T has the wrong universe or is empty.
  MatrixAlgebra generate_matrix_algebra(FiniteAlgebra const&      alg,
                                        CongruenceSequence const& t,
                                        CubeOptions const&        options = {});

  // Number of cubes whose edges across coordinate i stay inside theta_i, or 0
  // if counting would exceed limit.
  std::uint64_t count_edge_compatible(CongruenceSequence const& t, std::uint64_t limit);

  // True iff every edge across coordinate i joins theta_i-related entries.
  bool satisfies_edge_invariant(Cube const& c, CongruenceSequence const& t);

}  // namespace cmcomm

#endif  // CMCOMM_CUBE_HPP_

#include "cmcomm/cube.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "cmcomm/closure.hpp"
#include "cmcomm/error.hpp"

namespace cmcomm {

  Cube::Cube(std::size_t k, std::vector<Element> entries) : _k(k), _entries(std::move(entries)) {
    if (k >= 31 || _entries.size() != (std::size_t(1) << k)) {
      throw CoordinateError("a cube of dimension " + std::to_string(k) + " has 2^"
                            + std::to_string(k) + " entries");
    }
  }

  Cube Cube::from_square(Element r, Element s, Element u, Element v) {
    // index bit 0 = row (coordinate 0), bit 1 = column (coordinate 1)
    return Cube(2, {r, u, s, v});
  }

  Cube Cube::constant(std::size_t k, Element a) {
    return Cube(k, std::vector<Element>(std::size_t(1) << k, a));
  }

  std::string to_string(Cube const& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.entries().size(); ++i) {
      out += (i ? "," : "") + std::to_string(c.entries()[i]);
    }
    return out + "]";
  }

  namespace {
    void check_coordinate(std::size_t k, std::size_t j) {
      if (j >= k) {
        throw CoordinateError("coordinate " + std::to_string(j) + " out of range for k = "
                              + std::to_string(k));
      }
    }
  }  // namespace

  std::vector<Line> lines(Cube const& m, std::size_t j) {
    std::size_t const k = m.dimension();
    check_coordinate(k, j);
    CubeIndex const   bit = CubeIndex(1) << j;
    std::vector<Line> result;
    for (CubeIndex f = 0; f < (CubeIndex(1) << k); ++f) {
      if (f & bit) {
        continue;
      }
      result.push_back(Line{m[f], m[f | bit], f, j});
    }
    return result;
  }

  std::vector<Square> squares(Cube const& m, std::size_t j, std::size_t l) {
    std::size_t const k = m.dimension();
    check_coordinate(k, j);
    check_coordinate(k, l);
    if (j == l) {
      throw CoordinateError("square coordinates must differ");
    }
    CubeIndex const     bj = CubeIndex(1) << j;
    CubeIndex const     bl = CubeIndex(1) << l;
    std::vector<Square> result;
    for (CubeIndex f = 0; f < (CubeIndex(1) << k); ++f) {
      if (f & (bj | bl)) {
        continue;
      }
      result.push_back(Square{m[f], m[f | bl], m[f | bj], m[f | bj | bl], f, j, l});
    }
    return result;
  }

  CrossSection classify(std::size_t k, CubeIndex position, std::size_t j) {
    check_coordinate(k, j);
    CubeIndex const all = (CubeIndex(1) << k) - 1;
    return (position | (CubeIndex(1) << j)) == all ? CrossSection::pivot
                                                   : CrossSection::supporting;
  }

  CrossSection classify(std::size_t k, CubeIndex position, std::size_t j, std::size_t l) {
    check_coordinate(k, j);
    check_coordinate(k, l);
    if (j == l) {
      throw CoordinateError("square coordinates must differ");
    }
    CubeIndex const all = (CubeIndex(1) << k) - 1;
    return (position | (CubeIndex(1) << j) | (CubeIndex(1) << l)) == all
               ? CrossSection::pivot
               : CrossSection::supporting;
  }

  CubeCodec::CubeCodec(std::size_t k, std::size_t n) : _k(k), _n(n) {
    _bits = n <= 2 ? 1 : static_cast<std::size_t>(std::bit_width(n - 1));
    if (k >= 31 || (_bits << k) > 64) {
      throw CapacityError("cubes of dimension " + std::to_string(k) + " over " + std::to_string(n)
                              + " elements need more than 64 bits",
                          double(_bits) * std::pow(2.0, double(k)));
    }
    _mask = (_bits == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << _bits) - 1);
  }

  std::uint64_t CubeCodec::encode(Cube const& c) const {
    if (c.dimension() != _k) {
      throw CoordinateError("cube dimension does not match the codec");
    }
    std::uint64_t code = 0;
    for (CubeIndex f = 0; f < (CubeIndex(1) << _k); ++f) {
      if (c[f] >= _n) {
        throw UniverseError("cube entry outside the universe");
      }
      code |= std::uint64_t(c[f]) << (f * _bits);
    }
    return code;
  }

  Cube CubeCodec::decode(std::uint64_t code) const {
    std::vector<Element> entries(std::size_t(1) << _k);
    for (CubeIndex f = 0; f < entries.size(); ++f) {
      entries[f] = entry(code, f);
    }
    return Cube(_k, std::move(entries));
  }

  std::vector<Cube> one_coordinate_generators(CongruenceSequence const& t) {
    if (t.empty()) {
      throw ContractError("congruence sequence must be non-empty");
    }
    std::size_t const k = t.size();
    std::size_t const n = t.front().size();
    std::vector<Cube> result;
    for (std::size_t i = 0; i < k; ++i) {
      if (t[i].size() != n) {
        throw UniverseError("congruences of different universes in one sequence");
      }
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (!t[i].related(a, b)) {
            continue;
          }
          std::vector<Element> entries(std::size_t(1) << k);
          for (CubeIndex f = 0; f < entries.size(); ++f) {
            entries[f] = (f >> i) & 1 ? b : a;
          }
          result.emplace_back(k, std::move(entries));
        }
      }
    }
    std::sort(result.begin(), result.end(), [](Cube const& x, Cube const& y) {
      return std::lexicographical_compare(x.entries().rbegin(), x.entries().rend(),
                                          y.entries().rbegin(), y.entries().rend());
    });
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  MatrixAlgebra::MatrixAlgebra(CongruenceSequence t, CubeCodec codec, std::vector<std::uint64_t> codes)
      : _t(std::move(t)), _codec(codec), _codes(std::move(codes)) {
    std::sort(_codes.begin(), _codes.end());
  }

  bool MatrixAlgebra::contains_code(std::uint64_t code) const {
    return std::binary_search(_codes.begin(), _codes.end(), code);
  }

  bool MatrixAlgebra::contains(Cube const& c) const {
    return c.dimension() == dimension() && contains_code(_codec.encode(c));
  }

  bool satisfies_edge_invariant(Cube const& c, CongruenceSequence const& t) {
    std::size_t const k = c.dimension();
    for (std::size_t i = 0; i < k; ++i) {
      CubeIndex const bit = CubeIndex(1) << i;
      for (CubeIndex f = 0; f < (CubeIndex(1) << k); ++f) {
        if (!(f & bit) && !t[i].related(c[f], c[f | bit])) {
          return false;
        }
      }
    }
    return true;
  }

  std::uint64_t count_edge_compatible(CongruenceSequence const& t, std::uint64_t limit) {
    std::size_t const    k        = t.size();
    std::size_t const    n        = t.front().size();
    std::size_t const    vertices = std::size_t(1) << k;
    std::vector<Element> value(vertices, 0);
    std::uint64_t        count    = 0;
    bool                 exceeded = false;
    // vertex f is constrained by its lower neighbours f ^ (1 << i), bit i set
    auto fits = [&](std::size_t f, Element x) {
      for (std::size_t i = 0; i < k; ++i) {
        if ((f >> i) & 1) {
          if (!t[i].related(value[f ^ (std::size_t(1) << i)], x)) {
            return false;
          }
        }
      }
      return true;
    };
    auto rec = [&](auto&& self, std::size_t f) -> void {
      if (exceeded) {
        return;
      }
      if (f == vertices) {
        if (++count > limit) {
          exceeded = true;
        }
        return;
      }
      for (Element x = 0; x < n; ++x) {
        if (fits(f, x)) {
          value[f] = x;
          self(self, f + 1);
        }
      }
    };
    rec(rec, 0);
    return exceeded ? 0 : count;
  }

  MatrixAlgebra generate_matrix_algebra(FiniteAlgebra const&      alg,
                                        CongruenceSequence const& t,
                                        CubeOptions const&        options) {
    if (t.empty()) {
      throw ContractError("congruence sequence must be non-empty");
    }
    std::size_t const n = alg.size();
    for (auto const& theta : t) {
      if (theta.size() != n) {
        throw UniverseError("congruence over " + std::to_string(theta.size())
                            + " elements for an algebra of size " + std::to_string(n));
      }
    }
    std::size_t const k     = t.size();
    std::size_t const bits  = n <= 2 ? 1 : static_cast<std::size_t>(std::bit_width(n - 1));
    double const      total = double(bits) * std::pow(2.0, double(k));
    if (total > double(std::min<std::size_t>(options.capacity_bits, 64))) {
      throw CapacityError("M(T) for k = " + std::to_string(k) + " over " + std::to_string(n)
                              + " elements needs " + std::to_string(std::size_t(total))
                              + " bits per cube, budget is "
                              + std::to_string(options.capacity_bits) + " (at most "
                              + std::to_string(n) + "^" + std::to_string(std::size_t(1) << k)
                              + " cubes)",
                          std::pow(double(n), std::pow(2.0, double(k))));
    }
    CubeCodec const            codec(k, n);
    std::vector<std::uint64_t> gens;
    for (auto const& c : one_coordinate_generators(t)) {
      gens.push_back(codec.encode(c));
    }
    std::vector<std::size_t> arities;
    for (auto const& op : alg.operations()) {
      arities.push_back(op.arity);
    }
    std::size_t const vertices = std::size_t(1) << k;
    std::size_t const b        = codec.bits_per_entry();
    std::uint64_t const mask   = (std::uint64_t(1) << b) - 1;
    auto apply = [&](std::size_t op, std::span<std::uint64_t const> args) -> std::uint64_t {
      auto const&   table = alg.operation(op).table;
      std::uint64_t out   = 0;
      for (std::size_t f = 0; f < vertices; ++f) {
        std::size_t index = 0;
        for (auto a : args) {
          index = index * n + ((a >> (f * b)) & mask);
        }
        out |= std::uint64_t(table[index]) << (f * b);
      }
      return out;
    };
    std::optional<std::size_t> group_op;
    if (!alg.group_operations().empty()) {
      group_op = alg.group_operations().front();
    }
    std::optional<std::size_t> saturation;
    if (auto bound = count_edge_compatible(t, std::uint64_t(1) << 22); bound != 0) {
      saturation = static_cast<std::size_t>(bound);
    }
    auto codes = detail::close<std::uint64_t>(arities, apply, gens, group_op, saturation);
    return MatrixAlgebra(t, codec, std::move(codes));
  }

}  // namespace cmcomm

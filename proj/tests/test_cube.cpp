#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cmcomm/congruence.hpp"
#include "cmcomm/corpus.hpp"
#include "cmcomm/cube.hpp"
#include "cmcomm/error.hpp"

using namespace cmcomm;

namespace {
  // Coordinatewise closure of a set of cubes under the basic operations,
  // by repeated full passes.
  std::set<Cube> naive_closure(FiniteAlgebra const& alg, std::vector<Cube> const& gens) {
    std::set<Cube> s(gens.begin(), gens.end());
    bool           grown = true;
    while (grown) {
      grown = false;
      std::vector<Cube> const current(s.begin(), s.end());
      for (std::size_t o = 0; o < alg.number_of_operations(); ++o) {
        std::size_t const r = alg.operation(o).arity;
        std::size_t       total = 1;
        for (std::size_t i = 0; i < r; ++i) {
          total *= current.size();
        }
        std::size_t const k = gens.front().dimension();
        for (std::size_t code = 0; code < total; ++code) {
          std::vector<Cube const*> args;
          std::size_t              c = code;
          for (std::size_t i = 0; i < r; ++i) {
            args.push_back(&current[c % current.size()]);
            c /= current.size();
          }
          std::vector<Element> entries(std::size_t(1) << k);
          for (CubeIndex f = 0; f < entries.size(); ++f) {
            std::vector<Element> a;
            for (auto const* m : args) {
              a.push_back((*m)[f]);
            }
            entries[f] = alg.apply(o, a);
          }
          grown = s.insert(Cube(k, std::move(entries))).second || grown;
        }
      }
    }
    return s;
  }

  std::set<Cube> as_set(MatrixAlgebra const& m) {
    std::set<Cube> out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      out.insert(m.cube(i));
    }
    return out;
  }

  Cube permute(Cube const& c, std::vector<std::size_t> const& sigma) {
    // coordinate i of the result is coordinate sigma[i] of c
    std::size_t const    k = c.dimension();
    std::vector<Element> entries(std::size_t(1) << k);
    for (CubeIndex f = 0; f < entries.size(); ++f) {
      CubeIndex g = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if ((f >> i) & 1) {
          g |= CubeIndex(1) << sigma[i];
        }
      }
      entries[f] = c[g];
    }
    return Cube(k, std::move(entries));
  }
}  // namespace

TEST_CASE("cube layout") {
  auto const c = Cube::from_square(1, 2, 3, 4);
  CHECK(c.entries() == std::vector<Element>{1, 3, 2, 4});
  CHECK(to_string(c) == "[1,3,2,4]");
  CHECK_THROWS_AS(Cube(2, {0, 1, 2}), CoordinateError);

  auto const sq = squares(c, 0, 1);
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].r == 1);
  CHECK(sq[0].s == 2);
  CHECK(sq[0].u == 3);
  CHECK(sq[0].v == 4);

  auto const l0 = lines(c, 0);
  REQUIRE(l0.size() == 2);
  CHECK(l0[0] == Line{1, 3, 0, 0});
  CHECK(l0[1] == Line{2, 4, 2, 0});
  auto const l1 = lines(c, 1);
  CHECK(l1[0] == Line{1, 2, 0, 1});
  CHECK(l1[1] == Line{3, 4, 1, 1});
  CHECK_THROWS_AS(lines(c, 2), CoordinateError);
  CHECK_THROWS_AS(squares(c, 1, 1), CoordinateError);
}

TEST_CASE("pivot and supporting cross-sections") {
  CHECK(pivot_position(3, 2) == 3);
  CHECK(pivot_position(3, 0) == 6);
  CHECK(classify(3, 3, 2) == CrossSection::pivot);
  CHECK(classify(3, 1, 2) == CrossSection::supporting);
  CHECK(classify(3, 0, 1, 2) == CrossSection::supporting);
  CHECK(classify(3, 1, 1, 2) == CrossSection::pivot);
  // exactly one pivot line per coordinate
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      int pivots = 0;
      for (auto const& l : lines(Cube::constant(k, 0), j)) {
        pivots += classify(k, l.position, j) == CrossSection::pivot;
      }
      CHECK(pivots == 1);
    }
  }
}

TEST_CASE("codec") {
  CubeCodec const codec(2, 5);
  CHECK(codec.bits_per_entry() == 3);
  CHECK(codec.total_bits() == 12);
  auto const c = Cube::from_square(4, 0, 3, 1);
  CHECK(codec.decode(codec.encode(c)) == c);
  CHECK(codec.entry(codec.encode(c), 1) == 3);
  CHECK(CubeCodec(3, 1).bits_per_entry() == 1);
  CHECK(CubeCodec(3, 2).bits_per_entry() == 1);
  CHECK_THROWS_AS(CubeCodec(7, 3), CapacityError);
  CHECK_THROWS_AS(codec.encode(Cube::constant(2, 5)), UniverseError);
}

TEST_CASE("Z2 with both coordinates full") {
  auto const         z2 = cyclic_group(2);
  CongruenceSequence t{Partition::full(2), Partition::full(2)};
  CHECK(one_coordinate_generators(t).size() == 6);
  auto const m = generate_matrix_algebra(z2, t);
  CHECK(m.size() == 8);
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto const c = m.cube(i);
    CHECK((c[0] ^ c[1] ^ c[2] ^ c[3]) == 0);
  }
  CHECK(m.contains(Cube::from_square(0, 1, 1, 0)));
  CHECK_FALSE(m.contains(Cube::from_square(0, 0, 0, 1)));
}

TEST_CASE("matrix algebra errors") {
  auto const z4 = cyclic_group(4);
  CHECK_THROWS_AS(generate_matrix_algebra(z4, {}), ContractError);
  CHECK_THROWS_AS(generate_matrix_algebra(z4, {Partition::full(3)}), UniverseError);
  CongruenceSequence big(5, Partition::full(4));
  CHECK_THROWS_AS(generate_matrix_algebra(z4, big), CapacityError);
  CubeOptions wide;
  wide.capacity_bits = 64;
  CHECK(generate_matrix_algebra(z4, big, wide).size() > 0);
}

TEST_CASE("M(T) equals the naive closure of its generators") {
  for (auto const& entry : builtin_corpus()) {
    auto const& alg = entry.algebra;
    if (alg.size() > 6) {
      continue;
    }
    auto const lat = congruence_lattice(alg);
    for (std::size_t a = 0; a < lat.size(); ++a) {
      auto const gens1 = one_coordinate_generators({lat[a]});
      CHECK(as_set(generate_matrix_algebra(alg, {lat[a]})) == naive_closure(alg, gens1));
      for (std::size_t b = 0; b < lat.size(); ++b) {
        if (alg.size() == 6 && a + b != lat.size() - 1) {
          continue;
        }
        CongruenceSequence const t{lat[a], lat[b]};
        auto const              m = generate_matrix_algebra(alg, t);
        CHECK_MESSAGE(as_set(m) == naive_closure(alg, one_coordinate_generators(t)), alg.name());
      }
    }
  }
}

TEST_CASE("M(T) is invariant under permuting coordinates") {
  std::vector<std::vector<std::size_t>> const perms{{1, 0, 2}, {2, 1, 0}, {1, 2, 0}};
  for (auto const& alg : {cyclic_group(4), klein_group(), z4_ring()}) {
    auto const lat = congruence_lattice(alg);
    for (std::size_t a = 1; a < lat.size(); ++a) {
      CongruenceSequence const t{lat[a], lat.elements().back(), lat[1]};
      auto const               m = generate_matrix_algebra(alg, t);
      for (auto const& sigma : perms) {
        CongruenceSequence ts;
        for (auto i : sigma) {
          ts.push_back(t[i]);
        }
        auto const     ms = generate_matrix_algebra(alg, ts);
        std::set<Cube> moved;
        for (std::size_t i = 0; i < m.size(); ++i) {
          moved.insert(permute(m.cube(i), sigma));
        }
        CHECK(moved == as_set(ms));
      }
    }
  }
}

TEST_CASE("M(T) is monotone and its edges stay in T") {
  for (auto const& entry : builtin_corpus()) {
    auto const& alg = entry.algebra;
    if (alg.size() > 6) {
      continue;
    }
    auto const lat = congruence_lattice(alg);
    for (std::size_t a = 0; a < lat.size(); ++a) {
      for (std::size_t b = 0; b < lat.size(); ++b) {
        CongruenceSequence const t{lat[a], lat[b]};
        auto const               m = generate_matrix_algebra(alg, t);
        for (std::size_t i = 0; i < m.size(); ++i) {
          CHECK(satisfies_edge_invariant(m.cube(i), t));
        }
        CHECK(m.size() <= count_edge_compatible(t, 1u << 20));
        for (std::size_t c = 0; c < lat.size(); ++c) {
          if (!lat.leq(b, c)) {
            continue;
          }
          auto const bigger = generate_matrix_algebra(alg, {lat[a], lat[c]});
          auto const small  = as_set(m);
          auto const large  = as_set(bigger);
          CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
        }
      }
    }
  }
}

TEST_CASE("reflexive pairs give every constant cube") {
  for (auto const& entry : builtin_corpus()) {
    auto const& alg = entry.algebra;
    auto const  n   = alg.size();
    CongruenceSequence const t{Partition::equality(n), Partition::equality(n)};
    auto const               m = generate_matrix_algebra(alg, t);
    CHECK(m.size() == n);
    for (Element a = 0; a < n; ++a) {
      CHECK(m.contains(Cube::constant(2, a)));
    }
  }
}

TEST_CASE("edge-compatible counting") {
  CongruenceSequence const t{parse_partition("|0 2|1 3|"), Partition::full(4)};
  // choose m_0 freely (4), m_1 in its theta_0 class (2), then each column freely (4 * 4)
  CHECK(count_edge_compatible(t, 1000) == 4 * 2 * 4 * 2);
  CHECK(count_edge_compatible(t, 10) == 0);
  CHECK(satisfies_edge_invariant(Cube::from_square(0, 1, 2, 3), t));
  CHECK_FALSE(satisfies_edge_invariant(Cube::from_square(0, 1, 1, 3), t));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmcomm/commutator.hpp"
#include "cmcomm/corpus.hpp"
#include "cmcomm/error.hpp"
#include "oracles.hpp"

using namespace cmcomm;

namespace {
  Partition const theta = parse_partition("|0 2|1 3|");
}

TEST_CASE("Z4 ring commutators") {
  auto const ring = z4_ring();
  auto const one  = Partition::full(4);
  auto const zero = Partition::equality(4);
  CHECK(higher_commutator(ring, {one, one}) == one);
  CHECK(higher_commutator(ring, {one, theta}) == theta);
  CHECK(higher_commutator(ring, {theta, one}) == theta);
  CHECK(higher_commutator(ring, {theta, theta}) == zero);
  CHECK(higher_commutator(ring, {one, one, theta}) == theta);
  CHECK(higher_commutator(ring, {one, theta, theta}) == zero);
  CHECK(higher_commutator(ring, {one, one, one}) == one);
}

TEST_CASE("abelian groups have trivial commutators") {
  for (auto const& alg : {cyclic_group(2), cyclic_group(4), klein_group()}) {
    auto const full = Partition::full(alg.size());
    CHECK(higher_commutator(alg, {full, full}) == Partition::equality(alg.size()));
    CHECK(higher_commutator(alg, {full, full, full}) == Partition::equality(alg.size()));
  }
}

TEST_CASE("binary commutators of groups match the commutator subgroup") {
  for (auto const& entry : builtin_corpus()) {
    if (!entry.group) {
      continue;
    }
    auto const& alg = entry.algebra;
    auto const  g   = oracle::group_of(alg, alg.group_operations().front());
    auto const  lat = congruence_lattice(alg);
    for (auto const& a : lat.elements()) {
      for (auto const& b : lat.elements()) {
        auto const expected = oracle::coset_partition(
            g, oracle::commutator_subgroup(g, oracle::identity_class(g, a), oracle::identity_class(g, b)));
        CHECK_MESSAGE(higher_commutator(alg, {a, b}) == expected, alg.name());
      }
    }
  }
}

TEST_CASE("S3 is not abelian") {
  auto const s3   = dihedral_group(3);
  auto const full = Partition::full(6);
  auto const rot  = parse_partition("|0 1 2|3 4 5|");
  CHECK(higher_commutator(s3, {full, full}) == rot);
  CHECK(higher_commutator(s3, {rot, rot}) == Partition::equality(6));

  auto const m      = generate_matrix_algebra(s3, {full, full});
  auto const report = centrality(m, 1, Partition::equality(6));
  CHECK_FALSE(report.holds);
  REQUIRE(report.witness);
  auto const& w = *report.witness;
  CHECK(w.coordinate == 1);
  CHECK(w.pivot.position == pivot_position(2, 1));
  CHECK(w.pivot.first != w.pivot.second);
  REQUIRE(w.supporting.size() == 1);
  CHECK(w.supporting[0].first == w.supporting[0].second);
  CHECK(m.contains(w.cube));

  CHECK(centrality(m, 1, rot).holds);
  CHECK_THROWS_AS(centrality(m, 2, rot), CoordinateError);
}

TEST_CASE("the fixpoint agrees with the lattice scan") {
  for (auto const& entry : builtin_corpus()) {
    auto const& alg  = entry.algebra;
    auto const  lat  = congruence_lattice(alg);
    std::size_t const kmax = alg.size() > 4 ? 2 : 3;
    for (std::size_t k = 1; k <= kmax; ++k) {
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        CongruenceSequence t;
        for (auto i : idx) {
          t.push_back(lat[i]);
        }
        auto const m = generate_matrix_algebra(alg, t);
        CHECK_MESSAGE(higher_commutator(alg, m) == commutator_by_lattice_scan(m, lat), alg.name());
        std::size_t p = 0;
        while (p < k && ++idx[p] == lat.size()) {
          idx[p++] = 0;
        }
        if (p == k) {
          break;
        }
      }
    }
  }
}

TEST_CASE("commutator is below the meet") {
  for (auto const& entry : builtin_corpus()) {
    auto const& alg = entry.algebra;
    auto const  lat = congruence_lattice(alg);
    for (auto const& a : lat.elements()) {
      for (auto const& b : lat.elements()) {
        CHECK(higher_commutator(alg, {a, b}).leq(meet(a, b)));
      }
    }
  }
}

TEST_CASE("unary commutator is the congruence itself") {
  for (auto const& alg : {cyclic_group(4), semilattice2(), dihedral_group(3)}) {
    auto const lat = congruence_lattice(alg);
    for (auto const& a : lat.elements()) {
      CHECK(higher_commutator(alg, {a}) == a);
    }
  }
}

TEST_CASE("two-term centrality") {
  auto const ring = z4_ring();
  auto const m    = generate_matrix_algebra(ring, {theta, Partition::full(4)});
  CHECK(two_term_centrality(m, theta).holds);
  auto const report = two_term_centrality(m, Partition::equality(4));
  CHECK_FALSE(report.holds);
  REQUIRE(report.two_term_witness);
  auto const& h = report.two_term_witness->h;
  auto const& g = report.two_term_witness->g;
  CHECK(m.contains(h));
  CHECK(m.contains(g));
  for (CubeIndex f = 0; f < 3; ++f) {
    CHECK(h[f] == g[f]);
  }
  CHECK(h[3] != g[3]);
  CHECK(two_term_commutator(ring, {theta, Partition::full(4)}) == theta);
}

TEST_CASE("two-term commutator of groups") {
  for (auto const& entry : builtin_corpus()) {
    if (!entry.group) {
      continue;
    }
    auto const& alg = entry.algebra;
    auto const  lat = congruence_lattice(alg);
    for (auto const& a : lat.elements()) {
      for (auto const& b : lat.elements()) {
        CHECK(two_term_commutator(alg, {a, b}) == higher_commutator(alg, {a, b}));
      }
    }
  }
}

TEST_CASE("per-coordinate commutators") {
  auto const s3 = dihedral_group(3);
  auto const m  = generate_matrix_algebra(s3, {Partition::full(6), parse_partition("|0 1 2|3 4 5|")});
  auto const pc = commutators_per_coordinate(s3, m);
  REQUIRE(pc.per_coordinate.size() == 2);
  CHECK(pc.all_equal());
  CHECK(pc.per_coordinate[1] == higher_commutator(s3, m));

  // the 2-element semilattice is not modular, yet its binary commutators agree
  auto const sl = semilattice2();
  auto const ms = generate_matrix_algebra(sl, {Partition::full(2), Partition::full(2)});
  CHECK(commutators_per_coordinate(sl, ms).per_coordinate[0] == Partition::full(2));
}

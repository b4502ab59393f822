#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "cmcomm/commutator.hpp"
#include "cmcomm/corpus.hpp"
#include "cmcomm/dayterms.hpp"
#include "cmcomm/error.hpp"
#include "cmcomm/io.hpp"

using namespace cmcomm;

namespace {
  DayChain frozen(std::string const& name) {
    return read_chain(std::string(CMCOMM_DATA_DIR) + "/chains/" + name + ".json");
  }

  DayChain projections() {
    return DayChain{{Term::variable(0), Term::variable(3)}};
  }
}  // namespace

TEST_CASE("frozen chains verify") {
  CHECK(verify_day_chain(cyclic_group(2), frozen("z2")).holds);
  CHECK(verify_day_chain(cyclic_group(4), frozen("z4")).holds);
  CHECK(verify_day_chain(klein_group(), frozen("z2xz2")).holds);
  CHECK(verify_day_chain(dihedral_group(3), frozen("s3")).holds);
  CHECK(verify_day_chain(z4_ring(), frozen("z4ring")).holds);
  CHECK(frozen("s3").length() == 3);
}

TEST_CASE("a chain for one algebra can fail on another") {
  auto const v = verify_day_chain(cyclic_group(3), frozen("z2"));
  CHECK_FALSE(v.holds);
  REQUIRE(v.failure);
  CHECK(v.failure->identity == 1);
}

TEST_CASE("projections are not a chain") {
  auto const v = verify_day_chain(cyclic_group(2), projections());
  CHECK_FALSE(v.holds);
  REQUIRE(v.failure);
  CHECK(v.failure->identity == 4);
  CHECK(v.failure->e == 0);
  CHECK(v.failure->tuple == std::vector<Element>{0, 1});
}

TEST_CASE("one-element algebra has the two-term chain") {
  auto const r = find_day_chain(trivial_algebra());
  REQUIRE(r.chain);
  CHECK(r.complete);
  CHECK(r.chain->length() == 1);
  CHECK(verify_day_chain(trivial_algebra(), *r.chain).holds);
}

TEST_CASE("chains are found for groups and rings") {
  for (auto const& alg : {cyclic_group(2), cyclic_group(3), klein_group(), dihedral_group(3), z4_ring()}) {
    auto const r = find_day_chain(alg);
    REQUIRE_MESSAGE(r.chain, alg.name());
    CHECK(r.complete);
    CHECK(r.chain->length() >= 2);
    CHECK(verify_day_chain(alg, *r.chain).holds);
  }
}

TEST_CASE("the 2-element semilattice has no chain") {
  auto const r = find_day_chain(semilattice2());
  CHECK_FALSE(r.chain);
  CHECK(r.complete);
  CHECK(r.explored > 0);
}

TEST_CASE("a tiny cap makes the search inconclusive") {
  auto const r = find_day_chain(dihedral_group(3), 3);
  CHECK_FALSE(r.chain);
  CHECK_FALSE(r.complete);
}

TEST_CASE("chain validation") {
  CHECK_THROWS_AS(DayOperations(cyclic_group(2), DayChain{{Term::variable(0)}}), ContractError);
  CHECK_THROWS_AS(DayOperations(cyclic_group(2), DayChain{{Term::variable(0), Term::variable(4)}}),
                  ArityError);
  CHECK_THROWS_AS(verify_day_chain(cyclic_group(2), parse_chain(R"j(["x", "(* x u)", "u"])j")),
                  SignatureError);
}

TEST_CASE("Day operations tabulate the chain") {
  DayOperations const ops(cyclic_group(2), frozen("z2"));
  CHECK(ops.length() == 3);
  CHECK(ops.universe_size() == 2);
  for (Element x = 0; x < 2; ++x) {
    for (Element y = 0; y < 2; ++y) {
      for (Element z = 0; z < 2; ++z) {
        for (Element u = 0; u < 2; ++u) {
          CHECK(ops(0, x, y, z, u) == x);
          CHECK(ops(2, x, y, z, u) == (x ^ y ^ z));
          CHECK(ops(3, x, y, z, u) == u);
        }
      }
    }
  }
}

TEST_CASE("shift pairs") {
  DayOperations const ops(cyclic_group(2), frozen("z2"));
  auto const          eq = Partition::equality(2);
  CHECK(shift_pair_test(ops, eq, 1, 0, 1, 0));
  CHECK_FALSE(shift_pair_test(ops, eq, 0, 0, 1, 0));
  CHECK(shift_pair_test(ops, Partition::full(2), 0, 0, 1, 1));
  CHECK_THROWS_AS(shift_pair_test(ops, eq, 0, 0, 1, 1), ContractError);
  CHECK_THROWS_AS(shift_pair_test(ops, Partition::equality(3), 0, 0, 1, 0), UniverseError);
}

TEST_CASE("shift rotations") {
  DayOperations const ops(cyclic_group(2), frozen("z2"));
  auto const          h = Cube::from_square(0, 1, 1, 0);
  CHECK(shift_rotation(h, 0, 1, 0, ops) == Cube::constant(2, 1));
  CHECK(shift_rotation(h, 0, 1, 2, ops) == Cube::from_square(1, 1, 0, 0));
  CHECK(shift_rotation(h, 0, 1, 3, ops) == Cube::from_square(1, 1, 0, 0));
  // rows follow j, so swapping j and l transposes the square
  CHECK(shift_rotation(h, 1, 0, 3, ops) == Cube::from_square(1, 0, 1, 0));
  CHECK_THROWS_AS(shift_rotation(h, 0, 0, 1, ops), CoordinateError);
  CHECK_THROWS_AS(shift_rotation(h, 0, 2, 1, ops), CoordinateError);
  CHECK_THROWS_AS(shift_rotation(h, 0, 1, 4, ops), ContractError);
}

TEST_CASE("shift rotations stay inside M(T)") {
  auto const          ring = z4_ring();
  DayOperations const ops(ring, frozen("z4ring"));
  auto const          theta = parse_partition("|0 2|1 3|");
  CongruenceSequence const t{theta, Partition::full(4), theta};
  auto const               m = generate_matrix_algebra(ring, t);
  for (std::size_t i = 0; i < m.size(); i += 7) {
    auto const h = m.cube(i);
    for (std::size_t e = 0; e <= ops.length(); ++e) {
      CHECK(m.contains(shift_rotation(h, 0, 1, e, ops)));
      CHECK(m.contains(shift_rotation(h, 1, 2, e, ops)));
    }
  }
}

TEST_CASE("rotation along the tree") {
  DayOperations const ops(cyclic_group(2), frozen("z2"));
  auto const          h = Cube::from_square(0, 1, 1, 0);
  CHECK(rotate_along_tree(h, {}, ops) == h);
  for (std::size_t e = 0; e <= 3; ++e) {
    CHECK(rotate_along_tree(h, {e}, ops) == shift_rotation(h, 0, 1, e, ops));
  }
  CHECK_THROWS_AS(rotate_along_tree(h, {1, 1}, ops), TreeError);
  CHECK_THROWS_AS(rotate_along_tree(h, {4}, ops), TreeError);

  Cube const h3(3, {0, 1, 1, 0, 1, 0, 0, 1});
  auto const step = shift_rotation(shift_rotation(h3, 0, 1, 2, ops), 1, 2, 3, ops);
  CHECK(rotate_along_tree(h3, {2, 3}, ops) == step);
}

TEST_CASE("generator sets") {
  auto const          z2 = cyclic_group(2);
  DayOperations const ops(z2, frozen("z2"));
  auto const          m = generate_matrix_algebra(z2, {Partition::full(2), Partition::full(2)});
  CHECK(generator_set(m, ops) == std::vector<Pair>{{0, 0}, {1, 1}});

  auto const          s3 = dihedral_group(3);
  DayOperations const s3ops(s3, frozen("s3"));
  auto const          full = Partition::full(6);
  auto const          ms   = generate_matrix_algebra(s3, {full, full});
  auto const          x    = generator_set(ms, s3ops);
  CHECK(std::is_sorted(x.begin(), x.end()));
  CHECK(std::adjacent_find(x.begin(), x.end()) == x.end());
  CHECK(cg(s3, x) == higher_commutator(s3, ms));
  CHECK(cg(s3, x) == parse_partition("|0 1 2|3 4 5|"));
}

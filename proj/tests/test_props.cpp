#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "cmcomm/corpus.hpp"
#include "cmcomm/error.hpp"
#include "cmcomm/io.hpp"
#include "cmcomm/props.hpp"

using namespace cmcomm;

namespace {
  DayChain frozen(std::string const& name) {
    return read_chain(std::string(CMCOMM_DATA_DIR) + "/chains/" + name + ".json");
  }

  std::string describe(std::vector<TheoremReport> const& reports) {
    std::string out;
    for (auto const& r : reports) {
      if (!r.passed()) {
        out += r.theorem + ": " + r.failures.front().sequence + " " + r.failures.front().details + "\n";
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("workbench bookkeeping") {
  Workbench bench(cyclic_group(4));
  CHECK(bench.lattice().size() == 3);
  CHECK(bench.default_kmax() == 3);
  CHECK(bench.sequences(2).size() == 9);
  CHECK(bench.sequences(2)[1] == Workbench::Indices{0, 1});
  CHECK(bench.index_of(Partition::full(4)) == 2);
  CHECK_THROWS_AS(bench.index_of(parse_partition("|0 1|2 3|")), NotACongruenceError);
  CHECK(bench.commutator({2, 2}) == 0);
  CHECK(&bench.matrices({2, 2}) == &bench.matrices({2, 2}));
  CHECK(to_string(bench.sequence({1, 2})) == "(|0 2|1 3|, |0 1 2 3|)");
  CHECK(bench.fits(4));
  CHECK_FALSE(bench.fits(5));

  Workbench d4(dihedral_group(4));
  CHECK(d4.default_kmax() == 2);
}

TEST_CASE("harness passes on modular algebras") {
  std::vector<std::pair<FiniteAlgebra, std::string>> const cases{
      {cyclic_group(2), "z2"}, {cyclic_group(4), "z4"}, {klein_group(), "z2xz2"}, {z4_ring(), "z4ring"}};
  for (auto const& [alg, chain] : cases) {
    Workbench           bench(alg);
    DayOperations const ops(alg, frozen(chain));
    auto const          reports = run_harness(bench, bench.default_kmax(), &ops);
    CHECK(reports.size() == 13);
    for (auto const& r : reports) {
      CHECK_MESSAGE(r.passed(), describe(reports));
      CHECK(r.algebra == alg.name());
      if (r.applicable) {
        CHECK(r.instances > 0);
      }
    }
  }
}

TEST_CASE("harness on S3 at k = 2") {
  Workbench           bench(dihedral_group(3));
  DayOperations const ops(bench.algebra(), frozen("s3"));
  auto const          reports = run_harness(bench, 2, &ops);
  for (auto const& r : reports) {
    CHECK_MESSAGE(r.passed(), describe(reports));
  }
}

TEST_CASE("checks needing a chain are skipped without one") {
  Workbench  bench(semilattice2());
  auto const reports = run_harness(bench, 2, nullptr);
  std::size_t skipped = 0;
  for (auto const& r : reports) {
    CHECK(r.passed());
    if (!r.applicable) {
      ++skipped;
      CHECK(r.note == "no Day chain: modularity not established");
    }
  }
  CHECK(skipped == 10);
  CHECK(check_basic_properties(bench, 2).applicable);
  CHECK(check_lattice_scan(bench, 2).applicable);
}

TEST_CASE("a bogus chain is caught") {
  Workbench           bench(cyclic_group(2));
  DayOperations const ops(bench.algebra(), DayChain{{Term::variable(0), Term::variable(3)}});
  auto const          report = check_shift_pairs(bench, &ops);
  CHECK(report.applicable);
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.failures.empty());
}

TEST_CASE("individual checks count instances") {
  Workbench           bench(cyclic_group(3));
  DayOperations const ops(bench.algebra(), *find_day_chain(bench.algebra()).chain);
  // Con(Z3) has two elements: 2 + 4 + 8 sequences for k <= 3
  CHECK(check_lattice_scan(bench, 3).instances == 14);
  CHECK(check_symmetry(bench, 3, &ops).passed());
  CHECK(check_generators(bench, 3, &ops).passed());
  CHECK(check_shifting_lemma(bench, &ops).passed());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <string>

#include "cmcomm/corpus.hpp"
#include "cmcomm/error.hpp"
#include "cmcomm/io.hpp"

using namespace cmcomm;

namespace {
  std::filesystem::path const data_dir(CMCOMM_DATA_DIR);
}

TEST_CASE("corpus files match the built-in fixtures") {
  for (auto const& entry : builtin_corpus()) {
    auto const path = data_dir / "algebras" / entry.file_name;
    auto const alg  = read_algebra(path);
    CHECK_MESSAGE(alg == entry.algebra, entry.file_name);
    CHECK(algebra_to_json(alg) == read_text(path));
  }
}

TEST_CASE("algebra round trip") {
  auto const ring = z4_ring();
  CHECK(parse_algebra(algebra_to_json(ring)) == ring);
  auto const tmp = std::filesystem::temp_directory_path() / "cmcomm_io_test.json";
  write_algebra(tmp, ring);
  CHECK(read_algebra(tmp) == ring);
  std::filesystem::remove(tmp);
}

TEST_CASE("algebra parse errors") {
  CHECK_THROWS_AS(parse_algebra("{"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"name": "a", "size": 2})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"name": "a", "size": 2, "operations": [{"symbol": "f", "arity": 1}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"name": "a", "size": "two", "operations": []})"), ParseError);
  CHECK_THROWS_AS(
      parse_algebra(R"({"name": "a", "size": 2, "operations": [{"symbol": "f", "arity": 1, "table": [0, 2]}]})"),
      AlgebraError);
  CHECK_THROWS_AS(read_algebra(data_dir / "no-such-file.json"), Error);
}

TEST_CASE("chain round trip") {
  for (auto const* name : {"z2", "z4", "z2xz2", "s3", "z4ring"}) {
    auto const path  = data_dir / "chains" / (std::string(name) + ".json");
    auto const chain = read_chain(path);
    CHECK(parse_chain(chain_to_json(chain)) == chain);
    CHECK(chain_to_json(chain) == read_text(path));
  }
  auto const c = parse_chain(R"j(["x", "(* (* y (inv z)) u)", "u"])j");
  CHECK(c.length() == 2);
  CHECK(c.terms[0] == Term::variable(0));
  CHECK(c.terms[2] == Term::variable(3));
  CHECK_THROWS_AS(parse_chain("{}"), ParseError);
  CHECK_THROWS_AS(parse_chain(R"j(["(* x"])j"), ParseError);
  CHECK_THROWS_AS(parse_chain("[1, 2]"), ParseError);
}

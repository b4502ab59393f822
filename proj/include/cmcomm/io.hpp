#ifndef CMCOMM_IO_HPP_
#define CMCOMM_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "cmcomm/algebra.hpp"
#include "cmcomm/dayterms.hpp"

namespace cmcomm {

  // Algebra files: {"name": ..., "size": n, "operations": [{"symbol": ...,
  // "arity": r, "table": [...]}]}.  Parsing throws ParseError for malformed
  // JSON or missing fields and AlgebraError for invalid tables.
  FiniteAlgebra parse_algebra(std::string_view text);
  std::string   algebra_to_json(FiniteAlgebra const& alg);

  FiniteAlgebra read_algebra(std::filesystem::path const& path);
  void          write_algebra(std::filesystem::path const& path, FiniteAlgebra const& alg);

  // Day chain files: a JSON list of prefix terms over x, y, z, u, for example
  // ["x", "(* (* y (inv z)) u)", "u"].  Atoms other than the four variables
  // are nullary symbols.
  DayChain    parse_chain(std::string_view text);
  std::string chain_to_json(DayChain const& chain);

  DayChain read_chain(std::filesystem::path const& path);
  void     write_chain(std::filesystem::path const& path, DayChain const& chain);

  std::string read_text(std::filesystem::path const& path);

}  // namespace cmcomm

#endif  // CMCOMM_IO_HPP_

#include "cmcomm/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cmcomm/error.hpp"

namespace cmcomm {

  using nlohmann::json;

  namespace {
    json parse_json(std::string_view text) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
      }
    }

    template <class T>
    T field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"", 0);
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const&) {
        throw ParseError(std::string("field \"") + key + "\" has the wrong type", 0);
      }
    }
  }  // namespace

  FiniteAlgebra parse_algebra(std::string_view text) {
    json const j    = parse_json(text);
    auto       name = field<std::string>(j, "name");
    auto       size = field<std::size_t>(j, "size");
    auto       ops  = field<json>(j, "operations");
    if (!ops.is_array()) {
      throw ParseError("field \"operations\" must be a list", 0);
    }
    std::vector<OperationTable> tables;
    for (auto const& op : ops) {
      tables.push_back(OperationTable{field<std::string>(op, "symbol"),
                                      field<std::size_t>(op, "arity"),
                                      field<std::vector<Element>>(op, "table")});
    }
    return FiniteAlgebra(std::move(name), size, std::move(tables));
  }

  std::string algebra_to_json(FiniteAlgebra const& alg) {
    // one operation per line, tables inline
    std::ostringstream out;
    out << "{\n  \"name\": " << json(alg.name()).dump() << ",\n  \"size\": " << alg.size()
        << ",\n  \"operations\": [";
    for (std::size_t i = 0; i < alg.number_of_operations(); ++i) {
      auto const& op = alg.operation(i);
      out << (i ? ",\n" : "\n") << "    {\"symbol\": " << json(op.symbol).dump()
          << ", \"arity\": " << op.arity << ", \"table\": " << json(op.table).dump() << "}";
    }
    out << (alg.number_of_operations() ? "\n  ]\n}\n" : "]\n}\n");
    return out.str();
  }

  std::string read_text(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  namespace {
    void write_text(std::filesystem::path const& path, std::string const& text) {
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        throw Error("cannot write " + path.string());
      }
      out << text;
    }
  }  // namespace

  FiniteAlgebra read_algebra(std::filesystem::path const& path) {
    return parse_algebra(read_text(path));
  }

  void write_algebra(std::filesystem::path const& path, FiniteAlgebra const& alg) {
    write_text(path, algebra_to_json(alg));
  }

  DayChain parse_chain(std::string_view text) {
    json const j = parse_json(text);
    if (!j.is_array()) {
      throw ParseError("a Day chain file is a list of terms", 0);
    }
    DayChain chain;
    for (auto const& item : j) {
      if (!item.is_string()) {
        throw ParseError("Day chain entries must be strings", 0);
      }
      chain.terms.push_back(parse_sexpr(item.get<std::string>(), day_variable_names()));
    }
    return chain;
  }

  std::string chain_to_json(DayChain const& chain) {
    json j = json::array();
    for (auto const& t : chain.terms) {
      j.push_back(to_sexpr(t, day_variable_names()));
    }
    return j.dump(2) + "\n";
  }

  DayChain read_chain(std::filesystem::path const& path) {
    return parse_chain(read_text(path));
  }

  void write_chain(std::filesystem::path const& path, DayChain const& chain) {
    write_text(path, chain_to_json(chain));
  }

}  // namespace cmcomm

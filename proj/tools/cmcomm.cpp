// cmcomm: congruence lattices and higher commutators of finite algebras.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cmcomm/commutator.hpp"
#include "cmcomm/congruence.hpp"
#include "cmcomm/dayterms.hpp"
#include "cmcomm/error.hpp"
#include "cmcomm/io.hpp"
#include "cmcomm/props.hpp"

using namespace cmcomm;
using nlohmann::json;

namespace {

  struct Options {
    std::string              algebra;
    std::vector<std::string> congs;
    std::optional<std::string> delta;
    std::size_t              k = 0;
    std::optional<std::size_t> pivot;
    bool                     json  = false;
    bool                     close = false;
    std::size_t              cap   = default_clone_cap;
    std::size_t              bits  = CubeOptions{}.capacity_bits;
    std::string              chain;
    std::string              save;
  };

  // Thrown for failures that are neither input nor capacity errors.
  struct CheckFailure {
    std::string message;
  };

  bool all_digits(std::string const& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  }

  Partition read_congruence(FiniteAlgebra const& alg,
                            CongruenceLattice const& lat,
                            std::string const& text,
                            bool close) {
    if (all_digits(text)) {
      std::size_t const i = std::stoul(text);
      if (i >= lat.size()) {
        throw ParseError("lattice index " + text + " out of range (the lattice has "
                             + std::to_string(lat.size()) + " elements)",
                         0);
      }
      return lat[i];
    }
    Partition p = parse_partition(text, alg.size());
    if (close) {
      return cg(alg, p, {});
    }
    check_congruence(alg, p);
    return p;
  }

  CongruenceSequence read_sequence(FiniteAlgebra const& alg, CongruenceLattice const& lat, Options const& o) {
    if (o.congs.empty()) {
      throw ParseError("--congs needs at least one congruence", 0);
    }
    CongruenceSequence t;
    for (auto const& c : o.congs) {
      t.push_back(read_congruence(alg, lat, c, o.close));
    }
    return t;
  }

  json blocks(CongruenceSequence const& t) {
    json out = json::array();
    for (auto const& p : t) {
      out.push_back(to_string(p));
    }
    return out;
  }

  CubeOptions cube_options(Options const& o) {
    CubeOptions options;
    options.capacity_bits = o.bits;
    return options;
  }

  struct ChainStatus {
    std::optional<DayChain> chain;
    bool                    complete = false;
    std::size_t             explored = 0;
    bool                    supplied = false;
  };

  ChainStatus obtain_chain(FiniteAlgebra const& alg, Options const& o) {
    ChainStatus status;
    if (!o.chain.empty()) {
      DayChain chain = read_chain(o.chain);
      auto     check = verify_day_chain(alg, chain);
      if (!check.holds) {
        throw CheckFailure{"the chain in " + o.chain + " fails identity ("
                           + std::to_string(check.failure->identity) + ") at e = "
                           + std::to_string(check.failure->e)};
      }
      status.chain    = std::move(chain);
      status.complete = true;
      status.supplied = true;
      return status;
    }
    auto found      = find_day_chain(alg, o.cap);
    status.chain    = std::move(found.chain);
    status.complete = found.complete;
    status.explored = found.explored;
    return status;
  }

  void emit(Options const& o, json const& j) {
    if (o.json) {
      std::cout << j.dump(2) << "\n";
    }
  }

  int run_con(Options const& o) {
    auto const alg = read_algebra(o.algebra);
    auto const lat = congruence_lattice(alg);
    auto const mod = is_modular_lattice(lat);
    json       j{{"algebra", alg.name()}, {"size", alg.size()}, {"modular", mod.holds}};
    j["congruences"] = json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      j["congruences"].push_back({{"index", i}, {"blocks", to_string(lat[i])}});
    }
    j["counterexample"] = mod.counterexample ? json(*mod.counterexample) : json(nullptr);
    if (o.json) {
      emit(o, j);
      return 0;
    }
    std::cout << alg.name() << ": " << lat.size() << " congruences\n";
    for (std::size_t i = 0; i < lat.size(); ++i) {
      std::cout << "  " << i << "  " << to_string(lat[i]) << "\n";
    }
    std::cout << "lattice is " << (mod.holds ? "modular" : "not modular") << "\n";
    return 0;
  }

  int run_comm(Options const& o, bool two_term) {
    auto const alg = read_algebra(o.algebra);
    auto const lat = congruence_lattice(alg);
    auto const t   = read_sequence(alg, lat, o);
    auto const m   = generate_matrix_algebra(alg, t, cube_options(o));
    std::size_t const pivot = o.pivot.value_or(t.size() - 1);
    if (pivot >= t.size()) {
      throw CoordinateError("pivot " + std::to_string(pivot) + " out of range for k = "
                            + std::to_string(t.size()));
    }
    Partition const result = two_term ? two_term_commutator(alg, m) : commutator_at(alg, m, pivot);
    auto const      status = obtain_chain(alg, o);
    bool const      modular = status.chain.has_value();
    json j{{"algebra", alg.name()},
           {"sequence", blocks(t)},
           {"commutator", to_string(result)},
           {"modularity_established", modular}};
    if (!two_term) {
      j["pivot"] = pivot;
    }
    CoordinateCommutators per;
    if (!modular && !two_term) {
      per = commutators_per_coordinate(alg, m);
      j["per_coordinate"] = blocks(per.per_coordinate);
    }
    std::optional<CentralityReport> central;
    std::optional<Partition>        delta;
    if (o.delta) {
      delta   = read_congruence(alg, lat, *o.delta, o.close);
      central = two_term ? two_term_centrality(m, *delta) : centrality(m, pivot, *delta);
      json c{{"delta", to_string(*delta)}, {"holds", central->holds}};
      if (central->witness) {
        auto const& w = *central->witness;
        c["witness"]  = {{"cube", w.cube.entries()},
                         {"coordinate", w.coordinate},
                         {"pivot", {w.pivot.first, w.pivot.second}}};
      }
      if (central->two_term_witness) {
        c["witness"] = {{"h", central->two_term_witness->h.entries()},
                        {"g", central->two_term_witness->g.entries()}};
      }
      j["centrality"] = c;
    }
    if (o.json) {
      emit(o, j);
      return 0;
    }
    std::cout << to_string(result) << "\n";
    if (!modular && !two_term) {
      std::cout << "modularity not established";
      std::cout << (status.complete ? " (no Day chain exists)" : " (Day chain search inconclusive)")
                << "\n";
      for (std::size_t i = 0; i < per.per_coordinate.size(); ++i) {
        std::cout << "  pivot " << i << ": " << to_string(per.per_coordinate[i]) << "\n";
      }
    }
    if (central) {
      std::cout << "centrality modulo " << to_string(*delta) << ": " << (central->holds ? "holds" : "fails") << "\n";
      if (central->witness) {
        std::cout << "  witness " << to_string(central->witness->cube) << ", pivot line <"
                  << central->witness->pivot.first << "," << central->witness->pivot.second
                  << ">\n";
      }
      if (central->two_term_witness) {
        std::cout << "  witness h = " << to_string(central->two_term_witness->h)
                  << ", g = " << to_string(central->two_term_witness->g) << "\n";
      }
    }
    return 0;
  }

  int run_dayterms(Options const& o) {
    auto const alg    = read_algebra(o.algebra);
    auto const status = obtain_chain(alg, o);
    if (status.chain && !o.save.empty()) {
      write_chain(o.save, *status.chain);
    }
    json j{{"algebra", alg.name()},
           {"found", status.chain.has_value()},
           {"complete", status.complete},
           {"supplied", status.supplied},
           {"explored", status.explored}};
    if (status.chain) {
      j["chain"] = json::parse(chain_to_json(*status.chain));
    } else {
      j["chain"] = nullptr;
    }
    if (o.json) {
      emit(o, j);
      return 0;
    }
    if (status.chain) {
      std::cout << (status.supplied ? "verified" : "found") << " Day chain with n = "
                << status.chain->length() << "\n";
      for (std::size_t e = 0; e < status.chain->terms.size(); ++e) {
        std::cout << "  m_" << e << " = " << to_sexpr(status.chain->terms[e], day_variable_names())
                  << "\n";
      }
    } else if (status.complete) {
      std::cout << "none (variety not congruence modular)\n";
    } else {
      std::cout << "inconclusive: search stopped after " << status.explored
                << " term operations (raise --cap)\n";
    }
    return 0;
  }

  int run_gens(Options const& o) {
    auto const alg    = read_algebra(o.algebra);
    auto const lat    = congruence_lattice(alg);
    auto const t      = read_sequence(alg, lat, o);
    auto const status = obtain_chain(alg, o);
    if (!status.chain) {
      throw CheckFailure{"no Day chain available; X(T) is defined for congruence modular varieties"};
    }
    DayOperations const ops(alg, *status.chain);
    auto const          m         = generate_matrix_algebra(alg, t, cube_options(o));
    auto const          gens      = generator_set(m, ops);
    Partition const     generated = cg(alg, gens);
    Partition const     bracket   = higher_commutator(alg, m);
    json j{{"algebra", alg.name()},
           {"sequence", blocks(t)},
           {"generators", gens},
           {"generated", to_string(generated)},
           {"commutator", to_string(bracket)}};
    if (o.json) {
      emit(o, j);
    } else {
      std::size_t reflexive = 0;
      for (auto [a, b] : gens) {
        reflexive += a == b;
      }
      std::cout << gens.size() << " generator pairs (" << reflexive << " reflexive, not shown)\n";
      for (auto [a, b] : gens) {
        if (a != b) {
          std::cout << "  <" << a << "," << b << ">\n";
        }
      }
      std::cout << "Cg(X(T)) = " << to_string(generated) << "\n";
      std::cout << "[T]      = " << to_string(bracket) << "\n";
    }
    if (generated != bracket) {
      throw CheckFailure{"Cg(X(T)) differs from [T]"};
    }
    return 0;
  }

  int run_check(Options const& o) {
    auto const alg    = read_algebra(o.algebra);
    auto const status = obtain_chain(alg, o);
    Workbench  bench(alg, cube_options(o));
    std::size_t const kmax = o.k ? o.k : bench.default_kmax();
    std::optional<DayOperations> ops;
    if (status.chain) {
      ops.emplace(alg, *status.chain);
    }
    auto const reports = run_harness(bench, kmax, ops ? &*ops : nullptr);
    bool       passed  = true;
    json       list    = json::array();
    for (auto const& r : reports) {
      passed = passed && r.passed();
      json failures = json::array();
      for (auto const& f : r.failures) {
        failures.push_back({{"sequence", f.sequence}, {"details", f.details}});
      }
      list.push_back({{"theorem", r.theorem},
                      {"algebra", r.algebra},
                      {"instances", r.instances},
                      {"applicable", r.applicable},
                      {"note", r.note},
                      {"failures", failures}});
    }
    if (o.json) {
      emit(o, {{"algebra", alg.name()},
               {"kmax", kmax},
               {"modularity_established", ops.has_value()},
               {"passed", passed},
               {"reports", list}});
    } else {
      for (auto const& r : reports) {
        std::cout << (r.applicable ? (r.failures.empty() ? "PASS " : "FAIL ") : "N/A  ") << r.theorem
                  << "  (" << r.instances << " instances";
        if (!r.applicable) {
          std::cout << "; " << r.note;
        }
        std::cout << ")\n";
        for (auto const& f : r.failures) {
          std::cout << "    " << f.sequence << ": " << f.details << "\n";
        }
      }
    }
    return passed ? 0 : 1;
  }

  int run_matrices(Options const& o) {
    auto const    alg     = read_algebra(o.algebra);
    auto const    lat     = congruence_lattice(alg);
    auto const    t       = read_sequence(alg, lat, o);
    auto const    m       = generate_matrix_algebra(alg, t, cube_options(o));
    std::uint64_t const edge = count_edge_compatible(t, std::uint64_t(1) << 22);
    json j{{"algebra", alg.name()},
           {"sequence", blocks(t)},
           {"k", t.size()},
           {"bits_per_cube", m.codec().total_bits()},
           {"size", m.size()},
           {"edge_compatible", edge ? json(edge) : json(nullptr)}};
    if (o.json) {
      emit(o, j);
      return 0;
    }
    std::cout << "|M(T)| = " << m.size() << "  (k = " << t.size() << ", "
              << m.codec().total_bits() << " bits per cube)\n";
    if (edge) {
      std::cout << "edge-compatible cubes: " << edge << "\n";
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher commutators of congruences of finite algebras"};
  app.require_subcommand(1);
  Options o;
  if (char const* env = std::getenv("CMCOMM_CAP"); env && all_digits(env)) {
    o.cap = std::stoul(env);
  }

  auto add_common = [&](CLI::App* sub, bool congs) {
    sub->add_option("--algebra", o.algebra, "algebra file (JSON)")->required();
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--cap", o.cap, "term operation cap for the Day chain search");
    sub->add_option("--chain", o.chain, "Day chain file to use instead of searching");
    sub->add_option("--bits", o.bits, "bit budget for one packed cube (at most 64)");
    if (congs) {
      sub->add_option("--congs", o.congs, "congruences as \"|0 2|1 3|\" or lattice indices")
          ->required();
      sub->add_flag("--close", o.close, "replace each partition by the congruence it generates");
    }
  };

  auto* con = app.add_subcommand("con", "list the congruence lattice");
  add_common(con, false);
  auto* comm = app.add_subcommand("comm", "higher commutator [T]");
  add_common(comm, true);
  comm->add_option("--pivot", o.pivot, "pivot coordinate (default k-1)");
  comm->add_option("--delta", o.delta, "also test centrality modulo this congruence");
  auto* ttcomm = app.add_subcommand("ttcomm", "two-term commutator");
  add_common(ttcomm, true);
  ttcomm->add_option("--delta", o.delta, "also test two-term centrality modulo this congruence");
  auto* day = app.add_subcommand("dayterms", "find or verify Day terms");
  add_common(day, false);
  day->add_option("--save", o.save, "write the chain found to this file");
  auto* gens = app.add_subcommand("gens", "generators X(T) of [T]");
  add_common(gens, true);
  auto* check = app.add_subcommand("check", "run the theorem harness");
  add_common(check, false);
  check->add_option("--k", o.k, "largest k to quantify over (default 3 if |Con| <= 5, else 2)");
  auto* mats = app.add_subcommand("matrices", "statistics of M(T)");
  add_common(mats, true);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*con) {
      return run_con(o);
    }
    if (*comm) {
      return run_comm(o, false);
    }
    if (*ttcomm) {
      return run_comm(o, true);
    }
    if (*day) {
      return run_dayterms(o);
    }
    if (*gens) {
      return run_gens(o);
    }
    if (*check) {
      return run_check(o);
    }
    if (*mats) {
      return run_matrices(o);
    }
  } catch (CapacityError const& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return 3;
  } catch (NotACongruenceError const& e) {
    std::cerr << "not a congruence: " << e.what() << "\n";
    return 2;
  } catch (CheckFailure const& e) {
    std::cerr << "check failed: " << e.message << "\n";
    return 1;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

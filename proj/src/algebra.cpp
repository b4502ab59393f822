#include "cmcomm/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cmcomm/closure.hpp"
#include "cmcomm/error.hpp"

namespace cmcomm {

  namespace {
    std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t limit) {
      std::size_t result = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && result > limit / base) {
          return limit + 1;
        }
        result *= base;
      }
      return result;
    }

    bool is_group_operation(std::vector<Element> const& t, std::size_t n) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) {
              return false;
            }
          }
        }
      }
      std::optional<std::size_t> identity;
      for (std::size_t e = 0; e < n && !identity; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
          ok = t[e * n + a] == a && t[a * n + e] == a;
        }
        if (ok) {
          identity = e;
        }
      }
      if (!identity) {
        return false;
      }
      for (std::size_t a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (std::size_t b = 0; b < n && !has_inverse; ++b) {
          has_inverse = t[a * n + b] == *identity;
        }
        if (!has_inverse) {
          return false;
        }
      }
      return true;
    }

    std::string tuple_string(std::vector<unsigned> const& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
      }
      return s + ")";
    }
  }  // namespace

  FiniteAlgebra::FiniteAlgebra(std::string                 name,
                               std::size_t                 size,
                               std::vector<OperationTable> ops)
      : _name(std::move(name)), _size(size), _ops(std::move(ops)) {
    if (_size == 0) {
      throw AlgebraError("algebra " + _name + " has an empty universe");
    }
    std::set<std::string> symbols;
    for (auto const& op : _ops) {
      if (op.symbol.empty()) {
        throw AlgebraError("empty operation symbol in " + _name);
      }
      if (!symbols.insert(op.symbol).second) {
        throw AlgebraError("duplicate operation symbol '" + op.symbol + "' in " + _name);
      }
      std::size_t const expected = checked_pow(_size, op.arity, std::size_t(1) << 32);
      if (op.table.size() != expected) {
        throw AlgebraError("operation '" + op.symbol + "' of arity "
                           + std::to_string(op.arity) + " needs "
                           + std::to_string(expected) + " entries, has "
                           + std::to_string(op.table.size()));
      }
      for (auto x : op.table) {
        if (x >= _size) {
          throw AlgebraError("operation '" + op.symbol + "' has entry "
                             + std::to_string(x) + " outside the universe");
        }
      }
    }
    for (std::size_t i = 0; i < _ops.size(); ++i) {
      if (_ops[i].arity == 2 && is_group_operation(_ops[i].table, _size)) {
        _group_ops.push_back(i);
      }
    }
  }

  std::optional<std::size_t> FiniteAlgebra::find(std::string const& symbol) const {
    for (std::size_t i = 0; i < _ops.size(); ++i) {
      if (_ops[i].symbol == symbol) {
        return i;
      }
    }
    return std::nullopt;
  }

  Element FiniteAlgebra::apply(std::size_t op, std::span<Element const> args) const {
    auto const& o = _ops.at(op);
    if (args.size() != o.arity) {
      throw SignatureError("operation '" + o.symbol + "' expects "
                           + std::to_string(o.arity) + " arguments");
    }
    std::size_t index = 0;
    for (auto a : args) {
      if (a >= _size) {
        throw UniverseError("argument outside the universe");
      }
      index = index * _size + a;
    }
    return o.table[index];
  }

  Element FunctionTable::operator()(std::span<Element const> args, std::size_t n) const {
    std::size_t index = 0;
    for (auto a : args) {
      index = index * n + a;
    }
    return table.at(index);
  }

  void check_signature(FiniteAlgebra const& alg, Term const& t) {
    if (t.is_variable()) {
      return;
    }
    auto op = alg.find(t.symbol());
    if (!op) {
      throw SignatureError("unknown operation symbol '" + t.symbol() + "'");
    }
    if (alg.operation(*op).arity != t.children().size()) {
      throw SignatureError("operation '" + t.symbol() + "' has arity "
                           + std::to_string(alg.operation(*op).arity) + ", applied to "
                           + std::to_string(t.children().size()) + " arguments");
    }
    for (auto const& c : t.children()) {
      check_signature(alg, c);
    }
  }

  Element eval_term(FiniteAlgebra const& alg, Term const& t, std::span<Element const> env) {
    if (t.is_variable()) {
      if (t.index() >= env.size()) {
        throw ArityError("variable x" + std::to_string(t.index()) + " is not bound");
      }
      return env[t.index()];
    }
    auto op = alg.find(t.symbol());
    if (!op) {
      throw SignatureError("unknown operation symbol '" + t.symbol() + "'");
    }
    auto const& o = alg.operation(*op);
    if (o.arity != t.children().size()) {
      throw SignatureError("operation '" + t.symbol() + "' has arity "
                           + std::to_string(o.arity) + ", applied to "
                           + std::to_string(t.children().size()) + " arguments");
    }
    std::size_t index = 0;
    for (auto const& c : t.children()) {
      index = index * alg.size() + eval_term(alg, c, env);
    }
    return o.table[index];
  }

  std::vector<Element> decode_tuple(Element code, std::size_t n, std::size_t m) {
    std::vector<Element> tuple(m);
    for (std::size_t i = m; i-- > 0;) {
      tuple[i] = static_cast<Element>(code % n);
      code /= static_cast<Element>(n);
    }
    return tuple;
  }

  Element encode_tuple(std::span<Element const> tuple, std::size_t n) {
    std::size_t code = 0;
    for (auto a : tuple) {
      code = code * n + a;
    }
    return static_cast<Element>(code);
  }

  FunctionTable tabulate(FiniteAlgebra const& alg, Term const& t, std::size_t m) {
    check_signature(alg, t);
    if (t.number_of_variables() > m) {
      throw ArityError("term uses more than " + std::to_string(m) + " variables");
    }
    std::size_t const n     = alg.size();
    std::size_t const total = checked_pow(n, m, std::size_t(1) << 28);
    if (total > (std::size_t(1) << 28)) {
      throw CapacityError("function table too large", std::pow(double(n), double(m)));
    }
    FunctionTable f{m, std::vector<Element>(total)};
    for (std::size_t code = 0; code < total; ++code) {
      auto env     = decode_tuple(static_cast<Element>(code), n, m);
      f.table[code] = eval_term(alg, t, env);
    }
    return f;
  }

  FiniteAlgebra power(FiniteAlgebra const& alg, std::size_t m, std::size_t max_table_entries) {
    if (m < 1) {
      throw ContractError("power exponent must be at least 1");
    }
    std::size_t const n    = alg.size();
    std::size_t const size = checked_pow(n, m, max_table_entries);
    if (size > max_table_entries || size > 0xFFFFFFFFu) {
      throw CapacityError("power " + alg.name() + "^" + std::to_string(m)
                              + " has too many elements",
                          std::pow(double(n), double(m)));
    }
    std::vector<OperationTable> ops;
    for (auto const& op : alg.operations()) {
      std::size_t const entries = checked_pow(size, op.arity, max_table_entries);
      if (entries > max_table_entries) {
        throw CapacityError("operation '" + op.symbol + "' of " + alg.name() + "^"
                                + std::to_string(m) + " needs more than "
                                + std::to_string(max_table_entries) + " entries",
                            std::pow(double(size), double(op.arity)));
      }
      OperationTable out{op.symbol, op.arity, std::vector<Element>(entries)};
      std::vector<std::vector<Element>> args(op.arity);
      std::vector<Element>              column(op.arity);
      for (std::size_t index = 0; index < entries; ++index) {
        // split index into arity many power elements
        std::size_t rest = index;
        for (std::size_t i = op.arity; i-- > 0;) {
          args[i] = decode_tuple(static_cast<Element>(rest % size), n, m);
          rest /= size;
        }
        std::vector<Element> result(m);
        for (std::size_t c = 0; c < m; ++c) {
          for (std::size_t i = 0; i < op.arity; ++i) {
            column[i] = args[i][c];
          }
          result[c] = alg.apply(&op - alg.operations().data(), column);
        }
        out.table[index] = encode_tuple(result, n);
      }
      ops.push_back(std::move(out));
    }
    return FiniteAlgebra(alg.name() + "^" + std::to_string(m), size, std::move(ops));
  }

  std::vector<Element> subuniverse_closure(FiniteAlgebra const&        alg,
                                           std::vector<Element> const& generators) {
    for (auto g : generators) {
      if (g >= alg.size()) {
        throw UniverseError("generator outside the universe");
      }
    }
    std::vector<std::size_t> arities;
    for (auto const& op : alg.operations()) {
      arities.push_back(op.arity);
    }
    std::vector<Element> gens(generators);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    auto apply = [&](std::size_t op, std::span<Element const> args) {
      return alg.apply(op, args);
    };
    std::optional<std::size_t> group_op;
    if (!alg.group_operations().empty()) {
      group_op = alg.group_operations().front();
    }
    return detail::close<Element>(arities, apply, gens, group_op, alg.size());
  }

  namespace {
    // First violation of compatibility: an operation, a position, a frozen
    // tuple of other arguments and a related pair whose images are unrelated.
    bool find_violation(FiniteAlgebra const&   alg,
                        Partition const&       p,
                        std::size_t&           bad_op,
                        std::vector<unsigned>& left,
                        std::vector<unsigned>& right) {
      std::size_t const n = alg.size();
      for (std::size_t op = 0; op < alg.number_of_operations(); ++op) {
        auto const&       o     = alg.operation(op);
        std::size_t const r     = o.arity;
        std::size_t const total = o.table.size();
        for (std::size_t index = 0; index < total; ++index) {
          auto tuple = decode_tuple(static_cast<Element>(index), n, r);
          // vary one coordinate at a time to its block representative
          for (std::size_t pos = 0; pos < r; ++pos) {
            Element const a   = tuple[pos];
            Element const rep = p.rep(a);
            if (rep == a) {
              continue;
            }
            auto other = tuple;
            other[pos] = rep;
            if (!p.related(o.table[index], alg.apply(op, other))) {
              bad_op = op;
              left.assign(tuple.begin(), tuple.end());
              right.assign(other.begin(), other.end());
              return true;
            }
          }
        }
      }
      return false;
    }
  }  // namespace

  void check_congruence(FiniteAlgebra const& alg, Partition const& p) {
    if (p.size() != alg.size()) {
      throw UniverseError("partition over " + std::to_string(p.size())
                          + " elements for an algebra of size "
                          + std::to_string(alg.size()));
    }
    std::size_t           op = 0;
    std::vector<unsigned> left, right;
    if (find_violation(alg, p, op, left, right)) {
      auto const& sym = alg.operation(op).symbol;
      throw NotACongruenceError(to_string(p) + " is not compatible with operation '" + sym
                                    + "': " + tuple_string(left) + " and "
                                    + tuple_string(right) + " are related but their images are not",
                                sym,
                                left,
                                right);
    }
  }

  bool is_congruence(FiniteAlgebra const& alg, Partition const& p) {
    if (p.size() != alg.size()) {
      return false;
    }
    std::size_t           op = 0;
    std::vector<unsigned> left, right;
    return !find_violation(alg, p, op, left, right);
  }

  Quotient quotient(FiniteAlgebra const& alg, Partition const& pi) {
    check_congruence(alg, pi);
    auto const        map    = pi.block_indices();
    std::size_t const blocks = pi.number_of_blocks();
    std::vector<Element> reps;
    for (std::size_t a = 0; a < alg.size(); ++a) {
      if (pi.rep(static_cast<Element>(a)) == a) {
        reps.push_back(static_cast<Element>(a));
      }
    }
    std::vector<OperationTable> ops;
    for (std::size_t op = 0; op < alg.number_of_operations(); ++op) {
      auto const&       o       = alg.operation(op);
      std::size_t const entries = checked_pow(blocks, o.arity, std::size_t(1) << 32);
      OperationTable    out{o.symbol, o.arity, std::vector<Element>(entries)};
      std::vector<Element> args(o.arity);
      for (std::size_t index = 0; index < entries; ++index) {
        auto blocks_tuple = decode_tuple(static_cast<Element>(index), blocks, o.arity);
        for (std::size_t i = 0; i < o.arity; ++i) {
          args[i] = reps[blocks_tuple[i]];
        }
        out.table[index] = map[alg.apply(op, args)];
      }
      ops.push_back(std::move(out));
    }
    return Quotient{FiniteAlgebra(alg.name() + "/" + to_string(pi), blocks, std::move(ops)),
                    map};
  }

}  // namespace cmcomm

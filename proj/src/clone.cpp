#include <algorithm>
#include <cmath>

#include "clone_enumerator.hpp"
#include "cmcomm/error.hpp"

namespace cmcomm {

  namespace detail {

    namespace {
      constexpr std::size_t npos = static_cast<std::size_t>(-1);
    }

    std::size_t CloneEnumerator::Hash::operator()(Id id) const noexcept {
      auto        v = self->values(id);
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto x : v) {
        h = (h ^ x) * 0x100000001b3ULL;
      }
      return h;
    }

    bool CloneEnumerator::Equal::operator()(Id a, Id b) const noexcept {
      auto va = self->values(a);
      auto vb = self->values(b);
      return std::equal(va.begin(), va.end(), vb.begin());
    }

    CloneEnumerator::CloneEnumerator(FiniteAlgebra const&                     alg,
                                     std::size_t                              m,
                                     std::vector<std::vector<Element>> const& domain,
                                     std::size_t                              cap)
        : _alg(alg),
          _width(domain.size()),
          _cap(cap),
          _index(64, Hash{this}, Equal{this}) {
      if (alg.size() > 256) {
        throw CapacityError("term operation enumeration supports at most 256 elements",
                            double(alg.size()));
      }
      for (auto const& tuple : domain) {
        if (tuple.size() != m) {
          throw ContractError("domain tuple of wrong length");
        }
      }
      for (std::size_t i = 0; i < m; ++i) {
        _arena.resize((_count + 1) * _width);
        for (std::size_t p = 0; p < _width; ++p) {
          _arena[_count * _width + p] = static_cast<std::uint8_t>(domain[p][i]);
        }
        add_scratch(Origin{npos, {}, i});
      }
      for (std::size_t op = 0; op < alg.number_of_operations(); ++op) {
        if (alg.operation(op).arity == 0) {
          _arena.resize((_count + 1) * _width);
          std::fill(_arena.begin() + _count * _width, _arena.end(),
                    static_cast<std::uint8_t>(alg.operation(op).table[0]));
          add_scratch(Origin{op, {}, 0});
        }
      }
    }

    // The candidate occupies arena slot _count.
    void CloneEnumerator::add_scratch(Origin origin) {
      if (_truncated) {
        _arena.resize(_count * _width);
        return;
      }
      Id const candidate = static_cast<Id>(_count);
      if (_index.find(candidate) != _index.end()) {
        _arena.resize(_count * _width);
        return;
      }
      if (_count >= _cap) {
        _truncated = true;
        _arena.resize(_count * _width);
        return;
      }
      _index.insert(candidate);
      _origin.push_back(std::move(origin));
      ++_count;
    }

    bool CloneEnumerator::step() {
      if (_truncated || _next >= _count) {
        return false;
      }
      std::size_t const cur = _next++;
      std::size_t const n   = _alg.size();
      std::vector<Id>   idx;
      for (std::size_t op = 0; op < _alg.number_of_operations() && !_truncated; ++op) {
        auto const&       o = _alg.operation(op);
        std::size_t const r = o.arity;
        if (r == 0) {
          continue;
        }
        for (std::size_t p = 0; p < r && !_truncated; ++p) {
          if (p > 0 && cur == 0) {
            break;
          }
          idx.assign(r, 0);
          idx[p] = static_cast<Id>(cur);
          while (!_truncated) {
            _arena.resize((_count + 1) * _width);
            std::uint8_t* out = _arena.data() + _count * _width;
            for (std::size_t q = 0; q < _width; ++q) {
              std::size_t index = 0;
              for (std::size_t i = 0; i < r; ++i) {
                index = index * n + _arena[std::size_t(idx[i]) * _width + q];
              }
              out[q] = static_cast<std::uint8_t>(o.table[index]);
            }
            add_scratch(Origin{op, idx, 0});
            std::size_t pos = 0;
            for (; pos < r; ++pos) {
              if (pos == p) {
                continue;
              }
              std::size_t const limit = pos < p ? cur : cur + 1;
              if (++idx[pos] < limit) {
                break;
              }
              idx[pos] = 0;
            }
            if (pos == r) {
              break;
            }
          }
        }
      }
      return true;
    }

    Term CloneEnumerator::witness(Id id) const {
      auto const& origin = _origin.at(id);
      if (origin.op == npos) {
        return Term::variable(origin.variable);
      }
      std::vector<Term> children;
      for (auto c : origin.children) {
        children.push_back(witness(c));
      }
      return Term::apply(_alg.operation(origin.op).symbol, std::move(children));
    }

  }  // namespace detail

  TermClone term_operations_closure(FiniteAlgebra const& alg, std::size_t m, std::size_t cap) {
    if (m < 1) {
      throw ContractError("term operations need at least one variable");
    }
    if (cap < m) {
      throw ContractError("cap must be at least the number of projections");
    }
    std::size_t const n = alg.size();
    double const      total = std::pow(double(n), double(m));
    if (total > double(std::size_t(1) << 24)) {
      throw CapacityError("domain A^" + std::to_string(m) + " too large to tabulate", total);
    }
    std::vector<std::vector<Element>> domain;
    for (std::size_t code = 0; code < static_cast<std::size_t>(total); ++code) {
      domain.push_back(decode_tuple(static_cast<Element>(code), n, m));
    }
    detail::CloneEnumerator clone(alg, m, domain, cap);
    while (clone.step()) {
    }
    TermClone result;
    result.complete = clone.complete();
    for (std::size_t id = 0; id < clone.size(); ++id) {
      auto          v = clone.values(static_cast<detail::CloneEnumerator::Id>(id));
      FunctionTable f{m, std::vector<Element>(v.begin(), v.end())};
      result.members.push_back(
          CloneMember{std::move(f), clone.witness(static_cast<detail::CloneEnumerator::Id>(id))});
    }
    std::sort(result.members.begin(), result.members.end(),
              [](CloneMember const& a, CloneMember const& b) { return a.table < b.table; });
    return result;
  }

}  // namespace cmcomm

#include "cmcomm/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cmcomm/error.hpp"

namespace cmcomm {

  namespace {
    std::size_t ipow(std::size_t b, std::size_t e) {
      std::size_t r = 1;
      while (e-- > 0) {
        r *= b;
      }
      return r;
    }
  }  // namespace

  Partition cg(FiniteAlgebra const& alg, Partition const& start, std::vector<Pair> const& pairs) {
    std::size_t const n = alg.size();
    if (start.size() != n) {
      throw UniverseError("partition size does not match the algebra");
    }
    UnionFind        uf(n);
    std::deque<Pair> work;
    auto             merge = [&](Element a, Element b) {
      if (uf.unite(a, b)) {
        work.emplace_back(a, b);
      }
    };
    for (auto [a, b] : start.spanning_pairs()) {
      merge(a, b);
    }
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw UniverseError("pair entry outside the universe");
      }
      merge(a, b);
    }
    while (!work.empty()) {
      auto [a, b] = work.front();
      work.pop_front();
      for (auto const& op : alg.operations()) {
        std::size_t const r = op.arity;
        for (std::size_t pos = 0; pos < r; ++pos) {
          std::size_t const stride = ipow(n, r - 1 - pos);
          std::size_t const others = ipow(n, r - 1);
          for (std::size_t o = 0; o < others; ++o) {
            // insert the varying coordinate at pos
            std::size_t const high = o / stride;
            std::size_t const low  = o % stride;
            std::size_t const base = high * stride * n + low;
            merge(op.table[base + a * stride], op.table[base + b * stride]);
          }
        }
      }
    }
    return uf.partition();
  }

  Partition cg(FiniteAlgebra const& alg, std::vector<Pair> const& pairs) {
    return cg(alg, Partition::equality(alg.size()), pairs);
  }

  CongruenceLattice::CongruenceLattice(std::vector<Partition> elements)
      : _elements(std::move(elements)) {
    if (_elements.empty()) {
      throw ContractError("a congruence lattice has at least one element");
    }
    std::sort(_elements.begin(), _elements.end(), [](Partition const& p, Partition const& q) {
      auto bp = p.number_of_blocks();
      auto bq = q.number_of_blocks();
      return bp != bq ? bp > bq : p.reps() < q.reps();
    });
    _elements.erase(std::unique(_elements.begin(), _elements.end()), _elements.end());
    std::size_t const s = _elements.size();
    _leq.assign(s * s, false);
    _join.assign(s * s, 0);
    _meet.assign(s * s, 0);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        _leq[i * s + j] = _elements[i].leq(_elements[j]);
      }
    }
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        auto ji = index_of(cmcomm::join(_elements[i], _elements[j]));
        auto mi = index_of(cmcomm::meet(_elements[i], _elements[j]));
        if (!ji || !mi) {
          throw ContractError("partition family is not closed under join and meet");
        }
        _join[i * s + j] = *ji;
        _meet[i * s + j] = *mi;
      }
    }
  }

  std::optional<std::size_t> CongruenceLattice::index_of(Partition const& p) const {
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      if (_elements[i] == p) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::vector<std::size_t> CongruenceLattice::join_irreducibles() const {
    std::vector<std::size_t> result;
    for (std::size_t x = 1; x < size(); ++x) {
      bool reducible = false;
      for (std::size_t a = 0; a < size() && !reducible; ++a) {
        for (std::size_t b = 0; b < size() && !reducible; ++b) {
          reducible = a != x && b != x && leq(a, x) && leq(b, x) && join(a, b) == x;
        }
      }
      if (!reducible) {
        result.push_back(x);
      }
    }
    return result;
  }

  CongruenceLattice congruence_lattice(FiniteAlgebra const& alg) {
    std::size_t const   n = alg.size();
    std::set<Partition> found;
    found.insert(Partition::equality(n));
    std::vector<Partition> principal;
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        auto p = cg(alg, {{a, b}});
        if (found.insert(p).second) {
          principal.push_back(p);
        }
      }
    }
    // every congruence is a join of principal ones
    std::vector<Partition> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
      std::vector<Partition> next;
      for (auto const& x : frontier) {
        for (auto const& p : principal) {
          auto j = join(x, p);
          if (found.insert(j).second) {
            next.push_back(std::move(j));
          }
        }
      }
      frontier = std::move(next);
    }
    return CongruenceLattice(std::vector<Partition>(found.begin(), found.end()));
  }

  ModularityReport is_modular_lattice(std::size_t s, std::vector<bool> const& leq) {
    if (leq.size() != s * s) {
      throw ContractError("order matrix has the wrong size");
    }
    auto le = [&](std::size_t i, std::size_t j) { return bool(leq[i * s + j]); };
    // least upper bound / greatest lower bound from the order
    auto bound = [&](std::size_t x, std::size_t y, bool upper) -> std::size_t {
      std::optional<std::size_t> best;
      for (std::size_t c = 0; c < s; ++c) {
        bool is_bound = upper ? (le(x, c) && le(y, c)) : (le(c, x) && le(c, y));
        if (!is_bound) {
          continue;
        }
        if (!best || (upper ? le(c, *best) : le(*best, c))) {
          best = c;
        }
      }
      if (!best) {
        throw ContractError("order is not a lattice");
      }
      return *best;
    };
    ModularityReport report;
    for (std::size_t x = 0; x < s; ++x) {
      for (std::size_t z = 0; z < s; ++z) {
        if (!le(x, z)) {
          continue;
        }
        for (std::size_t y = 0; y < s; ++y) {
          std::size_t lhs = bound(x, bound(y, z, false), true);
          std::size_t rhs = bound(bound(x, y, true), z, false);
          if (lhs != rhs) {
            report.holds          = false;
            report.counterexample = {x, y, z};
            return report;
          }
        }
      }
    }
    return report;
  }

  ModularityReport is_modular_lattice(CongruenceLattice const& lat) {
    std::size_t const s = lat.size();
    std::vector<bool> leq(s * s);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        leq[i * s + j] = lat.leq(i, j);
      }
    }
    return is_modular_lattice(s, leq);
  }

}  // namespace cmcomm

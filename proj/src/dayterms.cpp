#include "cmcomm/dayterms.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "clone_enumerator.hpp"
#include "cmcomm/error.hpp"

namespace cmcomm {

  namespace {
    using Id = detail::CloneEnumerator::Id;

    // Argument tuples of the restricted search: all (x,y,y,u), then (x,x,u,u)
    // with x != u.  pos4/pos5 list the indices of the (x,x,u,u) and (x,y,y,u)
    // tuples, pos1 those of the (x,y,y,x) ones.
    struct SearchDomain {
      std::vector<std::vector<Element>> tuples;
      std::vector<std::size_t>          pos4, pos5, pos1;
    };

    SearchDomain search_domain(std::size_t n) {
      SearchDomain d;
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          for (Element u = 0; u < n; ++u) {
            if (u == x) {
              d.pos1.push_back(d.tuples.size());
            }
            d.pos5.push_back(d.tuples.size());
            d.tuples.push_back({x, y, y, u});
          }
        }
      }
      for (Element x = 0; x < n; ++x) {
        for (Element u = 0; u < n; ++u) {
          if (x == u) {
            d.pos4.push_back((std::size_t(x) * n + x) * n + x);
          } else {
            d.pos4.push_back(d.tuples.size());
            d.tuples.push_back({x, x, u, u});
          }
        }
      }
      return d;
    }

    std::string restrict_to(std::span<std::uint8_t const> values, std::vector<std::size_t> const& pos) {
      std::string key(pos.size(), '\0');
      for (std::size_t i = 0; i < pos.size(); ++i) {
        key[i] = static_cast<char>(values[pos[i]]);
      }
      return key;
    }

    struct Bucket {
      std::vector<Id> members;
      bool            reached = false;
    };

    // Members satisfying (1), bucketed by their restriction to the (x,x,u,u)
    // tuples (parity 0, identity (4)) and the (x,y,y,u) tuples (parity 1,
    // identity (5)).  A state (v, p) means v may serve as m_e with e = p mod 2.
    class ChainGraph {
     public:
      ChainGraph(detail::CloneEnumerator const& clone, SearchDomain const& domain)
          : _clone(clone), _domain(domain) {}

      void add(Id id) {
        auto values = _clone.values(id);
        for (auto p : _domain.pos1) {
          if (values[p] != _domain.tuples[p][0]) {
            return;
          }
        }
        if (_reach.size() <= id) {
          _reach.resize(std::size_t(id) + 1, {false, false});
          _keys.resize(std::size_t(id) + 1);
        }
        _vertices.push_back(id);
        for (int p = 0; p < 2; ++p) {
          _keys[id][p] = restrict_to(values, p == 0 ? _domain.pos4 : _domain.pos5);
          auto& bucket = _buckets[p][_keys[id][p]];
          bucket.members.push_back(id);
          if (bucket.reached) {
            mark(id, 1 - p);
          }
        }
        drain();
      }

      void start(Id x) {
        mark(x, 0);
        drain();
      }

      bool reached(Id id) const {
        return id < _reach.size() && (_reach[id][0] || _reach[id][1]);
      }

      // Shortest state path from (x, 0) to u at either parity.
      std::vector<Id> shortest_path(Id x, Id u) const {
        std::unordered_map<std::uint64_t, std::uint64_t> parent;
        std::unordered_set<std::string>                  expanded[2];
        auto state = [](Id id, int p) { return (std::uint64_t(id) << 1) | std::uint64_t(p); };
        std::deque<std::uint64_t> queue{state(x, 0)};
        parent.emplace(state(x, 0), state(x, 0));
        while (!queue.empty()) {
          auto const s  = queue.front();
          queue.pop_front();
          Id const  id = static_cast<Id>(s >> 1);
          int const p  = int(s & 1);
          if (id == u) {
            std::vector<Id> path;
            for (auto t = s;; t = parent.at(t)) {
              path.push_back(static_cast<Id>(t >> 1));
              if (parent.at(t) == t) {
                break;
              }
            }
            return {path.rbegin(), path.rend()};
          }
          auto const& key = _keys[id][p];
          if (!expanded[p].insert(key).second) {
            continue;
          }
          for (auto w : _buckets[p].at(key).members) {
            auto const next = state(w, 1 - p);
            if (parent.emplace(next, s).second) {
              queue.push_back(next);
            }
          }
        }
        return {};
      }

     private:
      void mark(Id id, int p) {
        if (!_reach[id][p]) {
          _reach[id][p] = true;
          _work.emplace_back(id, p);
        }
      }

      void drain() {
        while (!_work.empty()) {
          auto [id, p] = _work.back();
          _work.pop_back();
          auto& bucket = _buckets[p][_keys[id][p]];
          if (bucket.reached) {
            continue;
          }
          bucket.reached = true;
          for (auto w : bucket.members) {
            mark(w, 1 - p);
          }
        }
      }

      detail::CloneEnumerator const&             _clone;
      SearchDomain const&                        _domain;
      std::vector<Id>                            _vertices;
      std::vector<std::array<bool, 2>>           _reach;
      std::vector<std::array<std::string, 2>>    _keys;
      std::unordered_map<std::string, Bucket>    _buckets[2];
      std::vector<std::pair<Id, int>>            _work;
    };

    Id find_member(detail::CloneEnumerator const& clone, std::size_t variable, SearchDomain const& d) {
      for (Id id = 0; id < clone.size(); ++id) {
        auto values = clone.values(id);
        bool match  = true;
        for (std::size_t p = 0; p < d.tuples.size() && match; ++p) {
          match = values[p] == d.tuples[p][variable];
        }
        if (match) {
          return id;
        }
      }
      throw ContractError("projection missing from the clone");
    }
  }  // namespace

  DaySearchResult find_day_chain(FiniteAlgebra const& alg, std::size_t cap) {
    DayChain const trivial{{Term::variable(0), Term::variable(3)}};
    std::size_t const n = alg.size();
    DaySearchResult   result;
    if (n == 1) {
      result.chain    = trivial;
      result.complete = true;
      result.explored = 1;
      return result;
    }
    SearchDomain const      domain = search_domain(n);
    detail::CloneEnumerator clone(alg, 4, domain.tuples, std::max<std::size_t>(cap, 4));
    Id const                x = find_member(clone, 0, domain);
    Id const                u = find_member(clone, 3, domain);

    ChainGraph  graph(clone, domain);
    std::size_t added = 0;
    auto        absorb = [&] {
      for (; added < clone.size(); ++added) {
        graph.add(static_cast<Id>(added));
      }
    };
    absorb();
    graph.start(x);
    while (!graph.reached(u) && clone.step()) {
      absorb();
    }
    result.explored = clone.size();
    if (!graph.reached(u)) {
      result.complete = clone.complete();
      return result;
    }
    result.complete = true;
    auto path       = graph.shortest_path(x, u);
    DayChain chain;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i == 0) {
        chain.terms.push_back(Term::variable(0));
      } else if (i + 1 == path.size()) {
        chain.terms.push_back(Term::variable(3));
      } else {
        chain.terms.push_back(clone.witness(path[i]));
      }
    }
    if (!verify_day_chain(alg, chain).holds) {
      throw ContractError("Day chain search produced a chain that fails verification");
    }
    result.chain = std::move(chain);
    return result;
  }

  namespace {
    std::vector<std::vector<Element>> tabulate_chain(FiniteAlgebra const& alg, DayChain const& chain) {
      if (chain.terms.size() < 2) {
        throw ContractError("a Day chain has at least the terms m_0 and m_1");
      }
      std::vector<std::vector<Element>> tables;
      for (auto const& t : chain.terms) {
        if (t.number_of_variables() > 4) {
          throw ArityError("Day terms use the variables x, y, z, u only");
        }
        tables.push_back(tabulate(alg, t, 4).table);
      }
      return tables;
    }
  }  // namespace

  ChainVerification verify_day_chain(FiniteAlgebra const& alg, DayChain const& chain) {
    auto const        tables = tabulate_chain(alg, chain);
    std::size_t const n      = alg.size();
    std::size_t const last   = chain.length();
    auto m = [&](std::size_t e, Element x, Element y, Element z, Element u) {
      return tables[e][((x * n + y) * n + z) * n + u];
    };
    ChainVerification result;
    auto fail = [&](int identity, std::size_t e, std::vector<Element> tuple) {
      result.holds   = false;
      result.failure = ChainFailure{identity, e, std::move(tuple)};
    };
    for (std::size_t e = 0; e <= last; ++e) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (m(e, x, y, y, x) != x) {
            fail(1, e, {x, y});
            return result;
          }
        }
      }
    }
    for (int identity : {2, 3}) {
      std::size_t const e = identity == 2 ? 0 : last;
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          for (Element z = 0; z < n; ++z) {
            for (Element u = 0; u < n; ++u) {
              if (m(e, x, y, z, u) != (identity == 2 ? x : u)) {
                fail(identity, e, {x, y, z, u});
                return result;
              }
            }
          }
        }
      }
    }
    for (std::size_t e = 0; e < last; e += 2) {
      for (Element x = 0; x < n; ++x) {
        for (Element u = 0; u < n; ++u) {
          if (m(e, x, x, u, u) != m(e + 1, x, x, u, u)) {
            fail(4, e, {x, u});
            return result;
          }
        }
      }
    }
    for (std::size_t e = 1; e < last; e += 2) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          for (Element u = 0; u < n; ++u) {
            if (m(e, x, y, y, u) != m(e + 1, x, y, y, u)) {
              fail(5, e, {x, y, u});
              return result;
            }
          }
        }
      }
    }
    return result;
  }

  DayOperations::DayOperations(FiniteAlgebra const& alg, DayChain chain)
      : _chain(std::move(chain)), _n(alg.size()), _tables(tabulate_chain(alg, _chain)) {}

  bool shift_pair_test(DayOperations const& ops,
                       Partition const&     delta,
                       Element              a,
                       Element              b,
                       Element              c,
                       Element              d) {
    if (delta.size() != ops.universe_size()) {
      throw UniverseError("partition and Day chain live on different universes");
    }
    if (!delta.related(b, d)) {
      throw ContractError("shift test needs <b,d> in delta, got <" + std::to_string(b) + ","
                          + std::to_string(d) + ">");
    }
    for (std::size_t e = 0; e <= ops.length(); ++e) {
      if (!delta.related(ops(e, a, a, c, c), ops(e, a, b, d, c))) {
        return false;
      }
    }
    return true;
  }

  Cube shift_rotation(Cube const& h, std::size_t j, std::size_t l, std::size_t e, DayOperations const& ops) {
    std::size_t const k = h.dimension();
    if (j >= k || l >= k || j == l) {
      throw CoordinateError("shift rotation needs two distinct coordinates below "
                            + std::to_string(k));
    }
    if (e > ops.length()) {
      throw ContractError("Day term index " + std::to_string(e) + " exceeds n = "
                          + std::to_string(ops.length()));
    }
    CubeIndex const      bj = CubeIndex(1) << j;
    CubeIndex const      bl = CubeIndex(1) << l;
    std::vector<Element> out(h.entries());
    for (CubeIndex f = 0; f < out.size(); ++f) {
      if (f & (bj | bl)) {
        continue;
      }
      Element const r = h[f], s = h[f | bl], u = h[f | bj], v = h[f | bj | bl];
      out[f]           = s;
      out[f | bl]      = s;
      out[f | bj]      = ops(e, s, r, u, v);
      out[f | bj | bl] = ops(e, s, s, v, v);
    }
    return Cube(k, std::move(out));
  }

  Cube rotate_along_tree(Cube const& h, TreeAddress const& d, DayOperations const& ops) {
    std::size_t const k = h.dimension();
    if (k == 0 || d.size() > k - 1) {
      throw TreeError("tree address of length " + std::to_string(d.size())
                      + " is too long for k = " + std::to_string(k));
    }
    Cube c = h;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] > ops.length()) {
        throw TreeError("tree address entry " + std::to_string(d[i]) + " exceeds n = "
                        + std::to_string(ops.length()));
      }
      c = shift_rotation(c, i, i + 1, d[i], ops);
    }
    return c;
  }

  std::vector<Pair> generator_set(MatrixAlgebra const& m, DayOperations const& ops) {
    std::size_t const k     = m.dimension();
    CubeIndex const   pivot = pivot_position(k, k - 1);
    CubeIndex const   top   = CubeIndex(1) << (k - 1);
    std::unordered_set<std::uint64_t> found;
    // depth-first over the tree, sharing rotated prefixes
    auto visit = [&](auto&& self, Cube const& c, std::size_t depth) -> void {
      if (depth + 1 == k) {
        found.insert((std::uint64_t(c[pivot]) << 32) | c[pivot | top]);
        return;
      }
      for (std::size_t e = 0; e <= ops.length(); ++e) {
        self(self, shift_rotation(c, depth, depth + 1, e, ops), depth + 1);
      }
    };
    for (auto code : m.codes()) {
      visit(visit, m.codec().decode(code), 0);
    }
    std::vector<Pair> result;
    for (auto p : found) {
      result.emplace_back(static_cast<Element>(p >> 32), static_cast<Element>(p & 0xffffffffu));
    }
    std::sort(result.begin(), result.end());
    return result;
  }

}  // namespace cmcomm

#include "cmcomm/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cmcomm/error.hpp"

namespace cmcomm {

  Partition::Partition(std::vector<Element> rep) : _rep(std::move(rep)) {
    for (std::size_t a = 0; a < _rep.size(); ++a) {
      if (_rep[a] > a || _rep[_rep[a]] != _rep[a]) {
        throw UniverseError("partition array is not in canonical form at "
                            + std::to_string(a));
      }
    }
  }

  Partition Partition::equality(std::size_t n) {
    std::vector<Element> rep(n);
    std::iota(rep.begin(), rep.end(), Element(0));
    Partition p;
    p._rep = std::move(rep);
    return p;
  }

  Partition Partition::full(std::size_t n) {
    Partition p;
    p._rep.assign(n, 0);
    return p;
  }

  Partition Partition::from_pairs(std::size_t n, std::vector<Pair> const& pairs) {
    UnionFind uf(n);
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw UniverseError("pair entry outside universe of size "
                            + std::to_string(n));
      }
      uf.unite(a, b);
    }
    return uf.partition();
  }

  std::size_t Partition::number_of_blocks() const {
    std::size_t count = 0;
    for (std::size_t a = 0; a < _rep.size(); ++a) {
      count += (_rep[a] == a);
    }
    return count;
  }

  std::vector<Element> Partition::block_indices() const {
    std::vector<Element> index(_rep.size());
    Element              next = 0;
    for (std::size_t a = 0; a < _rep.size(); ++a) {
      index[a] = (_rep[a] == a) ? next++ : index[_rep[a]];
    }
    return index;
  }

  std::vector<std::vector<Element>> Partition::blocks() const {
    auto                              index = block_indices();
    std::vector<std::vector<Element>> result(number_of_blocks());
    for (std::size_t a = 0; a < _rep.size(); ++a) {
      result[index[a]].push_back(static_cast<Element>(a));
    }
    return result;
  }

  bool Partition::is_equality() const {
    return number_of_blocks() == _rep.size();
  }

  bool Partition::is_full() const {
    return std::all_of(_rep.begin(), _rep.end(), [](Element r) { return r == 0; });
  }

  bool Partition::leq(Partition const& other) const {
    if (other.size() != size()) {
      throw UniverseError("partitions over universes of different sizes");
    }
    for (std::size_t a = 0; a < _rep.size(); ++a) {
      if (other._rep[a] != other._rep[_rep[a]]) {
        return false;
      }
    }
    return true;
  }

  std::vector<Pair> Partition::spanning_pairs() const {
    std::vector<Pair> result;
    for (std::size_t a = 0; a < _rep.size(); ++a) {
      if (_rep[a] != a) {
        result.emplace_back(_rep[a], static_cast<Element>(a));
      }
    }
    return result;
  }

  Partition join(Partition const& p, Partition const& q) {
    if (p.size() != q.size()) {
      throw UniverseError("join of partitions over universes of different sizes");
    }
    UnionFind uf(p);
    for (auto [a, b] : q.spanning_pairs()) {
      uf.unite(a, b);
    }
    return uf.partition();
  }

  Partition meet(Partition const& p, Partition const& q) {
    if (p.size() != q.size()) {
      throw UniverseError("meet of partitions over universes of different sizes");
    }
    std::vector<Element> rep(p.size());
    for (std::size_t a = 0; a < p.size(); ++a) {
      rep[a] = static_cast<Element>(a);
      // least b in the intersection of both blocks
      for (std::size_t b = p.rep(a); b < a; ++b) {
        if (p.rep(b) == p.rep(a) && q.rep(b) == q.rep(a)) {
          rep[a] = static_cast<Element>(b);
          break;
        }
      }
    }
    return Partition(std::move(rep));
  }

  std::string to_string(Partition const& p) {
    std::string out = "|";
    for (auto const& block : p.blocks()) {
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i > 0) {
          out += ' ';
        }
        out += std::to_string(block[i]);
      }
      out += '|';
    }
    return out;
  }

  Partition parse_partition(std::string_view text, std::size_t n) {
    std::size_t pos = 0;
    auto        skip_space = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    skip_space();
    if (pos >= text.size() || text[pos] != '|') {
      throw ParseError("partition must start with '|'", pos);
    }
    ++pos;
    std::vector<std::vector<Element>> blocks;
    std::vector<Element>              current;
    while (true) {
      skip_space();
      if (pos >= text.size()) {
        throw ParseError("partition must end with '|'", pos);
      }
      char c = text[pos];
      if (c == '|') {
        if (current.empty()) {
          throw ParseError("empty block", pos);
        }
        blocks.push_back(std::move(current));
        current.clear();
        ++pos;
        skip_space();
        if (pos == text.size()) {
          break;
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t   start = pos;
        unsigned long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
          if (value > 0xFFFFFFu) {
            throw ParseError("element too large", start);
          }
          ++pos;
        }
        current.push_back(static_cast<Element>(value));
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
      }
    }
    if (blocks.empty()) {
      throw ParseError("partition has no blocks", pos);
    }
    std::size_t seen_max = 0;
    std::size_t count    = 0;
    for (auto const& b : blocks) {
      for (auto x : b) {
        seen_max = std::max<std::size_t>(seen_max, x);
        ++count;
      }
    }
    std::size_t universe = n == 0 ? seen_max + 1 : n;
    if (count != universe || seen_max >= universe) {
      throw ParseError("blocks must cover 0.." + std::to_string(universe - 1)
                           + " exactly once",
                       0);
    }
    std::vector<Element> label(universe, static_cast<Element>(-1));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (auto x : blocks[i]) {
        if (label[x] != static_cast<Element>(-1)) {
          throw ParseError("element " + std::to_string(x) + " listed twice", 0);
        }
        label[x] = static_cast<Element>(i);
      }
    }
    return Partition::from_labels(label);
  }

  UnionFind::UnionFind(std::size_t n) : _parent(n) {
    std::iota(_parent.begin(), _parent.end(), Element(0));
  }

  UnionFind::UnionFind(Partition const& p) : _parent(p.reps()) {}

  Element UnionFind::find(Element a) {
    while (_parent[a] != a) {
      _parent[a] = _parent[_parent[a]];
      a          = _parent[a];
    }
    return a;
  }

  bool UnionFind::unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    // keep the smaller element as root so roots are least representatives
    if (a < b) {
      _parent[b] = a;
    } else {
      _parent[a] = b;
    }
    return true;
  }

  Partition UnionFind::partition() {
    std::vector<Element> rep(_parent.size());
    for (std::size_t a = 0; a < _parent.size(); ++a) {
      rep[a] = find(static_cast<Element>(a));
    }
    return Partition(std::move(rep));
  }

}  // namespace cmcomm

#include "cmcomm/corpus.hpp"

#include <algorithm>

#include "cmcomm/error.hpp"

namespace cmcomm {

  namespace {
    template <class F>
    OperationTable binary(std::string symbol, std::size_t n, F f) {
      OperationTable op{std::move(symbol), 2, {}};
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          op.table.push_back(f(a, b));
        }
      }
      return op;
    }

    template <class F>
    OperationTable unary(std::string symbol, std::size_t n, F f) {
      OperationTable op{std::move(symbol), 1, {}};
      for (Element a = 0; a < n; ++a) {
        op.table.push_back(f(a));
      }
      return op;
    }

    OperationTable constant(std::string symbol, Element c) {
      return OperationTable{std::move(symbol), 0, {c}};
    }
  }  // namespace

  FiniteAlgebra trivial_algebra() {
    return FiniteAlgebra("trivial", 1, {binary("*", 1, [](Element, Element) { return 0u; })});
  }

  FiniteAlgebra cyclic_group(std::size_t n) {
    if (n == 0) {
      throw AlgebraError("a group has at least one element");
    }
    Element const m = static_cast<Element>(n);
    return FiniteAlgebra("Z" + std::to_string(n), n,
                         {binary("+", n, [m](Element a, Element b) { return (a + b) % m; }),
                          unary("-", n, [m](Element a) { return (m - a) % m; }),
                          constant("0", 0)});
  }

  FiniteAlgebra klein_group() {
    return FiniteAlgebra("Z2xZ2", 4,
                         {binary("+", 4, [](Element a, Element b) { return a ^ b; }),
                          unary("-", 4, [](Element a) { return a; }), constant("0", 0)});
  }

  FiniteAlgebra dihedral_group(std::size_t m) {
    if (m < 3) {
      throw AlgebraError("dihedral groups are built for m >= 3");
    }
    std::size_t const n = 2 * m;
    // element i < m is r^i, element m + i is s r^i; each as a map on Z_m
    std::vector<std::vector<Element>> maps;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Element> map(m);
      for (std::size_t x = 0; x < m; ++x) {
        std::size_t const rx = (x + i % m) % m;
        map[x] = static_cast<Element>(i < m ? rx : (m - rx) % m);
      }
      maps.push_back(std::move(map));
    }
    auto index_of = [&](std::vector<Element> const& map) {
      return static_cast<Element>(std::find(maps.begin(), maps.end(), map) - maps.begin());
    };
    auto compose = [&](Element a, Element b) {
      std::vector<Element> map(m);
      for (std::size_t x = 0; x < m; ++x) {
        map[x] = maps[a][maps[b][x]];
      }
      return index_of(map);
    };
    auto inverse = [&](Element a) {
      for (Element b = 0; b < n; ++b) {
        if (compose(a, b) == 0) {
          return b;
        }
      }
      throw AlgebraError("dihedral element without inverse");
    };
    std::string const name = m == 3 ? "S3" : "D" + std::to_string(m);
    return FiniteAlgebra(name, n, {binary("*", n, compose), unary("inv", n, inverse), constant("e", 0)});
  }

  FiniteAlgebra z4_ring() {
    return FiniteAlgebra("Z4ring", 4,
                         {binary("+", 4, [](Element a, Element b) { return (a + b) % 4; }),
                          unary("-", 4, [](Element a) { return (4 - a) % 4; }), constant("0", 0),
                          binary("*", 4, [](Element a, Element b) { return (a * b) % 4; })});
  }

  FiniteAlgebra semilattice2() {
    return FiniteAlgebra("semilattice2", 2,
                         {binary("^", 2, [](Element a, Element b) { return std::min(a, b); })});
  }

  std::vector<CorpusEntry> builtin_corpus() {
    std::vector<CorpusEntry> corpus;
    corpus.push_back({trivial_algebra(), "trivial.json", false, false});
    corpus.push_back({cyclic_group(2), "z2.json", true, false});
    corpus.push_back({cyclic_group(3), "z3.json", true, false});
    corpus.push_back({cyclic_group(4), "z4.json", true, false});
    corpus.push_back({klein_group(), "z2xz2.json", true, false});
    corpus.push_back({dihedral_group(3), "s3.json", true, false});
    corpus.push_back({z4_ring(), "z4ring.json", false, false});
    corpus.push_back({semilattice2(), "semilattice2.json", false, false});
    corpus.push_back({dihedral_group(4), "d4.json", true, true});
    return corpus;
  }

}  // namespace cmcomm

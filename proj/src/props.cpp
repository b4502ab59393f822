#include "cmcomm/props.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "cmcomm/commutator.hpp"
#include "cmcomm/error.hpp"

namespace cmcomm {

  Workbench::Workbench(FiniteAlgebra alg, CubeOptions options)
      : _alg(std::move(alg)), _options(options), _lattice(congruence_lattice(_alg)) {}

  CongruenceSequence Workbench::sequence(Indices const& t) const {
    CongruenceSequence result;
    for (auto i : t) {
      result.push_back(_lattice[i]);
    }
    return result;
  }

  MatrixAlgebra const& Workbench::matrices(Indices const& t) {
    auto it = _matrices.find(t);
    if (it == _matrices.end()) {
      auto m = std::make_unique<MatrixAlgebra>(generate_matrix_algebra(_alg, sequence(t), _options));
      it     = _matrices.emplace(t, std::move(m)).first;
    }
    return *it->second;
  }

  std::size_t Workbench::commutator(Indices const& t) {
    auto it = _commutators.find(t);
    if (it == _commutators.end()) {
      it = _commutators.emplace(t, index_of(higher_commutator(_alg, matrices(t)))).first;
    }
    return it->second;
  }

  std::size_t Workbench::index_of(Partition const& p) const {
    auto i = _lattice.index_of(p);
    if (!i) {
      throw NotACongruenceError("partition " + cmcomm::to_string(p) + " is not a congruence of "
                                    + _alg.name(),
                                "", {}, {});
    }
    return *i;
  }

  std::vector<Workbench::Indices> Workbench::sequences(std::size_t k) const {
    std::vector<Indices> result;
    Indices              t(k, 0);
    std::size_t const    s = _lattice.size();
    while (true) {
      result.push_back(t);
      std::size_t p = k;
      while (p > 0) {
        if (++t[p - 1] < s) {
          break;
        }
        t[p - 1] = 0;
        --p;
      }
      if (p == 0) {
        return result;
      }
    }
  }

  bool Workbench::fits(std::size_t k) const {
    std::size_t const n    = _alg.size();
    std::size_t const bits = n <= 2 ? 1 : static_cast<std::size_t>(std::bit_width(n - 1));
    return k < 31 && (bits << k) <= std::min<std::size_t>(_options.capacity_bits, 64);
  }

  std::string to_string(CongruenceSequence const& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      out += (i ? ", " : "") + to_string(t[i]);
    }
    return out + ")";
  }

  namespace {
    constexpr std::size_t max_recorded_failures = 50;

    struct Recorder {
      TheoremReport report;

      Recorder(std::string theorem, Workbench const& bench) {
        report.theorem = std::move(theorem);
        report.algebra = bench.algebra().name();
      }

      void fail(std::string sequence, std::string details) {
        if (report.failures.size() < max_recorded_failures) {
          report.failures.push_back({std::move(sequence), std::move(details)});
        }
      }

      TheoremReport not_applicable(std::string note) {
        report.applicable = false;
        report.note       = std::move(note);
        return std::move(report);
      }
    };

    std::string const no_chain = "no Day chain: modularity not established";

    // Calls body(k, t) for every T with kmin <= k <= kmax that fits the budget.
    void for_each_sequence(Workbench&                                                  bench,
                           std::size_t                                                 kmin,
                           std::size_t                                                 kmax,
                           std::function<void(std::size_t, Workbench::Indices const&)> body) {
      for (std::size_t k = kmin; k <= kmax; ++k) {
        if (!bench.fits(k)) {
          break;
        }
        for (auto const& t : bench.sequences(k)) {
          body(k, t);
        }
      }
    }

    std::string describe(Workbench const& bench, Workbench::Indices const& t) {
      return to_string(bench.sequence(t));
    }

    std::string partition_name(Workbench const& bench, std::size_t i) {
      return to_string(bench.lattice()[i]);
    }

    std::size_t join_all(CongruenceLattice const& lat, std::vector<std::size_t> const& items) {
      std::size_t acc = lat.bottom();
      for (auto i : items) {
        acc = lat.join(acc, i);
      }
      return acc;
    }

    // A / pi with the maps between the two lattices.
    class QuotientView {
     public:
      QuotientView(Workbench const& bench, Partition const& pi)
          : _pi(pi),
            _q(quotient(bench.algebra(), pi)),
            _bench(_q.algebra, bench.options()) {}

      Workbench& bench() {
        return _bench;
      }

      // f(theta) for theta >= pi.
      Partition image(Partition const& theta) const {
        std::vector<Pair> pairs;
        for (auto [a, b] : theta.spanning_pairs()) {
          pairs.emplace_back(_q.map[a], _q.map[b]);
        }
        return Partition::from_pairs(_q.algebra.size(), pairs);
      }

      Partition preimage(Partition const& rho) const {
        std::vector<Element> labels(_q.map.size());
        for (std::size_t a = 0; a < labels.size(); ++a) {
          labels[a] = rho.rep(_q.map[a]);
        }
        return Partition::from_labels(labels);
      }

     private:
      Partition _pi;
      Quotient  _q;
      Workbench _bench;
    };
  }  // namespace

  TheoremReport check_basic_properties(Workbench& bench, std::size_t kmax) {
    Recorder    rec("basic-properties", bench);
    auto const& lat = bench.lattice();
    for_each_sequence(bench, 1, kmax, [&](std::size_t k, Workbench::Indices const& t) {
      std::size_t const c = bench.commutator(t);
      ++rec.report.instances;
      std::size_t meet = lat.top();
      for (auto i : t) {
        meet = lat.meet(meet, i);
      }
      if (!lat.leq(c, meet)) {
        rec.fail(describe(bench, t), "[T] = " + partition_name(bench, c) + " is not below the meet "
                                         + partition_name(bench, meet));
      }
      if (k >= 2) {
        Workbench::Indices const tail(t.begin() + 1, t.end());
        std::size_t const        ct = bench.commutator(tail);
        if (!lat.leq(c, ct)) {
          rec.fail(describe(bench, t), "[T] = " + partition_name(bench, c)
                                           + " is not below the bracket of its tail "
                                           + partition_name(bench, ct));
        }
      }
      for (auto const& u : bench.sequences(k)) {
        bool above = true;
        for (std::size_t i = 0; i < k && above; ++i) {
          above = lat.leq(t[i], u[i]);
        }
        if (above && !lat.leq(c, bench.commutator(u))) {
          rec.fail(describe(bench, t), "monotonicity fails against " + describe(bench, u));
        }
      }
    });
    bench.release_matrices();
    return std::move(rec.report);
  }

  TheoremReport check_symmetry(Workbench& bench, std::size_t kmax, DayOperations const* ops) {
    Recorder rec("symmetry", bench);
    if (!ops) {
      return rec.not_applicable(no_chain);
    }
    for_each_sequence(bench, 2, kmax, [&](std::size_t k, Workbench::Indices const& t) {
      std::size_t const  c = bench.commutator(t);
      std::vector<std::size_t> sigma(k);
      for (std::size_t i = 0; i < k; ++i) {
        sigma[i] = i;
      }
      do {
        Workbench::Indices permuted(k);
        for (std::size_t i = 0; i < k; ++i) {
          permuted[i] = t[sigma[i]];
        }
        ++rec.report.instances;
        if (bench.commutator(permuted) != c) {
          rec.fail(describe(bench, t), "permuted to " + describe(bench, permuted) + " gives "
                                           + partition_name(bench, bench.commutator(permuted))
                                           + " instead of " + partition_name(bench, c));
        }
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      auto per = commutators_per_coordinate(bench.algebra(), bench.matrices(t));
      for (std::size_t j = 0; j < k; ++j) {
        if (per.per_coordinate[j] != bench.lattice()[c]) {
          rec.fail(describe(bench, t), "pivot " + std::to_string(j) + " gives "
                                           + to_string(per.per_coordinate[j]));
        }
      }
    });
    bench.release_matrices();
    return std::move(rec.report);
  }

  TheoremReport check_additivity(Workbench& bench, std::size_t kmax, DayOperations const* ops) {
    Recorder rec("additivity", bench);
    if (!ops) {
      return rec.not_applicable(no_chain);
    }
    auto const&       lat = bench.lattice();
    std::size_t const s   = lat.size();
    std::vector<std::vector<std::size_t>> decompositions;
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = a; b < s; ++b) {
        decompositions.push_back({a, b});
        if (s <= 5) {
          for (std::size_t c = b; c < s; ++c) {
            decompositions.push_back({a, b, c});
          }
        }
      }
    }
    auto const irreducibles = lat.join_irreducibles();
    for (std::size_t g = 0; g < s; ++g) {
      std::vector<std::size_t> below;
      for (auto x : irreducibles) {
        if (lat.leq(x, g)) {
          below.push_back(x);
        }
      }
      if (join_all(lat, below) != g) {
        rec.fail(partition_name(bench, g), "not the join of the join-irreducibles below it");
      }
      decompositions.push_back(std::move(below));
    }
    for (std::size_t k = 2; k <= kmax && bench.fits(k); ++k) {
      for (auto const& prefix : bench.sequences(k - 1)) {
        for (auto const& parts : decompositions) {
          for (bool last : {true, false}) {
            auto with = [&](std::size_t g) {
              Workbench::Indices t = prefix;
              t.insert(last ? t.end() : t.begin(), g);
              return t;
            };
            std::size_t rhs = lat.bottom();
            for (auto g : parts) {
              rhs = lat.join(rhs, bench.commutator(with(g)));
            }
            auto const        t   = with(join_all(lat, parts));
            std::size_t const lhs = bench.commutator(t);
            ++rec.report.instances;
            if (lhs != rhs) {
              std::string names;
              for (auto g : parts) {
                names += (names.empty() ? "" : " v ") + partition_name(bench, g);
              }
              rec.fail(describe(bench, t), "join " + names + " in the " + (last ? "last" : "first")
                                               + " coordinate: bracket " + partition_name(bench, lhs)
                                               + ", join of brackets " + partition_name(bench, rhs));
            }
          }
        }
      }
    }
    bench.release_matrices();
    return std::move(rec.report);
  }

  TheoremReport check_homomorphism_property(Workbench& bench, std::size_t kmax, DayOperations const* ops) {
    Recorder rec("homomorphism", bench);
    if (!ops) {
      return rec.not_applicable(no_chain);
    }
    auto const& lat = bench.lattice();
    for (std::size_t p = 0; p < lat.size(); ++p) {
      QuotientView view(bench, lat[p]);
      for_each_sequence(bench, 1, kmax, [&](std::size_t, Workbench::Indices const& t) {
        Workbench::Indices image;
        for (auto i : t) {
          image.push_back(view.bench().index_of(view.image(lat[lat.join(i, p)])));
        }
        Partition const rhs = view.preimage(view.bench().lattice()[view.bench().commutator(image)]);
        Partition const lhs = lat[lat.join(bench.commutator(t), p)];
        ++rec.report.instances;
        if (lhs != rhs) {
          rec.fail(describe(bench, t), "pi = " + partition_name(bench, p) + ": [T] v pi = "
                                           + to_string(lhs) + ", pulled back "
                                           + to_string(rhs));
        }
      });
      bench.release_matrices();
    }
    return std::move(rec.report);
  }

  TheoremReport check_homomorphism_image(Workbench& bench, std::size_t kmax, DayOperations const* ops) {
    Recorder rec("homomorphism-image", bench);
    if (!ops) {
      return rec.not_applicable(no_chain);
    }
    auto const& lat = bench.lattice();
    for (std::size_t p = 0; p < lat.size(); ++p) {
      QuotientView view(bench, lat[p]);
      for_each_sequence(bench, 1, kmax, [&](std::size_t, Workbench::Indices const& t) {
        Workbench::Indices image;
        for (auto i : t) {
          if (!lat.leq(p, i)) {
            return;
          }
          image.push_back(view.bench().index_of(view.image(lat[i])));
        }
        Partition const lhs = view.image(lat[lat.join(bench.commutator(t), p)]);
        Partition const rhs = view.bench().lattice()[view.bench().commutator(image)];
        ++rec.report.instances;
        if (lhs != rhs) {
          rec.fail(describe(bench, t), "pi = " + partition_name(bench, p) + ": f([T] v pi) = "
                                           + to_string(lhs) + ", [f(T)] = " + to_string(rhs));
        }
      });
      bench.release_matrices();
    }
    return std::move(rec.report);
  }

  TheoremReport check_two_term_equivalence(Workbench& bench, std::size_t kmax, DayOperations const* ops) {
    Recorder rec("two-term", bench);
    if (!ops) {
      return rec.not_applicable(no_chain);
    }
    auto const& lat = bench.lattice();
    for_each_sequence(bench, 1, kmax, [&](std::size_t k, Workbench::Indices const& t) {
      auto const& m = bench.matrices(t);
      for (std::size_t d = 0; d < lat.size(); ++d) {
        bool const c  = centrality(m, k - 1, lat[d]).holds;
        bool const tt = two_term_centrality(m, lat[d]).holds;
        ++rec.report.instances;
        if (c != tt) {
          rec.fail(describe(bench, t), "delta = " + partition_name(bench, d) + ": centrality "
                                           + (c ? "holds" : "fails") + ", two-term "
                                           + (tt ? "holds" : "fails"));
        }
      }
      Partition const tt = two_term_commutator(bench.algebra(), m);
      if (tt != lat[bench.commutator(t)]) {
        rec.fail(describe(bench, t), "two-term commutator " + to_string(tt) + ", commutator "
                                         + partition_name(bench, bench.commutator(t)));
      }
    });
    bench.release_matrices();
    return std::move(rec.report);
  }

  TheoremReport check_generators(Workbench& bench, std::size_t kmax, DayOperations const* ops) {
    Recorder rec("generators", bench);
    if (!ops) {
      return rec.not_applicable(no_chain);
    }
    for_each_sequence(bench, 1, kmax, [&](std::size_t, Workbench::Indices const& t) {
      Partition const generated = cg(bench.algebra(), generator_set(bench.matrices(t), *ops));
      ++rec.report.instances;
      if (generated != bench.lattice()[bench.commutator(t)]) {
        rec.fail(describe(bench, t), "Cg(X(T)) = " + to_string(generated) + ", [T] = "
                                         + partition_name(bench, bench.commutator(t)));
      }
    });
    bench.release_matrices();
    return std::move(rec.report);
  }

  TheoremReport check_lattice_scan(Workbench& bench, std::size_t kmax) {
    Recorder rec("lattice-scan", bench);
    for_each_sequence(bench, 1, kmax, [&](std::size_t, Workbench::Indices const& t) {
      Partition const scan = commutator_by_lattice_scan(bench.matrices(t), bench.lattice());
      ++rec.report.instances;
      if (scan != bench.lattice()[bench.commutator(t)]) {
        rec.fail(describe(bench, t), "lattice scan " + to_string(scan) + ", fixpoint "
                                         + partition_name(bench, bench.commutator(t)));
      }
    });
    bench.release_matrices();
    return std::move(rec.report);
  }

  TheoremReport check_edge_invariants(Workbench& bench, std::size_t kmax) {
    Recorder rec("edge-invariants", bench);
    for_each_sequence(bench, 1, kmax, [&](std::size_t, Workbench::Indices const& t) {
      auto const&        m   = bench.matrices(t);
      auto const         seq = bench.sequence(t);
      for (auto code : m.codes()) {
        ++rec.report.instances;
        if (!satisfies_edge_invariant(m.codec().decode(code), seq)) {
          rec.fail(describe(bench, t), "cube " + to_string(m.codec().decode(code))
                                           + " has an edge outside its congruence");
        }
      }
      for (auto const& g : one_coordinate_generators(seq)) {
        if (!m.contains(g)) {
          rec.fail(describe(bench, t), "generator " + to_string(g) + " missing from M(T)");
        }
      }
    });
    bench.release_matrices();
    return std::move(rec.report);
  }

  namespace {
    bool lines_in(Cube const& c, std::size_t j, Partition const& delta, bool pivot) {
      std::size_t const k = c.dimension();
      for (auto const& line : lines(c, j)) {
        bool const is_pivot = classify(k, line.position, j) == CrossSection::pivot;
        if (is_pivot == pivot && !delta.related(line.first, line.second)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  TheoremReport check_shift_rotations(Workbench& bench, std::size_t kmax, DayOperations const* ops) {
    Recorder rec("shift-rotations", bench);
    if (!ops) {
      return rec.not_applicable(no_chain);
    }
    auto const& lat = bench.lattice();
    for_each_sequence(bench, 2, kmax, [&](std::size_t k, Workbench::Indices const& t) {
      auto const& m = bench.matrices(t);
      for (auto code : m.codes()) {
        Cube const h = m.codec().decode(code);
        for (std::size_t j = 0; j < k; ++j) {
          for (std::size_t l = 0; l < k; ++l) {
            if (j == l) {
              continue;
            }
            ++rec.report.instances;
            std::vector<Cube> rotated;
            for (std::size_t e = 0; e <= ops->length(); ++e) {
              rotated.push_back(shift_rotation(h, j, l, e, *ops));
              Cube const& r      = rotated.back();
              auto const  before = squares(h, j, l);
              auto const  after  = squares(r, j, l);
              for (std::size_t q = 0; q < before.size(); ++q) {
                auto const& b = before[q];
                auto const& a = after[q];
                if (a.r != b.s || a.s != b.s || a.u != (*ops)(e, b.s, b.r, b.u, b.v)
                    || a.v != (*ops)(e, b.s, b.s, b.v, b.v)) {
                  rec.fail(describe(bench, t), "square formula fails for " + to_string(h));
                }
              }
              if (!m.contains(r)) {
                rec.fail(describe(bench, t), "R(" + to_string(h) + ") = " + to_string(r)
                                                 + " is not in M(T)");
              }
            }
            // the (j)-supporting line inside the (j,l)-pivot square
            CubeIndex const square = pivot_position(k, j) & ~(CubeIndex(1) << l);
            CubeIndex const pj     = pivot_position(k, j);
            CubeIndex const bj     = CubeIndex(1) << j;
            CubeIndex const pl     = pivot_position(k, l);
            CubeIndex const bl     = CubeIndex(1) << l;
            for (std::size_t d = 0; d < lat.size(); ++d) {
              Partition const& delta = lat[d];
              if (lines_in(h, j, delta, false)) {
                for (auto const& r : rotated) {
                  if (!lines_in(r, l, delta, false)) {
                    rec.fail(describe(bench, t), "delta = " + to_string(delta)
                                                     + ": supporting lines not carried over by "
                                                     + to_string(h));
                  }
                }
              }
              if (delta.related(h[square], h[square | bj])) {
                bool const left  = delta.related(h[pj], h[pj | bj]);
                bool       right = true;
                for (auto const& r : rotated) {
                  right = right && delta.related(r[pl], r[pl | bl]);
                }
                if (left != right) {
                  rec.fail(describe(bench, t), "delta = " + to_string(delta)
                                                   + ": pivot equivalence fails for "
                                                   + to_string(h));
                }
              }
            }
          }
        }
      }
    });
    bench.release_matrices();
    return std::move(rec.report);
  }

  TheoremReport check_tree_rotations(Workbench& bench, std::size_t kmax, DayOperations const* ops) {
    Recorder rec("tree-rotations", bench);
    if (!ops) {
      return rec.not_applicable(no_chain);
    }
    for_each_sequence(bench, 2, kmax, [&](std::size_t k, Workbench::Indices const& t) {
      auto const& m = bench.matrices(t);
      for (auto code : m.codes()) {
        Cube const h = m.codec().decode(code);
        // c = h^d with |d| = i + 1
        auto visit = [&](auto&& self, Cube const& c, TreeAddress& d) -> void {
          if (!d.empty()) {
            std::size_t const i   = d.size() - 1;
            CubeIndex const   bit = CubeIndex(1) << (i + 1);
            CubeIndex const   low = (CubeIndex(1) << (i + 1)) - 1;
            ++rec.report.instances;
            if (c != rotate_along_tree(h, d, *ops)) {
              rec.fail(describe(bench, t), "incremental rotation disagrees with the tree walk");
            }
            for (CubeIndex f = 0; f < (CubeIndex(1) << k); ++f) {
              if ((f & bit) || (f & low) == low) {
                continue;
              }
              if (c[f] != c[f | bit]) {
                std::string address;
                for (auto x : d) {
                  address += std::to_string(x);
                }
                rec.fail(describe(bench, t), "h = " + to_string(h) + ", d = " + address
                                                 + ": line at " + std::to_string(f)
                                                 + " is not constant");
              }
            }
          }
          if (d.size() + 1 == k) {
            return;
          }
          for (std::size_t e = 0; e <= ops->length(); ++e) {
            d.push_back(e);
            self(self, shift_rotation(c, d.size() - 1, d.size(), e, *ops), d);
            d.pop_back();
          }
        };
        TreeAddress d;
        visit(visit, h, d);
      }
    });
    bench.release_matrices();
    return std::move(rec.report);
  }

  TheoremReport check_shift_pairs(Workbench& bench, DayOperations const* ops) {
    Recorder rec("shift-pairs", bench);
    if (!ops) {
      return rec.not_applicable(no_chain);
    }
    std::size_t const n = bench.algebra().size();
    if (n > 6) {
      return rec.not_applicable("universe larger than 6");
    }
    for (auto const& delta : bench.lattice().elements()) {
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          for (Element c = 0; c < n; ++c) {
            for (Element d = 0; d < n; ++d) {
              if (!delta.related(b, d)) {
                continue;
              }
              ++rec.report.instances;
              if (shift_pair_test(*ops, delta, a, b, c, d) != delta.related(a, c)) {
                rec.fail(to_string(delta), "(a,b,c,d) = (" + std::to_string(a) + ","
                                               + std::to_string(b) + "," + std::to_string(c) + ","
                                               + std::to_string(d) + ")");
              }
            }
          }
        }
      }
    }
    return std::move(rec.report);
  }

  TheoremReport check_shifting_lemma(Workbench& bench, DayOperations const* ops) {
    Recorder rec("shifting-lemma", bench);
    if (!ops) {
      return rec.not_applicable(no_chain);
    }
    auto const&       lat = bench.lattice();
    std::size_t const n   = bench.algebra().size();
    for (std::size_t t1 = 0; t1 < lat.size(); ++t1) {
      for (std::size_t t2 = 0; t2 < lat.size(); ++t2) {
        for (std::size_t g = 0; g < lat.size(); ++g) {
          if (!lat.leq(lat.meet(t1, t2), g)) {
            continue;
          }
          Partition const& th1 = lat[t1];
          Partition const& th2 = lat[t2];
          Partition const& gam = lat[g];
          for (Element a = 0; a < n; ++a) {
            for (Element b = 0; b < n; ++b) {
              if (!th1.related(a, b)) {
                continue;
              }
              for (Element c = 0; c < n; ++c) {
                if (!th2.related(a, c)) {
                  continue;
                }
                for (Element d = 0; d < n; ++d) {
                  if (!th1.related(c, d) || !th2.related(b, d) || !gam.related(b, d)) {
                    continue;
                  }
                  ++rec.report.instances;
                  if (!gam.related(a, c)) {
                    rec.fail(to_string(CongruenceSequence{th1, th2, gam}),
                             "(a,b,c,d) = (" + std::to_string(a) + "," + std::to_string(b) + ","
                                 + std::to_string(c) + "," + std::to_string(d) + ")");
                  }
                }
              }
            }
          }
        }
      }
    }
    return std::move(rec.report);
  }

  std::vector<TheoremReport> run_harness(Workbench& bench, std::size_t kmax, DayOperations const* ops) {
    std::vector<TheoremReport> reports;
    reports.push_back(check_basic_properties(bench, kmax));
    reports.push_back(check_lattice_scan(bench, kmax));
    reports.push_back(check_edge_invariants(bench, kmax));
    reports.push_back(check_symmetry(bench, kmax, ops));
    reports.push_back(check_additivity(bench, kmax, ops));
    reports.push_back(check_homomorphism_property(bench, kmax, ops));
    reports.push_back(check_homomorphism_image(bench, kmax, ops));
    reports.push_back(check_two_term_equivalence(bench, kmax, ops));
    reports.push_back(check_generators(bench, kmax, ops));
    reports.push_back(check_shift_rotations(bench, kmax, ops));
    reports.push_back(check_tree_rotations(bench, kmax, ops));
    reports.push_back(check_shift_pairs(bench, ops));
    reports.push_back(check_shifting_lemma(bench, ops));
    return reports;
  }

}  // namespace cmcomm

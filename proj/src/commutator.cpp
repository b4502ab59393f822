#include "cmcomm/commutator.hpp"

#include <unordered_map>

#include "cmcomm/error.hpp"

namespace cmcomm {

  namespace {
    struct LineScan {
      bool supporting_in_delta;
      bool pivot_in_delta;
    };

    LineScan scan_lines(CubeCodec const& codec,
                        std::uint64_t    code,
                        std::size_t      j,
                        Partition const& delta) {
      std::size_t const k     = codec.dimension();
      CubeIndex const   bit   = CubeIndex(1) << j;
      CubeIndex const   pivot = pivot_position(k, j);
      LineScan          scan{true, true};
      for (CubeIndex f = 0; f < (CubeIndex(1) << k); ++f) {
        if (f & bit) {
          continue;
        }
        bool const in = delta.related(codec.entry(code, f), codec.entry(code, f | bit));
        if (f == pivot) {
          scan.pivot_in_delta = in;
        } else if (!in) {
          scan.supporting_in_delta = false;
          break;
        }
      }
      return scan;
    }

    void check_delta(MatrixAlgebra const& m, Partition const& delta) {
      if (!m.sequence().empty() && delta.size() != m.sequence().front().size()) {
        throw UniverseError("delta is over a different universe than T");
      }
    }

    // Two-term key: delta classes of all entries except the all-ones vertex.
    std::uint64_t two_term_key(CubeCodec const& codec, std::uint64_t code, Partition const& delta) {
      std::size_t const vertices = std::size_t(1) << codec.dimension();
      std::uint64_t     key      = 0;
      for (CubeIndex f = 0; f + 1 < vertices; ++f) {
        key |= std::uint64_t(delta.rep(codec.entry(code, f))) << (f * codec.bits_per_entry());
      }
      return key;
    }
  }  // namespace

  CentralityReport centrality(MatrixAlgebra const& m, std::size_t j, Partition const& delta) {
    std::size_t const k = m.dimension();
    if (j >= k) {
      throw CoordinateError("pivot coordinate " + std::to_string(j) + " out of range for k = "
                            + std::to_string(k));
    }
    check_delta(m, delta);
    CentralityReport report;
    for (auto code : m.codes()) {
      auto scan = scan_lines(m.codec(), code, j, delta);
      if (scan.supporting_in_delta && !scan.pivot_in_delta) {
        Cube                      cube = m.codec().decode(code);
        CentralityReport::Witness w{cube, j, {}, {}};
        for (auto const& line : lines(cube, j)) {
          if (classify(k, line.position, j) == CrossSection::pivot) {
            w.pivot = line;
          } else {
            w.supporting.push_back(line);
          }
        }
        report.holds   = false;
        report.witness = std::move(w);
        return report;
      }
    }
    return report;
  }

  Partition commutator_at(FiniteAlgebra const& alg, MatrixAlgebra const& m, std::size_t j) {
    std::size_t const k = m.dimension();
    if (j >= k) {
      throw CoordinateError("pivot coordinate " + std::to_string(j) + " out of range for k = "
                            + std::to_string(k));
    }
    CubeIndex const pivot = pivot_position(k, j);
    CubeIndex const bit   = CubeIndex(1) << j;
    Partition       delta = Partition::equality(alg.size());
    while (true) {
      std::vector<Pair> forced;
      for (auto code : m.codes()) {
        auto scan = scan_lines(m.codec(), code, j, delta);
        if (scan.supporting_in_delta && !scan.pivot_in_delta) {
          forced.emplace_back(m.codec().entry(code, pivot), m.codec().entry(code, pivot | bit));
        }
      }
      if (forced.empty()) {
        return delta;
      }
      delta = cg(alg, delta, forced);
    }
  }

  Partition higher_commutator(FiniteAlgebra const& alg, MatrixAlgebra const& m) {
    return commutator_at(alg, m, m.dimension() - 1);
  }

  Partition higher_commutator(FiniteAlgebra const&      alg,
                              CongruenceSequence const& t,
                              CubeOptions const&        options) {
    return higher_commutator(alg, generate_matrix_algebra(alg, t, options));
  }

  Partition commutator_by_lattice_scan(MatrixAlgebra const& m, CongruenceLattice const& lat) {
    std::size_t const j      = m.dimension() - 1;
    Partition         result = lat[lat.top()];
    for (auto const& delta : lat.elements()) {
      if (centrality(m, j, delta).holds) {
        result = meet(result, delta);
      }
    }
    return result;
  }

  CentralityReport two_term_centrality(MatrixAlgebra const& m, Partition const& delta) {
    check_delta(m, delta);
    CubeCodec const& codec = m.codec();
    CubeIndex const  last  = (CubeIndex(1) << m.dimension()) - 1;
    // key -> first cube seen with that key
    std::unordered_map<std::uint64_t, std::uint64_t> first;
    CentralityReport                                 report;
    for (auto code : m.codes()) {
      auto [it, inserted] = first.emplace(two_term_key(codec, code, delta), code);
      if (inserted) {
        continue;
      }
      if (!delta.related(codec.entry(it->second, last), codec.entry(code, last))) {
        report.holds            = false;
        report.two_term_witness = CentralityReport::TwoTermWitness{codec.decode(it->second),
                                                                   codec.decode(code)};
        return report;
      }
    }
    return report;
  }

  Partition two_term_commutator(FiniteAlgebra const& alg, MatrixAlgebra const& m) {
    CubeCodec const& codec = m.codec();
    CubeIndex const  last  = (CubeIndex(1) << m.dimension()) - 1;
    Partition        delta = Partition::equality(alg.size());
    while (true) {
      std::unordered_map<std::uint64_t, Element> first;
      std::vector<Pair>                          forced;
      for (auto code : m.codes()) {
        Element const top = codec.entry(code, last);
        auto [it, inserted] = first.emplace(two_term_key(codec, code, delta), top);
        if (!inserted && !delta.related(it->second, top)) {
          forced.emplace_back(it->second, top);
        }
      }
      if (forced.empty()) {
        return delta;
      }
      delta = cg(alg, delta, forced);
    }
  }

  Partition two_term_commutator(FiniteAlgebra const&      alg,
                                CongruenceSequence const& t,
                                CubeOptions const&        options) {
    return two_term_commutator(alg, generate_matrix_algebra(alg, t, options));
  }

  bool CoordinateCommutators::all_equal() const {
    for (auto const& p : per_coordinate) {
      if (p != per_coordinate.front()) {
        return false;
      }
    }
    return true;
  }

  CoordinateCommutators commutators_per_coordinate(FiniteAlgebra const& alg, MatrixAlgebra const& m) {
    CoordinateCommutators result;
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      result.per_coordinate.push_back(commutator_at(alg, m, j));
    }
    return result;
  }

}  // namespace cmcomm

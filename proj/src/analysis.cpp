#include "wdom/analysis.hpp"

#include <algorithm>
#include <numeric>

namespace wdom {

namespace {

std::array<int, 3> sorted_triple(std::array<int, 3> triple) {
  std::sort(triple.begin(), triple.end());
  return triple;
}

void check_triple(const Domain& d, const std::array<int, 3>& triple) {
  if (triple[0] == triple[1] || triple[1] == triple[2]) {
    throw InputError("triple members must be distinct");
  }
  for (int a : triple) {
    if (!std::binary_search(d.alternatives.begin(), d.alternatives.end(), a)) {
      throw InputError("alternative " + std::to_string(a) + " is not in the domain");
    }
  }
}

}  // namespace

std::vector<std::array<int, 3>> all_triples(const std::vector<int>& alternatives) {
  std::vector<std::array<int, 3>> triples;
  const std::size_t n = alternatives.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        triples.push_back({alternatives[i], alternatives[j], alternatives[k]});
      }
    }
  }
  return triples;
}

std::vector<NeverCondition> never_conditions(const Domain& d, std::array<int, 3> triple) {
  triple = sorted_triple(triple);
  check_triple(d, triple);

  bool occupied[3][3] = {};
  for (const LinearOrder& order : d.orders) {
    int position = 0;
    for (int a : order) {
      for (int t = 0; t < 3; ++t) {
        if (a == triple[static_cast<std::size_t>(t)]) {
          occupied[t][position] = true;
          ++position;
        }
      }
    }
  }
  std::vector<NeverCondition> conditions;
  for (int t = 0; t < 3; ++t) {
    for (int p = 0; p < 3; ++p) {
      if (!occupied[t][p]) {
        conditions.push_back(
            NeverCondition{triple, triple[static_cast<std::size_t>(t)], p + 1});
      }
    }
  }
  return conditions;
}

namespace {

PropertyVerdict check_triples(const Domain& d, std::initializer_list<int> positions) {
  for (const auto& triple : all_triples(d.alternatives)) {
    bool found = false;
    for (const NeverCondition& c : never_conditions(d, triple)) {
      if (std::find(positions.begin(), positions.end(), c.position) != positions.end()) {
        found = true;
        break;
      }
    }
    if (!found) {
      return PropertyVerdict{
          false, TripleWitness{triple, restrict_to(d, {triple.begin(), triple.end()}).orders}};
    }
  }
  return PropertyVerdict{true, std::nullopt};
}

}  // namespace

PropertyVerdict is_condorcet(const Domain& d) { return check_triples(d, {1, 2, 3}); }

bool condorcet_profile_oracle(const Domain& d, bool unsafe_limits) {
  if (d.orders.size() > 64 && !unsafe_limits) {
    throw InputError("profile oracle is limited to 64 orders; use the never-condition path");
  }
  const std::size_t n = d.alternatives.size();
  const std::size_t m = d.orders.size();

  // rank[o][i]: position of alternative index i in order o.
  std::vector<std::vector<int>> rank(m, std::vector<int>(n, 0));
  for (std::size_t o = 0; o < m; ++o) {
    for (std::size_t pos = 0; pos < n; ++pos) {
      const int a = d.orders[o][pos];
      const auto it = std::lower_bound(d.alternatives.begin(), d.alternatives.end(), a);
      rank[o][static_cast<std::size_t>(it - d.alternatives.begin())] = static_cast<int>(pos);
    }
  }

  std::vector<std::vector<bool>> beats(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      for (std::size_t k = j; k < m; ++k) {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = a + 1; b < n; ++b) {
            const int votes = (rank[i][a] < rank[i][b]) + (rank[j][a] < rank[j][b]) +
                              (rank[k][a] < rank[k][b]);
            beats[a][b] = votes >= 2;
            beats[b][a] = votes < 2;
          }
        }
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
              const bool cycle = (beats[a][b] && beats[b][c] && beats[c][a]) ||
                                 (beats[b][a] && beats[c][b] && beats[a][c]);
              if (cycle) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

PropertyVerdict is_peak_pit(const Domain& d) { return check_triples(d, {1, 3}); }

PropertyVerdict is_arrow_sp(const Domain& d) { return check_triples(d, {3}); }

bool has_maximal_width(const Domain& d) {
  for (const LinearOrder& order : d.orders) {
    LinearOrder reversed(order.rbegin(), order.rend());
    if (contains_order(d, reversed)) return true;
  }
  return false;
}

namespace {

// 9-bit occupancy of one order on a sorted triple: bit (member*3 + position).
std::uint16_t triple_cells(const LinearOrder& order, const std::array<int, 3>& triple) {
  std::uint16_t cells = 0;
  int position = 0;
  for (int a : order) {
    for (int m = 0; m < 3; ++m) {
      if (a == triple[static_cast<std::size_t>(m)]) {
        cells |= static_cast<std::uint16_t>(1u << (m * 3 + position));
        ++position;
      }
    }
  }
  return cells;
}

constexpr std::uint16_t kAllCells = 0x1FF;

}  // namespace

MaximalityVerdict is_maximal_condorcet(const Domain& d, bool unsafe_limits) {
  const int n = static_cast<int>(d.alternatives.size());
  if (n > 8 && !unsafe_limits) {
    throw InputError("maximality test enumerates all n! orders; limited to n <= 8");
  }
  if (!is_condorcet(d).holds) return MaximalityVerdict{false, std::nullopt};

  // An extension is admissible iff each triple's cell occupancy stays short
  // of full, which is exactly the survival of some never-condition.
  const auto triples = all_triples(d.alternatives);
  std::vector<std::uint16_t> occupied(triples.size(), 0);
  for (const LinearOrder& order : d.orders) {
    for (std::size_t t = 0; t < triples.size(); ++t) {
      occupied[t] |= triple_cells(order, triples[t]);
    }
  }

  LinearOrder candidate = d.alternatives;  // sorted: iteration is lexicographic
  do {
    if (contains_order(d, candidate)) continue;
    bool admissible = true;
    for (std::size_t t = 0; t < triples.size() && admissible; ++t) {
      admissible = (occupied[t] | triple_cells(candidate, triples[t])) != kAllCells;
    }
    if (admissible) return MaximalityVerdict{false, candidate};
  } while (std::next_permutation(candidate.begin(), candidate.end()));
  return MaximalityVerdict{true, std::nullopt};
}

std::vector<int> terminals(const Domain& d) {
  std::vector<int> result;
  for (const LinearOrder& order : d.orders) result.push_back(order.back());
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<LinearOrder> extremal_orders(const Domain& d) {
  const std::vector<int> ends = terminals(d);
  std::vector<LinearOrder> result;
  for (const LinearOrder& order : d.orders) {
    if (order.front() != order.back() &&
        std::binary_search(ends.begin(), ends.end(), order.front()) &&
        std::binary_search(ends.begin(), ends.end(), order.back())) {
      result.push_back(order);
    }
  }
  return result;
}

namespace {

void fill_domain_analysis(AnalysisReport& report, bool unsafe_limits) {
  const Domain& d = report.domain;
  report.n = static_cast<int>(d.alternatives.size());
  report.condorcet = is_condorcet(d);
  report.peak_pit = is_peak_pit(d);
  report.arrow_sp = is_arrow_sp(d);
  report.maximal_width = has_maximal_width(d);
  if (report.n <= 8 || unsafe_limits) {
    report.maximal_condorcet = is_maximal_condorcet(d, unsafe_limits);
  }
  for (const auto& triple : all_triples(d.alternatives)) {
    report.never.push_back(TripleConditions{triple, never_conditions(d, triple)});
  }
  report.terminal_alternatives = terminals(d);
  report.extremals = extremal_orders(d);
}

}  // namespace

AnalysisReport analyze(const Word& w, const TrackOrder& left, bool unsafe_limits) {
  AnalysisReport report;
  report.word = w;
  report.left = left;
  report.chambers = chamber_sets(w, left);
  report.domain = domain_of(*report.chambers);
  report.tameness = is_tame(w, left);
  fill_domain_analysis(report, unsafe_limits);
  return report;
}

AnalysisReport analyze(const Domain& d, bool unsafe_limits) {
  AnalysisReport report;
  report.domain = d;
  fill_domain_analysis(report, unsafe_limits);
  return report;
}

}  // namespace wdom

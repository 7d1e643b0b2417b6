#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wdom/chambers.hpp"
#include "wdom/domain.hpp"
#include "wdom/tameness.hpp"

namespace wdom {

// "alternative never at position p within the triple": position 1 is top,
// 2 middle, 3 bottom.
struct NeverCondition {
  std::array<int, 3> triple{};
  int alternative = 0;
  int position = 0;

  bool operator==(const NeverCondition&) const = default;
};

// All (alternative, position) pairs no order of restrict(d, triple) occupies.
std::vector<NeverCondition> never_conditions(const Domain& d, std::array<int, 3> triple);

std::vector<std::array<int, 3>> all_triples(const std::vector<int>& alternatives);

struct TripleWitness {
  std::array<int, 3> triple{};
  std::vector<LinearOrder> restriction;
};

struct PropertyVerdict {
  bool holds = true;
  std::optional<TripleWitness> witness;
};

// Condorcet iff every triple satisfies some never-condition.
PropertyVerdict is_condorcet(const Domain& d);

// Independent cross-check: true iff the pairwise majority relation of every
// 3-order multiset is acyclic on all triples of alternatives. Guarded to
// |d| <= 64 unless unsafe_limits.
bool condorcet_profile_oracle(const Domain& d, bool unsafe_limits = false);

// Every triple satisfies a never-top or never-bottom condition.
PropertyVerdict is_peak_pit(const Domain& d);

// Every triple satisfies a never-bottom condition.
PropertyVerdict is_arrow_sp(const Domain& d);

// Some order and its full reversal both belong to the domain.
bool has_maximal_width(const Domain& d);

struct MaximalityVerdict {
  bool holds = false;
  std::optional<LinearOrder> extension;  // lexicographically first admissible
};

// No linear order outside d can be added without breaking the Condorcet
// property. A non-Condorcet domain is never maximal Condorcet. Enumerates
// all n! orders; guarded to n <= 8 unless unsafe_limits.
MaximalityVerdict is_maximal_condorcet(const Domain& d, bool unsafe_limits = false);

// Alternatives appearing at the bottom of some order.
std::vector<int> terminals(const Domain& d);

// Orders whose top and bottom are distinct terminals.
std::vector<LinearOrder> extremal_orders(const Domain& d);

struct TripleConditions {
  std::array<int, 3> triple{};
  std::vector<NeverCondition> conditions;
};

// The full classification verdict bundle for one word or domain.
struct AnalysisReport {
  std::optional<Word> word;
  std::optional<TrackOrder> left;
  int n = 0;
  std::optional<TamenessVerdict> tameness;
  PropertyVerdict condorcet;
  PropertyVerdict peak_pit;
  PropertyVerdict arrow_sp;
  bool maximal_width = false;
  std::optional<MaximalityVerdict> maximal_condorcet;  // absent if guard-skipped
  Domain domain;
  std::optional<ChamberIdeal> chambers;
  std::vector<TripleConditions> never;
  std::vector<int> terminal_alternatives;
  std::vector<LinearOrder> extremals;
};

AnalysisReport analyze(const Word& w, const TrackOrder& left, bool unsafe_limits = false);
AnalysisReport analyze(const Domain& d, bool unsafe_limits = false);

std::string report_to_text(const AnalysisReport& report);
std::string report_to_json(const AnalysisReport& report);

}  // namespace wdom

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wdom/domain.hpp"
#include "wdom/word.hpp"

namespace wdom {

// The distinct chamber sets of a swept word, graded by cardinality.
// Internally sets are bitmasks over the sorted label list (bit i stands for
// labels[i]); grade k holds the masks of popcount k, ascending.
struct ChamberIdeal {
  std::vector<int> labels;
  std::vector<std::vector<std::uint32_t>> grades;

  int line_count() const { return static_cast<int>(labels.size()); }
  std::size_t size() const;
  bool contains(std::uint32_t mask) const;
  std::vector<int> members_of(std::uint32_t mask) const;

  // All sets materialized, grouped by cardinality, each group sorted
  // lexicographically as label vectors.
  std::vector<std::vector<std::vector<int>>> sets_by_cardinality() const;
};

// The union of the top-k prefix sets of every sweep column, k = 0..n.
ChamberIdeal chamber_sets(const Word& w, const TrackOrder& left);

// A maximal chain F_0 c F_1 c ... c F_n in the ideal, |F_k| = k.
struct Flag {
  std::vector<std::vector<int>> chain;
};

// All maximal chains, by depth-first chain extension over the graded ideal.
std::vector<Flag> flags(const ChamberIdeal& ideal);

// One linear order per flag: the alternative at rank k is the unique
// element of F_k \ F_{k-1}.
Domain domain_of(const Word& w, const TrackOrder& left);
Domain domain_of(const ChamberIdeal& ideal);

// Diagnostic dump: one set per line as a sorted digit/CSV string, grouped
// by cardinality. The empty set prints as "{}".
std::string format_ideal(const ChamberIdeal& ideal);

}  // namespace wdom

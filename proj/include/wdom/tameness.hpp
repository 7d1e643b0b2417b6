#pragma once

#include <array>
#include <vector>

#include "wdom/word.hpp"

namespace wdom {

struct TamenessWitness {
  std::array<int, 2> pair{};  // line labels, ascending
  std::vector<int> levels;    // the distinct crossing levels, ascending

  bool operator==(const TamenessWitness&) const = default;
};

// tame iff every pair crossing more than once crosses always at the same
// level. All offending pairs are reported, not just the first.
struct TamenessVerdict {
  bool tame = true;
  std::vector<TamenessWitness> witnesses;
};

TamenessVerdict is_tame(const Word& w, const TrackOrder& left);

// Greedily deletes pairs of crossings of one line pair whenever the induced
// domain is unchanged (checked by recomputation). Requires a tame word;
// idempotent on its own output and never increases word length.
Word straighten(const Word& w, const TrackOrder& left);

}  // namespace wdom

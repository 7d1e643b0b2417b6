#include "wdom/tameness.hpp"

#include <algorithm>
#include <map>

#include "wdom/chambers.hpp"

namespace wdom {

TamenessVerdict is_tame(const Word& w, const TrackOrder& left) {
  std::map<std::array<int, 2>, std::vector<int>> levels_by_pair;
  for (const CrossingEvent& e : crossings(w, left)) {
    levels_by_pair[e.pair].push_back(e.level);
  }
  TamenessVerdict verdict;
  for (auto& [pair, levels] : levels_by_pair) {
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (levels.size() > 1) {
      verdict.witnesses.push_back(TamenessWitness{pair, levels});
    }
  }
  verdict.tame = verdict.witnesses.empty();
  return verdict;
}

Word straighten(const Word& w, const TrackOrder& left) {
  if (!is_tame(w, left).tame) {
    throw InputError("straighten requires a tame word");
  }
  const Domain target = domain_of(w, left);

  Word current = w;
  bool changed = true;
  while (changed) {
    changed = false;
    // Candidate deletions in a fixed order: pairs ascending, then the two
    // event positions ascending.
    std::map<std::array<int, 2>, std::vector<std::size_t>> positions;
    {
      const auto events = crossings(current, left);
      for (std::size_t k = 0; k < events.size(); ++k) {
        positions[events[k].pair].push_back(k);
      }
    }
    for (const auto& [pair, indices] : positions) {
      if (indices.size() < 2) continue;
      for (std::size_t i = 0; i < indices.size() && !changed; ++i) {
        for (std::size_t j = i + 1; j < indices.size() && !changed; ++j) {
          std::vector<int> letters = current.letters;
          letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(indices[j]));
          letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(indices[i]));
          Word candidate{current.n, std::move(letters)};
          if (domain_of(candidate, left) == target) {
            current = std::move(candidate);
            changed = true;
          }
        }
      }
      if (changed) break;
    }
  }
  return current;
}

}  // namespace wdom

#include "wdom/chambers.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace wdom {

std::size_t ChamberIdeal::size() const {
  std::size_t total = 0;
  for (const auto& grade : grades) total += grade.size();
  return total;
}

bool ChamberIdeal::contains(std::uint32_t mask) const {
  const int k = std::popcount(mask);
  if (k >= static_cast<int>(grades.size())) return false;
  const auto& grade = grades[static_cast<std::size_t>(k)];
  return std::binary_search(grade.begin(), grade.end(), mask);
}

std::vector<int> ChamberIdeal::members_of(std::uint32_t mask) const {
  std::vector<int> members;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (mask & (std::uint32_t{1} << i)) members.push_back(labels[i]);
  }
  return members;
}

std::vector<std::vector<std::vector<int>>> ChamberIdeal::sets_by_cardinality() const {
  std::vector<std::vector<std::vector<int>>> out;
  out.reserve(grades.size());
  for (const auto& grade : grades) {
    std::vector<std::vector<int>> sets;
    sets.reserve(grade.size());
    for (std::uint32_t mask : grade) sets.push_back(members_of(mask));
    std::sort(sets.begin(), sets.end());
    out.push_back(std::move(sets));
  }
  return out;
}

ChamberIdeal chamber_sets(const Word& w, const TrackOrder& left) {
  if (w.n > 32) throw InputError("chamber computation supports at most 32 lines");
  const std::vector<TrackOrder> columns = sweep(w, left);

  ChamberIdeal ideal;
  ideal.labels = left;
  std::sort(ideal.labels.begin(), ideal.labels.end());
  const auto bit_of = [&ideal](int label) {
    const auto it = std::lower_bound(ideal.labels.begin(), ideal.labels.end(), label);
    return std::uint32_t{1} << (it - ideal.labels.begin());
  };

  std::vector<std::uint32_t> masks;
  masks.reserve(columns.size() * (static_cast<std::size_t>(w.n) + 1));
  for (const TrackOrder& column : columns) {
    std::uint32_t mask = 0;
    masks.push_back(mask);
    for (int label : column) {
      mask |= bit_of(label);
      masks.push_back(mask);
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  ideal.grades.assign(static_cast<std::size_t>(w.n) + 1, {});
  for (std::uint32_t mask : masks) {
    ideal.grades[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  }
  return ideal;
}

std::vector<Flag> flags(const ChamberIdeal& ideal) {
  const int n = ideal.line_count();
  // Successors per member: the one-element-larger members containing it.
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> successors;
  for (int k = 1; k <= n; ++k) {
    for (std::uint32_t mask : ideal.grades[static_cast<std::size_t>(k)]) {
      for (int b = 0; b < n; ++b) {
        const std::uint32_t bit = std::uint32_t{1} << b;
        if ((mask & bit) && ideal.contains(mask & ~bit)) {
          successors[mask & ~bit].push_back(mask);
        }
      }
    }
  }

  std::vector<Flag> result;
  std::vector<std::uint32_t> chain{0};
  const auto extend = [&](auto&& self, std::uint32_t mask) -> void {
    if (std::popcount(mask) == n) {
      Flag flag;
      flag.chain.reserve(chain.size());
      for (std::uint32_t m : chain) flag.chain.push_back(ideal.members_of(m));
      result.push_back(std::move(flag));
      return;
    }
    const auto it = successors.find(mask);
    if (it == successors.end()) return;
    for (std::uint32_t next : it->second) {
      chain.push_back(next);
      self(self, next);
      chain.pop_back();
    }
  };
  if (ideal.contains(0)) extend(extend, 0);
  return result;
}

Domain domain_of(const ChamberIdeal& ideal) {
  std::vector<LinearOrder> orders;
  for (const Flag& flag : flags(ideal)) {
    LinearOrder order;
    order.reserve(flag.chain.size() - 1);
    for (std::size_t k = 1; k < flag.chain.size(); ++k) {
      const auto& prev = flag.chain[k - 1];
      for (int label : flag.chain[k]) {
        if (!std::binary_search(prev.begin(), prev.end(), label)) {
          order.push_back(label);
          break;
        }
      }
    }
    orders.push_back(std::move(order));
  }
  return make_domain(std::move(orders));
}

Domain domain_of(const Word& w, const TrackOrder& left) {
  return domain_of(chamber_sets(w, left));
}

std::string format_ideal(const ChamberIdeal& ideal) {
  std::string out;
  const auto by_cardinality = ideal.sets_by_cardinality();
  for (std::size_t k = 0; k < by_cardinality.size(); ++k) {
    out += "# |S| = " + std::to_string(k) + "\n";
    for (const auto& set : by_cardinality[k]) {
      out += set.empty() ? "{}" : format_order(set);
      out += '\n';
    }
  }
  return out;
}

}  // namespace wdom

#include "wdom/arrow.hpp"

#include <algorithm>
#include <optional>

#include "wdom/chambers.hpp"
#include "wdom/tameness.hpp"

namespace wdom {

CombinedWord combine_words(const CombineInputs& inputs) {
  const int block_tracks = inputs.word_a.n;
  if (inputs.word_b.n != block_tracks) {
    throw InputError("block words disagree on track count: " +
                     std::to_string(inputs.word_a.n) + " vs " +
                     std::to_string(inputs.word_b.n));
  }
  if (inputs.t == inputs.t_prime) {
    throw InputError("the two terminals must be distinct");
  }
  if (std::find(inputs.left_a.begin(), inputs.left_a.end(), inputs.t) == inputs.left_a.end()) {
    throw InputError("terminal " + std::to_string(inputs.t) +
                     " does not appear in the first block's left boundary");
  }
  if (std::find(inputs.left_a.begin(), inputs.left_a.end(), inputs.t_prime) !=
      inputs.left_a.end()) {
    throw InputError("terminal " + std::to_string(inputs.t_prime) +
                     " must stay below the first block, not inside it");
  }

  const TrackOrder right_a = sweep(inputs.word_a, inputs.left_a).back();
  if (right_a.back() != inputs.t) {
    throw InputError("first block must end with " + std::to_string(inputs.t) +
                     " on the bottom track; its right boundary is " +
                     format_track_order(right_a));
  }
  TrackOrder expected_left_b = right_a;
  expected_left_b.back() = inputs.t_prime;
  if (inputs.left_b != expected_left_b) {
    throw InputError("second block must start from " + format_track_order(expected_left_b) +
                     ", got " + format_track_order(inputs.left_b));
  }

  const int n = block_tracks + 1;
  std::vector<int> letters = inputs.word_a.letters;
  letters.push_back(n - 1);
  letters.insert(letters.end(), inputs.word_b.letters.begin(), inputs.word_b.letters.end());

  TrackOrder left = inputs.left_a;
  left.push_back(inputs.t_prime);
  return CombinedWord{make_word(n, std::move(letters)), std::move(left)};
}

Domain combine_domains(const Domain& d_a, const Domain& d_b, int t, int t_prime) {
  if (t == t_prime) throw InputError("the two terminals must be distinct");
  if (std::binary_search(d_a.alternatives.begin(), d_a.alternatives.end(), t_prime)) {
    throw InputError("first domain must not contain " + std::to_string(t_prime));
  }
  if (std::binary_search(d_b.alternatives.begin(), d_b.alternatives.end(), t)) {
    throw InputError("second domain must not contain " + std::to_string(t));
  }
  std::vector<int> common;
  for (int a : d_a.alternatives) {
    if (a != t) common.push_back(a);
  }
  {
    std::vector<int> common_b;
    for (int a : d_b.alternatives) {
      if (a != t_prime) common_b.push_back(a);
    }
    if (common != common_b) {
      throw InputError("domains do not share the alternatives besides the terminals");
    }
  }
  if (!common.empty()) {
    const Domain r_a = restrict_to(d_a, common);
    const Domain r_b = restrict_to(d_b, common);
    if (r_a != r_b) {
      for (const LinearOrder& order : r_a.orders) {
        if (!contains_order(r_b, order)) {
          throw InputError("common restrictions differ: order " + format_order(order) +
                           " arises only from the first domain");
        }
      }
      for (const LinearOrder& order : r_b.orders) {
        if (!contains_order(r_a, order)) {
          throw InputError("common restrictions differ: order " + format_order(order) +
                           " arises only from the second domain");
        }
      }
    }
  }

  std::vector<LinearOrder> orders;
  orders.reserve(d_a.orders.size() + d_b.orders.size());
  for (LinearOrder order : d_a.orders) {
    order.push_back(t_prime);
    orders.push_back(std::move(order));
  }
  for (LinearOrder order : d_b.orders) {
    order.push_back(t);
    orders.push_back(std::move(order));
  }
  return make_domain(std::move(orders));
}

namespace {

// Shortest sequence of adjacent transpositions leading from one order to
// another while every intermediate order stays inside the domain. Walking
// within the domain only revisits chamber chains the ideal already has, so
// appending such letters to a realizing word never changes its domain.
std::optional<std::vector<int>> domain_walk(const Domain& d, const LinearOrder& from,
                                            const LinearOrder& to) {
  if (!contains_order(d, from) || !contains_order(d, to)) return std::nullopt;
  if (from == to) return std::vector<int>{};
  const int n = static_cast<int>(from.size());
  const auto index_of = [&d](const LinearOrder& order) {
    return static_cast<std::size_t>(
        std::lower_bound(d.orders.begin(), d.orders.end(), order) - d.orders.begin());
  };
  std::vector<int> parent_level(d.orders.size(), 0);
  std::vector<std::size_t> parent(d.orders.size(), d.orders.size());
  std::vector<bool> seen(d.orders.size(), false);
  std::vector<std::size_t> queue{index_of(from)};
  seen[queue.front()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t at = queue[head];
    for (int level = 1; level <= n - 1; ++level) {
      LinearOrder next = d.orders[at];
      std::swap(next[static_cast<std::size_t>(level - 1)],
                next[static_cast<std::size_t>(level)]);
      if (!contains_order(d, next)) continue;
      const std::size_t to_index = index_of(next);
      if (seen[to_index]) continue;
      seen[to_index] = true;
      parent[to_index] = at;
      parent_level[to_index] = level;
      if (next == to) {
        std::vector<int> letters;
        for (std::size_t back = to_index; parent[back] != d.orders.size();
             back = parent[back]) {
          letters.push_back(parent_level[back]);
        }
        std::reverse(letters.begin(), letters.end());
        return letters;
      }
      queue.push_back(to_index);
    }
  }
  return std::nullopt;
}

// Builds the word for `d` swept from the extremal order `left`, or nothing
// if the boundary structure does not line up. The first block may be
// extended by a walk inside its own domain so that the second block starts
// from an extremal boundary.
std::optional<Word> represent_recursive(const Domain& d, const TrackOrder& left) {
  const int n = static_cast<int>(d.alternatives.size());
  if (static_cast<int>(left.size()) != n || !contains_order(d, left)) return std::nullopt;
  if (n == 1) {
    return d.orders.size() == 1 ? std::optional<Word>(Word{1, {}}) : std::nullopt;
  }
  if (n == 2) {
    return d.orders.size() == 2 ? std::optional<Word>(Word{2, {1}}) : std::nullopt;
  }

  const int t = left.front();
  const int t_prime = left.back();
  {
    std::vector<int> ends = terminals(d);
    std::vector<int> expected{t, t_prime};
    std::sort(expected.begin(), expected.end());
    if (ends != expected) return std::nullopt;
  }

  std::vector<int> without_t_prime;
  std::vector<int> without_t;
  for (int a : d.alternatives) {
    if (a != t_prime) without_t_prime.push_back(a);
    if (a != t) without_t.push_back(a);
  }
  const Domain d_a = restrict_to(d, without_t_prime);
  const Domain d_b = restrict_to(d, without_t);

  TrackOrder left_a(left.begin(), left.end() - 1);
  Word word_a;
  if (const auto block_a = represent_recursive(d_a, left_a)) {
    word_a = *block_a;
  } else {
    return std::nullopt;
  }

  // The second block must start from d_b's extremal order that keeps
  // t_prime at the bottom; steer the first block's right boundary to match.
  TrackOrder left_b;
  for (const LinearOrder& extremal : extremal_orders(d_b)) {
    if (extremal.back() == t_prime) {
      left_b = extremal;
      break;
    }
  }
  if (left_b.empty()) return std::nullopt;
  TrackOrder target = left_b;
  target.back() = t;
  if (!contains_order(d_a, target)) return std::nullopt;
  const TrackOrder reached = sweep(word_a, left_a).back();
  if (reached != target) {
    const auto steering = domain_walk(d_a, reached, target);
    if (!steering) return std::nullopt;
    word_a.letters.insert(word_a.letters.end(), steering->begin(), steering->end());
  }

  const auto word_b = represent_recursive(d_b, left_b);
  if (!word_b) return std::nullopt;

  const CombinedWord combined =
      combine_words(CombineInputs{word_a, left_a, *word_b, left_b, t, t_prime});
  if (combine_domains(d_a, d_b, t, t_prime) != d) return std::nullopt;
  if (domain_of(combined.word, combined.left) != d) return std::nullopt;
  return combined.word;
}

void check_representable(const Domain& d, bool unsafe_limits) {
  if (d.orders.empty()) throw InputError("cannot represent an empty domain");
  const int n = static_cast<int>(d.alternatives.size());
  if (n > 7 && !unsafe_limits) {
    throw InputError("represent is limited to 7 alternatives");
  }
  if (!is_arrow_sp(d).holds || !is_maximal_condorcet(d, unsafe_limits).holds) {
    throw InputError("domain is not a maximal Arrow's single-peaked domain");
  }
}

std::vector<TrackOrder> left_candidates(const Domain& d) {
  // Extremal orders first, the one with the smallest top before the other;
  // remaining orders follow for the search fallback.
  std::vector<TrackOrder> candidates = extremal_orders(d);
  std::sort(candidates.begin(), candidates.end());
  for (const LinearOrder& order : d.orders) {
    if (std::find(candidates.begin(), candidates.end(), order) == candidates.end()) {
      candidates.push_back(order);
    }
  }
  return candidates;
}

std::optional<CombinedWord> search_word(const Domain& d) {
  const int n = static_cast<int>(d.alternatives.size());
  const int cap = n * (n - 1);
  const std::vector<TrackOrder> candidates = left_candidates(d);
  for (int length = 0; length <= cap; ++length) {
    std::vector<int> letters(static_cast<std::size_t>(length), 1);
    bool exhausted = length > 0 && n == 1;
    if (exhausted) continue;
    while (true) {
      Word w{n, letters};
      for (const TrackOrder& left : candidates) {
        if (canonicalize(w) == w && is_tame(w, left).tame && domain_of(w, left) == d) {
          return CombinedWord{w, left};
        }
      }
      // Odometer over letters 1..n-1.
      int i = 0;
      for (; i < length; ++i) {
        if (letters[static_cast<std::size_t>(i)] < n - 1) {
          ++letters[static_cast<std::size_t>(i)];
          std::fill(letters.begin(), letters.begin() + i, 1);
          break;
        }
      }
      if (i == length) break;
    }
  }
  return std::nullopt;
}

}  // namespace

RepresentResult represent(const Domain& d, bool unsafe_limits) {
  check_representable(d, unsafe_limits);
  for (const TrackOrder& left : left_candidates(d)) {
    if (const auto word = represent_recursive(d, left)) {
      if (is_tame(*word, left).tame && domain_of(*word, left) == d) {
        return RepresentResult{true, *word, left, "recursive", ""};
      }
    }
  }
  RepresentResult result = represent_search(d);
  if (!result.success) {
    result.failure = "recursive combination failed and the word search exhausted length cap " +
                     std::to_string(d.alternatives.size() * (d.alternatives.size() - 1));
  }
  return result;
}

RepresentResult represent_search(const Domain& d) {
  check_representable(d, false);
  if (const auto found = search_word(d)) {
    return RepresentResult{true, found->word, found->left, "search", ""};
  }
  return RepresentResult{false, {}, {}, "search", "word search exhausted the length cap"};
}

}  // namespace wdom

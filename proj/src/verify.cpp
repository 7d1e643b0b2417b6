#include <algorithm>
#include <cstdint>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wdom/arrow.hpp"
#include "wdom/chambers.hpp"
#include "wdom/tameness.hpp"

namespace wdom {

namespace {

int resolve_workers(int workers) {
#ifdef _OPENMP
  return workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
  return 1;
#endif
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

// Word number `index` of the given length, little-endian base (n-1).
Word word_at(int n, int length, std::uint64_t index) {
  std::vector<int> letters(static_cast<std::size_t>(length));
  const std::uint64_t base = static_cast<std::uint64_t>(n - 1);
  for (int i = 0; i < length; ++i) {
    letters[static_cast<std::size_t>(i)] = static_cast<int>(index % base) + 1;
    index /= base;
  }
  return Word{n, std::move(letters)};
}

// Empty reason means the word agrees with the theorem.
std::string tame_theorem_failure(const Word& w) {
  const TrackOrder left = identity_order(w.n);
  const bool tame = is_tame(w, left).tame;
  const Domain d = domain_of(w, left);
  const bool condorcet = is_condorcet(d).holds;
  if (tame != condorcet) {
    return tame ? "tame but not Condorcet" : "Condorcet but not tame";
  }
  if (tame && !is_peak_pit(d).holds) return "tame but not peak-pit";
  return "";
}

void sort_counterexamples(std::vector<Counterexample>& items) {
  std::sort(items.begin(), items.end(), [](const Counterexample& a, const Counterexample& b) {
    if (a.word.letters.size() != b.word.letters.size()) {
      return a.word.letters.size() < b.word.letters.size();
    }
    return a.word.letters < b.word.letters;
  });
}

void check_tame_theorem_guards(int n, int max_len, bool unsafe_limits) {
  if (n < 2) throw InputError("tame-theorem verification needs at least 2 lines");
  if (max_len < 0) throw InputError("maximum word length must be nonnegative");
  if ((n > 4 || max_len > 8) && !unsafe_limits) {
    throw InputError("tame-theorem verification is limited to n <= 4, max_len <= 8");
  }
}

}  // namespace

VerificationReport verify_tame_theorem_serial(int n, int max_len, bool unsafe_limits) {
  check_tame_theorem_guards(n, max_len, unsafe_limits);
  VerificationReport report{"tame-theorem", n, max_len, 0, 0, {}};
  for (int length = 0; length <= max_len; ++length) {
    const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(n - 1), length);
    for (std::uint64_t index = 0; index < total; ++index) {
      const Word w = word_at(n, length, index);
      const std::string reason = tame_theorem_failure(w);
      ++report.words_checked;
      if (reason.empty()) {
        ++report.agreements;
      } else {
        report.counterexamples.push_back(Counterexample{w, reason});
      }
    }
  }
  sort_counterexamples(report.counterexamples);
  return report;
}

VerificationReport verify_tame_theorem(int n, int max_len, int workers, bool unsafe_limits) {
  check_tame_theorem_guards(n, max_len, unsafe_limits);
  VerificationReport report{"tame-theorem", n, max_len, 0, 0, {}};
  [[maybe_unused]] const int threads = resolve_workers(workers);
  for (int length = 0; length <= max_len; ++length) {
    const std::int64_t total =
        static_cast<std::int64_t>(pow_u64(static_cast<std::uint64_t>(n - 1), length));
    std::uint64_t agreements = 0;
    std::vector<Counterexample> bad;
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
    {
      std::uint64_t local_agreements = 0;
      std::vector<Counterexample> local_bad;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
      for (std::int64_t index = 0; index < total; ++index) {
        const Word w = word_at(n, length, static_cast<std::uint64_t>(index));
        const std::string reason = tame_theorem_failure(w);
        if (reason.empty()) {
          ++local_agreements;
        } else {
          local_bad.push_back(Counterexample{w, reason});
        }
      }
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        agreements += local_agreements;
        bad.insert(bad.end(), local_bad.begin(), local_bad.end());
      }
    }
    report.words_checked += static_cast<std::uint64_t>(total);
    report.agreements += agreements;
    report.counterexamples.insert(report.counterexamples.end(), bad.begin(), bad.end());
  }
  // Merge order depends on the schedule; sorting keeps reports reproducible.
  sort_counterexamples(report.counterexamples);
  return report;
}

VerificationReport verify_classical(int n, bool unsafe_limits) {
  if (n < 2) throw InputError("classical verification needs at least 2 lines");
  if (n > 4 && !unsafe_limits) {
    throw InputError("classical verification is limited to n <= 4");
  }
  VerificationReport report{"classical", n, n * (n - 1) / 2, 0, 0, {}};

  const auto check = [&report](const Word& w) {
    const Domain d = domain_of(w, identity_order(w.n));
    std::string reason;
    if (!is_condorcet(d).holds) {
      reason = "not Condorcet";
    } else if (!is_peak_pit(d).holds) {
      reason = "not peak-pit";
    } else if (!has_maximal_width(d)) {
      reason = "not of maximal width";
    } else if (!is_maximal_condorcet(d).holds) {
      reason = "not maximal Condorcet";
    }
    ++report.words_checked;
    if (reason.empty()) {
      ++report.agreements;
    } else {
      report.counterexamples.push_back(Counterexample{w, reason});
    }
  };

  // Depth-first over columns, crossing each uncrossed adjacent pair.
  TrackOrder column = identity_order(n);
  std::vector<int> letters;
  std::set<std::array<int, 2>> crossed;
  const int target = n * (n - 1) / 2;
  const auto descend = [&](auto&& self) -> void {
    if (static_cast<int>(letters.size()) == target) {
      check(Word{n, letters});
      return;
    }
    for (int level = 1; level <= n - 1; ++level) {
      int a = column[static_cast<std::size_t>(level - 1)];
      int b = column[static_cast<std::size_t>(level)];
      if (a > b) std::swap(a, b);
      const std::array<int, 2> pair{a, b};
      if (crossed.contains(pair)) continue;
      crossed.insert(pair);
      letters.push_back(level);
      std::swap(column[static_cast<std::size_t>(level - 1)], column[static_cast<std::size_t>(level)]);
      self(self);
      std::swap(column[static_cast<std::size_t>(level - 1)], column[static_cast<std::size_t>(level)]);
      letters.pop_back();
      crossed.erase(pair);
    }
  };
  descend(descend);
  sort_counterexamples(report.counterexamples);
  return report;
}

namespace {

void check_enumerate_guards(int n, bool unsafe_limits) {
  if (n < 1) throw InputError("line count must be at least 1, got " + std::to_string(n));
  if (n > 5 && !unsafe_limits) {
    throw InputError("enumeration is limited to n <= 5");
  }
}

std::vector<LinearOrder> all_orders(int n) {
  LinearOrder order = identity_order(n);
  std::vector<LinearOrder> orders;
  do {
    orders.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return orders;
}

// Per (order, triple): which member (0..2) of the sorted triple the order
// ranks worst. Precomputed once; the assignment loop is then pure lookups.
struct BottomTable {
  std::vector<LinearOrder> orders;
  std::vector<std::array<int, 3>> triples;
  std::vector<std::uint8_t> bottom;  // [order * triples.size() + triple]

  explicit BottomTable(int n) : orders(all_orders(n)), triples(all_triples(identity_order(n))) {
    if (triples.size() > 32 || orders.size() > 65535) {
      throw InputError("enumeration table does not scale past 8 alternatives");
    }
    bottom.resize(orders.size() * triples.size());
    for (std::size_t o = 0; o < orders.size(); ++o) {
      std::vector<int> rank(static_cast<std::size_t>(n) + 1);
      for (std::size_t pos = 0; pos < orders[o].size(); ++pos) {
        rank[static_cast<std::size_t>(orders[o][pos])] = static_cast<int>(pos);
      }
      for (std::size_t t = 0; t < triples.size(); ++t) {
        int worst = 0;
        for (int m = 1; m < 3; ++m) {
          if (rank[static_cast<std::size_t>(triples[t][static_cast<std::size_t>(m)])] >
              rank[static_cast<std::size_t>(triples[t][static_cast<std::size_t>(worst)])]) {
            worst = m;
          }
        }
        bottom[o * triples.size() + t] = static_cast<std::uint8_t>(worst);
      }
    }
  }

  // Order indices satisfying "triple[choice] never bottom" for every triple.
  std::vector<std::uint16_t> satisfying(std::uint64_t code) const {
    std::array<std::uint8_t, 32> choices{};
    for (std::size_t t = 0; t < triples.size(); ++t) {
      choices[t] = static_cast<std::uint8_t>(code % 3);
      code /= 3;
    }
    std::vector<std::uint16_t> kept;
    for (std::size_t o = 0; o < orders.size(); ++o) {
      bool ok = true;
      for (std::size_t t = 0; t < triples.size(); ++t) {
        if (bottom[o * triples.size() + t] == choices[t]) {
          ok = false;
          break;
        }
      }
      if (ok) kept.push_back(static_cast<std::uint16_t>(o));
    }
    return kept;
  }
};

std::vector<Domain> filter_enumerated(const BottomTable& table,
                                      const std::set<std::vector<std::uint16_t>>& candidates) {
  std::vector<Domain> result;
  for (const auto& indices : candidates) {
    if (indices.empty()) continue;
    std::vector<LinearOrder> orders;
    orders.reserve(indices.size());
    for (std::uint16_t o : indices) orders.push_back(table.orders[o]);
    Domain d = make_domain(std::move(orders));
    if (is_condorcet(d).holds && is_arrow_sp(d).holds && is_maximal_condorcet(d).holds) {
      result.push_back(std::move(d));
    }
  }
  return result;
}

}  // namespace

std::vector<Domain> enumerate_arrow_sp_serial(int n, bool unsafe_limits) {
  check_enumerate_guards(n, unsafe_limits);
  const BottomTable table(n);
  const std::uint64_t assignments = pow_u64(3, static_cast<int>(table.triples.size()));

  std::set<std::vector<std::uint16_t>> candidates;
  for (std::uint64_t code = 0; code < assignments; ++code) {
    candidates.insert(table.satisfying(code));
  }
  return filter_enumerated(table, candidates);
}

std::vector<Domain> enumerate_arrow_sp(int n, bool unsafe_limits) {
  check_enumerate_guards(n, unsafe_limits);
  const BottomTable table(n);
  const std::int64_t assignments =
      static_cast<std::int64_t>(pow_u64(3, static_cast<int>(table.triples.size())));

  std::set<std::vector<std::uint16_t>> candidates;
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    std::set<std::vector<std::uint16_t>> local;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (std::int64_t code = 0; code < assignments; ++code) {
      local.insert(table.satisfying(static_cast<std::uint64_t>(code)));
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    candidates.merge(local);
  }
  return filter_enumerated(table, candidates);
}

std::string verification_report_to_text(const VerificationReport& report) {
  std::string out;
  out += "verify " + report.kind + " n=" + std::to_string(report.n) +
         " max_len=" + std::to_string(report.max_len) + "\n";
  out += "words checked: " + std::to_string(report.words_checked) + "\n";
  out += "agreements: " + std::to_string(report.agreements) + "\n";
  out += "counterexamples: " + std::to_string(report.counterexamples.size()) + "\n";
  for (const Counterexample& c : report.counterexamples) {
    out += "  " + format_word(c.word) + "  (" + c.reason + ")\n";
  }
  return out;
}

std::string domain_content_hash(const Domain& d) {
  const std::string text = format_domain(d);
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

}  // namespace wdom

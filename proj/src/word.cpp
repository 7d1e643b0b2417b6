#include "wdom/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace wdom {

namespace {

void check_line_count(int n) {
  if (n < 1) {
    throw InputError("line count must be at least 1, got " + std::to_string(n));
  }
}

void check_letters(int n, const std::vector<int>& letters) {
  check_line_count(n);
  for (int level : letters) {
    if (level < 1 || level > n - 1) {
      throw InputError("level " + std::to_string(level) + " out of range [1," +
                       std::to_string(n - 1) + "]");
    }
  }
}

}  // namespace

Word make_word(int n, std::vector<int> letters) {
  check_letters(n, letters);
  return Word{n, std::move(letters)};
}

Word parse_word(std::string_view text, int n) {
  check_line_count(n);
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string_view token = text.substr(i, j - i);
    std::string_view digits = token;
    if (!digits.empty() && (digits.front() == 's' || digits.front() == 'S')) {
      digits.remove_prefix(1);
    }
    int value = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
      throw InputError("token \"" + std::string(token) + "\" is not a crossing level");
    }
    if (value < 1 || value > n - 1) {
      throw InputError("token \"" + std::string(token) + "\": level " + std::to_string(value) +
                       " out of range [1," + std::to_string(n - 1) + "]");
    }
    letters.push_back(value);
    i = j;
  }
  return Word{n, std::move(letters)};
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) out += ' ';
    out += 's';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

TrackOrder identity_order(int n) {
  check_line_count(n);
  TrackOrder order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  return order;
}

std::string format_track_order(const TrackOrder& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(order[i]);
  }
  return out;
}

TrackOrder parse_track_order(std::string_view text, int n) {
  check_line_count(n);
  TrackOrder order;
  std::size_t i = 0;
  const bool has_separator =
      text.find(',') != std::string_view::npos || text.find(' ') != std::string_view::npos;
  if (!has_separator) {
    // Compact digit form, e.g. "3241".
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InputError("order \"" + std::string(text) + "\" is not a digit string");
      }
      order.push_back(c - '0');
    }
  } else {
    while (i < text.size()) {
      while (i < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) {
        ++i;
      }
      if (i >= text.size()) break;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
             text[j] != ',') {
        ++j;
      }
      int value = 0;
      const auto [end, ec] = std::from_chars(text.data() + i, text.data() + j, value);
      if (ec != std::errc{} || end != text.data() + j) {
        throw InputError("order token \"" + std::string(text.substr(i, j - i)) +
                         "\" is not an integer");
      }
      order.push_back(value);
      i = j;
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw InputError("order \"" + std::string(text) + "\" has " +
                     std::to_string(order.size()) + " entries, expected " + std::to_string(n));
  }
  return order;
}

std::vector<TrackOrder> sweep(const Word& w, const TrackOrder& left) {
  check_letters(w.n, w.letters);
  if (static_cast<int>(left.size()) != w.n) {
    throw InputError("left boundary has " + std::to_string(left.size()) +
                     " entries, expected " + std::to_string(w.n));
  }
  TrackOrder sorted = left;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("left boundary " + format_track_order(left) + " repeats a label");
  }

  std::vector<TrackOrder> columns;
  columns.reserve(w.letters.size() + 1);
  columns.push_back(left);
  TrackOrder current = left;
  for (int level : w.letters) {
    std::swap(current[static_cast<std::size_t>(level - 1)],
              current[static_cast<std::size_t>(level)]);
    columns.push_back(current);
  }
  return columns;
}

std::vector<CrossingEvent> crossings(const Word& w, const TrackOrder& left) {
  const std::vector<TrackOrder> columns = sweep(w, left);
  std::vector<CrossingEvent> events;
  events.reserve(w.letters.size());
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const int level = w.letters[k];
    int a = columns[k][static_cast<std::size_t>(level - 1)];
    int b = columns[k][static_cast<std::size_t>(level)];
    if (a > b) std::swap(a, b);
    events.push_back(CrossingEvent{static_cast<int>(k) + 1, level, {a, b}});
  }
  return events;
}

bool is_classical(const Word& w) {
  const int n = w.n;
  if (static_cast<int>(w.letters.size()) != n * (n - 1) / 2) return false;
  std::vector<int> counts(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const CrossingEvent& e : crossings(w, identity_order(n))) {
    ++counts[static_cast<std::size_t>(e.pair[0] - 1) * n + (e.pair[1] - 1)];
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (counts[static_cast<std::size_t>(a - 1) * n + (b - 1)] != 1) return false;
    }
  }
  return true;
}

Word canonicalize(const Word& w) {
  Word out = w;
  std::vector<int>& a = out.letters;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (std::abs(a[i] - a[i + 1]) >= 2 && a[i + 1] < a[i]) {
        std::swap(a[i], a[i + 1]);
        changed = true;
      }
    }
  }
  return out;
}

}  // namespace wdom

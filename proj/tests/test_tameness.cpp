#include <doctest.h>

#include "wdom/analysis.hpp"
#include "wdom/chambers.hpp"
#include "wdom/tameness.hpp"

using namespace wdom;

namespace {

std::vector<Word> small_words(int n, int max_len) {
  std::vector<Word> words;
  for (int length = 0; length <= max_len; ++length) {
    std::vector<int> letters(static_cast<std::size_t>(length), 1);
    while (true) {
      words.push_back(Word{n, letters});
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
  return words;
}

}  // namespace

TEST_CASE("is_tame on the reference words") {
  const auto untame = is_tame(make_word(3, {1, 2, 1, 2}), {1, 2, 3});
  REQUIRE_FALSE(untame.tame);
  REQUIRE(untame.witnesses.size() == 1);
  CHECK(untame.witnesses[0].pair == std::array<int, 2>{1, 2});
  CHECK(untame.witnesses[0].levels == std::vector<int>{1, 2});

  CHECK(is_tame(make_word(4, {1, 2, 1, 3, 1, 2, 1}), {1, 2, 3, 4}).tame);
  CHECK(is_tame(make_word(3, {1, 1}), {1, 2, 3}).tame);
  CHECK(is_tame(make_word(3, {}), {1, 2, 3}).tame);
}

TEST_CASE("is_tame reports every offending pair") {
  const auto verdict = is_tame(make_word(4, {1, 2, 1, 2, 3, 2, 3, 2}), {1, 2, 3, 4});
  REQUIRE_FALSE(verdict.tame);
  REQUIRE(verdict.witnesses.size() == 2);
  CHECK(verdict.witnesses[0].pair == std::array<int, 2>{1, 2});
  CHECK(verdict.witnesses[0].levels == std::vector<int>{1, 2, 3});
  CHECK(verdict.witnesses[1].pair == std::array<int, 2>{2, 4});
  CHECK(verdict.witnesses[1].levels == std::vector<int>{2, 3});
}

TEST_CASE("straighten cancels redundant double crossings") {
  CHECK(straighten(make_word(2, {1, 1, 1, 1}), {1, 2}).letters == std::vector<int>{1, 1});
  CHECK(straighten(make_word(2, {1, 1, 1}), {1, 2}).letters == std::vector<int>{1});
  CHECK(straighten(make_word(3, {1, 2, 1}), {1, 2, 3}).letters == std::vector<int>{1, 2, 1});

  // Removing the 2-3 double crossing would lose the {3} chamber.
  CHECK(straighten(make_word(4, {1, 2, 1, 3, 1, 2, 1}), {1, 2, 3, 4}).letters ==
        std::vector<int>{1, 2, 1, 3, 1, 2, 1});

  CHECK_THROWS_AS(straighten(make_word(3, {1, 2, 1, 2}), {1, 2, 3}), InputError);
}

TEST_CASE("straighten preserves the domain and is idempotent") {
  for (const Word& w : small_words(3, 6)) {
    const TrackOrder left = identity_order(3);
    if (!is_tame(w, left).tame) continue;
    const Word slim = straighten(w, left);
    CHECK(slim.letters.size() <= w.letters.size());
    CHECK(domain_of(slim, left) == domain_of(w, left));
    CHECK(straighten(slim, left) == slim);
  }
}

TEST_CASE("tameness matches Condorcetness on small words") {
  for (const Word& w : small_words(3, 6)) {
    const TrackOrder left = identity_order(3);
    const Domain d = domain_of(w, left);
    CHECK(is_tame(w, left).tame == is_condorcet(d).holds);
    if (is_tame(w, left).tame) CHECK(is_peak_pit(d).holds);
  }
}

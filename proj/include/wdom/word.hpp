#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wdom {

// Bad user input or a violated precondition. The CLI reports these on
// stderr and exits with code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Line labels on tracks 1..n, read top to bottom at one vertical cut.
using TrackOrder = std::vector<int>;

// A wiring diagram over n horizontal tracks, encoded as the left-to-right
// sequence of crossing levels. Letter l swaps the lines on tracks l and l+1;
// track 1 is the top track. The empty letter sequence is a valid word.
struct Word {
  int n = 0;
  std::vector<int> letters;

  bool operator==(const Word&) const = default;
};

Word make_word(int n, std::vector<int> letters);

// Accepts whitespace-separated tokens, each "s<k>" or a bare integer "<k>".
Word parse_word(std::string_view text, int n);

// Canonical serialization: "s1 s2 s1". The empty word serializes to "".
std::string format_word(const Word& w);

TrackOrder identity_order(int n);
std::string format_track_order(const TrackOrder& order);
TrackOrder parse_track_order(std::string_view text, int n);

// Column sequence of the sweep: element 0 is `left`, element k is element
// k-1 with tracks (l_k, l_k+1) swapped. `left` may be any permutation of
// the label set, so sub-blocks can be swept from non-identity boundaries.
std::vector<TrackOrder> sweep(const Word& w, const TrackOrder& left);

struct CrossingEvent {
  int index = 0;              // 1-based position in the word
  int level = 0;              // the letter value; upper of the two tracks
  std::array<int, 2> pair{};  // line labels occupying the tracks, ascending

  bool operator==(const CrossingEvent&) const = default;
};

// One event per letter; the pair is read from the pre-event column.
std::vector<CrossingEvent> crossings(const Word& w, const TrackOrder& left);

// True iff every pair of lines crosses exactly once when swept from 1..n.
bool is_classical(const Word& w);

// Lexicographically least word reachable by swapping adjacent letters with
// |a - b| >= 2. Commutation-equivalent words share a canonical form and
// induce the same arrangement.
Word canonicalize(const Word& w);

}  // namespace wdom

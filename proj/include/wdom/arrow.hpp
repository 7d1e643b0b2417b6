#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wdom/analysis.hpp"
#include "wdom/domain.hpp"
#include "wdom/word.hpp"

namespace wdom {

// Boundary data for stacking two (n-1)-track blocks with a single crossing
// between them. Line t_prime stays on the bottom track through the first
// block, swaps with t, and t then stays on the bottom through the second.
struct CombineInputs {
  Word word_a;        // realizes the target restricted away from t_prime
  TrackOrder left_a;  // left boundary of the first block; must contain t
  Word word_b;        // realizes the target restricted away from t
  TrackOrder left_b;  // must equal the right boundary of word_a with t -> t_prime
  int t = 0;
  int t_prime = 0;
};

struct CombinedWord {
  Word word;        // word_a ++ (n-1) ++ word_b over n tracks
  TrackOrder left;  // left_a extended by t_prime at the bottom
};

CombinedWord combine_words(const CombineInputs& inputs);

// Union of d_a's orders with t_prime appended and d_b's with t appended.
// Requires the two restrictions to the common alternatives to coincide.
Domain combine_domains(const Domain& d_a, const Domain& d_b, int t, int t_prime);

struct RepresentResult {
  bool success = false;
  Word word;
  TrackOrder left;
  std::string method;   // "recursive" or "search"
  std::string failure;  // set when success is false
};

// Builds a tame word whose domain equals the given maximal Arrow's
// single-peaked domain, recursing through the two terminal restrictions and
// combining the blocks; falls back to an iterative-deepening word search up
// to length n(n-1). Guarded to n <= 7 unless unsafe_limits.
RepresentResult represent(const Domain& d, bool unsafe_limits = false);

// The fallback path on its own, for diagnostics.
RepresentResult represent_search(const Domain& d);

// All maximal Arrow's single-peaked domains on alternatives 1..n, found by
// assigning a never-bottom alternative to every triple and filtering the
// induced order sets. Guarded to n <= 5 unless unsafe_limits.
std::vector<Domain> enumerate_arrow_sp(int n, bool unsafe_limits = false);
std::vector<Domain> enumerate_arrow_sp_serial(int n, bool unsafe_limits = false);

struct Counterexample {
  Word word;
  std::string reason;
};

struct VerificationReport {
  std::string kind;
  int n = 0;
  int max_len = 0;
  std::uint64_t words_checked = 0;
  std::uint64_t agreements = 0;
  std::vector<Counterexample> counterexamples;
};

// Enumerates every word of length 0..max_len over n tracks and compares
// tameness against Condorcetness of the induced domain (and tame implies
// peak-pit). workers <= 0 means all available threads. Guarded to n <= 4,
// max_len <= 8 unless unsafe_limits.
VerificationReport verify_tame_theorem(int n, int max_len, int workers = 0,
                                       bool unsafe_limits = false);
VerificationReport verify_tame_theorem_serial(int n, int max_len, bool unsafe_limits = false);

// Enumerates every classical word (each pair crosses once) and checks that
// its domain is Condorcet, peak-pit, of maximal width, and maximal
// Condorcet. Guarded to n <= 4 unless unsafe_limits.
VerificationReport verify_classical(int n, bool unsafe_limits = false);

std::string verification_report_to_text(const VerificationReport& report);
std::string verification_report_to_json(const VerificationReport& report);

// FNV-1a over the serialized order list; used to name enumerated domain files.
std::string domain_content_hash(const Domain& d);

}  // namespace wdom

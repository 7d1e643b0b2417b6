// Acceptance suite: runs every checked claim end to end and prints one
// pass/fail line per criterion. Exits 0 iff everything passes.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wdom/analysis.hpp"
#include "wdom/arrow.hpp"
#include "wdom/chambers.hpp"
#include "wdom/render.hpp"
#include "wdom/tameness.hpp"

using namespace wdom;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool ok) {
  std::printf("%s  %2d  %s\n", ok ? "PASS" : "FAIL", number, name.c_str());
  if (!ok) ++failures;
}

Domain d31() { return make_domain({{1, 2, 3}, {2, 1, 3}, {2, 3, 1}, {3, 2, 1}}); }

Domain d42() {
  return make_domain({{1, 2, 3, 4},
                      {2, 1, 3, 4},
                      {2, 3, 1, 4},
                      {3, 2, 1, 4},
                      {2, 3, 4, 1},
                      {3, 2, 4, 1},
                      {2, 4, 3, 1},
                      {4, 2, 3, 1}});
}

std::set<std::vector<int>> ideal_sets(const ChamberIdeal& ideal) {
  std::set<std::vector<int>> out;
  for (const auto& grade : ideal.sets_by_cardinality()) out.insert(grade.begin(), grade.end());
  return out;
}

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(WDOM_FIXTURE_DIR) + "/" + name, std::ios::binary);
  if (!in) return {};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool check_d31_reproduction() {
  const Word w = make_word(3, {1, 2, 1});
  const TrackOrder left{1, 2, 3};
  const bool domain_ok = domain_of(w, left) == d31();
  const bool chambers_ok =
      ideal_sets(chamber_sets(w, left)) ==
      std::set<std::vector<int>>{{}, {1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}};
  return domain_ok && chambers_ok;
}

bool check_d42_reproduction() {
  const Word w = make_word(4, {1, 2, 1, 3, 1, 2, 1});
  const TrackOrder left{1, 2, 3, 4};
  const Domain d = domain_of(w, left);
  return d == d42() && is_tame(w, left).tame && is_condorcet(d).holds &&
         is_peak_pit(d).holds && is_arrow_sp(d).holds && is_maximal_condorcet(d).holds &&
         d.orders.size() == 8 && terminals(d) == std::vector<int>{1, 4} &&
         extremal_orders(d) == std::vector<LinearOrder>{{1, 2, 3, 4}, {4, 2, 3, 1}} &&
         !has_maximal_width(d);
}

bool check_subdomain_word() {
  // The classical drawing in which lines 2 and 3 never cross.
  const Domain d = domain_of(make_word(4, {1, 2, 3, 2, 1}), {1, 2, 3, 4});
  return d == make_domain({{1, 2, 3, 4},
                           {2, 1, 3, 4},
                           {2, 3, 1, 4},
                           {2, 3, 4, 1},
                           {2, 4, 3, 1},
                           {4, 2, 3, 1}});
}

bool check_non_condorcet_example() {
  const Word w = make_word(3, {1, 2, 1, 2});
  const TrackOrder left{1, 2, 3};
  const TamenessVerdict verdict = is_tame(w, left);
  if (verdict.tame || verdict.witnesses.size() != 1) return false;
  if (verdict.witnesses[0].pair != std::array<int, 2>{1, 2} ||
      verdict.witnesses[0].levels != std::vector<int>{1, 2}) {
    return false;
  }
  const Domain d = domain_of(w, left);
  if (is_condorcet(d).holds) return false;
  // The four listed orders are contained; the ideal generates two more.
  for (const LinearOrder& order :
       {LinearOrder{1, 2, 3}, LinearOrder{2, 1, 3}, LinearOrder{3, 1, 2}, LinearOrder{3, 2, 1}}) {
    if (!contains_order(d, order)) return false;
  }
  return true;
}

bool check_tame_theorem_exhaustive() {
  const VerificationReport r3 = verify_tame_theorem(3, 8);
  const VerificationReport r4 = verify_tame_theorem(4, 7);
  return r3.words_checked == 511 && r3.counterexamples.empty() &&
         r3.agreements == r3.words_checked && r4.words_checked == 3280 &&
         r4.counterexamples.empty() && r4.agreements == r4.words_checked;
}

bool check_triple_oracle_equivalence() {
  std::vector<LinearOrder> all;
  LinearOrder order{1, 2, 3};
  do {
    all.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));

  const auto contains_cycle = [](const std::vector<LinearOrder>& orders) {
    const auto has = [&orders](const LinearOrder& o) {
      return std::find(orders.begin(), orders.end(), o) != orders.end();
    };
    return (has({1, 2, 3}) && has({2, 3, 1}) && has({3, 1, 2})) ||
           (has({1, 3, 2}) && has({3, 2, 1}) && has({2, 1, 3}));
  };

  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<LinearOrder> orders;
    for (unsigned b = 0; b < 6; ++b) {
      if (mask & (1u << b)) orders.push_back(all[b]);
    }
    const Domain d = make_domain(orders);
    const bool by_conditions = is_condorcet(d).holds;
    if (by_conditions != condorcet_profile_oracle(d)) return false;
    if (by_conditions != !contains_cycle(d.orders)) return false;
  }
  return true;
}

bool check_classical_case() {
  const VerificationReport r3 = verify_classical(3);
  const VerificationReport r4 = verify_classical(4);
  return r3.words_checked == 2 && r3.counterexamples.empty() && r4.words_checked == 16 &&
         r4.counterexamples.empty();
}

bool check_arrow_sp_representation() {
  for (int n = 3; n <= 5; ++n) {
    const std::vector<Domain> domains = enumerate_arrow_sp(n);
    if (domains.empty()) return false;
    if (n == 4 &&
        std::find(domains.begin(), domains.end(), d42()) == domains.end()) {
      return false;
    }
    const std::size_t expected_size = std::size_t{1} << (n - 1);
    for (const Domain& d : domains) {
      if (d.orders.size() != expected_size) return false;
      if (terminals(d).size() != 2) return false;
      const RepresentResult result = represent(d);
      if (!result.success) return false;
      if (!is_tame(result.word, result.left).tame) return false;
      if (domain_of(result.word, result.left) != d) return false;
    }
  }
  return true;
}

bool check_combine_correctness() {
  const Domain block_a = d31();
  const Domain block_b = make_domain({{2, 3, 4}, {3, 2, 4}, {2, 4, 3}, {4, 2, 3}});
  CombineInputs inputs;
  inputs.word_a = make_word(3, {1, 2, 1});
  inputs.left_a = {1, 2, 3};
  inputs.word_b = make_word(3, {1, 2, 1});
  inputs.left_b = {3, 2, 4};
  inputs.t = 1;
  inputs.t_prime = 4;
  const CombinedWord combined = combine_words(inputs);
  const Domain glued = combine_domains(block_a, block_b, 1, 4);
  return domain_of(combined.word, combined.left) == glued && glued == d42();
}

bool check_renderer_determinism() {
  const std::string ascii = render_ascii(make_word(3, {1, 2, 1}), {1, 2, 3});
  if (ascii != read_fixture("d31.txt")) return false;

  const Word w = make_word(4, {1, 2, 1, 3, 1, 2, 1});
  const TrackOrder left{1, 2, 3, 4};
  const std::string svg = render_svg(w, left);
  if (svg != read_fixture("d42.svg")) return false;

  std::set<std::string> drawn;
  std::size_t at = 0;
  while ((at = svg.find("<text class=\"chamber\"", at)) != std::string::npos) {
    const std::size_t open = svg.find('>', at);
    const std::size_t close = svg.find("</text>", open);
    drawn.insert(svg.substr(open + 1, close - open - 1));
    at = close;
  }
  std::set<std::string> expected;
  for (const auto& grade : chamber_sets(w, left).sets_by_cardinality()) {
    for (const auto& set : grade) {
      if (!set.empty()) expected.insert(format_order(set));
    }
  }
  return drawn == expected;
}

}  // namespace

int main() {
  criterion(1, "three-line domain and chamber sets reproduced exactly", check_d31_reproduction());
  criterion(2, "four-line double-crossing domain fully classified", check_d42_reproduction());
  criterion(3, "no-23-crossing word yields exactly the six-order subdomain",
            check_subdomain_word());
  criterion(4, "untame word: witness, non-Condorcet verdict, listed orders contained",
            check_non_condorcet_example());
  criterion(5, "tame <=> Condorcet over 511 + 3280 words, no counterexamples",
            check_tame_theorem_exhaustive());
  criterion(6, "never-condition, profile-oracle and cyclic-triple routes agree on 63 subsets",
            check_triple_oracle_equivalence());
  criterion(7, "classical words: Condorcet, peak-pit, maximal width, maximal Condorcet",
            check_classical_case());
  criterion(8, "every maximal Arrow-SP domain (n=3..5) is represented by a tame word",
            check_arrow_sp_representation());
  criterion(9, "combined word's domain equals the combined domains and the target",
            check_combine_correctness());
  criterion(10, "renders match golden fixtures and drawn chamber labels",
            check_renderer_determinism());

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}

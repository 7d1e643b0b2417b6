#include <doctest.h>

#include <algorithm>

#include "wdom/analysis.hpp"
#include "wdom/chambers.hpp"

using namespace wdom;

namespace {

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

bool has_condition(const std::vector<NeverCondition>& conditions, int alternative,
                   int position) {
  return std::any_of(conditions.begin(), conditions.end(), [&](const NeverCondition& c) {
    return c.alternative == alternative && c.position == position;
  });
}

// Test-side route: a 3-alternative order set is value-restricted iff it
// contains neither rotation class {abc, bca, cab} nor {acb, cba, bac}.
bool contains_cyclic_triple(const std::vector<LinearOrder>& orders) {
  const auto has = [&orders](const LinearOrder& o) {
    return std::find(orders.begin(), orders.end(), o) != orders.end();
  };
  const bool even = has({1, 2, 3}) && has({2, 3, 1}) && has({3, 1, 2});
  const bool odd = has({1, 3, 2}) && has({3, 2, 1}) && has({2, 1, 3});
  return even || odd;
}

std::vector<LinearOrder> six_orders() {
  LinearOrder order{1, 2, 3};
  std::vector<LinearOrder> all;
  do {
    all.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return all;
}

}  // namespace

TEST_CASE("never_conditions on known triples") {
  CHECK(has_condition(never_conditions(d31(), {1, 2, 3}), 2, 3));  // 2 never bottom

  // ijk, jik, kij, kji with i=1, j=2, k=3: only "k never middle" holds.
  const Domain bad = make_domain({{1, 2, 3}, {2, 1, 3}, {3, 1, 2}, {3, 2, 1}});
  const auto conditions = never_conditions(bad, {1, 2, 3});
  REQUIRE(conditions.size() == 1);
  CHECK(conditions[0].alternative == 3);
  CHECK(conditions[0].position == 2);

  // A single order occupies 3 of the 9 cells.
  CHECK(never_conditions(make_domain({{1, 2, 3}}), {1, 2, 3}).size() == 6);

  CHECK_THROWS_AS(never_conditions(d31(), {1, 2, 9}), InputError);
  CHECK_THROWS_AS(never_conditions(d31(), {1, 2, 2}), InputError);
}

TEST_CASE("is_condorcet with witnesses") {
  CHECK(is_condorcet(d31()).holds);
  CHECK(is_condorcet(d42()).holds);

  const Domain full3 = make_domain(six_orders());
  const auto verdict = is_condorcet(full3);
  REQUIRE_FALSE(verdict.holds);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->triple == std::array<int, 3>{1, 2, 3});
  CHECK(verdict.witness->restriction == full3.orders);

  // Domains over fewer than three alternatives are trivially Condorcet.
  CHECK(is_condorcet(make_domain({{1, 2}, {2, 1}})).holds);
}

TEST_CASE("profile oracle agrees on the reference examples") {
  CHECK(condorcet_profile_oracle(d31()));
  CHECK(condorcet_profile_oracle(make_domain({{1, 2, 3}})));
  CHECK_FALSE(condorcet_profile_oracle(
      domain_of(make_word(3, {1, 2, 1, 2}), {1, 2, 3})));
}

TEST_CASE("profile oracle guard") {
  std::vector<LinearOrder> all;
  LinearOrder order{1, 2, 3, 4, 5};
  do {
    all.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  const Domain big = make_domain(all);
  CHECK_THROWS_AS(condorcet_profile_oracle(big), InputError);
  CHECK_FALSE(condorcet_profile_oracle(big, true));
}

TEST_CASE("triple oracle equivalence over all 64 subsets") {
  const std::vector<LinearOrder> all = six_orders();
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<LinearOrder> orders;
    for (unsigned b = 0; b < 6; ++b) {
      if (mask & (1u << b)) orders.push_back(all[b]);
    }
    if (orders.empty()) continue;
    const Domain d = make_domain(orders);
    const bool by_conditions = is_condorcet(d).holds;
    const bool by_profiles = condorcet_profile_oracle(d);
    const bool by_cycles = !contains_cyclic_triple(d.orders);
    CHECK(by_conditions == by_profiles);
    CHECK(by_conditions == by_cycles);

    // Classifier implications on every subset.
    if (is_arrow_sp(d).holds) CHECK(is_peak_pit(d).holds);
    if (is_peak_pit(d).holds) CHECK(is_condorcet(d).holds);
  }
}

TEST_CASE("peak-pit and Arrow single-peakedness") {
  CHECK(is_peak_pit(d42()).holds);
  CHECK(is_arrow_sp(d42()).holds);
  CHECK(is_arrow_sp(d31()).holds);

  // Only never-middle holds: Condorcet but neither peak-pit nor Arrow SP.
  const Domain never_middle = make_domain({{1, 2, 3}, {3, 2, 1}, {2, 1, 3}, {3, 1, 2}});
  CHECK(is_condorcet(never_middle).holds);
  CHECK_FALSE(is_peak_pit(never_middle).holds);
  CHECK_FALSE(is_arrow_sp(never_middle).holds);

  CHECK_FALSE(is_peak_pit(make_domain(six_orders())).holds);
}

TEST_CASE("maximal width") {
  CHECK(has_maximal_width(d31()));
  CHECK_FALSE(has_maximal_width(d42()));
  CHECK_FALSE(has_maximal_width(make_domain({{1, 2, 3}})));
}

TEST_CASE("maximal Condorcet with extension witnesses") {
  CHECK(is_maximal_condorcet(d31()).holds);
  CHECK(is_maximal_condorcet(d42()).holds);

  const auto verdict = is_maximal_condorcet(make_domain({{1, 2, 3}}));
  REQUIRE_FALSE(verdict.holds);
  REQUIRE(verdict.extension.has_value());
  CHECK(*verdict.extension == LinearOrder{1, 3, 2});  // lexicographically first

  // A non-Condorcet domain is not maximal Condorcet and has no witness.
  const auto full = is_maximal_condorcet(make_domain(six_orders()));
  CHECK_FALSE(full.holds);
  CHECK_FALSE(full.extension.has_value());
}

TEST_CASE("maximality guard") {
  LinearOrder nine(9);
  for (int i = 0; i < 9; ++i) nine[static_cast<std::size_t>(i)] = i + 1;
  CHECK_THROWS_AS(is_maximal_condorcet(make_domain({nine})), InputError);
}

TEST_CASE("terminals and extremal orders") {
  CHECK(terminals(d42()) == std::vector<int>{1, 4});
  CHECK(extremal_orders(d42()) ==
        std::vector<LinearOrder>{{1, 2, 3, 4}, {4, 2, 3, 1}});
  CHECK(terminals(d31()) == std::vector<int>{1, 3});
  CHECK(extremal_orders(d31()) == std::vector<LinearOrder>{{1, 2, 3}, {3, 2, 1}});
  CHECK(terminals(make_domain({{1, 2, 3}})) == std::vector<int>{3});
  CHECK(extremal_orders(make_domain({{1, 2, 3}})).empty());
}

TEST_CASE("classifiers commute with relabeling") {
  const std::vector<LinearOrder> all = six_orders();
  const std::map<int, int> sigma{{1, 3}, {2, 1}, {3, 2}};
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<LinearOrder> orders;
    for (unsigned b = 0; b < 6; ++b) {
      if (mask & (1u << b)) orders.push_back(all[b]);
    }
    const Domain d = make_domain(orders);
    const Domain m = relabel(d, sigma);
    CHECK(is_condorcet(d).holds == is_condorcet(m).holds);
    CHECK(is_peak_pit(d).holds == is_peak_pit(m).holds);
    CHECK(is_arrow_sp(d).holds == is_arrow_sp(m).holds);
    CHECK(has_maximal_width(d) == has_maximal_width(m));
    CHECK(is_maximal_condorcet(d).holds == is_maximal_condorcet(m).holds);
    CHECK(terminals(m).size() == terminals(d).size());
    CHECK(extremal_orders(m).size() == extremal_orders(d).size());
  }
}

TEST_CASE("analyze bundles the verdicts for a word") {
  const auto report = analyze(make_word(3, {1, 2, 1, 2}), {1, 2, 3});
  CHECK(report.n == 3);
  REQUIRE(report.tameness.has_value());
  CHECK_FALSE(report.tameness->tame);
  CHECK_FALSE(report.condorcet.holds);
  CHECK(report.maximal_width);  // the full set of six orders
  REQUIRE(report.maximal_condorcet.has_value());
  CHECK_FALSE(report.maximal_condorcet->holds);
  CHECK(report.domain.orders.size() == 6);
  REQUIRE(report.chambers.has_value());
  CHECK(report.chambers->size() == 8);
  CHECK(report.never.size() == 1);

  const std::string text = report_to_text(report);
  CHECK(text.find("tame: false") != std::string::npos);
  CHECK(text.find("condorcet: false") != std::string::npos);

  const std::string json_text = report_to_json(report);
  CHECK(json_text.find("\"tame\": false") != std::string::npos);
  CHECK(report_to_json(report) == json_text);  // byte-stable
}

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wdom/word.hpp"

namespace wdom {

// A ranking of alternatives, most preferred first.
using LinearOrder = std::vector<int>;

// A set of linear orders over a common alternative set.
struct Domain {
  std::vector<int> alternatives;    // ascending
  std::vector<LinearOrder> orders;  // lexicographically sorted, no duplicates

  bool operator==(const Domain&) const = default;
};

// Derives the alternative set from the orders, checks every order is a
// permutation of it, sorts and collapses duplicates.
Domain make_domain(std::vector<LinearOrder> orders);

bool contains_order(const Domain& d, const LinearOrder& order);

// "2314" when all labels are single digits, "2,3,1,4" otherwise.
std::string format_order(const LinearOrder& order);
LinearOrder parse_order(std::string_view text);

// One order per line, sorted lexicographically.
std::string format_domain(const Domain& d);
Domain parse_domain(std::string_view text);
Domain read_domain_file(const std::string& path);
void write_domain_file(const Domain& d, const std::string& path);

// Projection onto a nonempty subset of the alternatives, preserving the
// relative ranking; duplicates collapse.
Domain restrict_to(const Domain& d, std::vector<int> subset);

// Applies a label bijection to every order.
Domain relabel(const Domain& d, const std::map<int, int>& bijection);

}  // namespace wdom

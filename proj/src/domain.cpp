#include "wdom/domain.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace wdom {

Domain make_domain(std::vector<LinearOrder> orders) {
  Domain d;
  if (orders.empty()) return d;
  d.alternatives = orders.front();
  std::sort(d.alternatives.begin(), d.alternatives.end());
  if (std::adjacent_find(d.alternatives.begin(), d.alternatives.end()) != d.alternatives.end()) {
    throw InputError("order " + format_order(orders.front()) + " repeats an alternative");
  }
  for (const LinearOrder& order : orders) {
    LinearOrder sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != d.alternatives) {
      throw InputError("order " + format_order(order) +
                       " is not a permutation of the alternative set");
    }
  }
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  d.orders = std::move(orders);
  return d;
}

bool contains_order(const Domain& d, const LinearOrder& order) {
  return std::binary_search(d.orders.begin(), d.orders.end(), order);
}

std::string format_order(const LinearOrder& order) {
  const bool digits = std::all_of(order.begin(), order.end(),
                                  [](int a) { return a >= 0 && a <= 9; });
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(order[i]);
  }
  return out;
}

LinearOrder parse_order(std::string_view text) {
  LinearOrder order;
  if (text.find(',') != std::string_view::npos) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() &&
             (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) {
        ++i;
      }
      if (i >= text.size()) break;
      std::size_t j = i;
      while (j < text.size() && text[j] != ',' &&
             !std::isspace(static_cast<unsigned char>(text[j]))) {
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
  } else {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InputError("order \"" + std::string(text) + "\" is not a digit string");
      }
      order.push_back(c - '0');
    }
  }
  if (order.empty()) throw InputError("empty order");
  return order;
}

std::string format_domain(const Domain& d) {
  std::string out;
  for (const LinearOrder& order : d.orders) {
    out += format_order(order);
    out += '\n';
  }
  return out;
}

Domain parse_domain(std::string_view text) {
  std::vector<LinearOrder> orders;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.remove_suffix(1);
    }
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
      line.remove_prefix(1);
    }
    if (!line.empty()) orders.push_back(parse_order(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return make_domain(std::move(orders));
}

Domain read_domain_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open domain file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Domain d = parse_domain(buffer.str());
  if (d.orders.empty()) throw InputError("domain file " + path + " contains no orders");
  return d;
}

void write_domain_file(const Domain& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write domain file " + path);
  out << format_domain(d);
}

Domain restrict_to(const Domain& d, std::vector<int> subset) {
  if (subset.empty()) throw InputError("restriction subset is empty");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int a : subset) {
    if (!std::binary_search(d.alternatives.begin(), d.alternatives.end(), a)) {
      throw InputError("alternative " + std::to_string(a) + " is not in the domain");
    }
  }
  std::vector<LinearOrder> projected;
  projected.reserve(d.orders.size());
  for (const LinearOrder& order : d.orders) {
    LinearOrder p;
    p.reserve(subset.size());
    for (int a : order) {
      if (std::binary_search(subset.begin(), subset.end(), a)) p.push_back(a);
    }
    projected.push_back(std::move(p));
  }
  return make_domain(std::move(projected));
}

Domain relabel(const Domain& d, const std::map<int, int>& bijection) {
  std::vector<int> images;
  for (int a : d.alternatives) {
    const auto it = bijection.find(a);
    if (it == bijection.end()) {
      throw InputError("relabeling map misses alternative " + std::to_string(a));
    }
    images.push_back(it->second);
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    throw InputError("relabeling map is not injective");
  }
  std::vector<LinearOrder> mapped;
  mapped.reserve(d.orders.size());
  for (const LinearOrder& order : d.orders) {
    LinearOrder m;
    m.reserve(order.size());
    for (int a : order) m.push_back(bijection.at(a));
    mapped.push_back(std::move(m));
  }
  return make_domain(std::move(mapped));
}

}  // namespace wdom

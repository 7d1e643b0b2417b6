#include <json.hpp>

#include "wdom/analysis.hpp"
#include "wdom/arrow.hpp"

namespace wdom {

namespace {

using json = nlohmann::ordered_json;

const char* position_name(int position) {
  switch (position) {
    case 1: return "top";
    case 2: return "middle";
    default: return "bottom";
  }
}

std::string triple_label(const std::array<int, 3>& triple) {
  return format_order({triple.begin(), triple.end()});
}

json orders_to_json(const std::vector<LinearOrder>& orders) {
  json out = json::array();
  for (const LinearOrder& order : orders) out.push_back(format_order(order));
  return out;
}

json triple_witness_to_json(const std::optional<TripleWitness>& witness) {
  if (!witness) return nullptr;
  json out;
  out["triple"] = triple_label(witness->triple);
  out["restriction"] = orders_to_json(witness->restriction);
  return out;
}

}  // namespace

std::string report_to_json(const AnalysisReport& report) {
  json out;
  out["word"] = report.word ? json(format_word(*report.word)) : json(nullptr);
  out["left"] = report.left ? json(*report.left) : json(nullptr);
  out["n"] = report.n;
  out["tame"] = report.tameness ? json(report.tameness->tame) : json(nullptr);
  out["condorcet"] = report.condorcet.holds;
  out["peak_pit"] = report.peak_pit.holds;
  out["arrow_sp"] = report.arrow_sp.holds;
  out["maximal_width"] = report.maximal_width;
  out["maximal_condorcet"] =
      report.maximal_condorcet ? json(report.maximal_condorcet->holds) : json(nullptr);
  out["domain"] = orders_to_json(report.domain.orders);
  if (report.chambers) {
    json grades = json::array();
    for (const auto& grade : report.chambers->sets_by_cardinality()) {
      json sets = json::array();
      for (const auto& set : grade) sets.push_back(format_order(set));
      grades.push_back(std::move(sets));
    }
    out["chamber_sets"] = std::move(grades);
  } else {
    out["chamber_sets"] = nullptr;
  }
  {
    json never = json::array();
    for (const TripleConditions& tc : report.never) {
      json entry;
      entry["triple"] = triple_label(tc.triple);
      json conditions = json::array();
      for (const NeverCondition& c : tc.conditions) {
        conditions.push_back({{"alternative", c.alternative}, {"position", c.position}});
      }
      entry["conditions"] = std::move(conditions);
      never.push_back(std::move(entry));
    }
    out["never_conditions"] = std::move(never);
  }
  out["terminals"] = report.terminal_alternatives;
  out["extremal_orders"] = orders_to_json(report.extremals);
  {
    json witnesses;
    if (report.tameness) {
      json tame = json::array();
      for (const TamenessWitness& w : report.tameness->witnesses) {
        tame.push_back({{"pair", w.pair}, {"levels", w.levels}});
      }
      witnesses["tame"] = std::move(tame);
    } else {
      witnesses["tame"] = nullptr;
    }
    witnesses["condorcet"] = triple_witness_to_json(report.condorcet.witness);
    witnesses["peak_pit"] = triple_witness_to_json(report.peak_pit.witness);
    witnesses["arrow_sp"] = triple_witness_to_json(report.arrow_sp.witness);
    witnesses["maximal_condorcet"] =
        report.maximal_condorcet && report.maximal_condorcet->extension
            ? json(format_order(*report.maximal_condorcet->extension))
            : json(nullptr);
    out["witnesses"] = std::move(witnesses);
  }
  return out.dump(2) + "\n";
}

namespace {

std::string bool_text(bool value) { return value ? "true" : "false"; }

void append_triple_witness(std::string& out, const std::optional<TripleWitness>& witness) {
  if (!witness) return;
  out += "  witness triple {" + triple_label(witness->triple) + "} restricts to";
  for (const LinearOrder& order : witness->restriction) out += " " + format_order(order);
  out += "\n";
}

}  // namespace

std::string report_to_text(const AnalysisReport& report) {
  std::string out;
  if (report.word) {
    out += "word: " + format_word(*report.word) + "\n";
  }
  if (report.left) {
    out += "left: " + format_track_order(*report.left) + "\n";
  }
  out += "n: " + std::to_string(report.n) + "\n";
  if (report.tameness) {
    out += "tame: " + bool_text(report.tameness->tame) + "\n";
    for (const TamenessWitness& w : report.tameness->witnesses) {
      out += "  pair {" + std::to_string(w.pair[0]) + "," + std::to_string(w.pair[1]) +
             "} crosses at levels {";
      for (std::size_t i = 0; i < w.levels.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(w.levels[i]);
      }
      out += "}\n";
    }
  }
  out += "condorcet: " + bool_text(report.condorcet.holds) + "\n";
  append_triple_witness(out, report.condorcet.witness);
  out += "peak_pit: " + bool_text(report.peak_pit.holds) + "\n";
  append_triple_witness(out, report.peak_pit.witness);
  out += "arrow_sp: " + bool_text(report.arrow_sp.holds) + "\n";
  append_triple_witness(out, report.arrow_sp.witness);
  out += "maximal_width: " + bool_text(report.maximal_width) + "\n";
  if (report.maximal_condorcet) {
    out += "maximal_condorcet: " + bool_text(report.maximal_condorcet->holds) + "\n";
    if (report.maximal_condorcet->extension) {
      out += "  admissible extension: " + format_order(*report.maximal_condorcet->extension) +
             "\n";
    }
  } else {
    out += "maximal_condorcet: skipped (guard)\n";
  }
  out += "domain (" + std::to_string(report.domain.orders.size()) + "):\n";
  for (const LinearOrder& order : report.domain.orders) {
    out += "  " + format_order(order) + "\n";
  }
  if (report.chambers) {
    out += "chamber sets (" + std::to_string(report.chambers->size()) + "):\n";
    for (const auto& grade : report.chambers->sets_by_cardinality()) {
      for (const auto& set : grade) {
        out += "  " + (set.empty() ? std::string("{}") : format_order(set)) + "\n";
      }
    }
  }
  out += "never conditions:\n";
  for (const TripleConditions& tc : report.never) {
    out += "  {" + triple_label(tc.triple) + "}:";
    if (tc.conditions.empty()) {
      out += " none";
    } else {
      for (const NeverCondition& c : tc.conditions) {
        out += " " + std::to_string(c.alternative) + "-never-" + position_name(c.position);
      }
    }
    out += "\n";
  }
  out += "terminals:";
  for (int a : report.terminal_alternatives) out += " " + std::to_string(a);
  out += "\n";
  out += "extremal orders:";
  for (const LinearOrder& order : report.extremals) out += " " + format_order(order);
  out += "\n";
  return out;
}

std::string verification_report_to_json(const VerificationReport& report) {
  json out;
  out["kind"] = report.kind;
  out["n"] = report.n;
  out["max_len"] = report.max_len;
  out["words_checked"] = report.words_checked;
  out["agreements"] = report.agreements;
  json bad = json::array();
  for (const Counterexample& c : report.counterexamples) {
    bad.push_back({{"word", format_word(c.word)}, {"reason", c.reason}});
  }
  out["counterexamples"] = std::move(bad);
  return out.dump(2) + "\n";
}

}  // namespace wdom

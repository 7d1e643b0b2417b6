#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "wdom/analysis.hpp"
#include "wdom/arrow.hpp"
#include "wdom/chambers.hpp"
#include "wdom/render.hpp"
#include "wdom/tameness.hpp"

namespace {

using json = nlohmann::ordered_json;

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

wdom::TrackOrder resolve_left(const std::string& left_text, int n) {
  if (left_text.empty()) return wdom::identity_order(n);
  return wdom::parse_track_order(left_text, n);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw wdom::InputError("cannot write to " + path);
  out << content;
}

json order_list(const std::vector<wdom::LinearOrder>& orders) {
  json out = json::array();
  for (const auto& order : orders) out.push_back(wdom::format_order(order));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wiring-diagram words, chamber-set ideals, and preference domains"};
  app.require_subcommand(1);
  int rc = 0;

  // domain
  auto* domain_cmd = app.add_subcommand("domain", "print the domain of linear orders of a word");
  std::vector<std::string> domain_tokens;
  int domain_n = 0;
  std::string domain_left;
  bool domain_ideal = false;
  bool domain_structured = false;
  domain_cmd->add_option("word", domain_tokens, "word tokens, e.g. s1 s2 s1");
  domain_cmd->add_option("--n", domain_n, "number of pseudolines")->required();
  domain_cmd->add_option("--left", domain_left, "left boundary order (default 1..n)");
  domain_cmd->add_flag("--ideal", domain_ideal, "dump the chamber-set ideal instead");
  domain_cmd->add_flag("--structured", domain_structured, "emit JSON");
  domain_cmd->callback([&] {
    const wdom::Word w = wdom::parse_word(join_tokens(domain_tokens), domain_n);
    const wdom::TrackOrder left = resolve_left(domain_left, domain_n);
    const wdom::ChamberIdeal ideal = wdom::chamber_sets(w, left);
    const wdom::Domain d = wdom::domain_of(ideal);
    if (domain_structured) {
      json out;
      out["word"] = wdom::format_word(w);
      out["left"] = left;
      out["n"] = domain_n;
      out["domain"] = order_list(d.orders);
      if (domain_ideal) {
        json grades = json::array();
        for (const auto& grade : ideal.sets_by_cardinality()) {
          json sets = json::array();
          for (const auto& set : grade) sets.push_back(wdom::format_order(set));
          grades.push_back(std::move(sets));
        }
        out["chamber_sets"] = std::move(grades);
      }
      std::cout << out.dump(2) << "\n";
    } else if (domain_ideal) {
      std::cout << wdom::format_ideal(ideal);
    } else {
      std::cout << wdom::format_domain(d);
    }
  });

  // check
  auto* check_cmd = app.add_subcommand("check", "classify the domain of a word or domain file");
  std::vector<std::string> check_tokens;
  int check_n = 0;
  std::string check_left;
  std::string check_domain_file;
  bool check_structured = false;
  bool check_unsafe = false;
  check_cmd->add_option("word", check_tokens, "word tokens");
  check_cmd->add_option("--n", check_n, "number of pseudolines");
  check_cmd->add_option("--left", check_left, "left boundary order (default 1..n)");
  check_cmd->add_option("--domain", check_domain_file, "analyze a domain file instead");
  check_cmd->add_flag("--structured", check_structured, "emit JSON");
  check_cmd->add_flag("--unsafe-limits", check_unsafe, "lift the desk-scale guards");
  check_cmd->callback([&] {
    wdom::AnalysisReport report;
    if (!check_domain_file.empty()) {
      report = wdom::analyze(wdom::read_domain_file(check_domain_file), check_unsafe);
    } else {
      if (check_n < 1) throw wdom::InputError("--n is required when checking a word");
      const wdom::Word w = wdom::parse_word(join_tokens(check_tokens), check_n);
      report = wdom::analyze(w, resolve_left(check_left, check_n), check_unsafe);
    }
    std::cout << (check_structured ? wdom::report_to_json(report)
                                   : wdom::report_to_text(report));
    rc = report.condorcet.holds ? 0 : 1;
  });

  // tame
  auto* tame_cmd = app.add_subcommand("tame", "decide tameness of a word");
  std::vector<std::string> tame_tokens;
  int tame_n = 0;
  std::string tame_left;
  bool tame_structured = false;
  tame_cmd->add_option("word", tame_tokens, "word tokens");
  tame_cmd->add_option("--n", tame_n, "number of pseudolines")->required();
  tame_cmd->add_option("--left", tame_left, "left boundary order (default 1..n)");
  tame_cmd->add_flag("--structured", tame_structured, "emit JSON");
  tame_cmd->callback([&] {
    const wdom::Word w = wdom::parse_word(join_tokens(tame_tokens), tame_n);
    const wdom::TrackOrder left = resolve_left(tame_left, tame_n);
    const wdom::TamenessVerdict verdict = wdom::is_tame(w, left);
    if (tame_structured) {
      json out;
      out["word"] = wdom::format_word(w);
      out["left"] = left;
      out["tame"] = verdict.tame;
      json witnesses = json::array();
      for (const auto& witness : verdict.witnesses) {
        witnesses.push_back({{"pair", witness.pair}, {"levels", witness.levels}});
      }
      out["witnesses"] = std::move(witnesses);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "tame: " << (verdict.tame ? "true" : "false") << "\n";
      for (const auto& witness : verdict.witnesses) {
        std::cout << "pair {" << witness.pair[0] << "," << witness.pair[1]
                  << "} crosses at levels {";
        for (std::size_t i = 0; i < witness.levels.size(); ++i) {
          if (i > 0) std::cout << ",";
          std::cout << witness.levels[i];
        }
        std::cout << "}\n";
      }
    }
    rc = verdict.tame ? 0 : 1;
  });

  // represent
  auto* represent_cmd =
      app.add_subcommand("represent", "build a representing word for a domain file");
  std::string represent_file;
  bool represent_structured = false;
  bool represent_unsafe = false;
  represent_cmd->add_option("--domain", represent_file, "domain file")->required();
  represent_cmd->add_flag("--structured", represent_structured, "emit JSON");
  represent_cmd->add_flag("--unsafe-limits", represent_unsafe, "lift the desk-scale guards");
  represent_cmd->callback([&] {
    const wdom::Domain d = wdom::read_domain_file(represent_file);
    const wdom::RepresentResult result = wdom::represent(d, represent_unsafe);
    if (represent_structured) {
      json out;
      out["success"] = result.success;
      out["word"] = result.success ? json(wdom::format_word(result.word)) : json(nullptr);
      out["left"] = result.success ? json(result.left) : json(nullptr);
      out["method"] = result.method;
      if (!result.success) out["failure"] = result.failure;
      std::cout << out.dump(2) << "\n";
    } else if (result.success) {
      std::cout << "word: " << wdom::format_word(result.word) << "\n"
                << "left: " << wdom::format_track_order(result.left) << "\n"
                << "method: " << result.method << "\n";
    } else {
      std::cout << "failed: " << result.failure << "\n";
    }
    rc = result.success ? 0 : 1;
  });

  // combine
  auto* combine_cmd =
      app.add_subcommand("combine", "stack two blocks with one terminal switch");
  std::string combine_wa, combine_wb, combine_left_a, combine_left_b;
  int combine_n = 0, combine_t = 0, combine_tp = 0;
  bool combine_structured = false;
  combine_cmd->add_option("--n", combine_n, "line count of the combined word")->required();
  combine_cmd->add_option("--wa", combine_wa, "first block word (over n-1 tracks)")->required();
  combine_cmd->add_option("--wb", combine_wb, "second block word (over n-1 tracks)")->required();
  combine_cmd->add_option("--t", combine_t, "terminal on top of the combined left boundary")
      ->required();
  combine_cmd->add_option("--tprime", combine_tp, "terminal pinned to the bottom track")
      ->required();
  combine_cmd->add_option("--left-a", combine_left_a,
                          "left boundary of the first block (default: labels ascending)");
  combine_cmd->add_option("--left-b", combine_left_b,
                          "expected left boundary of the second block (default: derived)");
  combine_cmd->add_flag("--structured", combine_structured, "emit JSON");
  combine_cmd->callback([&] {
    if (combine_n < 2) throw wdom::InputError("combined line count must be at least 2");
    wdom::CombineInputs inputs;
    inputs.t = combine_t;
    inputs.t_prime = combine_tp;
    inputs.word_a = wdom::parse_word(combine_wa, combine_n - 1);
    inputs.word_b = wdom::parse_word(combine_wb, combine_n - 1);
    if (combine_left_a.empty()) {
      for (int a = 1; a <= combine_n; ++a) {
        if (a != combine_tp) inputs.left_a.push_back(a);
      }
    } else {
      inputs.left_a = wdom::parse_track_order(combine_left_a, combine_n - 1);
    }
    if (combine_left_b.empty()) {
      inputs.left_b = wdom::sweep(inputs.word_a, inputs.left_a).back();
      if (inputs.left_b.back() == combine_t) inputs.left_b.back() = combine_tp;
    } else {
      inputs.left_b = wdom::parse_track_order(combine_left_b, combine_n - 1);
    }
    const wdom::CombinedWord combined = wdom::combine_words(inputs);
    if (combine_structured) {
      json out;
      out["word"] = wdom::format_word(combined.word);
      out["left"] = combined.left;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "word: " << wdom::format_word(combined.word) << "\n"
                << "left: " << wdom::format_track_order(combined.left) << "\n";
    }
  });

  // enumerate
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "enumerate maximal Arrow's single-peaked domains");
  bool enumerate_arrow = false;
  int enumerate_n = 0;
  std::string enumerate_dir = "arrow-sp-domains";
  bool enumerate_structured = false;
  bool enumerate_unsafe = false;
  enumerate_cmd->add_flag("--arrow-sp", enumerate_arrow, "enumerate maximal Arrow's SP domains");
  enumerate_cmd->add_option("--n", enumerate_n, "number of alternatives")->required();
  enumerate_cmd->add_option("--seed-dir", enumerate_dir, "output directory for domain files");
  enumerate_cmd->add_flag("--structured", enumerate_structured, "emit JSON");
  enumerate_cmd->add_flag("--unsafe-limits", enumerate_unsafe, "lift the desk-scale guards");
  enumerate_cmd->callback([&] {
    if (!enumerate_arrow) {
      throw wdom::InputError("enumerate requires --arrow-sp");
    }
    const std::vector<wdom::Domain> domains =
        wdom::enumerate_arrow_sp(enumerate_n, enumerate_unsafe);
    std::filesystem::create_directories(enumerate_dir);
    std::vector<std::string> files;
    for (const wdom::Domain& d : domains) {
      const std::string name =
          "arrowsp-n" + std::to_string(enumerate_n) + "-" + wdom::domain_content_hash(d) + ".txt";
      const std::string path = (std::filesystem::path(enumerate_dir) / name).string();
      wdom::write_domain_file(d, path);
      files.push_back(path);
    }
    if (enumerate_structured) {
      json out;
      out["n"] = enumerate_n;
      out["count"] = domains.size();
      out["files"] = files;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "domains: " << domains.size() << "\n";
      for (const std::string& f : files) std::cout << f << "\n";
    }
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run an exhaustive verification harness");
  bool verify_tame = false;
  bool verify_classical_flag = false;
  int verify_n = 0;
  int verify_max_len = 8;
  int verify_workers = 0;
  bool verify_serial = false;
  bool verify_structured = false;
  bool verify_unsafe = false;
  verify_cmd->add_flag("--tame-theorem", verify_tame, "tame <=> Condorcet over all words");
  verify_cmd->add_flag("--classical", verify_classical_flag, "classical-arrangement checks");
  verify_cmd->add_option("--n", verify_n, "number of pseudolines")->required();
  verify_cmd->add_option("--max-len", verify_max_len, "maximum word length (tame-theorem)");
  verify_cmd->add_option("--workers", verify_workers, "worker threads (default: all)");
  verify_cmd->add_flag("--serial", verify_serial, "use the serial reference implementation");
  verify_cmd->add_flag("--structured", verify_structured, "emit JSON");
  verify_cmd->add_flag("--unsafe-limits", verify_unsafe, "lift the desk-scale guards");
  verify_cmd->callback([&] {
    if (verify_tame == verify_classical_flag) {
      throw wdom::InputError("choose exactly one of --tame-theorem and --classical");
    }
    wdom::VerificationReport report;
    if (verify_tame) {
      report = verify_serial
                   ? wdom::verify_tame_theorem_serial(verify_n, verify_max_len, verify_unsafe)
                   : wdom::verify_tame_theorem(verify_n, verify_max_len, verify_workers,
                                               verify_unsafe);
    } else {
      report = wdom::verify_classical(verify_n, verify_unsafe);
    }
    std::cout << (verify_structured ? wdom::verification_report_to_json(report)
                                    : wdom::verification_report_to_text(report));
    rc = report.counterexamples.empty() ? 0 : 1;
  });

  // render
  auto* render_cmd = app.add_subcommand("render", "draw a wiring diagram");
  std::vector<std::string> render_tokens;
  int render_n = 0;
  std::string render_left;
  std::string render_format = "ascii";
  std::string render_out;
  wdom::RenderOptions render_options;
  bool render_no_chambers = false;
  render_cmd->add_option("word", render_tokens, "word tokens");
  render_cmd->add_option("--n", render_n, "number of pseudolines")->required();
  render_cmd->add_option("--left", render_left, "left boundary order (default 1..n)");
  render_cmd->add_option("--format", render_format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("--out", render_out, "output file (default: stdout)");
  render_cmd->add_option("--track-gap", render_options.track_gap, "vertical units per track");
  render_cmd->add_option("--event-gap", render_options.event_gap, "horizontal units per event");
  render_cmd->add_flag("--no-chamber-labels", render_no_chambers, "omit chamber labels");
  render_cmd->callback([&] {
    const wdom::Word w = wdom::parse_word(join_tokens(render_tokens), render_n);
    const wdom::TrackOrder left = resolve_left(render_left, render_n);
    render_options.show_chamber_labels = !render_no_chambers;
    if (render_format == "ascii") {
      write_output(render_out, wdom::render_ascii(w, left));
    } else {
      render_options.format = wdom::RenderOptions::Format::svg;
      write_output(render_out, wdom::render_svg(w, left, render_options));
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const wdom::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

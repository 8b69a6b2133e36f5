// Command-line front end: classify (fusion data of the enumerated subgroup
// classes), decompose (the verified pushout diagram), oracle (brute-force
// cross-check suites). Exit codes: 0 success, 1 verification failure,
// 2 usage error. Output is deterministic byte-for-byte.

#include <CLI11.hpp>

#include "twolocal/oracles.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace twolocal;

struct RunConfig {
  Ambient ambient = Ambient::SU2;
  int level = 5;
  int modulus = 0;  // derived from ambient and level when 0
  std::string format = "text";
  bool oracle = false;
  bool inject_fault = false;
};

int required_modulus(Ambient amb, int level) {
  return amb == Ambient::SU2 ? std::max(4, level) : std::max(4, level + 1);
}

/// Validates the shared flags; returns false after printing a usage error.
bool finalize_config(RunConfig& cfg, const std::string& ambient_str, int min_level,
                     int max_level) {
  if (ambient_str == "su2") {
    cfg.ambient = Ambient::SU2;
  } else if (ambient_str == "so3") {
    cfg.ambient = Ambient::SO3;
  } else {
    std::cerr << "error: --ambient must be su2 or so3\n";
    return false;
  }
  if (cfg.level < min_level || cfg.level > max_level) {
    std::cerr << "error: --level must be between " << min_level << " and "
              << max_level << "\n";
    return false;
  }
  int need = required_modulus(cfg.ambient, cfg.level);
  if (cfg.modulus == 0) {
    cfg.modulus = need;
  } else if (cfg.modulus < need || cfg.modulus > 16) {
    std::cerr << "error: --modulus must be between " << need << " and 16 for "
              << ambient_name(cfg.ambient) << " at level " << cfg.level << "\n";
    return false;
  }
  return true;
}

/// Runs the oracle suites ahead of a subcommand; the report goes to stderr
/// so the main document stays parseable. Returns false on any failure.
bool oracle_gate(const RunConfig& cfg) {
  auto results = run_oracle_suites(cfg.ambient, cfg.level, cfg.modulus, false);
  bool ok = true;
  for (const auto& r : results) {
    if (r.status == "FAIL") {
      std::cerr << "oracle suite failed: " << r.name << ": " << r.detail << "\n";
      ok = false;
    }
  }
  return ok;
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << "  ";
      os << row[i];
      if (i + 1 < row.size())
        os << std::string(width[i] - row[i].size(), ' ');
    }
    os << "\n";
  }
  return os.str();
}

std::string opt_str(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : "inf";
}

int cmd_classify(const RunConfig& cfg) {
  if (cfg.format != "text" && cfg.format != "json") {
    std::cerr << "error: classify supports --format text or json\n";
    return 2;
  }
  if (cfg.oracle && !oracle_gate(cfg)) return 1;

  auto reports = classify_centric_radical(cfg.ambient, cfg.level, cfg.modulus);
  auto cr = centric_radical_class_names(reports);
  auto expected = expected_cr_class_names(cfg.ambient);
  bool match = cr == expected;

  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["ambient"] = ambient_name(cfg.ambient);
    doc["level"] = cfg.level;
    doc["modulus"] = cfg.modulus;
    doc["classes"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json row;
      row["class"] = r.class_name;
      row["group"] = r.group_name;
      if (r.order)
        row["order"] = *r.order;
      else
        row["order"] = nullptr;
      row["centric"] = r.centric;
      row["radical"] = r.radical;
      row["bullet"] = r.bullet_name;
      if (r.aut_f_order)
        row["aut_f_order"] = *r.aut_f_order;
      else
        row["aut_f_order"] = nullptr;
      row["out_f_order"] = r.out_f_order;
      row["out_f"] = r.out_f_tag;
      doc["classes"].push_back(row);
    }
    doc["centric_radical"] = cr;
    doc["expected"] = expected;
    doc["match"] = match;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "ambient: " << ambient_name(cfg.ambient) << "\n";
    std::cout << "level: " << cfg.level << "\n";
    std::cout << "modulus: " << cfg.modulus << "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"class", "group", "order", "centric", "radical", "bullet",
                    "|Aut_F|", "|Out_F|", "Out_F"});
    for (const auto& r : reports) {
      rows.push_back({r.class_name, r.group_name,
                      r.order ? std::to_string(*r.order) : "inf",
                      r.centric ? "yes" : "no", r.radical ? "yes" : "no",
                      r.bullet_name, opt_str(r.aut_f_order),
                      std::to_string(r.out_f_order), r.out_f_tag});
    }
    std::cout << format_table(rows);
    std::cout << "centric-radical:";
    for (const auto& c : cr) std::cout << " " << c;
    std::cout << "\n";
    std::cout << "expected:";
    for (const auto& c : expected) std::cout << " " << c;
    std::cout << "\n";
    std::cout << "result: " << (match ? "match" : "MISMATCH") << "\n";
  }
  return match ? 0 : 1;
}

int cmd_decompose(const RunConfig& cfg) {
  if (cfg.format != "text" && cfg.format != "json" && cfg.format != "dot") {
    std::cerr << "error: decompose supports --format text, json, or dot\n";
    return 2;
  }
  if (cfg.oracle && !oracle_gate(cfg)) return 1;
  try {
    auto res = build_decomposition(cfg.ambient, cfg.level, cfg.modulus);
    std::cout << emit_decomposition(res, cfg.format);
  } catch (const verification_error& e) {
    std::cerr << "error: verification failed: " << e.check << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int cmd_oracle(const RunConfig& cfg) {
  std::cout << "ambient: " << ambient_name(cfg.ambient) << "\n";
  std::cout << "level: " << cfg.level << "\n";
  std::cout << "modulus: " << cfg.modulus << "\n";
  auto results =
      run_oracle_suites(cfg.ambient, cfg.level, cfg.modulus, cfg.inject_fault);
  int failed = 0, skipped = 0;
  for (const auto& r : results) {
    std::cout << "suite " << r.name << " " << r.status;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    if (r.status == "FAIL") ++failed;
    if (r.status == "skip") ++skipped;
  }
  std::cout << "result: " << (failed ? "FAIL" : "ok") << " ("
            << results.size() << " suites, " << failed << " failed, " << skipped
            << " skipped)\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-local structure of the dyadic 2-toral groups: classification, "
               "decomposition diagrams, and brute-force oracles"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string ambient_str = "su2";

  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--ambient", ambient_str, "ambient group (su2 or so3)");
    sub->add_option("--level", cfg.level, "truncation level");
    sub->add_option("--modulus", cfg.modulus,
                    "cyclotomic modulus (derived from the level when omitted)");
    if (with_format)
      sub->add_option("--format", cfg.format, "output format");
  };

  auto* classify = app.add_subcommand("classify", "fusion report for the enumerated classes");
  add_common(classify, true);
  classify->add_flag("--oracle", cfg.oracle, "run the oracle suites first");

  auto* decompose = app.add_subcommand("decompose", "verified pushout diagram");
  add_common(decompose, true);
  decompose->add_flag("--oracle", cfg.oracle, "run the oracle suites first");

  auto* oracle = app.add_subcommand("oracle", "brute-force cross-check suites");
  add_common(oracle, false);
  oracle->add_flag("--inject-fault", cfg.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify->parsed()) {
      if (!finalize_config(cfg, ambient_str, 3, 6)) return 2;
      return cmd_classify(cfg);
    }
    if (decompose->parsed()) {
      if (!finalize_config(cfg, ambient_str, 3, 6)) return 2;
      return cmd_decompose(cfg);
    }
    if (oracle->parsed()) {
      if (!finalize_config(cfg, ambient_str, 1, 6)) return 2;
      return cmd_oracle(cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

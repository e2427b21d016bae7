// Batch driver: coefficient tables and the verification suites.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "qlev/suites.hpp"

using namespace qlev;

namespace {

int write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream os(path);
  if (!os) {
    std::cerr << "error: cannot open " << path << "\n";
    return 1;
  }
  os << content;
  return os.good() ? 0 : 1;
}

int cmd_table(const std::string& kind, const RunConfig& cfg) {
  LevelCtx ctx = cfg.ctx();
  std::vector<std::tuple<long, long, std::string>> rows;
  // a non-positive bound is the empty sweep: header only
  for (long k = 0; cfg.max_index > 0 && k <= cfg.max_index; ++k)
    for (long kp = 0; kp <= k; ++kp) {
      std::string v;
      if (kind == "qbinom")
        v = q_binom_pascal(k, kp).str();
      else if (kind == "hl_brace")
        v = hl_brace(k, kp, ctx).str();
      else
        v = hl_angle(k, kp, ctx).value.str();
      rows.emplace_back(k, kp, v);
    }
  std::string content;
  if (cfg.format == OutFormat::json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (auto& [k, kp, v] : rows)
      j.push_back({{"k", k}, {"k'", kp}, {"value", v}});
    content = j.dump(2) + "\n";
  } else if (cfg.format == OutFormat::csv) {
    content = "k,k',value\n";
    for (auto& [k, kp, v] : rows)
      content += std::to_string(k) + "," + std::to_string(kp) + ",\"" + v +
                 "\"\n";
  } else {
    content = "k\tk'\t" + kind + "\n";
    for (auto& [k, kp, v] : rows)
      content += std::to_string(k) + "\t" + std::to_string(kp) + "\t" + v +
                 "\n";
  }
  return write_out(cfg.out_path, content);
}

int cmd_verify(const RunConfig& cfg) {
  for (auto& s : cfg.suites)
    if (!find_suite(s)) {
      std::cerr << "error: unknown suite '" << s << "'\n";
      std::cerr << "known suites:";
      for (auto& n : suite_names()) std::cerr << " " << n;
      std::cerr << "\n";
      return 2;
    }
  std::vector<Report> reports = run_suites(cfg);
  bool ok = true;
  for (auto& r : reports) ok = ok && r.all_passed();
  std::string content;
  if (cfg.format == OutFormat::json) {
    // timing is zeroed so identical configurations give identical bytes
    std::vector<Report> stable = reports;
    for (auto& r : stable) r.millis = 0;
    content = to_json(stable);
  } else if (cfg.format == OutFormat::csv) {
    content = to_csv(reports);
  } else {
    content = to_text(reports);
  }
  int werr = write_out(cfg.out_path, content);
  if (werr) return werr;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for level-m q-calculus"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";
  std::string kind = "qbinom";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "prime p");
    sub->add_option("--m", cfg.m, "level m");
    sub->add_option("--d", cfg.d, "number of variables");
    sub->add_option("--max-index", cfg.max_index, "index sweep bound");
    sub->add_option("--max-degree", cfg.max_degree, "word degree bound");
    sub->add_option("--xdeg-bound", cfg.xdeg_bound,
                    "x-degree bound for the relation oracle");
    sub->add_option("--format", format, "json | csv | text");
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
  };

  CLI::App* table = app.add_subcommand("table", "emit a coefficient table");
  table->add_option("--kind", kind, "qbinom | hl_brace | hl_angle");
  add_common(table);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suites,
                     "suite name (repeatable; default: all)");
  add_common(verify);

  CLI::App* list = app.add_subcommand("list", "list available suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (format == "json")
    cfg.format = OutFormat::json;
  else if (format == "csv")
    cfg.format = OutFormat::csv;
  else if (format == "text")
    cfg.format = OutFormat::text;
  else {
    std::cerr << "error: unknown format '" << format << "'\n";
    return 2;
  }

  try {
    if (list->parsed()) {
      for (auto& n : suite_names()) std::cout << n << "\n";
      return 0;
    }
    cfg.ctx();  // validates p, m, d up front
    if (table->parsed()) {
      if (kind != "qbinom" && kind != "hl_brace" && kind != "hl_angle") {
        std::cerr << "error: unknown table kind '" << kind << "'\n";
        return 2;
      }
      return cmd_table(kind, cfg);
    }
    return cmd_verify(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

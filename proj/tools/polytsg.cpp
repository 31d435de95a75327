// polytsg: decide which of A4, S4, A5 occur as orientation-preserving
// topological symmetry groups of embedded K_{n,n}.
//
// Exit codes: 0 decided, 2 bad input, 3 pipeline disagrees with the
// closed-form answer (a bug).

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "polytsg/classify.hpp"
#include "polytsg/error.hpp"
#include "polytsg/report.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kMismatch = 3;

int report_error(const polytsg::Error& e) {
  std::cerr << "error: " << polytsg::errc_name(e.code());
  if (e.position() != std::string::npos) std::cerr << " at offset " << e.position();
  std::cerr << ": " << e.what() << "\n";
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological symmetry groups A4, S4, A5 of embedded K_{n,n}"};
  app.require_subcommand(1);

  std::string group = "A4";
  std::size_t n = 0;
  std::size_t max_n = 0;
  std::size_t cap = polytsg::kDefaultSweepCap;
  bool json = false, csv = false;
  std::string cycles, report_path;

  auto* decide = app.add_subcommand("decide", "Decide one (group, n)");
  decide->add_option("--group,-g", group, "A4, S4 or A5")->required();
  decide->add_option("--n,-n", n, "Part size")->required();
  decide->add_flag("--json", json, "Print the full JSON report");

  auto* sweep = app.add_subcommand("sweep", "Decide n = 0..max for one group");
  sweep->add_option("--group,-g", group, "A4, S4 or A5")->required();
  sweep->add_option("--max", max_n, "Largest n")->required();
  sweep->add_option("--cap", cap, "Refuse sweeps beyond this n")->capture_default_str();
  auto* fmt = sweep->add_option_group("format");
  fmt->add_flag("--csv", csv, "CSV rows (default)");
  fmt->add_flag("--json", json, "JSON rows with residue summary");
  fmt->require_option(0, 1);

  auto* check = app.add_subcommand("check-aut", "Test one automorphism against the realizable patterns");
  check->add_option("--n,-n", n, "Part size")->required();
  check->add_option("--cycles", cycles, "Cycles over v1..vn, w1..wn, e.g. \"(v1 v2)(w1 w2)\"")->required();

  auto* verify = app.add_subcommand("verify", "Build, verify and write a JSON report");
  verify->add_option("--group,-g", group, "A4, S4 or A5")->required();
  verify->add_option("--n,-n", n, "Part size")->required();
  verify->add_option("--report", report_path, "Output file")->required();

  auto* tables = app.add_subcommand("tables", "Print the fixed-vertex profile table and exclusion rules");
  tables->add_option("--group,-g", group, "A4, S4 or A5")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*decide) {
      auto v = polytsg::decide(n, polytsg::parse_group_kind(group));
      std::cout << (json ? polytsg::verdict_json(v) : polytsg::verdict_text(v));
      return v.agrees_with_theorem() ? 0 : kMismatch;
    }
    if (*sweep) {
      auto t = polytsg::sweep(polytsg::parse_group_kind(group), max_n, cap);
      std::cout << (json ? polytsg::sweep_json(t) : polytsg::sweep_csv(t));
      return t.agrees_with_theorem() ? 0 : kMismatch;
    }
    if (*check) {
      std::cout << polytsg::automorphism_text(polytsg::check_automorphism(cycles, n));
      return 0;
    }
    if (*verify) {
      auto v = polytsg::decide(n, polytsg::parse_group_kind(group));
      std::ofstream out(report_path);
      if (!out) {
        std::cerr << "error: cannot write " << report_path << "\n";
        return kInputError;
      }
      out << polytsg::verdict_json(v);
      std::cout << polytsg::verdict_text(v);
      return v.agrees_with_theorem() ? 0 : kMismatch;
    }
    if (*tables) {
      std::cout << polytsg::necessity_table_text(polytsg::parse_group_kind(group));
      return 0;
    }
  } catch (const polytsg::Error& e) {
    return report_error(e);
  }
  return 0;
}

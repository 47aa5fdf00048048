// Command-line front end: classification, oracle cross-checks, verification
// and export for skew braces of order pq.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "pqbrace/export.hpp"
#include "pqbrace/ybe.hpp"

using namespace pqbrace;
namespace fs = std::filesystem;

namespace {

constexpr std::int64_t kMaxClassifyP = 10000;

struct Options {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::string format = "json";
  bool include_tables = false;
  std::int64_t oracle_budget = 39;
  std::string output;
};

Params checked_params(const Options& opt) {
  if (opt.p > kMaxClassifyP)
    throw CLI::ValidationError("--p", "p exceeds the supported bound 10^4");
  return make_params(opt.p, opt.q);
}

std::string brace_line(const SkewBrace& b) {
  BraceDescriptor d = describe(b, false);
  std::string s = "  " + d.label;
  s.resize(std::max<std::size_t>(s.size(), 24), ' ');
  s += " add=" + std::string(kind_name(d.add_kind));
  s += " circ=" + std::string(kind_name(d.circ_iso));
  s += " |ker lambda|=" + std::to_string(d.ker_lambda);
  s += d.biskew ? " biskew" : "";
  return s;
}

int cmd_classify(const Options& opt) {
  Params pr = checked_params(opt);
  auto cat = catalog(pr);
  std::int64_t expected = pr.congruent ? 2 * pr.q + 2 : 1;
  std::cout << cat.size() << " skew brace" << (cat.size() == 1 ? "" : "s")
            << " of order " << pr.size() << " (p=" << pr.p << ", q=" << pr.q;
  if (pr.congruent) std::cout << ", g=" << pr.g;
  std::cout << ")\n";
  for (const SkewBrace& b : cat) std::cout << brace_line(b) << '\n';
  if (static_cast<std::int64_t>(cat.size()) != expected) {
    std::cerr << "classify: expected " << expected << " braces\n";
    return 1;
  }
  return 0;
}

int cmd_oracle_check(const Options& opt) {
  Params pr = checked_params(opt);
  if (pr.size() > opt.oracle_budget) {
    std::cerr << "oracle-check: pq = " << pr.size()
              << " exceeds the oracle budget " << opt.oracle_budget << '\n';
    return 2;
  }
  bool ok = true;
  for (Kind kind : {Kind::C, Kind::M}) {
    if (kind == Kind::M && !pr.congruent) continue;
    auto oracle = enumerate_regular_bruteforce(pr, kind, opt.oracle_budget);
    auto closed = closed_form_regular_subgroups(pr, kind);

    std::set<std::vector<std::int64_t>> okeys, ckeys;
    for (const Subgroup& s : oracle) okeys.insert(subgroup_key(pr, s));
    for (const Subgroup& s : closed) ckeys.insert(subgroup_key(pr, s));
    bool sets_match = okeys == ckeys && ckeys.size() == closed.size();

    auto et_oracle = e_prime_counts(pr, oracle);
    auto et_closed = e_prime_counts_closed_form(pr, kind);
    bool eprime_match = et_oracle == et_closed;

    auto orbits = compute_orbits(pr, oracle);
    std::int64_t expected_orbits =
        !pr.congruent ? 1 : (kind == Kind::C ? 2 : 2 * pr.q);
    bool orbits_match =
        static_cast<std::int64_t>(orbits.size()) == expected_orbits;

    std::cout << "Hol(" << kind_name(kind) << "): " << oracle.size()
              << " regular subgroups, " << orbits.size() << " orbits\n";
    for (const auto& [key, count] : et_oracle.counts)
      std::cout << "  e'(" << kind_name(std::get<0>(key)) << ","
                << kind_name(std::get<1>(key)) << "," << std::get<2>(key)
                << ")=" << count << '\n';
    if (!sets_match) std::cerr << "  MISMATCH: subgroup sets differ\n";
    if (!eprime_match) std::cerr << "  MISMATCH: e' tables differ\n";
    if (!orbits_match)
      std::cerr << "  MISMATCH: expected " << expected_orbits << " orbits\n";
    ok = ok && sets_match && eprime_match && orbits_match;
  }
  return ok ? 0 : 1;
}

int cmd_verify(const Options& opt) {
  Params pr = checked_params(opt);
  bool ok = true;
  for (const SkewBrace& b : catalog(pr)) {
    AxiomReport rep = verify_skew_axioms(b);
    bool bk = is_biskew(b);
    std::cout << "  " << b.label << ": axioms "
              << (rep.ok() ? "pass" : "FAIL") << ", biskew "
              << (bk ? "true" : "false") << '\n';
    if (!rep.ok()) {
      std::cerr << "    witness triple (" << rep.witness[0] << ","
                << rep.witness[1] << "," << rep.witness[2] << ")\n";
      ok = false;
    }
  }
  return ok ? 0 : 1;
}

int cmd_ybe(const Options& opt) {
  Params pr = checked_params(opt);
  bool ok = true;
  for (const SkewBrace& b : catalog(pr)) {
    YbeSolution sol = solution_from_brace(b);
    SolutionReport rep = verify_solution(sol);
    std::cout << "  " << b.label << ": braid " << (rep.braid ? "pass" : "FAIL")
              << ", nondegenerate " << (rep.nondegenerate ? "pass" : "FAIL")
              << ", involutive " << (rep.involutive ? "true" : "false") << '\n';
    ok = ok && rep.braid && rep.nondegenerate;
  }
  return ok ? 0 : 1;
}

fs::path default_out_dir() {
  if (const char* env = std::getenv("PQBRACE_OUT_DIR")) return env;
  return fs::current_path();
}

int cmd_export(const Options& opt) {
  Params pr = checked_params(opt);
  auto cat = catalog(pr);
  std::string stem = "braces_" + std::to_string(pr.p) + "_" + std::to_string(pr.q);
  if (opt.format == "json") {
    fs::path out = opt.output.empty() ? default_out_dir() / (stem + ".json")
                                      : fs::path(opt.output);
    std::ofstream os(out);
    if (!os) {
      std::cerr << "export: cannot open " << out << '\n';
      return 2;
    }
    os << catalog_to_json(pr, cat, opt.include_tables).dump(2) << '\n';
    std::cout << "wrote " << out.string() << '\n';
  } else if (opt.format == "csv") {
    fs::path dir = opt.output.empty() ? default_out_dir() : fs::path(opt.output);
    fs::create_directories(dir);
    int idx = 0;
    for (const SkewBrace& b : cat) {
      for (const char* which : {"add", "circ"}) {
        fs::path out = dir / (stem + "_" + std::to_string(idx) + "_" + which + ".csv");
        std::ofstream os(out);
        if (!os) {
          std::cerr << "export: cannot open " << out << '\n';
          return 2;
        }
        write_table_csv(os, which == std::string("add") ? b.add : b.circ, b.n);
      }
      ++idx;
    }
    std::cout << "wrote " << 2 * cat.size() << " csv tables to " << dir.string()
              << '\n';
  } else {  // text
    std::ostream& os = std::cout;
    os << cat.size() << " braces for (p,q)=(" << pr.p << "," << pr.q << ")\n";
    for (const SkewBrace& b : cat) os << brace_line(b) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew braces of order pq: classification, certification, export"};
  app.require_subcommand(1);

  Options opt;
  auto add_pq = [&](CLI::App* sub) {
    sub->add_option("--p", opt.p, "larger prime")->required();
    sub->add_option("--q", opt.q, "smaller prime")->required();
  };
  CLI::App* classify = app.add_subcommand("classify", "print the brace catalog");
  add_pq(classify);
  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "brute-force enumeration cross-check");
  add_pq(oracle);
  oracle->add_option("--oracle-budget", opt.oracle_budget,
                     "max pq for brute force");
  CLI::App* verify =
      app.add_subcommand("verify", "exhaustive axiom check of the catalog");
  add_pq(verify);
  CLI::App* ybe = app.add_subcommand("ybe", "build and verify the canonical solutions");
  add_pq(ybe);
  CLI::App* exp = app.add_subcommand("export", "write brace descriptors");
  add_pq(exp);
  exp->add_option("--format", opt.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  exp->add_flag("--include-tables", opt.include_tables,
                "include full Cayley tables");
  exp->add_option("--output,-o", opt.output, "output file (json) or directory (csv)");

  try {
    app.parse(argc, argv);
    if (classify->parsed()) return cmd_classify(opt);
    if (oracle->parsed()) return cmd_oracle_check(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (ybe->parsed()) return cmd_ybe(opt);
    if (exp->parsed()) return cmd_export(opt);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

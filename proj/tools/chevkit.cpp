#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chevkit/cocycle.hpp"
#include "chevkit/errors.hpp"
#include "chevkit/folding.hpp"
#include "chevkit/lie_algebra.hpp"
#include "chevkit/table_io.hpp"
#include "chevkit/verify.hpp"

namespace {

using namespace chevkit;

struct TypeArgs {
  std::string type;
  int rank = 0;

  CartanType resolve() const {
    CartanType t = CartanType::parse(type);
    if (t.rank < 0) {
      if (rank <= 0) throw ParseError("type '" + type + "' needs --rank");
      t.rank = rank;
    } else if (rank > 0 && rank != t.rank) {
      throw ParseError("conflicting ranks: '" + type + "' vs --rank " + std::to_string(rank));
    }
    t.validate();
    return t;
  }
};

void add_type_options(CLI::App* cmd, TypeArgs& args, bool required = true) {
  auto* opt = cmd->add_option("--type", args.type, "Cartan type: letter (with --rank) or e.g. F4");
  if (required) opt->required();
  cmd->add_option("--rank", args.rank, "rank when --type is a bare letter");
}

Orientation orientation_from(const std::string& name) {
  if (name == "plus") return Orientation::plus;
  if (name == "minus") return Orientation::minus;
  throw ParseError("orientation must be plus or minus");
}

int run_table(const TypeArgs& targs, const std::string& orientation_name, bool all_roots,
              const std::string& format_name) {
  CartanType type = targs.resolve();
  Orientation orientation = orientation_from(orientation_name);
  TableFormat format = table_format_from_name(format_name);
  RootSystemPtr rs = build_root_system(type);
  SignAssignment signs = special_orientation(*rs, orientation);
  LieAlgebra L = LieAlgebra::special(rs, signs);
  std::cout << format_ledger(make_ledger(L, signs, orientation, all_roots), format);
  return 0;
}

int run_cocycle(const TypeArgs& targs, const std::string& orientation_name,
                const std::string& variant, const std::string& format_name) {
  CartanType type = targs.resolve();
  Orientation orientation = orientation_from(orientation_name);
  RootSystemPtr rs = build_root_system(type);
  SignAssignment signs = special_orientation(*rs, orientation);
  Cocycle c = variant == "kac" ? epsilon_kac(*rs, oriented_edges(*rs, signs))
                               : epsilon0(*rs, signs);
  VerificationReport rep = check_flm(c, *rs);
  if (format_name == "json") {
    nlohmann::ordered_json doc;
    doc["type"] = type.str();
    doc["cocycle"] = variant;
    doc["orientation"] = orientation_name;
    doc["generators"] = nlohmann::ordered_json::array();
    for (int i = 0; i < rs->rank(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int j = 0; j < rs->rank(); ++j) row.push_back(c.gen(i, j));
      doc["generators"].push_back(std::move(row));
    }
    std::string flm = report_to_json(rep);
    doc["flm"] = nlohmann::json::parse(flm);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "# " << type.str() << " " << variant << " cocycle, orientation "
              << orientation_name << "\n";
    for (int i = 0; i < rs->rank(); ++i) {
      for (int j = 0; j < rs->rank(); ++j) std::cout << (j ? " " : "") << (c.gen(i, j) > 0 ? "+1" : "-1");
      std::cout << "\n";
    }
    std::cout << report_to_text(rep);
  }
  return rep.ok() ? 0 : 1;
}

int run_fold(const TypeArgs& targs, const std::string& orientation_name, bool show_lifts) {
  CartanType type = targs.resolve();
  Orientation orientation = orientation_from(orientation_name);
  RootSystemPtr rs = build_root_system(type);
  SignAssignment signs = special_orientation(*rs, orientation);
  FoldingData fd = FoldingData::build(rs, signs);
  const RootSystem& cover = fd.cover();
  std::cout << "# fold of " << type.str() << ": cover " << cover.type().str() << ", tau order "
            << fd.order() << "\n";
  if (!show_lifts) {
    for (int i = 0; i < rs->rank(); ++i) {
      int t = rs->simple_root_index(i);
      std::cout << "fibre(" << rs->render(t) << ") = {";
      bool first = true;
      for (int k : fd.fibre(t)) {
        std::cout << (first ? "" : ", ") << cover.render(k);
        first = false;
      }
      std::cout << "}\n";
    }
    return 0;
  }
  OrientedEdges edges = oriented_edges(*rs, signs);
  for (int a = 0; a < rs->num_positive(); ++a)
    for (int b = a + 1; b < rs->num_positive(); ++b) {
      if (rs->sum_index(a, b) < 0) continue;
      FoldingData::LiftedPair lift = fd.lift_pair(a, b);
      std::cout << rs->render(a) << " + " << rs->render(b) << "  lift " << cover.render(lift.alpha)
                << " + " << cover.render(lift.beta) << "  rho " << rho(*rs, edges, rs->root(a), rs->root(b))
                << "," << rho(*rs, edges, rs->root(b), rs->root(a)) << "  rho_cover "
                << fd.cover_rho(cover.root(lift.alpha), cover.root(lift.beta)) << ","
                << fd.cover_rho(cover.root(lift.beta), cover.root(lift.alpha)) << "  sign "
                << (fd.folded_sign(a, b) > 0 ? "+1" : "-1") << "\n";
    }
  return 0;
}

int run_verify(const TypeArgs& targs, const std::string& orientation_name,
               std::vector<std::string> suites, const std::string& format_name) {
  CartanType type = targs.resolve();
  Orientation orientation = orientation_from(orientation_name);
  RootSystemPtr rs = build_root_system(type);
  SignAssignment signs = special_orientation(*rs, orientation);

  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) {
    suites = {"jacobi", "oracle", "l123", "signs", "threeway", "golden"};
    if (type.simply_laced()) suites.push_back("flm");
    if (type.letter == TypeLetter::B) suites.push_back("parity");
  }

  std::vector<VerificationReport> reports;
  LieAlgebra L = LieAlgebra::special(rs, signs);
  for (const std::string& suite : suites) {
    if (suite == "jacobi") {
      reports.push_back(check_jacobi(L));
    } else if (suite == "jacobi-reference") {
      reports.push_back(check_jacobi_reference(L));
    } else if (suite == "oracle") {
      reports.push_back(oracle_iterated_brackets(L));
    } else if (suite == "l123") {
      reports.push_back(check_L123(L));
    } else if (suite == "signs") {
      reports.push_back(check_sign_identities(L));
    } else if (suite == "threeway") {
      reports.push_back(check_three_way(type, signs));
    } else if (suite == "golden") {
      reports.push_back(check_golden_tables());
    } else if (suite == "flm") {
      if (!type.simply_laced())
        throw ParseError("suite 'flm' needs a simply laced type, not " + type.str());
      reports.push_back(check_flm(epsilon0(*rs, signs), *rs));
      reports.push_back(check_flm3_star(epsilon_kac(*rs, oriented_edges(*rs, signs)), *rs));
    } else if (suite == "parity") {
      if (type.letter != TypeLetter::B)
        throw ParseError("suite 'parity' applies to type B only, not " + type.str());
      reports.push_back(check_rho_parity(*rs, signs));
    } else {
      throw ParseError("unknown suite '" + suite +
                       "' (jacobi, jacobi-reference, oracle, l123, signs, threeway, golden, flm, "
                       "parity, all)");
    }
  }

  bool all_ok = true;
  if (format_name == "json") {
    std::string out = "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::string one = report_to_json(reports[i]);
      if (!one.empty() && one.back() == '\n') one.pop_back();
      out += one;
      if (i + 1 < reports.size()) out += ",";
      out += "\n";
    }
    out += "]\n";
    std::cout << out;
  }
  for (const VerificationReport& rep : reports) {
    if (format_name != "json") std::cout << report_to_text(rep);
    all_ok = all_ok && rep.ok();
  }
  return all_ok ? 0 : 1;
}

int run_bench(const TypeArgs& targs, const std::string& orientation_name, int repeats) {
  CartanType type = targs.resolve();
  Orientation orientation = orientation_from(orientation_name);
  RootSystemPtr rs = build_root_system(type);
  SignAssignment signs = special_orientation(*rs, orientation);
  using Clock = std::chrono::steady_clock;

  double best_build = 1e300;
  long long constants = 0;
  for (int t = 0; t < repeats; ++t) {
    auto t0 = Clock::now();
    LieAlgebra L = LieAlgebra::special(rs, signs);
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    best_build = std::min(best_build, dt);
    if (t == 0) {
      for (int a = 0; a < rs->num_roots(); ++a)
        for (int b = 0; b < rs->num_roots(); ++b)
          if (rs->sum_index(a, b) >= 0) ++constants;
    }
  }
  std::printf("%s: %d roots, %lld structure constants\n", type.str().c_str(), rs->num_roots(),
              constants);
  std::printf("build_special: best %.3fs over %d runs, %.0f constants/s\n", best_build, repeats,
              constants / best_build);

  LieAlgebra L = LieAlgebra::special(rs, signs);
  VerificationReport serial = check_jacobi(L, ExecPolicy::serial);
  VerificationReport parallel = check_jacobi(L, ExecPolicy::parallel);
  std::printf("jacobi serial:   %.3fs (%lld checks, %s)\n", serial.seconds, serial.checks,
              serial.ok() ? "pass" : "FAIL");
  std::printf("jacobi parallel: %.3fs (%d threads, %s, speedup %.2fx)\n", parallel.seconds,
              verification_threads(), parallel.ok() ? "pass" : "FAIL",
              serial.seconds / parallel.seconds);
  return serial.ok() && parallel.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure constants for simple Lie algebras in the canonical basis"};
  app.require_subcommand(1);

  TypeArgs table_type, cocycle_type, fold_type, verify_type, bench_type;
  std::string table_orientation = "plus", cocycle_orientation = "plus", fold_orientation = "plus",
              verify_orientation = "plus", bench_orientation = "plus";
  std::string table_roots = "positive";
  std::string table_format = "pretty", cocycle_format = "text", verify_format = "text";
  std::string cocycle_variant = "epsilon0";
  std::vector<std::string> verify_suites;
  bool show_lifts = false;
  int bench_repeats = 3;

  CLI::App* table = app.add_subcommand("table", "print the structure-constant ledger");
  add_type_options(table, table_type);
  table->add_option("--orientation", table_orientation, "plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  table->add_option("--roots", table_roots, "positive (paper layout) or all")
      ->check(CLI::IsMember({"positive", "all"}));
  table->add_option("--format", table_format, "pretty, csv, tsv or json")
      ->check(CLI::IsMember({"pretty", "csv", "tsv", "json"}));

  CLI::App* cocycle = app.add_subcommand("cocycle", "print a cocycle generator matrix and its report");
  add_type_options(cocycle, cocycle_type);
  cocycle->add_option("--orientation", cocycle_orientation, "plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  cocycle->add_option("--cocycle", cocycle_variant, "epsilon0 or kac")
      ->check(CLI::IsMember({"epsilon0", "kac"}));
  cocycle->add_option("--format", cocycle_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* fold = app.add_subcommand("fold", "show the simply laced cover and lifts");
  add_type_options(fold, fold_type);
  fold->add_option("--orientation", fold_orientation, "plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  fold->add_flag("--show-lifts", show_lifts, "list one lift per composable positive pair");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_type_options(verify, verify_type);
  verify->add_option("--orientation", verify_orientation, "plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  verify->add_option("--suites", verify_suites, "comma-separated suite list or 'all'")
      ->delimiter(',');
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* bench = app.add_subcommand("bench", "time table builds and the jacobi kernel");
  add_type_options(bench, bench_type);
  bench->add_option("--orientation", bench_orientation, "plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  bench->add_option("--repeat", bench_repeats, "build repetitions")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
    if (table->parsed())
      return run_table(table_type, table_orientation, table_roots == "all", table_format);
    if (cocycle->parsed())
      return run_cocycle(cocycle_type, cocycle_orientation,
                         cocycle_variant == "kac" ? "kac" : "epsilon0", cocycle_format);
    if (fold->parsed()) return run_fold(fold_type, fold_orientation, show_lifts);
    if (verify->parsed())
      return run_verify(verify_type, verify_orientation, verify_suites, verify_format);
    if (bench->parsed()) return run_bench(bench_type, bench_orientation, bench_repeats);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RankError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

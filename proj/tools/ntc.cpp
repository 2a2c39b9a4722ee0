#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ntc/graph_io.hpp"
#include "ntc/report.hpp"
#include "ntc/verify.hpp"

namespace {

std::optional<ntc::ZVec> maybe_bound(const std::string& path, const ntc::WeightedDualGraph& g) {
  if (path.empty()) return std::nullopt;
  return ntc::load_bound_file(path, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for normal tangent cones of surface singularities"};
  app.require_subcommand(1);
  app.fallthrough();

  bool human = false;
  std::string out_path;
  app.add_flag("--human", human, "render the report as indented plain text");
  app.add_option("--out", out_path, "write the report to PATH instead of stdout");

  // graph ---------------------------------------------------------------
  auto* graph = app.add_subcommand("graph", "weighted dual graph analysis");
  graph->require_subcommand(1);
  graph->fallthrough();

  std::string check_file;
  auto* check = graph->add_subcommand("check", "validate a graph file");
  check->fallthrough();
  check->add_option("file", check_file, "graph file (.wdg.json)")->required();

  std::string analyze_file;
  long long analyze_r = 0;
  auto* analyze = graph->add_subcommand("analyze", "cycle from arrows and Gorenstein test");
  analyze->fallthrough();
  analyze->add_option("file", analyze_file, "graph file (.wdg.json)")->required();
  auto* analyze_ropt =
      analyze->add_option("--r", analyze_r, "test the criterion at this stabilization index");

  std::string dual_file, dual_vertex;
  auto* dual = graph->add_subcommand("dual", "dual cycle of one vertex");
  dual->fallthrough();
  dual->add_option("file", dual_file, "graph file (.wdg.json)")->required();
  dual->add_option("vertex", dual_vertex, "vertex id")->required();

  std::string fund_file;
  auto* fundamental = graph->add_subcommand("fundamental", "fundamental cycle");
  fundamental->fallthrough();
  fundamental->add_option("file", fund_file, "graph file (.wdg.json)")->required();

  std::string enum_file, enum_mode, enum_bound;
  auto* enumerate = graph->add_subcommand("enum", "enumerate anti-nef cycles");
  enumerate->fallthrough();
  enumerate->add_option("file", enum_file, "graph file (.wdg.json)")->required();
  enumerate->add_option("--mode", enum_mode, "below: some coefficient under the bound; zk: not exceeding the canonical cycle")
      ->required()
      ->check(CLI::IsMember({"below", "zk"}));
  enumerate->add_option("--bound", enum_bound, "bound file (mode below)");

  std::string chimin_file, chimin_bound;
  auto* chimin = graph->add_subcommand("chimin", "minimize chi over a box");
  chimin->fallthrough();
  chimin->add_option("file", chimin_file, "graph file (.wdg.json)")->required();
  chimin->add_option("--bound", chimin_bound, "bound file (default: derived box)");

  // brieskorn -----------------------------------------------------------
  auto* brieskorn = app.add_subcommand("brieskorn", "x^a + y^b + z^c hypersurfaces");
  brieskorn->fallthrough();
  long long bk_a = 0, bk_b = 0, bk_c = 0;
  auto* bk_aopt = brieskorn->add_option("a", bk_a, "smallest exponent (>= 2)");
  brieskorn->add_option("b", bk_b, "middle exponent");
  brieskorn->add_option("c", bk_c, "largest exponent");

  long long scan_max = 30;
  auto* scan = brieskorn->add_subcommand("scan", "sweep all 2 <= a <= b <= c <= max");
  scan->fallthrough();
  scan->add_option("--max", scan_max, "sweep bound")->check(CLI::Range(2, 100));

  // homog ---------------------------------------------------------------
  auto* homog = app.add_subcommand("homog", "cones over smooth plane curves");
  homog->require_subcommand(1);
  homog->fallthrough();

  long long cls_d = 0;
  auto* classify = homog->add_subcommand("classify", "Gorenstein ideals with index >= 2");
  classify->fallthrough();
  classify->add_option("d", cls_d, "curve degree (3..8)")->required();

  long long pow_d = 0, pow_n = 0;
  auto* power = homog->add_subcommand("power", "powers of the maximal ideal");
  power->fallthrough();
  power->add_option("d", pow_d, "curve degree (>= 3)")->required();
  power->add_option("n", pow_n, "power (1..d)")->required();

  long long il_d = 0;
  auto* il = homog->add_subcommand("il", "linear-section ideal I(L)");
  il->fallthrough();
  il->add_option("d", il_d, "curve degree (>= 3)")->required();

  // verify-paper ----------------------------------------------------------
  auto* verify = app.add_subcommand("verify-paper", "run the acceptance checks");
  verify->fallthrough();
  long long verify_max = 30;
  std::string verify_fixtures = "fixtures";
  verify->add_option("--max", verify_max, "family sweep bound")->check(CLI::Range(2, 100));
  verify->add_option("--fixtures", verify_fixtures, "fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ntc::json report;
    int exit_code = 0;

    if (graph->parsed()) {
      if (check->parsed()) {
        report = ntc::report_graph_check(ntc::load_graph_file(check_file), check_file);
      } else if (analyze->parsed()) {
        std::optional<long long> r;
        if (analyze_ropt->count() > 0) r = analyze_r;
        report = ntc::report_graph_analyze(ntc::load_graph_file(analyze_file), analyze_file, r);
      } else if (dual->parsed()) {
        report = ntc::report_graph_dual(ntc::load_graph_file(dual_file), dual_file, dual_vertex);
      } else if (fundamental->parsed()) {
        report = ntc::report_graph_fundamental(ntc::load_graph_file(fund_file), fund_file);
      } else if (enumerate->parsed()) {
        const ntc::WeightedDualGraph g = ntc::load_graph_file(enum_file);
        report = ntc::report_graph_enum(g, enum_file, enum_mode, maybe_bound(enum_bound, g));
      } else if (chimin->parsed()) {
        const ntc::WeightedDualGraph g = ntc::load_graph_file(chimin_file);
        report = ntc::report_graph_chimin(g, chimin_file, maybe_bound(chimin_bound, g));
      }
    } else if (brieskorn->parsed()) {
      if (scan->parsed()) {
        report = ntc::report_brieskorn_scan(scan_max);
      } else {
        if (bk_aopt->count() == 0) {
          throw std::invalid_argument("brieskorn needs three exponents A B C (or `scan`)");
        }
        report = ntc::report_brieskorn(bk_a, bk_b, bk_c);
      }
    } else if (homog->parsed()) {
      if (classify->parsed()) {
        report = ntc::report_homog_classify(cls_d);
      } else if (power->parsed()) {
        report = ntc::report_homog_power(pow_d, pow_n);
      } else if (il->parsed()) {
        report = ntc::report_homog_il(il_d);
      }
    } else if (verify->parsed()) {
      ntc::VerifyOptions opts;
      opts.fixture_dir = verify_fixtures;
      opts.sweep_max = verify_max;
      const std::vector<ntc::CheckResult> results = ntc::run_acceptance_checks(opts);
      report = ntc::report_verify(results, opts);
      if (!ntc::all_pass(results)) exit_code = 3;
    }

    const std::string text = human ? ntc::render_human(report) : report.dump(2) + "\n";
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw std::invalid_argument("cannot write report to " + out_path);
      out << text;
    } else {
      std::cout << text;
    }
    return exit_code;
  } catch (const ntc::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

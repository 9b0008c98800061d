#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "codim2/acceptance.hpp"
#include "codim2/harness.hpp"
#include "codim2/nets.hpp"

using namespace codim2;

namespace {

constexpr char const *kConfigSchema = R"(Config file schema (JSON):
  {"d": 3,
   "blocks": [[{"x": 0.0, "m": 1}, {"x": 0.1, "m": 1}],
              [{"x": 1.0, "m": 1}, {"x": 1.1, "m": 1}], ...],
   "non_generic": false}
Each block is a set A_j of real points; "m" (default 1) is the multiplicity of a
collided point. Block j contributes a_j = (sum of m) - 1; a solvable config needs
1 <= a_j <= d-1 and sum a_j = 2d-2. A point may appear in two blocks only when
"non_generic" is true.

Exit codes: 0 success, 1 invalid input, 2 solver deficit (fewer classes than the
Kostka number were found within the start budget).)";

void write_json(json const &j, std::string const &path)
{
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void add_solver_options(CLI::App *cmd, SolverParams &params)
{
  cmd->add_option("--seed", params.seed, "Random seed for Newton starts");
  cmd->add_option("--starts", params.starts_budget, "Start budget over all gauges (0 = 200 * Kostka)");
  cmd->add_option("--tol", params.newton_tol, "Relative residual accepted from Newton");
  cmd->add_option("--dedup", params.dedup_tol, "Plücker key distance below which classes coincide");
  cmd->add_option("--max-iter", params.max_iter, "Newton iterations per start");
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Real codimension-2 Schubert problems: Kostka counts, nets, and all-solutions solver"};
  app.footer(kConfigSchema);
  app.require_subcommand(1);

  std::string content_text;
  bool as_json = false;

  auto *kostka_cmd = app.add_subcommand("kostka", "Print the Kostka number of a 2 x (d-1) content");
  kostka_cmd->add_option("--content", content_text, "Multiplicities, e.g. 1,1,1,1")->required();
  kostka_cmd->add_flag("--json", as_json, "Emit JSON");

  auto *ssyt_cmd = app.add_subcommand("ssyt", "List the semistandard tableaux, one per line");
  ssyt_cmd->add_option("--content", content_text, "Multiplicities")->required();
  ssyt_cmd->add_flag("--json", as_json, "Emit JSON");

  auto *nets_cmd = app.add_subcommand("nets", "List admissible nets with their tableaux");
  nets_cmd->add_option("--content", content_text, "Multiplicities")->required();
  nets_cmd->add_flag("--json", as_json, "Emit JSON");

  int max_d = 6;
  auto *bij_cmd = app.add_subcommand("bijection-check", "Check net <-> tableau round trips for all contents");
  bij_cmd->add_option("--max-d", max_d, "Largest d to check")->check(CLI::Range(2, 9));

  std::string config_path;
  auto *sep_cmd = app.add_subcommand("check-separated", "Report whether the blocks are separated");
  sep_cmd->add_option("--config", config_path, "Config JSON file")->required();

  SolverParams params;
  std::string out_path;
  auto *solve_cmd = app.add_subcommand("solve", "Find all classes of rational functions for a config");
  solve_cmd->add_option("--config", config_path, "Config JSON file")->required();
  solve_cmd->add_option("--out", out_path, "Write the report here instead of stdout");
  add_solver_options(solve_cmd, params);

  int exp_d = 0;
  int trials = 20;
  std::string mode_text = "separated";
  double sweep_max = 1.5;
  auto *exp_cmd = app.add_subcommand("experiment", "Run seeded trials on random configs");
  exp_cmd->add_option("--d", exp_d, "Degree d (must match the content)")->required();
  exp_cmd->add_option("--content", content_text, "Multiplicities")->required();
  exp_cmd->add_option("--mode", mode_text, "separated | overlapping | sweep");
  exp_cmd->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  exp_cmd->add_option("--sweep-max", sweep_max, "Largest overlap amount in sweep mode");
  exp_cmd->add_option("--out", out_path, "Write the report here instead of stdout");
  add_solver_options(exp_cmd, params);

  auto *self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*kostka_cmd) {
      ContentVector const c = ContentVector::parse(content_text);
      BigInt const k = kostka(c);
      if (as_json) {
        json j = {{"content", c.entries()}, {"d", c.d()}, {"kostka", k.str()}};
        if (auto closed = kostka_closed_form(c)) j["closed_form"] = closed->str();
        std::cout << j.dump() << "\n";
      } else {
        std::cout << k << "\n";
      }
    } else if (*ssyt_cmd) {
      ContentVector const c = ContentVector::parse(content_text);
      auto const tableaux = enumerate_ssyt(c);
      if (as_json) {
        json arr = json::array();
        for (auto const &t : tableaux) arr.push_back({{"row1", t.row1}, {"row2", t.row2}});
        std::cout << arr.dump() << "\n";
      } else {
        for (auto const &t : tableaux) std::cout << t.to_string() << "\n";
      }
    } else if (*nets_cmd) {
      ContentVector const c = ContentVector::parse(content_text);
      BlockStructure const blocks(c);
      auto const nets = enumerate_nets(blocks);
      if (as_json) {
        json arr = json::array();
        for (auto const &n : nets) {
          Tableau const t = net_to_ssyt(n);
          arr.push_back({{"edges", n.edges()}, {"row1", t.row1}, {"row2", t.row2}});
        }
        std::cout << arr.dump() << "\n";
      } else {
        for (auto const &n : nets) std::cout << n.to_string() << " -> " << net_to_ssyt(n).to_string() << "\n";
      }
    } else if (*bij_cmd) {
      bool ok = true;
      for (int d = 2; d <= max_d; ++d) {
        std::size_t contents = 0, elements = 0, failures = 0;
        for (auto const &c : all_contents(d)) {
          ++contents;
          BlockStructure const blocks(c);
          auto const nets = enumerate_nets(blocks);
          auto const tableaux = enumerate_ssyt(c);
          if (BigInt(nets.size()) != kostka(c) || nets.size() != tableaux.size()) ++failures;
          for (auto const &n : nets) failures += ssyt_to_net(net_to_ssyt(n), blocks) == n ? 0 : 1;
          for (auto const &t : tableaux) failures += net_to_ssyt(ssyt_to_net(t, blocks)) == t ? 0 : 1;
          elements += nets.size();
        }
        std::cout << "d=" << d << " contents=" << contents << " nets=" << elements << " failures=" << failures
                  << "\n";
        ok = ok && failures == 0;
      }
      std::cout << (ok ? "bijection OK" : "bijection FAILED") << "\n";
      return ok ? 0 : 1;
    } else if (*sep_cmd) {
      ProblemConfig const config = load_config(config_path);
      std::cout << json{{"separated", is_separated(config)}, {"margin", config.separation_margin()}}.dump() << "\n";
    } else if (*solve_cmd) {
      ProblemConfig const config = load_config(config_path);
      SolutionSet const sol = solve_problem1(config, params);
      json report = solution_to_json(sol);
      report["config"] = config_to_json(config);
      report["separated"] = is_separated(config);
      report["provenance"] = {{"params", params_to_json(params)}, {"version", kVersion}};
      write_json(report, out_path);
      return sol.deficit ? 2 : 0;
    } else if (*exp_cmd) {
      ContentVector const c = ContentVector::parse(content_text);
      if (c.d() != exp_d) {
        throw ConstraintViolation("content " + c.to_string() + " belongs to d = " + std::to_string(c.d()) +
                                  ", not " + std::to_string(exp_d));
      }
      ExperimentSpec const spec{c, trials, params.seed, parse_mode(mode_text), params, sweep_max};
      write_json(run_experiment(spec).to_json(), out_path);
    } else if (*self_cmd) {
      auto const results = run_acceptance(std::cout);
      bool const ok = std::all_of(results.begin(), results.end(), [](auto const &r) { return r.pass; });
      return ok ? 0 : 1;
    }
  } catch (std::invalid_argument const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (std::exception const &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

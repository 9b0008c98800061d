#include "codim2/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "codim2/harness.hpp"
#include "codim2/nets.hpp"

namespace codim2 {

namespace {

struct Outcome
{
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, std::string const &what)
  {
    if (!condition && pass) {
      pass = false;
      detail.str("");
      detail << what;
    }
  }
};

BigInt catalan_count(int d)
{
  return binomial(2 * d - 2, d - 1) / d;
}

BigInt hook_count(int d, int a1)
{
  return BigInt(a1 + 1) * binomial(2 * d - 2 - a1, d - 1) / d;
}

void closed_form_counts(Outcome &o)
{
  BigInt const expected_catalan[] = {1, 2, 5, 14, 42, 132};
  for (int d = 2; d <= 7; ++d) {
    ContentVector const ones(std::vector<int>(2 * d - 2, 1));
    BigInt const k = kostka(ones);
    o.require(k == catalan_count(d), "Catalan mismatch at d=" + std::to_string(d));
    o.require(k == expected_catalan[d - 2], "Catalan value wrong at d=" + std::to_string(d));
    for (int a1 = 1; a1 <= d - 1; ++a1) {
      std::vector<int> entries(2 * d - 1 - a1, 1);
      entries[0] = a1;
      ContentVector const c(entries);
      o.require(kostka(c) == hook_count(d, a1), "(a1,1,...,1) mismatch at d=" + std::to_string(d) +
                                                    " a1=" + std::to_string(a1));
      o.require(static_cast<std::size_t>(kostka(c)) == enumerate_ssyt(c).size(),
                "enumeration disagrees at " + c.to_string());
    }
  }
  if (o.pass) o.detail << "d=2..7, K(1^{2d-2}) = 1,2,5,14,42,132 and all (a1,1,...,1) match";
}

void permutation_invariance(Outcome &o)
{
  std::mt19937_64 rng(20240601);
  int checked = 0;
  for (int d = 2; d <= 6; ++d) {
    for (auto const &c : all_contents(d)) {
      BigInt const base = kostka(c);
      std::vector<int> entries = c.entries();
      for (int s = 0; s < 10; ++s) {
        std::shuffle(entries.begin(), entries.end(), rng);
        o.require(kostka(ContentVector(entries)) == base, "permutation changed K at " + c.to_string());
        ++checked;
      }
    }
  }
  if (o.pass) o.detail << checked << " permuted contents, d<=6";
}

void net_bijection(Outcome &o)
{
  int contents = 0;
  long elements = 0;
  for (int d = 2; d <= 6; ++d) {
    for (auto const &c : all_contents(d)) {
      ++contents;
      BlockStructure const blocks(c);
      auto const nets = enumerate_nets(blocks);
      auto const tableaux = enumerate_ssyt(c);
      o.require(BigInt(nets.size()) == kostka(c), "net count != K at " + c.to_string());
      o.require(nets.size() == tableaux.size(), "net count != SSYT count at " + c.to_string());
      for (auto const &n : nets) {
        o.require(ssyt_to_net(net_to_ssyt(n), blocks) == n, "net round trip failed at " + c.to_string());
      }
      for (auto const &t : tableaux) {
        o.require(net_to_ssyt(ssyt_to_net(t, blocks)) == t, "tableau round trip failed at " + c.to_string());
      }
      elements += static_cast<long>(nets.size() + tableaux.size());
    }
  }
  if (o.pass) o.detail << contents << " contents, " << elements << " round trips";
}

void polynomial_case(Outcome &o)
{
  double worst_float = 0.0;
  for (int d = 3; d <= 6; ++d) {
    for (int t = 0; t < 100; ++t) {
      ProblemConfig const config = random_polynomial_config(d, trial_seed(7000 + d, t));
      o.require(is_separated(config), "generated config not separated");
      auto const exact = solve_polynomial<Rational>(config);
      for (auto const &b : config.blocks()) {
        o.require(block_residual(exact, b) == 0, "nonzero exact residual at d=" + std::to_string(d));
      }
      auto const floating = solve_polynomial<double>(config);
      for (auto const &b : config.blocks()) worst_float = std::max(worst_float, block_residual(floating, b));
      // p' changes sign across every gap between consecutive points of a block:
      // d-1 gaps give d-1 distinct real roots of a degree d-1 polynomial.
      Poly<Rational> const dp = derivative(exact.p());
      int gaps = 0;
      for (auto const &b : config.blocks()) {
        for (std::size_t i = 0; i + 1 < b.size(); ++i, ++gaps) {
          Rational const left = evaluate(dp, Rational(b[i].x));
          Rational const right = evaluate(dp, Rational(b[i + 1].x));
          o.require(left * right < 0, "no sign change of p' in a gap at d=" + std::to_string(d));
        }
      }
      o.require(gaps == d - 1 && dp(d - 1) != 0, "p' root count mismatch");
    }
  }
  o.require(worst_float < 1e-10, "floating residual too large");
  if (o.pass) o.detail << "400 configs, exact residual 0, max floating residual " << worst_float;
}

void separated_solutions(Outcome &o)
{
  struct Run
  {
    int d, configs;
    double limit;
  };
  std::ostringstream summary;
  for (Run const run : {Run{3, 20, 5.0}, Run{4, 5, 180.0}}) {
    ContentVector const content(std::vector<int>(2 * run.d - 2, 1));
    int const k = kostka(content).convert_to<int>();
    auto const t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int t = 0; t < run.configs; ++t) {
      std::uint64_t const seed = trial_seed(9100 + run.d, t);
      ProblemConfig const config = random_separated_config(run.d, content, seed);
      SolverParams params;
      params.seed = seed;
      SolutionSet const sol = solve_problem1(config, params);
      o.require(static_cast<int>(sol.found()) == k, "class count != K at d=" + std::to_string(run.d));
      o.require(static_cast<int>(sol.real_count()) == k, "non-real class on separated config");
      for (double r : sol.residuals) worst = std::max(worst, r);
    }
    double const elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(worst < 1e-8, "residual above 1e-8 at d=" + std::to_string(run.d));
    o.require(elapsed < run.limit, "time limit exceeded at d=" + std::to_string(run.d));
    summary << "d=" << run.d << ": " << run.configs << "x" << k << " real, " << elapsed << " s; ";

    // Full budget without early stop: the distinct count must stay within the Kostka bound.
    for (int t = 0; t < 2; ++t) {
      std::uint64_t const seed = trial_seed(9100 + run.d, t);
      ProblemConfig const config = random_separated_config(run.d, content, seed);
      SolverParams params;
      params.seed = seed + 1;
      params.stop_at_target = false;
      SolutionSet const sol = solve_problem1(config, params);
      o.require(static_cast<int>(sol.found()) <= k, "Kostka bound exceeded");
    }
  }
  if (o.pass) o.detail << summary.str() << "bound respected under full budget";
}

void critical_points(Outcome &o)
{
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  auto const distinct_points = [&](int n) {
    std::vector<double> xs;
    while (static_cast<int>(xs.size()) < n) {
      double const x = uni(rng);
      bool ok = true;
      for (double y : xs) ok = ok && std::abs(x - y) > 1e-3;
      if (ok) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    return xs;
  };
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    auto const xs = distinct_points(4);
    std::vector<CriticalPoint> pts;
    for (double x : xs) pts.push_back({x, 1});
    SolverParams params;
    params.seed = 500 + t;
    SolutionSet const sol = solve_critical_points(pts, 3, params);
    o.require(sol.found() == 2 && sol.real_count() == 2, "d=3 critical points: expected 2 real classes");
    o.require(sol.wronskian_consistent, "d=3 Wronskian not proportional");
    for (double w : sol.wronskian_deviation) worst = std::max(worst, w);
  }
  ContentVector const mixed({1, 1, 2, 2});
  int const k = kostka(mixed).convert_to<int>();
  o.require(k == 2, "K(1,1,2,2) != 2");
  for (int t = 0; t < 5; ++t) {
    auto const xs = distinct_points(4);
    std::vector<CriticalPoint> pts{{xs[0], 1}, {xs[1], 1}, {xs[2], 2}, {xs[3], 2}};
    SolverParams params;
    params.seed = 900 + t;
    SolutionSet const sol = solve_critical_points(pts, 4, params);
    o.require(static_cast<int>(sol.found()) == k && static_cast<int>(sol.real_count()) == k,
              "d=4 multiplicities (1,1,2,2): count or reality mismatch");
    o.require(sol.wronskian_consistent, "d=4 Wronskian not proportional");
    for (double w : sol.wronskian_deviation) worst = std::max(worst, w);
  }
  o.require(worst <= 1e-8, "Wronskian deviation above 1e-8");
  if (o.pass) o.detail << "20 d=3 and 5 d=4 (1,1,2,2) configs, max Wronskian deviation " << worst;
}

void separation_phenomenology(Outcome &o)
{
  ExperimentSpec spec{ContentVector({1, 1, 1, 1}), 100, 424242, ExperimentMode::overlapping, {}, 1.5};
  ExperimentReport const overlapping = run_experiment(spec);
  int with_pair = 0;
  for (auto const &t : overlapping.trials) {
    o.require(t.error.empty(), "overlapping trial failed: " + t.error);
    o.require(t.found <= 2 && t.real + t.non_real == t.found, "report conservation violated");
    o.require(t.conjugate_pairs, "non-real classes not in conjugate pairs");
    if (t.non_real >= 2 && t.real < 2) ++with_pair;
  }
  o.require(with_pair >= 1, "no overlapping trial produced a conjugate non-real pair");
  spec.mode = ExperimentMode::separated;
  ExperimentReport const separated = run_experiment(spec);
  o.require(separated.fraction_all_real == 1.0, "separated mode not all real");
  if (o.pass) {
    o.detail << with_pair << "/100 overlapping trials with a conjugate pair; separated fraction all-real "
             << separated.fraction_all_real;
  }
}

void cross_consistency(Outcome &o)
{
  ContentVector const content({1, 1, 1, 1});
  ProblemConfig const config = random_separated_config(3, content, 88);
  SolverParams params;
  params.seed = 88;
  SolutionSet const sol = solve_problem1(config, params);
  std::size_t const k = static_cast<std::size_t>(kostka(content));
  std::size_t const nets = enumerate_nets(BlockStructure(content)).size();
  std::size_t const tableaux = enumerate_ssyt(content).size();
  o.require(sol.found() == k && k == nets && nets == tableaux && k == 2, "counts disagree");
  if (o.pass) o.detail << "solver=" << sol.found() << " kostka=" << k << " nets=" << nets << " ssyt=" << tableaux;
}

} // namespace

std::vector<CriterionResult> run_acceptance(std::ostream &out)
{
  struct Criterion
  {
    int id;
    char const *name;
    std::function<void(Outcome &)> body;
  };
  std::vector<Criterion> const criteria = {
    {1, "closed-form Kostka counts", closed_form_counts},
    {2, "permutation invariance", permutation_invariance},
    {3, "net/tableau bijection", net_bijection},
    {4, "polynomial case (unique class, Rolle)", polynomial_case},
    {5, "separated configs: K classes, all real", separated_solutions},
    {6, "prescribed real critical points", critical_points},
    {7, "separation phenomenology", separation_phenomenology},
    {8, "cross-consistency of counts", cross_consistency},
  };
  double const limits[] = {0, 10.0, 1e9, 60.0, 1e9, 1e9, 1e9, 1e9, 1e9};

  std::vector<CriterionResult> results;
  for (auto const &c : criteria) {
    Outcome o;
    auto const t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (std::exception const &e) {
      o.pass = false;
      o.detail.str("");
      o.detail << "exception: " << e.what();
    }
    double const seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (seconds >= limits[c.id]) {
      o.pass = false;
      o.detail << " (exceeded " << limits[c.id] << " s)";
    }
    CriterionResult r{c.id, c.name, o.pass, o.detail.str(), seconds};
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " -- " << r.detail << " (" << seconds
        << " s)\n";
    out.flush();
    results.push_back(std::move(r));
  }
  return results;
}

} // namespace codim2

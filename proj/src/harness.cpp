#include "codim2/harness.hpp"

#include <algorithm>
#include <random>

#include "codim2/errors.hpp"

namespace codim2 {

std::uint64_t trial_seed(std::uint64_t seed, int trial)
{
  std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ProblemConfig random_separated_config(int d, ContentVector const &content, std::uint64_t seed)
{
  if (content.d() != d) {
    throw ConstraintViolation("content " + content.to_string() + " does not belong to d = " + std::to_string(d));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 0.8);
  std::vector<Block> blocks;
  for (std::size_t j = 0; j < content.size(); ++j) {
    std::vector<double> xs;
    while (static_cast<int>(xs.size()) < content[j] + 1) {
      double const x = static_cast<double>(j + 1) + unit(rng);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    Block block;
    for (double x : xs) block.push_back({x, 1});
    blocks.push_back(std::move(block));
  }
  return ProblemConfig(d, std::move(blocks));
}

ProblemConfig random_polynomial_config(int d, std::uint64_t seed)
{
  if (d < 2) throw InvalidConfig("d must be at least 2");
  std::mt19937_64 rng(seed);
  // Random composition of d-1.
  std::vector<int> parts;
  int left = d - 1;
  while (left > 0) {
    int const a = std::uniform_int_distribution<int>(1, left)(rng);
    parts.push_back(a);
    left -= a;
  }
  std::shuffle(parts.begin(), parts.end(), rng);
  int const q = static_cast<int>(parts.size());
  // Block j lives in [-1 + 2j/q, -1 + 2(j+1)/q) on the grid of 1/1024, leaving a gap.
  int const cells = 2048 / q;
  std::vector<Block> blocks;
  for (int j = 0; j < q; ++j) {
    int const lo = -1024 + j * cells;
    int const hi = lo + cells - 8;
    std::vector<int> ticks;
    while (static_cast<int>(ticks.size()) < parts[j] + 1) {
      int const t = std::uniform_int_distribution<int>(lo, hi)(rng);
      if (std::find(ticks.begin(), ticks.end(), t) == ticks.end()) ticks.push_back(t);
    }
    std::sort(ticks.begin(), ticks.end());
    Block block;
    for (int t : ticks) block.push_back({t / 1024.0, 1});
    blocks.push_back(std::move(block));
  }
  return ProblemConfig(d, std::move(blocks));
}

namespace {

struct Hull
{
  double lo, hi;
};

Hull hull(Block const &b)
{
  Hull h{b.front().x, b.front().x};
  for (auto const &pt : b) {
    h.lo = std::min(h.lo, pt.x);
    h.hi = std::max(h.hi, pt.x);
  }
  return h;
}

// Two blocks closing in on the same neighbor from both sides stop at different points.
constexpr double kDepth = 0.75;

} // namespace

ProblemConfig perturb_to_overlap(ProblemConfig const &config, double amount, std::uint64_t seed)
{
  std::size_t const q = config.block_count();
  if (amount <= 0.0 || q < 2) return config;

  // Work in left-to-right order of the hulls.
  std::vector<std::size_t> order(q);
  for (std::size_t i = 0; i < q; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return hull(config.block(a)).lo < hull(config.block(b)).lo; });

  std::size_t const parity = std::mt19937_64(seed)() & 1U;
  std::vector<Block> blocks = config.blocks();
  for (std::size_t r = parity; r < q; r += 2) {
    Hull const self = hull(config.block(order[r]));
    double best_gap = std::numeric_limits<double>::infinity();
    double shift = 0.0;
    if (r > 0) {
      Hull const left = hull(config.block(order[r - 1]));
      double const gap = self.lo - left.hi;
      double const cap = gap + kDepth * (left.hi - left.lo);
      best_gap = gap;
      shift = -std::min(amount, cap);
    }
    if (r + 1 < q) {
      Hull const right = hull(config.block(order[r + 1]));
      double const gap = right.lo - self.hi;
      double const cap = gap + kDepth * (right.hi - right.lo);
      if (gap < best_gap) shift = std::min(amount, cap);
    }
    for (auto &pt : blocks[order[r]]) pt.x += shift;
  }

  bool coincide = config.non_generic();
  for (std::size_t i = 0; i < q && !coincide; ++i) {
    for (std::size_t j = i + 1; j < q && !coincide; ++j) {
      for (auto const &a : blocks[i]) {
        for (auto const &b : blocks[j]) coincide = coincide || a.x == b.x;
      }
    }
  }
  return ProblemConfig(config.d(), std::move(blocks), coincide);
}

bool conjugate_pairs_ok(SolutionSet const &solutions, double tol)
{
  std::vector<bool> used(solutions.classes.size(), false);
  for (std::size_t i = 0; i < solutions.classes.size(); ++i) {
    if (solutions.reality_flags[i] || used[i]) continue;
    auto const conj_key = canonical_key(conjugate_class(solutions.classes[i]));
    bool matched = false;
    for (std::size_t j = 0; j < solutions.classes.size(); ++j) {
      if (j == i || used[j] || solutions.reality_flags[j]) continue;
      if (key_distance<Complex>(conj_key, canonical_key(solutions.classes[j])) <= tol) {
        used[i] = used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

ExperimentMode parse_mode(std::string const &text)
{
  if (text == "separated") return ExperimentMode::separated;
  if (text == "overlapping") return ExperimentMode::overlapping;
  if (text == "sweep") return ExperimentMode::sweep;
  throw InvalidConfig("unknown experiment mode '" + text + "'");
}

std::string to_string(ExperimentMode mode)
{
  switch (mode) {
  case ExperimentMode::separated: return "separated";
  case ExperimentMode::overlapping: return "overlapping";
  case ExperimentMode::sweep: return "sweep";
  }
  return "unknown";
}

ExperimentReport run_experiment(ExperimentSpec const &spec)
{
  if (spec.trials < 1) throw std::invalid_argument("trials must be at least 1");
  ExperimentReport report{spec, {}, 0.0, 0, kostka(spec.content).convert_to<int>()};
  int all_real = 0;
  report.min_real_count = report.kostka;
  for (int t = 0; t < spec.trials; ++t) {
    TrialRecord rec;
    rec.index = t;
    rec.seed = trial_seed(spec.seed, t);
    try {
      ProblemConfig config = random_separated_config(spec.d(), spec.content, rec.seed);
      if (spec.mode == ExperimentMode::overlapping) {
        std::mt19937_64 rng(rec.seed ^ 0x5bd1e995ULL);
        rec.amount = std::uniform_real_distribution<double>(0.5, 1.5)(rng);
        config = perturb_to_overlap(config, rec.amount, rec.seed);
      } else if (spec.mode == ExperimentMode::sweep) {
        config = random_separated_config(spec.d(), spec.content, spec.seed);
        rec.amount = spec.trials == 1 ? 0.0 : spec.sweep_max * t / (spec.trials - 1);
        config = perturb_to_overlap(config, rec.amount, spec.seed);
      }
      rec.digest = config_digest(config);
      rec.separated = is_separated(config);
      SolverParams params = spec.params;
      params.seed = rec.seed;
      SolutionSet const sol = solve_problem1(config, params);
      rec.found = static_cast<int>(sol.found());
      rec.real = static_cast<int>(sol.real_count());
      rec.non_real = rec.found - rec.real;
      for (double r : sol.residuals) rec.residual_max = std::max(rec.residual_max, r);
      rec.conjugate_pairs = conjugate_pairs_ok(sol, spec.params.dedup_tol);
      rec.deficit = sol.deficit;
      rec.solution = solution_to_json(sol);
      rec.solution["config"] = config_to_json(config);
    } catch (std::exception const &e) {
      rec.error = e.what();
    }
    if (rec.error.empty() && rec.found > 0 && rec.real == rec.found) ++all_real;
    report.min_real_count = std::min(report.min_real_count, rec.error.empty() ? rec.real : 0);
    report.trials.push_back(std::move(rec));
  }
  report.fraction_all_real = static_cast<double>(all_real) / spec.trials;
  return report;
}

json ExperimentReport::to_json() const
{
  json trials_json = json::array();
  for (auto const &t : trials) {
    json jt = {{"index", t.index},
               {"seed", t.seed},
               {"config_digest", t.digest},
               {"overlap_amount", t.amount},
               {"separated", t.separated},
               {"found", t.found},
               {"real", t.real},
               {"non_real", t.non_real},
               {"residual_max", t.residual_max},
               {"conjugate_pairs_ok", t.conjugate_pairs},
               {"deficit", t.deficit}};
    if (!t.error.empty()) jt["error"] = t.error;
    if (!t.solution.is_null()) jt["solution"] = t.solution;
    trials_json.push_back(std::move(jt));
  }
  return {{"spec",
           {{"d", spec.d()},
            {"content", spec.content.entries()},
            {"trials", spec.trials},
            {"mode", codim2::to_string(spec.mode)},
            {"sweep_max", spec.sweep_max}}},
          {"provenance", {{"seed", spec.seed}, {"params", params_to_json(spec.params)}, {"version", kVersion}}},
          {"kostka", kostka},
          {"aggregate", {{"fraction_all_real", fraction_all_real}, {"min_real_count", min_real_count}}},
          {"trials", std::move(trials_json)}};
}

} // namespace codim2

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codim2/config_io.hpp"
#include "codim2/solver.hpp"

namespace codim2 {

inline constexpr char const *kVersion = "codim2 1.0.0";

// Block j (1-based) gets a_j + 1 points drawn uniformly from [j, j + 0.8], sorted.
ProblemConfig random_separated_config(int d, ContentVector const &content, std::uint64_t seed);

// Random content with sum a_j = d - 1 and blocks of distinct dyadic points (multiples
// of 1/1024) inside disjoint subintervals of [-1, 1]. Input for solve_polynomial.
ProblemConfig random_polynomial_config(int d, std::uint64_t seed);

// Translates every other block (parity chosen by the seed) toward its nearest neighbor
// by `amount`. A block's travel is capped once its leading end is three quarters of the
// way through the neighbor, so blocks interleave but never pass each other.
ProblemConfig perturb_to_overlap(ProblemConfig const &config, double amount, std::uint64_t seed);

// Non-real classes are matched with their complex conjugates within tol.
bool conjugate_pairs_ok(SolutionSet const &solutions, double tol);

enum class ExperimentMode { separated, overlapping, sweep };

ExperimentMode parse_mode(std::string const &text);
std::string to_string(ExperimentMode mode);

struct ExperimentSpec
{
  ContentVector content;
  int trials = 1;
  std::uint64_t seed = 1;
  ExperimentMode mode = ExperimentMode::separated;
  SolverParams params;
  double sweep_max = 1.5;

  int d() const { return content.d(); }
};

struct TrialRecord
{
  int index = 0;
  std::uint64_t seed = 0;
  std::string digest;
  double amount = 0.0;
  bool separated = false;
  int found = 0;
  int real = 0;
  int non_real = 0;
  double residual_max = 0.0;
  bool conjugate_pairs = true;
  bool deficit = false;
  std::string error;
  json solution;
};

struct ExperimentReport
{
  ExperimentSpec spec;
  std::vector<TrialRecord> trials;
  double fraction_all_real = 0.0;
  int min_real_count = 0;
  int kostka = 0;

  json to_json() const;
};

std::uint64_t trial_seed(std::uint64_t seed, int trial);

ExperimentReport run_experiment(ExperimentSpec const &spec);

} // namespace codim2

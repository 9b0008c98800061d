#pragma once

#include <string>

#include <json.hpp>

#include "codim2/solver.hpp"

namespace codim2 {

using json = nlohmann::json;

// {"d": 3, "blocks": [[{"x": 0.0, "m": 1}, ...], ...], "non_generic": false}
ProblemConfig config_from_json(json const &j);
json config_to_json(ProblemConfig const &config);
ProblemConfig load_config(std::string const &path);

// Coefficients low degree first, each as [re, im].
json poly_to_json(Poly<Complex> const &p);
json poly_to_json(Poly<double> const &p);
Poly<Complex> poly_from_json(json const &j);

json class_to_json(RationalClass<Complex> const &f);
json class_to_json(RationalClass<double> const &f);
RationalClass<Complex> class_from_json(json const &j, int d);

json params_to_json(SolverParams const &params);
json solution_to_json(SolutionSet const &solutions);

// FNV-1a over the compact JSON dump, as 16 hex digits.
std::string config_digest(ProblemConfig const &config);

} // namespace codim2

#include "codim2/config_io.hpp"

#include <cstdio>
#include <fstream>

#include "codim2/errors.hpp"

namespace codim2 {

ProblemConfig config_from_json(json const &j)
{
  try {
    int const d = j.at("d").get<int>();
    std::vector<Block> blocks;
    for (auto const &jb : j.at("blocks")) {
      Block block;
      for (auto const &jp : jb) {
        block.push_back({jp.at("x").get<double>(), jp.value("m", 1)});
      }
      blocks.push_back(std::move(block));
    }
    return ProblemConfig(d, std::move(blocks), j.value("non_generic", false));
  } catch (json::exception const &e) {
    throw InvalidConfig(std::string("malformed config JSON: ") + e.what());
  }
}

json config_to_json(ProblemConfig const &config)
{
  json blocks = json::array();
  for (auto const &b : config.blocks()) {
    json jb = json::array();
    for (auto const &pt : b) jb.push_back({{"x", pt.x}, {"m", pt.multiplicity}});
    blocks.push_back(std::move(jb));
  }
  json out = {{"d", config.d()}, {"blocks", std::move(blocks)}};
  if (config.non_generic()) out["non_generic"] = true;
  return out;
}

ProblemConfig load_config(std::string const &path)
{
  std::ifstream in(path);
  if (!in) throw InvalidConfig("cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (json::exception const &e) {
    throw InvalidConfig("cannot parse " + path + ": " + e.what());
  }
  return config_from_json(j);
}

json poly_to_json(Poly<Complex> const &p)
{
  json out = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) out.push_back({p(i).real(), p(i).imag()});
  return out;
}

json poly_to_json(Poly<double> const &p)
{
  json out = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) out.push_back({p(i), 0.0});
  return out;
}

Poly<Complex> poly_from_json(json const &j)
{
  Poly<Complex> p(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    p(static_cast<Eigen::Index>(i)) = Complex(j[i].at(0).get<double>(), j[i].at(1).get<double>());
  }
  return p;
}

json class_to_json(RationalClass<Complex> const &f)
{
  return {{"p", poly_to_json(f.p())}, {"q", poly_to_json(f.q())}};
}

json class_to_json(RationalClass<double> const &f)
{
  return {{"p", poly_to_json(f.p())}, {"q", poly_to_json(f.q())}};
}

RationalClass<Complex> class_from_json(json const &j, int d)
{
  return RationalClass<Complex>(poly_from_json(j.at("p")), poly_from_json(j.at("q")), d);
}

json params_to_json(SolverParams const &params)
{
  return {{"seed", params.seed},
          {"starts_budget", params.starts_budget},
          {"newton_tol", params.newton_tol},
          {"dedup_tol", params.dedup_tol},
          {"max_iter", params.max_iter},
          {"stop_at_target", params.stop_at_target}};
}

json solution_to_json(SolutionSet const &solutions)
{
  json classes = json::array();
  for (std::size_t i = 0; i < solutions.classes.size(); ++i) {
    json c = class_to_json(solutions.classes[i]);
    c["residual"] = solutions.residuals[i];
    c["real"] = static_cast<bool>(solutions.reality_flags[i]);
    if (solutions.real_representatives[i]) {
      c["real_representative"] = class_to_json(*solutions.real_representatives[i]);
    }
    if (i < solutions.wronskian_deviation.size()) {
      c["wronskian_deviation"] = solutions.wronskian_deviation[i];
    }
    classes.push_back(std::move(c));
  }
  json gauges = json::array();
  for (auto const &[a, b] : solutions.gauges_tried) gauges.push_back({a, b});
  return {{"target_count", solutions.target_count},
          {"found_count", solutions.found()},
          {"real_count", solutions.real_count()},
          {"deficit", solutions.deficit},
          {"starts_used", solutions.starts_used},
          {"starts_budget", solutions.starts_budget},
          {"gauges_tried", std::move(gauges)},
          {"classes", std::move(classes)}};
}

std::string config_digest(ProblemConfig const &config)
{
  std::string const text = config_to_json(config).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace codim2

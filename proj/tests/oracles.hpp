#pragma once

// Brute-force reference implementations, independent of the library's algorithms.

#include <algorithm>
#include <utility>
#include <vector>

#include "codim2/combinatorics.hpp"
#include "codim2/nets.hpp"

namespace oracle {

// Every filling of the 2 x n diagram by labels 1..q, kept when semistandard with the content.
inline std::vector<codim2::Tableau> all_fillings(codim2::ContentVector const &content)
{
  int const n = content.d() - 1;
  int const q = static_cast<int>(content.size());
  std::vector<int> cells(2 * n, 1);
  std::vector<codim2::Tableau> out;
  while (true) {
    codim2::Tableau t{{cells.begin(), cells.begin() + n}, {cells.begin() + n, cells.end()}};
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (i && (t.row1[i] < t.row1[i - 1] || t.row2[i] < t.row2[i - 1])) ok = false;
      if (t.row1[i] >= t.row2[i]) ok = false;
    }
    for (int k = 1; k <= q && ok; ++k) {
      ok = std::count(cells.begin(), cells.end(), k) == content[k - 1];
    }
    if (ok) out.push_back(t);
    int pos = 0;
    while (pos < 2 * n && cells[pos] == q) cells[pos++] = 1;
    if (pos == 2 * n) break;
    ++cells[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void all_matchings(std::vector<int> free, std::vector<codim2::Edge> &current,
                          std::vector<std::vector<codim2::Edge>> &out)
{
  if (free.empty()) {
    out.push_back(current);
    return;
  }
  int const a = free.front();
  for (std::size_t i = 1; i < free.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < free.size(); ++k) {
      if (k != i) rest.push_back(free[k]);
    }
    current.emplace_back(a, free[i]);
    all_matchings(rest, current, out);
    current.pop_back();
  }
}

// Every perfect matching of 1..2d-2, kept when noncrossing and free of intra-block edges.
inline std::vector<std::vector<codim2::Edge>> admissible_matchings(codim2::BlockStructure const &blocks)
{
  std::vector<int> vertices;
  for (int v = 1; v <= blocks.vertex_count(); ++v) vertices.push_back(v);
  std::vector<std::vector<codim2::Edge>> all, out;
  std::vector<codim2::Edge> current;
  all_matchings(vertices, current, all);
  for (auto &m : all) {
    bool ok = true;
    for (std::size_t i = 0; i < m.size() && ok; ++i) {
      if (blocks.block_of(m[i].first) == blocks.block_of(m[i].second)) ok = false;
      for (std::size_t j = i + 1; j < m.size() && ok; ++j) {
        auto [a, b] = m[i];
        auto [c, d] = m[j];
        if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) ok = false;
      }
    }
    if (ok) {
      std::sort(m.begin(), m.end());
      out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Cramer's rule for a 2x2 system.
inline std::pair<double, double> solve2(double a, double b, double c, double d, double e, double f)
{
  double const det = a * d - b * c;
  return {(e * d - b * f) / det, (a * f - e * c) / det};
}

} // namespace oracle

#include "codim2/nets.hpp"

#include <algorithm>
#include <cassert>

#include "codim2/errors.hpp"

namespace codim2 {

BlockStructure::BlockStructure(ContentVector content)
  : content_(std::move(content))
{
  block_of_.push_back(0);
  first_.push_back(0);
  for (std::size_t j = 0; j < content_.size(); ++j) {
    first_.push_back(static_cast<int>(block_of_.size()));
    for (int k = 0; k < content_[j]; ++k) {
      block_of_.push_back(static_cast<int>(j + 1));
    }
  }
}

bool edges_cross(Edge const &a, Edge const &b)
{
  auto [i, k] = a;
  auto [j, l] = b;
  return (i < j && j < k && k < l) || (j < i && i < l && l < k);
}

Net::Net(BlockStructure blocks, std::vector<Edge> edges)
  : blocks_(std::move(blocks))
  , edges_(std::move(edges))
{
  int const n = blocks_.vertex_count();
  for (auto &e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  partner_.assign(n + 1, 0);
  for (auto const &[a, b] : edges_) {
    if (a < 1 || b > n || a == b) {
      throw MalformedNet("edge (" + std::to_string(a) + "," + std::to_string(b) + ") is out of range");
    }
    if (partner_[a] || partner_[b]) {
      throw MalformedNet("vertex used by two edges in (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (blocks_.block_of(a) == blocks_.block_of(b)) {
      throw MalformedNet("edge (" + std::to_string(a) + "," + std::to_string(b) + ") stays inside block " +
                         std::to_string(blocks_.block_of(a)));
    }
    partner_[a] = b;
    partner_[b] = a;
  }
  for (int v = 1; v <= n; ++v) {
    if (!partner_[v]) throw MalformedNet("vertex " + std::to_string(v) + " is unmatched");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      if (edges_cross(edges_[i], edges_[j])) {
        throw MalformedNet("edges cross: " + std::to_string(edges_[i].first) + "-" +
                           std::to_string(edges_[i].second) + " and " + std::to_string(edges_[j].first) + "-" +
                           std::to_string(edges_[j].second));
      }
    }
  }
}

std::string Net::to_string() const
{
  std::string out = "{";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out += (i ? "," : "") + ("(" + std::to_string(edges_[i].first) + "," + std::to_string(edges_[i].second) + ")");
  }
  return out + "}";
}

namespace {

// Noncrossing matchings of the vertex interval [lo, hi]: lo pairs with some j,
// splitting the rest into (lo, j) and (j, hi].
void match_interval(BlockStructure const &blocks, int lo, int hi, std::vector<std::vector<Edge>> &out)
{
  if (lo > hi) {
    out.emplace_back();
    return;
  }
  for (int j = lo + 1; j <= hi; j += 2) {
    if (blocks.block_of(lo) == blocks.block_of(j)) continue;
    std::vector<std::vector<Edge>> inner, outer;
    match_interval(blocks, lo + 1, j - 1, inner);
    if (inner.empty()) continue;
    match_interval(blocks, j + 1, hi, outer);
    for (auto const &a : inner) {
      for (auto const &b : outer) {
        std::vector<Edge> m{{lo, j}};
        m.insert(m.end(), a.begin(), a.end());
        m.insert(m.end(), b.begin(), b.end());
        out.push_back(std::move(m));
      }
    }
  }
}

} // namespace

std::vector<Net> enumerate_nets(BlockStructure const &blocks)
{
  std::vector<std::vector<Edge>> matchings;
  match_interval(blocks, 1, blocks.vertex_count(), matchings);
  for (auto &m : matchings) {
    std::sort(m.begin(), m.end());
  }
  std::sort(matchings.begin(), matchings.end());
  std::vector<Net> nets;
  nets.reserve(matchings.size());
  for (auto &m : matchings) {
    nets.emplace_back(blocks, std::move(m));
  }
  return nets;
}

Tableau net_to_ssyt(Net const &net)
{
  Tableau t;
  for (int v = 1; v <= net.blocks().vertex_count(); ++v) {
    int const j = net.blocks().block_of(v);
    (net.partner(v) > v ? t.row1 : t.row2).push_back(j);
  }
  std::string const why = tableau_violation(t, net.blocks().content());
  if (!why.empty()) {
    throw MalformedNet("net does not produce a tableau: " + why);
  }
  return t;
}

Net ssyt_to_net(Tableau const &tab, BlockStructure const &blocks)
{
  std::string const why = tableau_violation(tab, blocks.content());
  if (!why.empty()) {
    throw MalformedTableau(why);
  }
  int const q = blocks.block_count();
  // Free vertices of block j are the run [lo[j], hi[j]].
  std::vector<int> lo(q + 1), hi(q + 1);
  for (int j = 1; j <= q; ++j) {
    lo[j] = blocks.first_vertex(j);
    hi[j] = blocks.last_vertex(j);
  }
  std::vector<int> row1 = tab.row1;
  std::vector<int> row2 = tab.row2;
  std::vector<Edge> edges;
  while (!row2.empty()) {
    int const k = row2.front();
    auto it = std::find_if(row1.rbegin(), row1.rend(), [k](int v) { return v < k; });
    if (it == row1.rend()) {
      throw MalformedTableau("no row-1 entry below " + std::to_string(k));
    }
    int const m = *it;
    assert(lo[k] <= hi[k] && lo[m] <= hi[m]);
    Edge const e{hi[m], lo[k]};
    // The new edge may not enclose a free vertex, so it cannot cross earlier edges.
    for (auto const &old : edges) {
      assert(!edges_cross(old, e));
      (void)old;
    }
    edges.push_back(e);
    --hi[m];
    ++lo[k];
    row2.erase(row2.begin());
    row1.erase(std::next(it).base());
  }
  return Net(blocks, std::move(edges));
}

} // namespace codim2

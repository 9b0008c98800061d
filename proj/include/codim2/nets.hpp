#pragma once

#include <string>
#include <utility>
#include <vector>

#include "codim2/combinatorics.hpp"

namespace codim2 {

// Vertices 1..2d-2 on the real line, grouped left to right into consecutive
// runs of sizes a_1, ..., a_q (the intervals I_j).
class BlockStructure
{
public:
  explicit BlockStructure(ContentVector content);

  ContentVector const &content() const { return content_; }
  int vertex_count() const { return static_cast<int>(block_of_.size()) - 1; }
  int block_count() const { return static_cast<int>(content_.size()); }
  int block_of(int vertex) const { return block_of_.at(vertex); }
  int first_vertex(int block) const { return first_.at(block); }
  int last_vertex(int block) const { return first_.at(block) + content_[block - 1] - 1; }

  friend bool operator==(BlockStructure const &a, BlockStructure const &b) { return a.content_ == b.content_; }

private:
  ContentVector content_;
  std::vector<int> block_of_; // index 0 unused
  std::vector<int> first_;    // index 0 unused
};

using Edge = std::pair<int, int>;

// Noncrossing perfect matching of the vertices with no edge inside a block.
class Net
{
public:
  // Validates the matching; throws MalformedNet on any violation.
  Net(BlockStructure blocks, std::vector<Edge> edges);

  BlockStructure const &blocks() const { return blocks_; }
  // Each edge (i, j) has i < j; the list is sorted.
  std::vector<Edge> const &edges() const { return edges_; }
  int partner(int vertex) const { return partner_.at(vertex); }

  std::string to_string() const;

  friend bool operator==(Net const &a, Net const &b) { return a.blocks_ == b.blocks_ && a.edges_ == b.edges_; }

private:
  BlockStructure blocks_;
  std::vector<Edge> edges_;
  std::vector<int> partner_;
};

bool edges_cross(Edge const &a, Edge const &b);

std::vector<Net> enumerate_nets(BlockStructure const &blocks);

// Left-to-right scan: a vertex of block j writes j into row 1 when its edge goes
// right and into row 2 when it goes left.
Tableau net_to_ssyt(Net const &net);

// Repeatedly join the leftmost free vertex of block k (k = first entry of row 2)
// to the rightmost free vertex of block m (m = rightmost row-1 entry below k).
Net ssyt_to_net(Tableau const &tab, BlockStructure const &blocks);

} // namespace codim2

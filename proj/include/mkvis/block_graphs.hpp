#pragma once

#include <optional>
#include <vector>

#include "mkvis/graph.hpp"
#include "mkvis/solvers.hpp"

namespace mkvis {

// Tree node ids: [0, |A|) are articulation nodes in increasing vertex order,
// [|A|, |A| + |B|) are block nodes in lexicographic order of their vertex
// lists.
using TreeNode = int;
using NodeSet = std::vector<TreeNode>;  // sorted, duplicate-free

struct BlockCutTree {
  std::vector<Vertex> articulation;         // A
  std::vector<std::vector<Vertex>> blocks;  // V(B_b), each sorted
  std::vector<std::pair<TreeNode, TreeNode>> tree_edges;  // (articulation node, block node)
  std::vector<TreeNode> projection;         // vertex -> node

  int node_count() const noexcept { return static_cast<int>(articulation.size() + blocks.size()); }
  bool is_articulation_node(TreeNode t) const noexcept { return t < static_cast<int>(articulation.size()); }
  TreeNode block_node(int b) const noexcept { return static_cast<int>(articulation.size()) + b; }
  // Block index of a block node.
  int block_index(TreeNode t) const noexcept { return t - static_cast<int>(articulation.size()); }
  // Vertex of an articulation node.
  Vertex articulation_vertex(TreeNode t) const noexcept { return articulation[t]; }

  const std::vector<TreeNode>& node_neighbors(TreeNode t) const { return adjacency_[t]; }

  // Unique tree path from a to b, both ends included.
  std::vector<TreeNode> path(TreeNode a, TreeNode b) const;

  // Fills adjacency, parent and depth from tree_edges; called by
  // block_decomposition.
  void index();

 private:
  std::vector<std::vector<TreeNode>> adjacency_;
  std::vector<TreeNode> parent_;
  std::vector<int> depth_;
};

// Hopcroft-Tarjan lowpoint decomposition. Throws Disconnected.
BlockCutTree block_decomposition(const Graph& g);

bool is_block_graph(const Graph& g);

struct AdmissibleViolation {
  TreeNode alpha = 0;
  TreeNode beta = 0;
  int count = 0;  // selected articulation nodes strictly inside the path

  friend bool operator==(const AdmissibleViolation&, const AdmissibleViolation&) = default;
};

struct AdmissibleWitness {
  NodeSet z;
  int k = 0;
  std::optional<AdmissibleViolation> violating_pair;

  bool admissible() const noexcept { return !violating_pair; }
};

// Throws InvalidInput for node ids outside the tree.
AdmissibleWitness is_k_admissible(const BlockCutTree& t, NodeSet z, int k);

// X_Z: the non-articulation vertices of every selected block plus the
// selected articulation vertices.
VertexSet expand_admissible(const BlockCutTree& t, NodeSet z);

// Z: selected articulation vertices plus every block holding a selected
// non-articulation vertex.
NodeSet contract_set(const BlockCutTree& t, const VertexSet& x);

// mu_k of a block graph as the largest |X_Z| over k-admissible Z, by
// branch-and-bound over tree nodes. Throws InvalidInput when g is not a
// block graph and LimitExceeded above limits.block_max_nodes useful nodes.
struct BlockSolveResult {
  SolveResult result;
  NodeSet z;
};
BlockSolveResult mu_k_block(const Graph& g, int k, const SolveLimits& limits = {});

}  // namespace mkvis

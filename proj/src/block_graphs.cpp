#include "mkvis/block_graphs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mkvis/error.hpp"
#include "mkvis/kernel.hpp"

namespace mkvis {

// ---------------------------------------------------------------------------
// Tree indexing

void BlockCutTree::index() {
  const int count = node_count();
  adjacency_.assign(static_cast<std::size_t>(count), {});
  for (auto [a, b] : tree_edges) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  parent_.assign(static_cast<std::size_t>(count), -1);
  depth_.assign(static_cast<std::size_t>(count), -1);
  if (count == 0) return;
  std::vector<TreeNode> queue{0};
  depth_[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    TreeNode u = queue[head];
    for (TreeNode w : adjacency_[u]) {
      if (depth_[w] < 0) {
        depth_[w] = depth_[u] + 1;
        parent_[w] = u;
        queue.push_back(w);
      }
    }
  }
}

std::vector<TreeNode> BlockCutTree::path(TreeNode a, TreeNode b) const {
  std::vector<TreeNode> front;
  std::vector<TreeNode> back;
  while (depth_[a] > depth_[b]) {
    front.push_back(a);
    a = parent_[a];
  }
  while (depth_[b] > depth_[a]) {
    back.push_back(b);
    b = parent_[b];
  }
  while (a != b) {
    front.push_back(a);
    back.push_back(b);
    a = parent_[a];
    b = parent_[b];
  }
  front.push_back(a);
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

// ---------------------------------------------------------------------------
// Decomposition

BlockCutTree block_decomposition(const Graph& g) {
  require_connected(g, "block_decomposition");
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Vertex>> blocks;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  int time = 0;
  int root_children = 0;
  std::vector<Frame> stack{{0, -1, 0}};
  disc[0] = low[0] = time++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nb = g.neighbors(f.v);
    if (f.next < nb.size()) {
      const Vertex w = nb[f.next++];
      if (disc[w] < 0) {
        edge_stack.emplace_back(f.v, w);
        disc[w] = low[w] = time++;
        if (f.v == 0) ++root_children;
        stack.push_back({w, f.v, 0});
      } else if (w != f.parent && disc[w] < disc[f.v]) {
        edge_stack.emplace_back(f.v, w);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    const Vertex w = f.v;
    const Vertex v = f.parent;
    stack.pop_back();
    if (v < 0) break;
    low[v] = std::min(low[v], low[w]);
    if (low[w] >= disc[v]) {
      if (v != 0) is_cut[v] = 1;
      std::vector<Vertex> block;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e.first);
        block.push_back(e.second);
        if (e == Edge{v, w}) break;
      }
      std::sort(block.begin(), block.end());
      block.erase(std::unique(block.begin(), block.end()), block.end());
      blocks.push_back(std::move(block));
    }
  }
  if (root_children > 1) is_cut[0] = 1;
  if (n == 1) blocks.push_back({0});

  BlockCutTree t;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) t.articulation.push_back(v);
  }
  std::sort(blocks.begin(), blocks.end());
  t.blocks = std::move(blocks);
  std::vector<TreeNode> art_node(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < t.articulation.size(); ++i) art_node[t.articulation[i]] = static_cast<TreeNode>(i);
  t.projection.assign(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) t.projection[v] = art_node[v];
  }
  for (std::size_t b = 0; b < t.blocks.size(); ++b) {
    const TreeNode node = t.block_node(static_cast<int>(b));
    for (Vertex v : t.blocks[b]) {
      if (is_cut[v]) {
        t.tree_edges.emplace_back(art_node[v], node);
      } else {
        t.projection[v] = node;
      }
    }
  }
  std::sort(t.tree_edges.begin(), t.tree_edges.end());
  t.index();
  return t;
}

bool is_block_graph(const Graph& g) {
  auto t = block_decomposition(g);
  for (const auto& block : t.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        if (!g.adjacent(block[i], block[j])) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Admissibility

namespace {

NodeSet normalize(const BlockCutTree& t, NodeSet z) {
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  if (!z.empty() && (z.front() < 0 || z.back() >= t.node_count())) {
    throw InvalidInput("tree node id outside [0," + std::to_string(t.node_count()) + ")");
  }
  return z;
}

}  // namespace

AdmissibleWitness is_k_admissible(const BlockCutTree& t, NodeSet z, int k) {
  if (k < 0) throw InvalidInput("tolerance k must be nonnegative");
  AdmissibleWitness w;
  w.z = normalize(t, std::move(z));
  w.k = k;
  std::vector<char> selected(static_cast<std::size_t>(t.node_count()), 0);
  for (TreeNode a : w.z) selected[a] = 1;
  for (std::size_t i = 0; i < w.z.size(); ++i) {
    for (std::size_t j = i + 1; j < w.z.size(); ++j) {
      auto p = t.path(w.z[i], w.z[j]);
      int count = 0;
      for (std::size_t q = 1; q + 1 < p.size(); ++q) {
        if (selected[p[q]] && t.is_articulation_node(p[q])) ++count;
      }
      if (count > k) {
        w.violating_pair = AdmissibleViolation{w.z[i], w.z[j], count};
        return w;
      }
    }
  }
  return w;
}

VertexSet expand_admissible(const BlockCutTree& t, NodeSet z) {
  z = normalize(t, std::move(z));
  std::vector<char> is_art(t.projection.size(), 0);
  for (Vertex a : t.articulation) is_art[a] = 1;
  std::vector<Vertex> out;
  for (TreeNode node : z) {
    if (t.is_articulation_node(node)) {
      out.push_back(t.articulation_vertex(node));
    } else {
      for (Vertex v : t.blocks[t.block_index(node)]) {
        if (!is_art[v]) out.push_back(v);
      }
    }
  }
  return VertexSet(std::move(out));
}

NodeSet contract_set(const BlockCutTree& t, const VertexSet& x) {
  if (!x.empty() && x.members().back() >= static_cast<Vertex>(t.projection.size())) {
    throw InvalidInput("vertex outside the decomposed graph");
  }
  NodeSet z;
  for (Vertex v : x) z.push_back(t.projection[v]);
  return normalize(t, std::move(z));
}

// ---------------------------------------------------------------------------
// mu_k on block graphs

namespace {

class AdmissibleSearch {
 public:
  AdmissibleSearch(const BlockCutTree& t, int k, std::vector<TreeNode> nodes, std::vector<int> weight)
      : t_(t), k_(k), nodes_(std::move(nodes)), weight_(std::move(weight)) {
    const std::size_t count = nodes_.size();
    // Interior articulation nodes of every useful pair, as positions into nodes_.
    std::vector<int> position(static_cast<std::size_t>(t.node_count()), -1);
    for (std::size_t i = 0; i < count; ++i) position[nodes_[i]] = static_cast<int>(i);
    interior_.assign(count * count, {});
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        auto p = t.path(nodes_[i], nodes_[j]);
        std::vector<int> inside;
        for (std::size_t q = 1; q + 1 < p.size(); ++q) {
          if (t.is_articulation_node(p[q]) && position[p[q]] >= 0) inside.push_back(position[p[q]]);
        }
        interior_[i * count + j] = inside;
        interior_[j * count + i] = std::move(inside);
      }
    }
    selected_.assign(count, 0);
  }

  void run() {
    std::vector<int> all(nodes_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    search(all, 0);
  }

  NodeSet best_z() const {
    NodeSet z;
    for (int i : best_) z.push_back(nodes_[i]);
    std::sort(z.begin(), z.end());
    return z;
  }
  int best_value() const noexcept { return best_value_; }
  std::uint64_t nodes_explored() const noexcept { return explored_; }

 private:
  bool admissible_with(int c) {
    current_.push_back(c);
    selected_[c] = 1;
    bool ok = true;
    const std::size_t count = nodes_.size();
    for (std::size_t i = 0; ok && i < current_.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < current_.size(); ++j) {
        int inside = 0;
        for (int q : interior_[current_[i] * count + current_[j]]) inside += selected_[q];
        ok = inside <= k_;
      }
    }
    selected_[c] = 0;
    current_.pop_back();
    return ok;
  }

  void search(const std::vector<int>& cands, int value) {
    ++explored_;
    if (value > best_value_) {
      best_value_ = value;
      best_ = current_;
    }
    int remaining = 0;
    for (int c : cands) remaining += weight_[c];
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (value + remaining <= best_value_) return;
      const int v = cands[i];
      remaining -= weight_[v];
      current_.push_back(v);
      selected_[v] = 1;
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        if (admissible_with(cands[j])) next.push_back(cands[j]);
      }
      search(next, value + weight_[v]);
      selected_[v] = 0;
      current_.pop_back();
    }
  }

  const BlockCutTree& t_;
  int k_;
  std::vector<TreeNode> nodes_;
  std::vector<int> weight_;
  std::vector<std::vector<int>> interior_;
  std::vector<char> selected_;
  std::vector<int> current_;
  std::vector<int> best_;
  int best_value_ = 0;
  std::uint64_t explored_ = 0;
};

}  // namespace

BlockSolveResult mu_k_block(const Graph& g, int k, const SolveLimits& limits) {
  if (k < 0) throw InvalidInput("tolerance k must be nonnegative");
  auto t = block_decomposition(g);
  for (const auto& block : t.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        if (!g.adjacent(block[i], block[j])) throw InvalidInput("mu_k_block requires a block graph");
      }
    }
  }

  // Block nodes whose vertices are all articulation vertices add nothing to
  // X_Z and only add constraints, so they are left out.
  std::vector<TreeNode> nodes;
  std::vector<int> weight;
  for (TreeNode a = 0; a < static_cast<int>(t.articulation.size()); ++a) {
    nodes.push_back(a);
    weight.push_back(1);
  }
  for (int b = 0; b < static_cast<int>(t.blocks.size()); ++b) {
    int own = 0;
    for (Vertex v : t.blocks[b]) own += t.projection[v] == t.block_node(b) ? 1 : 0;
    if (own > 0) {
      nodes.push_back(t.block_node(b));
      weight.push_back(own);
    }
  }
  if (static_cast<int>(nodes.size()) > limits.block_max_nodes) {
    throw LimitExceeded("mu_k_block: " + std::to_string(nodes.size()) + " useful tree nodes exceed the limit " +
                        std::to_string(limits.block_max_nodes));
  }
  // Heaviest first.
  std::vector<std::size_t> perm(nodes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return weight[a] > weight[b]; });
  std::vector<TreeNode> sorted_nodes;
  std::vector<int> sorted_weight;
  for (std::size_t i : perm) {
    sorted_nodes.push_back(nodes[i]);
    sorted_weight.push_back(weight[i]);
  }

  AdmissibleSearch search(t, k, std::move(sorted_nodes), std::move(sorted_weight));
  search.run();

  BlockSolveResult out;
  out.z = search.best_z();
  out.result.witness = expand_admissible(t, out.z);
  out.result.value = static_cast<int>(out.result.witness.size());
  out.result.nodes_explored = search.nodes_explored();
  if (out.result.value != search.best_value() || !mkv_check(g, out.result.witness, k).verdict) {
    throw std::logic_error("mu_k_block produced an invalid witness");
  }
  return out;
}

}  // namespace mkvis

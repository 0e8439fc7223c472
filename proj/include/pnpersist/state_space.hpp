#pragma once

#include <array>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pnpersist/net.hpp"

namespace pnp {

struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complete tree of all firing sequences of length <= depth bound.
struct ReachTree {
  struct Node {
    Vec marking;
    int depth;
    int parent;  // -1 at the root
    int via;     // transition index on the incoming edge, -1 at the root
  };
  std::vector<Node> nodes;
};

inline void require_tree_root(const Net& net, const Vec& root) {
  check_dim(root, net.initial);
  if (!net.pure && !is_finite(root))
    throw unsupported_error("omega-rooted trees are unsupported on inhibitor nets");
}

inline ReachTree build_k_component(const Net& net, const Vec& root, long long k) {
  if (k < 0) throw std::invalid_argument("depth bound must be non-negative");
  require_tree_root(net, root);
  ReachTree tree;
  tree.nodes.push_back({root, 0, -1, -1});
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    if (tree.nodes[i].depth >= k) continue;
    Vec m = tree.nodes[i].marking;
    int depth = tree.nodes[i].depth;
    for (int t = 0; t < (int)net.num_transitions(); ++t)
      if (enabled(net, m, t))
        tree.nodes.push_back({fire(net, m, t), depth + 1, (int)i, t});
  }
  return tree;
}

// True iff some edge of the depth-bounded tree from `root` is labeled `b`,
// i.e. b fires after some word of length <= depth-1. Explored breadth-first
// with first-visit deduplication, which preserves minimal depths.
inline bool occurs_within(const Net& net, const Vec& root, int b, long long depth) {
  if (depth < 0) throw std::invalid_argument("depth bound must be non-negative");
  require_tree_root(net, root);
  if (depth == 0) return false;
  std::unordered_set<Vec, VecHash> seen{root};
  std::deque<std::pair<Vec, long long>> frontier{{root, 0}};
  while (!frontier.empty()) {
    auto [m, d] = frontier.front();
    frontier.pop_front();
    if (enabled(net, m, b)) return true;
    if (d + 1 >= depth) continue;  // successors could only enable b too deep
    for (int t = 0; t < (int)net.num_transitions(); ++t) {
      if (!enabled(net, m, t)) continue;
      Vec next = fire(net, m, t);
      if (seen.insert(next).second) frontier.emplace_back(std::move(next), d + 1);
    }
  }
  return false;
}

inline bool occurs_within(const Net& net, const Vec& root, const std::string& b,
                          long long depth) {
  return occurs_within(net, root, net.tindex(b), depth);
}

struct CoverabilityGraph {
  std::vector<Vec> vertices;  // vertex 0 is the root
  std::vector<std::array<int, 3>> edges;  // (source, transition, target)
  long long expansions = 0;
};

namespace detail {

// The colored construction: a new vertex is checked against every vertex
// lying on a path from the root to it (equivalently: every existing vertex
// that can reach its parent), and coordinates strictly above a covered
// vertex are promoted to omega before insertion. Equal labels are merged.
// When `stop_covering` is given, construction halts early as soon as some
// vertex dominates it (labels only grow, so the answer cannot change).
inline CoverabilityGraph build_coverability(const Net& net, const Vec& root,
                                            long long iteration_cap,
                                            const Marking* stop_covering) {
  if (!net.pure)
    throw unsupported_error("coverability graphs are unsupported on inhibitor nets");
  check_dim(root, net.initial);
  CoverabilityGraph g;
  std::unordered_map<Vec, int, VecHash> index;
  std::vector<std::vector<int>> preds;  // incoming-edge sources per vertex
  auto add_vertex = [&](const Vec& label) {
    int i = (int)g.vertices.size();
    g.vertices.push_back(label);
    index.emplace(label, i);
    preds.emplace_back();
    return i;
  };
  add_vertex(root);
  if (stop_covering && leq(*stop_covering, root)) return g;
  std::deque<int> work{0};  // blue vertices, FIFO
  std::vector<char> on_path;
  std::deque<int> bfs;
  while (!work.empty()) {
    int vi = work.front();
    work.pop_front();
    if (++g.expansions > iteration_cap)
      throw cap_error("coverability graph iteration cap exceeded");
    // vertices on some path from the root to vi: those that can reach vi
    on_path.assign(g.vertices.size(), 0);
    on_path[vi] = 1;
    bfs.assign(1, vi);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop_front();
      for (int p : preds[v])
        if (!on_path[p]) {
          on_path[p] = 1;
          bfs.push_back(p);
        }
    }
    Vec m = g.vertices[vi];
    for (int t = 0; t < (int)net.num_transitions(); ++t) {
      if (!enabled(net, m, t)) continue;
      Vec next = fire(net, m, t);
      auto it = index.find(next);
      if (it != index.end()) {
        g.edges.push_back({vi, t, it->second});
        preds[it->second].push_back(vi);
        continue;
      }
      // vertices added while expanding vi have their only edge from vi and
      // cannot lie on a path to it; the ancestor flags cover everyone else
      Vec promoted = next;
      for (int u = 0; u < (int)on_path.size(); ++u) {
        if (!on_path[u] || !leq(g.vertices[u], next)) continue;
        for (size_t i = 0; i < promoted.size(); ++i)
          if (next[i] > g.vertices[u][i]) promoted[i] = omega;
      }
      auto pit = index.find(promoted);
      if (pit != index.end()) {
        g.edges.push_back({vi, t, pit->second});
        preds[pit->second].push_back(vi);
        continue;
      }
      int ni = add_vertex(promoted);
      g.edges.push_back({vi, t, ni});
      preds[ni].push_back(vi);
      if (stop_covering && leq(*stop_covering, promoted)) return g;
      work.push_back(ni);
    }
  }
  return g;
}

}  // namespace detail

inline CoverabilityGraph build_coverability_graph(const Net& net, const Vec& root,
                                                  long long iteration_cap = 1000000) {
  return detail::build_coverability(net, root, iteration_cap, nullptr);
}

inline CoverabilityGraph build_coverability_graph(const Net& net) {
  return build_coverability_graph(net, net.initial);
}

inline bool is_coverable(const Net& net, const Vec& m0, const Marking& target) {
  check_dim(target, net.initial);
  CoverabilityGraph g = detail::build_coverability(net, m0, 1000000, &target);
  for (const Vec& v : g.vertices)
    if (leq(target, v)) return true;
  return false;
}

inline bool is_live_from(const Net& net, const Vec& m, int t) {
  if (!net.pure)
    throw unsupported_error("liveness via coverability is unsupported on inhibitor nets");
  return is_coverable(net, m, net.pre[t]);
}

inline bool is_live_from(const Net& net, const Vec& m, const std::string& t) {
  return is_live_from(net, m, net.tindex(t));
}

inline bool is_bounded(const Net& net) {
  CoverabilityGraph g = build_coverability_graph(net);
  for (const Vec& v : g.vertices)
    if (!is_finite(v)) return false;
  return true;
}

// Breadth-first closure of the reachability set, capped at `budget` distinct
// markings. Budget exhaustion is reported through the flag, not an error.
inline std::pair<std::vector<Marking>, bool> enumerate_reachable(const Net& net,
                                                                 long long budget) {
  if (budget <= 0) throw std::invalid_argument("budget must be positive");
  std::vector<Marking> out{net.initial};
  std::unordered_set<Vec, VecHash> seen{net.initial};
  bool complete = true;
  for (size_t i = 0; i < out.size(); ++i) {
    Vec m = out[i];
    for (int t = 0; t < (int)net.num_transitions(); ++t) {
      if (!enabled(net, m, t)) continue;
      Vec next = fire(net, m, t);
      if (seen.count(next)) continue;
      if ((long long)out.size() >= budget) {
        complete = false;
        continue;
      }
      seen.insert(next);
      out.push_back(std::move(next));
    }
  }
  return {out, complete};
}

inline std::string to_dot(const CoverabilityGraph& g, const std::string& name = "cov") {
  std::string s = "digraph " + name + " {\n";
  for (size_t i = 0; i < g.vertices.size(); ++i)
    s += "  v" + std::to_string(i) + " [label=\"" + show(g.vertices[i]) + "\"];\n";
  for (const auto& e : g.edges)
    s += "  v" + std::to_string(e[0]) + " -> v" + std::to_string(e[2]) + ";\n";
  s += "}\n";
  return s;
}

inline std::string to_dot(const CoverabilityGraph& g, const Net& net,
                          const std::string& name) {
  std::string s = "digraph " + name + " {\n";
  for (size_t i = 0; i < g.vertices.size(); ++i)
    s += "  v" + std::to_string(i) + " [label=\"" + show(g.vertices[i]) + "\"];\n";
  for (const auto& e : g.edges)
    s += "  v" + std::to_string(e[0]) + " -> v" + std::to_string(e[2]) +
         " [label=\"" + net.transitions[e[1]] + "\"];\n";
  s += "}\n";
  return s;
}

inline std::string to_dot(const ReachTree& tree, const Net& net,
                          const std::string& name = "tree") {
  std::string s = "digraph " + name + " {\n";
  for (size_t i = 0; i < tree.nodes.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=\"" + show(tree.nodes[i].marking) + "\"];\n";
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    if (n.parent >= 0)
      s += "  n" + std::to_string(n.parent) + " -> n" + std::to_string(i) +
           " [label=\"" + net.transitions[n.via] + "\"];\n";
  }
  s += "}\n";
  return s;
}

}  // namespace pnp

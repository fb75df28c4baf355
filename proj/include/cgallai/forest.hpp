#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "cgallai/errors.hpp"
#include "cgallai/pattern.hpp"

namespace cgallai {

struct DegreeClasses {
  std::vector<PatternVertex> v0, v1, v2, v3;
  int m = 0;        // components with at least two vertices
  int m_total = 0;  // all components
};

inline DegreeClasses degree_classes(const PatternGraph& f) {
  require(f.max_degree_at_most(3), "degree_classes: pattern is not subcubic");
  DegreeClasses dc;
  for (PatternVertex v : f.vertices()) {
    switch (f.degree(v)) {
      case 0: dc.v0.push_back(v); break;
      case 1: dc.v1.push_back(v); break;
      case 2: dc.v2.push_back(v); break;
      default: dc.v3.push_back(v); break;
    }
  }
  const auto labels = f.component_labels();
  std::map<int, int> sizes;
  for (int l : labels) ++sizes[l];
  dc.m_total = static_cast<int>(sizes.size());
  for (const auto& [_, s] : sizes)
    if (s >= 2) ++dc.m;
  return dc;
}

/// |V3| <= |V1| - 2m. Always true on subcubic forests; a false here is a bug.
inline bool check_branch_bound(const PatternGraph& f) {
  require(f.is_forest(), "check_branch_bound: pattern is not a forest");
  const DegreeClasses dc = degree_classes(f);
  return dc.v3.size() + 2 * static_cast<std::size_t>(dc.m) <= dc.v1.size();
}

/// Pairwise vertex-disjoint Z-paths, at least floor(|Z n T| / 2) per tree T.
/// Each path is listed as its sequence of pattern vertices.
inline std::vector<std::vector<PatternVertex>> extract_z_paths(const PatternGraph& f,
                                                               const std::vector<PatternVertex>& z) {
  require(f.is_forest(), "extract_z_paths: pattern is not a forest");
  require(f.max_degree_at_most(3), "extract_z_paths: pattern is not subcubic");
  const int n = f.vertex_count();
  std::vector<char> in_z(static_cast<std::size_t>(n), 0);
  for (PatternVertex v : z) {
    if (!f.has_vertex(v)) throw InputError("extract_z_paths: unknown vertex " + to_string(v));
    require(f.degree(v) <= 2, "extract_z_paths: Z contains degree-3 vertex " + to_string(v));
    in_z[v.id] = 1;
  }

  // adj[u][v] holds the suppressed vertices between u and v, in order from u.
  std::vector<std::map<int, std::vector<int>>> adj(static_cast<std::size_t>(n));
  std::set<int> alive;
  for (PatternVertex v : f.vertices()) {
    alive.insert(v.id);
    for (PatternVertex u : f.neighbors(v)) adj[v.id][u.id] = {};
  }

  auto remove = [&](int v) {
    for (const auto& [u, _] : adj[v]) adj[u].erase(v);
    adj[v].clear();
    alive.erase(v);
  };
  auto deg = [&](int v) { return static_cast<int>(adj[v].size()); };
  auto emit = [&](std::vector<int> seq, std::vector<std::vector<PatternVertex>>& out) {
    std::vector<PatternVertex> p;
    for (int x : seq) p.push_back({x});
    out.push_back(std::move(p));
  };
  auto expand = [&](int u, int v) {
    std::vector<int> seq{u};
    const auto& mid = adj[u].at(v);
    seq.insert(seq.end(), mid.begin(), mid.end());
    seq.push_back(v);
    return seq;
  };

  std::vector<std::vector<PatternVertex>> out;
  while (!alive.empty()) {
    bool acted = false;
    // Isolated vertices and non-Z leaves.
    for (int v : alive)
      if (deg(v) == 0 || (deg(v) == 1 && !in_z[v])) {
        remove(v);
        acted = true;
        break;
      }
    if (acted) continue;
    // Suppress a degree-2 vertex outside Z.
    for (int v : alive)
      if (deg(v) == 2 && !in_z[v]) {
        const int u = adj[v].begin()->first;
        const int w = std::next(adj[v].begin())->first;
        require(!adj[u].contains(w), "extract_z_paths: suppression would create a parallel edge");
        std::vector<int> chain = adj[u][v];
        chain.push_back(v);
        const auto& tail = adj[v][w];
        chain.insert(chain.end(), tail.begin(), tail.end());
        remove(v);
        adj[u][w] = chain;
        std::reverse(chain.begin(), chain.end());
        adj[w][u] = std::move(chain);
        acted = true;
        break;
      }
    if (acted) continue;
    // A leaf whose neighbour has degree at most 2.
    for (int u : alive)
      if (deg(u) == 1) {
        const int v = adj[u].begin()->first;
        if (deg(v) > 2) continue;
        emit(expand(u, v), out);
        remove(u);
        remove(v);
        acted = true;
        break;
      }
    if (acted) continue;
    // Deepest degree-3 vertex from the lowest vertex of its tree.
    const int r = *alive.begin();
    std::map<int, int> depth{{r, 0}};
    std::map<int, int> parent{{r, -1}};
    std::vector<int> queue{r};
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const auto& [x, _] : adj[queue[h]])
        if (!depth.contains(x)) {
          depth[x] = depth[queue[h]] + 1;
          parent[x] = queue[h];
          queue.push_back(x);
        }
    int u = -1;
    for (const auto& [x, dx] : depth)
      if (deg(x) == 3 && (u < 0 || dx > depth[u])) u = x;
    require(u >= 0, "extract_z_paths: no applicable reduction");
    std::vector<int> kids;
    for (const auto& [x, _] : adj[u])
      if (x != parent[u]) kids.push_back(x);
    require(kids.size() >= 2 && deg(kids[0]) == 1 && deg(kids[1]) == 1,
            "extract_z_paths: children of the deepest branch vertex are not leaves");
    std::vector<int> seq = expand(kids[0], u);
    const std::vector<int> rest = expand(u, kids[1]);
    seq.insert(seq.end(), rest.begin() + 1, rest.end());
    emit(std::move(seq), out);
    remove(kids[0]);
    remove(kids[1]);
    remove(u);
  }
  return out;
}

}  // namespace cgallai

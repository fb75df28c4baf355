#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cgallai/errors.hpp"
#include "cgallai/graph.hpp"

namespace cgallai {

/// First reason the family fails to be k A-paths pairwise at distance >= d
/// (d-coarse when asked); nullopt when it is a valid packing.
inline std::optional<std::string> packing_violation(const Graph& g, const VertexSet& a, const std::vector<Path>& paths,
                                                    std::int64_t k, std::int64_t d, bool coarse) {
  if (static_cast<std::int64_t>(paths.size()) < k)
    return "only " + std::to_string(paths.size()) + " paths, need " + std::to_string(k);
  std::vector<VertexSet> sets;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    const std::string tag = "path " + std::to_string(i);
    if (p.size() < 2) return tag + " has fewer than two vertices";
    if (!is_path_in(g, p)) return tag + " is not a path of the graph";
    if (!a.contains(p.front()) || !a.contains(p.back())) return tag + " does not have both ends in A";
    if (coarse && dist(g, p.front(), p.back()) < d) return tag + " is not " + std::to_string(d) + "-coarse";
    sets.push_back(p.vertex_set());
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!dist_at_least(g, sets[i], sets[j], d))
        return "paths " + std::to_string(i) + " and " + std::to_string(j) + " are closer than " + std::to_string(d);
  return std::nullopt;
}

inline bool verify_packing(const Graph& g, const VertexSet& a, const std::vector<Path>& paths, std::int64_t k,
                           std::int64_t d, bool coarse) {
  return !packing_violation(g, a, paths, k, d, coarse).has_value();
}

/// First reason B(x, radius) misses some (threshold-coarse) A-path, or the
/// size bound fails; nullopt when x is a valid hitting set.
inline std::optional<std::string> hitting_violation(const Graph& g, const VertexSet& a, const VertexSet& x,
                                                    std::int64_t radius, std::int64_t size_bound,
                                                    std::optional<std::int64_t> coarse_threshold) {
  check_ids(g, a);
  check_ids(g, x);
  if (static_cast<std::int64_t>(x.size()) > size_bound)
    return "|X| = " + std::to_string(x.size()) + " exceeds " + std::to_string(size_bound);
  VertexMask allowed(static_cast<std::size_t>(g.size()), 1);
  for (Vertex v : ball(g, x, radius)) allowed[v] = 0;
  VertexMask seen(static_cast<std::size_t>(g.size()), 0);
  for (Vertex s : a) {
    if (seen[s] || !allowed[s]) continue;
    const BfsResult comp = bfs(g, std::span<const Vertex>(&s, 1), {.allowed = &allowed});
    std::vector<Vertex> as;
    for (Vertex v : comp.order) {
      seen[v] = 1;
      if (a.contains(v)) as.push_back(v);
    }
    if (as.size() < 2) continue;
    std::sort(as.begin(), as.end());
    if (!coarse_threshold)
      return "A-vertices " + std::to_string(as[0]) + " and " + std::to_string(as[1]) + " are joined outside the balls";
    const std::int64_t t = *coarse_threshold;
    // Distances inside one component are below n, so huge thresholds are vacuous.
    if (t > g.size()) continue;
    for (std::size_t i = 0; i < as.size(); ++i) {
      const BfsResult r = bfs(g, std::span<const Vertex>(&as[i], 1), {.limit = t - 1});
      for (std::size_t j = i + 1; j < as.size(); ++j)
        if (!r.reached(as[j]))
          return "A-vertices " + std::to_string(as[i]) + " and " + std::to_string(as[j]) +
                 " are far apart and joined outside the balls";
    }
  }
  return std::nullopt;
}

inline bool verify_hitting(const Graph& g, const VertexSet& a, const VertexSet& x, std::int64_t radius,
                           std::int64_t size_bound, std::optional<std::int64_t> coarse_threshold) {
  return !hitting_violation(g, a, x, radius, size_bound, coarse_threshold).has_value();
}

/// All simple A-paths of a small graph, each reported once (from its lower
/// end), by DFS in ascending neighbour order. Throws once `budget` paths
/// have been visited.
inline std::vector<Path> enumerate_a_paths(const Graph& g, const VertexSet& a, std::int64_t budget = 5'000'000) {
  check_ids(g, a);
  std::vector<Path> out;
  std::vector<Vertex> stack;
  std::vector<char> on(static_cast<std::size_t>(g.size()), 0);
  std::int64_t work = 0;
  auto dfs = [&](auto&& self, Vertex u) -> void {
    if (++work > budget) throw ContractError("enumerate_a_paths: work budget exhausted");
    if (stack.size() >= 2 && a.contains(u) && u > stack.front()) out.emplace_back(stack);
    for (Vertex v : g.neighbors(u)) {
      if (on[v]) continue;
      on[v] = 1;
      stack.push_back(v);
      self(self, v);
      stack.pop_back();
      on[v] = 0;
    }
  };
  for (Vertex s : a) {
    on[s] = 1;
    stack.assign(1, s);
    dfs(dfs, s);
    on[s] = 0;
  }
  return out;
}

/// Exact answer for tiny graphs (n <= 64): do k A-paths pairwise at distance
/// >= d (and d-coarse, if asked) exist?
inline bool brute_force_packing_exists(const Graph& g, const VertexSet& a, std::int64_t k, std::int64_t d, bool coarse,
                                       std::int64_t budget = 5'000'000) {
  if (k <= 0) return true;
  if (g.size() > 64) throw InputError("brute_force_packing_exists: graph has more than 64 vertices");
  using Mask = std::uint64_t;
  const int n = g.size();
  std::vector<Mask> near(static_cast<std::size_t>(n), 0);  // B(v, d-1)
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : ball(g, v, d - 1)) near[v] |= Mask{1} << u;

  std::set<Mask> distinct;
  for (const Path& p : enumerate_a_paths(g, a, budget)) {
    if (coarse && dist(g, p.front(), p.back()) < d) continue;
    Mask m = 0;
    for (Vertex v : p) m |= Mask{1} << v;
    distinct.insert(m);
  }
  std::vector<Mask> sets(distinct.begin(), distinct.end());
  std::vector<Mask> reach(sets.size(), 0);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (Vertex v = 0; v < n; ++v)
      if (sets[i] >> v & 1) reach[i] |= near[v];

  std::int64_t work = 0;
  auto search = [&](auto&& self, std::size_t from, Mask blocked, std::int64_t need) -> bool {
    if (need == 0) return true;
    for (std::size_t i = from; i < sets.size(); ++i) {
      if (++work > budget) throw ContractError("brute_force_packing_exists: work budget exhausted");
      if (sets[i] & blocked) continue;
      if (self(self, i + 1, blocked | reach[i], need - 1)) return true;
    }
    return false;
  };
  return search(search, 0, 0, k);
}

}  // namespace cgallai

#pragma once
// Instance builders shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cgallai/cgallai.hpp"

namespace cgallai::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

class HostBuilder {
 public:
  Vertex add() { return n_++; }
  void edge(Vertex u, Vertex v) { e_.emplace_back(u, v); }
  // Fresh path of `len` edges starting at `from`; the result includes `from`.
  std::vector<Vertex> extend(Vertex from, std::int64_t len) {
    std::vector<Vertex> out{from};
    for (std::int64_t i = 0; i < len; ++i) {
      const Vertex v = add();
      edge(out.back(), v);
      out.push_back(v);
    }
    return out;
  }
  std::vector<Vertex> fresh_path(std::int64_t len) { return extend(add(), len); }
  int size() const { return n_; }
  Graph build() const { return Graph(n_, e_); }

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> e_;
};

struct HostedModel {
  Graph g;
  FatModel m;
  std::string label;
};

// ---- models on path hosts ----

// Pattern path on `k` vertices laid along a spine. Blocks have > F vertices
// and gaps >= F - 1, so the model is F-fat. Pendant paths hang off blocks
// (inside the branch set) and off gaps (outside every part); some gaps get a
// parallel ladder so the branch part is a set rather than a path.
inline HostedModel path_host_model(Rng& rng, int k, std::int64_t fat, bool decorate, bool ladders) {
  HostBuilder hb;
  FatModel m;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::vector<Vertex>> gaps;
  Vertex tail = -1;
  for (int i = 0; i < k; ++i) {
    if (i > 0) {
      const auto gap = hb.extend(tail, uniform(rng, fat, 2 * fat));
      gaps.push_back(gap);
      tail = gap.back();
    }
    const std::int64_t len = uniform(rng, fat + 1, 2 * fat + 1);
    std::vector<Vertex> block;
    if (tail < 0) {
      block = hb.fresh_path(len - 1);
    } else {
      block = hb.extend(tail, len);
      block.erase(block.begin());
    }
    tail = block.back();
    blocks.push_back(block);
  }
  // The block vertex before the gap and the one after it belong to the gap path.
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> set = blocks[i];
    if (decorate && uniform(rng, 0, 1)) {
      const Vertex base = blocks[i][static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(blocks[i].size()) - 1))];
      const auto hang = hb.extend(base, uniform(rng, 1, std::max<std::int64_t>(1, fat / 2)));
      set.insert(set.end(), hang.begin() + 1, hang.end());
    }
    m.branch_sets[m.pattern.add_vertex()] = Part(VertexSet(set));
  }
  for (int i = 0; i + 1 < k; ++i) {
    std::vector<Vertex> route{blocks[i].back()};
    route.insert(route.end(), gaps[i].begin() + 1, gaps[i].end());
    route.push_back(blocks[i + 1].front());
    const PatternEdge e = m.pattern.add_edge(PatternVertex{i}, PatternVertex{i + 1});
    if (ladders && uniform(rng, 0, 1) && route.size() >= 3) {
      std::vector<Vertex> all = route;
      Vertex prev = -1;
      for (std::size_t j = 1; j + 1 < route.size(); ++j) {
        const Vertex y = hb.add();
        hb.edge(route[j], y);
        if (prev >= 0) hb.edge(prev, y);
        prev = y;
        all.push_back(y);
      }
      m.branch_parts[e] = Part(VertexSet(all));
    } else {
      m.branch_parts[e] = Part(Path(route));
    }
    if (decorate && uniform(rng, 0, 1)) {
      const Vertex base = route[static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(route.size()) - 2))];
      hb.extend(base, uniform(rng, 1, fat));
    }
  }
  return {hb.build(), std::move(m), "path-host P" + std::to_string(k)};
}

// ---- models on grid hosts ----

struct CoarsePattern {
  std::string name;
  std::vector<std::pair<int, int>> nodes;  // coarse (row, col)
  std::vector<std::pair<int, int>> edges;  // node indices, axis-aligned unit steps
};

inline CoarsePattern coarse_k2() { return {"K2", {{0, 0}, {0, 1}}, {{0, 1}}}; }
inline CoarsePattern coarse_p3() { return {"P3", {{0, 0}, {0, 1}, {1, 1}}, {{0, 1}, {1, 2}}}; }
inline CoarsePattern coarse_star() { return {"3-star", {{1, 1}, {0, 1}, {1, 0}, {1, 2}}, {{0, 1}, {0, 2}, {0, 3}}}; }
inline CoarsePattern coarse_c6() {
  return {"C6", {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 1}, {1, 0}}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}};
}
inline CoarsePattern coarse_c4() { return {"C4", {{0, 0}, {0, 1}, {1, 1}, {1, 0}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}; }
// Two squares sharing a side: two degree-3 vertices.
inline CoarsePattern coarse_theta() {
  return {"theta", {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 1}, {1, 0}},
          {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}}};
}

// Grid host; branch sets are squares or plus shapes of radius rho around
// coarse nodes spaced `spacing` apart, branch parts straight strips (two
// rows/columns wide when `thick`). Throws if the measured fatness is below
// `fat`, which would be a fixture bug.
inline HostedModel grid_host_model(Rng& rng, const CoarsePattern& cp, std::int64_t fat, bool thick,
                                   bool subcubic = true) {
  const int rho = static_cast<int>((fat + 1) / 2) + (thick ? 1 : 0);
  const int spacing = static_cast<int>(fat) + 2 * rho + 1 + static_cast<int>(uniform(rng, 0, 2));
  const int margin = rho + 2;
  int max_r = 0, max_c = 0;
  for (auto [r, c] : cp.nodes) {
    max_r = std::max(max_r, r);
    max_c = std::max(max_c, c);
  }
  const int rows = 2 * margin + spacing * max_r + 1;
  const int cols = 2 * margin + spacing * max_c + 1;
  auto at = [cols](int r, int c) { return static_cast<Vertex>(r * cols + c); };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(at(r, c), at(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(at(r, c), at(r + 1, c));
    }
  Graph g(rows * cols, edges);

  FatModel m{PatternGraph(subcubic), {}, {}};
  std::vector<std::pair<int, int>> centers;
  for (auto [r, c] : cp.nodes) {
    const int R = margin + spacing * r, C = margin + spacing * c;
    centers.emplace_back(R, C);
    const bool square = uniform(rng, 0, 1) == 1;
    std::vector<Vertex> set;
    for (int dr = -rho; dr <= rho; ++dr)
      for (int dc = -rho; dc <= rho; ++dc)
        if (square ? true : (dr == 0 || dc == 0)) set.push_back(at(R + dr, C + dc));
    m.branch_sets[m.pattern.add_vertex()] = Part(VertexSet(set));
  }
  for (auto [u, v] : cp.edges) {
    auto [r0, c0] = centers[static_cast<std::size_t>(u)];
    auto [r1, c1] = centers[static_cast<std::size_t>(v)];
    std::vector<Vertex> line;
    std::vector<Vertex> extra;
    if (r0 == r1) {
      const int lo = std::min(c0, c1) + rho, hi = std::max(c0, c1) - rho;
      for (int c = lo; c <= hi; ++c) line.push_back(at(r0, c));
      if (thick)
        for (int c = lo; c <= hi; ++c) extra.push_back(at(r0 + 1, c));
      if (c0 > c1) std::reverse(line.begin(), line.end());
    } else {
      const int lo = std::min(r0, r1) + rho, hi = std::max(r0, r1) - rho;
      for (int r = lo; r <= hi; ++r) line.push_back(at(r, c0));
      if (thick)
        for (int r = lo; r <= hi; ++r) extra.push_back(at(r, c0 + 1));
      if (r0 > r1) std::reverse(line.begin(), line.end());
    }
    const PatternEdge e = m.pattern.add_edge(PatternVertex{u}, PatternVertex{v});
    if (thick) {
      extra.insert(extra.end(), line.begin(), line.end());
      m.branch_parts[e] = Part(VertexSet(extra));
    } else {
      m.branch_parts[e] = Part(Path(line));
    }
  }
  if (!is_fat(g, m, fat))
    throw std::logic_error("grid_host_model: fixture only " + fatness(g, m).str() + "-fat, wanted " +
                           std::to_string(fat));
  return {std::move(g), std::move(m), "grid-host " + cp.name};
}

// ---- tripod instances ----

struct TripodInstance {
  Graph g;
  TripodProblem pr;
  std::string label;
};

// Q = ball of radius s around the centre of a spider (plus stubs); three
// legs end at the v_i.
inline TripodInstance tripod_spider(Rng& rng, std::int64_t ell, std::int64_t d) {
  HostBuilder hb;
  const Vertex c = hb.add();
  std::array<std::int64_t, 3> len{};
  for (auto& x : len) x = uniform(rng, ell, d);
  const std::int64_t shortest = *std::min_element(len.begin(), len.end());
  const std::int64_t s = std::max<std::int64_t>(0, d - shortest) + uniform(rng, 0, 2);
  std::vector<Vertex> q{c};
  TripodProblem pr;
  for (int i = 0; i < 3; ++i) {
    const auto leg = hb.extend(c, s + len[static_cast<std::size_t>(i)]);
    q.insert(q.end(), leg.begin() + 1, leg.begin() + 1 + s);
    pr.v[static_cast<std::size_t>(i)] = leg.back();
  }
  // Extra stubs inside Q and a fourth leg outside it.
  for (std::int64_t j = uniform(rng, 0, 2); j > 0; --j) {
    const auto stub = hb.extend(c, uniform(rng, 1, std::max<std::int64_t>(1, s)));
    const std::int64_t keep = std::min<std::int64_t>(s, static_cast<std::int64_t>(stub.size()) - 1);
    q.insert(q.end(), stub.begin() + 1, stub.begin() + 1 + keep);
  }
  pr.q = VertexSet(q);
  pr.ell = ell;
  pr.d = d;
  return {hb.build(), pr, "spider"};
}

// A spine tree Q with three legs, plus random rungs; retried until the
// hypotheses hold.
inline TripodInstance tripod_decorated(Rng& rng, std::int64_t ell, std::int64_t d) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    HostBuilder hb;
    const std::int64_t span = 2 * d + uniform(rng, 0, 2 * d);
    const auto spine = hb.fresh_path(2 * span);
    std::vector<Vertex> q = spine;
    for (std::int64_t j = uniform(rng, 0, 3); j > 0; --j) {
      const Vertex base = spine[static_cast<std::size_t>(uniform(rng, 0, 2 * span))];
      const auto br = hb.extend(base, uniform(rng, 1, 2 * ell));
      q.insert(q.end(), br.begin() + 1, br.end());
    }
    TripodProblem pr;
    const std::array<std::size_t, 3> at{0, static_cast<std::size_t>(span), static_cast<std::size_t>(2 * span)};
    std::vector<Vertex> legs_all;
    for (int i = 0; i < 3; ++i) {
      const auto leg = hb.extend(spine[at[static_cast<std::size_t>(i)]], uniform(rng, ell, d));
      pr.v[static_cast<std::size_t>(i)] = leg.back();
      legs_all.insert(legs_all.end(), leg.begin() + 1, leg.end());
    }
    // Rungs join random vertices by short fresh paths.
    for (std::int64_t j = uniform(rng, 0, 4); j > 0; --j) {
      std::vector<Vertex> pool = legs_all;
      pool.insert(pool.end(), q.begin(), q.end());
      const Vertex x = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
      const Vertex y = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
      if (x == y) continue;
      const auto mid = hb.extend(x, uniform(rng, 0, 2 * ell));
      hb.edge(mid.back(), y);
    }
    pr.q = VertexSet(q);
    pr.ell = ell;
    pr.d = d;
    Graph g = hb.build();
    try {
      check_tripod_problem(g, pr);
    } catch (const ContractError&) {
      continue;
    }
    return {std::move(g), pr, "decorated"};
  }
  throw std::logic_error("tripod_decorated: no valid instance");
}

// ---- forests ----

inline PatternGraph random_subcubic_forest(Rng& rng, int n, double attach) {
  PatternGraph f;
  std::bernoulli_distribution join(attach);
  for (int i = 0; i < n; ++i) {
    const PatternVertex v = f.add_vertex();
    if (i == 0 || !join(rng)) continue;
    std::vector<PatternVertex> open;
    for (PatternVertex u : f.vertices())
      if (u != v && f.degree(u) < 3) open.push_back(u);
    if (open.empty()) continue;
    f.add_edge(open[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(open.size()) - 1))], v);
  }
  return f;
}

}  // namespace cgallai::testing

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cgallai/errors.hpp"
#include "cgallai/graph.hpp"
#include "cgallai/model.hpp"
#include "cgallai/pattern.hpp"
#include "cgallai/tripod.hpp"

namespace cgallai {

struct AugmentResult {
  enum class Outcome { kSubdivided, kAttached };
  Outcome outcome = Outcome::kSubdivided;
  int case_id = 0;  // 1, 2 or 3
  FatModel model;
  PatternVertex h1;                  // subdivision vertex h'
  std::optional<PatternVertex> h2;   // pendant h'' (Attached only)
  PatternEdge y_edge, z_edge;        // yh' and h'z
  std::optional<PatternEdge> pendant_edge;
};

struct AugmentOptions {
  bool check_invariants = false;
};

namespace detail {

inline void check_aug(bool ok, const std::string& what) {
  if (!ok) throw ContractError("augment: " + what);
}

}  // namespace detail

/// Grows the model by subdividing yz (and possibly hanging a pendant h'' at
/// a) using an attachment path p from a to the 4 ell-ball around M_yz.
inline AugmentResult augment(const Graph& g, const SimpleModel& sm, Vertex a, PatternEdge yz, const Path& p,
                             std::int64_t ell, const AugmentOptions& opt = {}) {
  using detail::check_aug;
  const FatModel& m = sm.model();
  check_aug(ell >= 1, "ell must be positive");
  check_aug(m.pattern.has_edge(yz), "unknown edge " + to_string(yz));
  check_aug(m.pattern.max_degree_at_most(3), "pattern must be subcubic");
  check_aug(is_fat(g, m, 8 * ell), "model is not 8ell-fat (measured " + fatness(g, m).str() + ")");
  check_aug(is_clean(g, sm, 4 * ell), "model is not 4ell-clean");

  const auto [y, z] = m.pattern.endpoints(yz);
  const Path& myz = sm.path(yz);
  const VertexSet myz_set = myz.vertex_set();
  const VertexSet pset = p.vertex_set();

  check_aug(is_path_in(g, p) && p.front() == a, "p is not a path starting at a");
  const VertexSet near_yz = ball(g, myz_set, 4 * ell);
  for (std::size_t i = 0; i < p.size(); ++i)
    check_aug(near_yz.contains(p[i]) == (i + 1 == p.size()), "p is not an a-B(M_yz,4ell) path");
  check_aug(dist_at_least(g, pset, m.union_of_branch_sets(), 8 * ell), "(dagger) dist(P, branch sets) < 8ell");
  {
    std::vector<Vertex> others;
    for (const auto& [e, part] : m.branch_parts)
      if (e != yz) others.insert(others.end(), part.vertices().begin(), part.vertices().end());
    check_aug(dist_at_least(g, pset, VertexSet(std::move(others)), 4 * ell),
              "(double dagger) dist(P, other branch paths) < 4ell");
  }

  const Vertex w = p.back();
  const VertexSet my = m.part(y).vertices();
  const VertexSet mz = m.part(z).vertices();
  const VertexSet myz_ends = set_union(my, mz);

  // q_x: first vertex of M_yz from v_x at distance exactly 4 ell from w.
  const BfsResult from_w = bfs(g, std::span<const Vertex>(&w, 1), {.limit = 4 * ell});
  auto find_q = [&](bool from_front) -> std::size_t {
    for (std::size_t k = 0; k < myz.size(); ++k) {
      const std::size_t idx = from_front ? k : myz.size() - 1 - k;
      if (from_w.depth[myz[idx]] == 4 * ell) return idx;
    }
    throw ContractError("augment: no vertex of M_yz at distance 4ell from w");
  };
  const std::size_t qy_idx = find_q(true);
  const std::size_t qz_idx = find_q(false);
  const Path qy_path = myz.subpath(0, qy_idx);                            // v_y .. q_y
  const Path qz_path = myz.subpath(qz_idx, myz.size() - 1).reversed();    // v_z .. q_z
  const Vertex vy = myz.front(), vz = myz.back();
  const Vertex qy = myz[qy_idx], qz = myz[qz_idx];
  const Path wy = *st_path(g, w, qy);
  const Path wz = *st_path(g, w, qz);
  check_aug(wy.length() == 4 * ell && wz.length() == 4 * ell, "W_x must have length 4ell");
  const VertexSet qy_set = qy_path.vertex_set(), qz_set = qz_path.vertex_set();

  if (opt.check_invariants) {
    check_aug(dist_at_least(g, VertexSet{w}, myz_ends, 8 * ell), "dist(w, M_y u M_z) < 8ell");
    check_aug(dist_at_least(g, VertexSet{qy, qz}, myz_ends, 4 * ell), "dist({q_y,q_z}, M_y u M_z) < 4ell");
    check_aug(dist_at_least(g, qy_set, mz, 4 * ell) && dist_at_least(g, qz_set, my, 4 * ell),
              "dist(Q_y, M_z) or dist(Q_z, M_y) < 4ell");
    check_aug(dist_at_least(g, pset, set_union(qy_set, qz_set), 4 * ell), "dist(P, Q_y u Q_z) < 4ell");
  }

  AugmentResult res;
  FatModel out;
  out.pattern = m.pattern;
  out.branch_sets = m.branch_sets;
  out.branch_parts = m.branch_parts;
  out.branch_parts.erase(yz);
  const auto sub = out.pattern.subdivide(yz);
  res.h1 = sub.middle;
  res.y_edge = sub.first;
  res.z_edge = sub.second;

  if (dist_at_least(g, qy_set, qz_set, ell)) {
    const VertexSet wy_set = wy.vertex_set(), wz_set = wz.vertex_set();
    out.branch_parts[sub.first] = Part(qy_path);
    out.branch_parts[sub.second] = Part(qz_path.reversed());
    if (dist(g, a, w) <= 2 * ell - 1) {
      res.case_id = 1;
      res.outcome = AugmentResult::Outcome::kSubdivided;
      const VertexSet pp = st_path(g, a, w)->vertex_set();
      out.branch_sets[sub.middle] = Part(set_union({&wy_set, &wz_set, &pp}));
    } else {
      res.case_id = 2;
      res.outcome = AugmentResult::Outcome::kAttached;
      out.branch_sets[sub.middle] = Part(set_union(wy_set, wz_set));
      const auto leaf = out.pattern.add_leaf(sub.middle);
      res.h2 = leaf.vertex;
      res.pendant_edge = leaf.edge;
      out.branch_sets[leaf.vertex] = Part(VertexSet{a});
      out.branch_parts[leaf.edge] = Part(p.reversed());
    }
  } else {
    res.case_id = 3;
    res.outcome = AugmentResult::Outcome::kAttached;
    const Path s = *st_path(g, qy_set, qz_set);
    const auto i3 = static_cast<std::size_t>(3 * ell);
    check_aug(dist(g, vy, myz[i3]) == 3 * ell && dist(g, vz, myz[myz.size() - 1 - i3]) == 3 * ell,
              "v_x' must lie at distance exactly 3ell from v_x");
    const VertexSet qy_tail = qy_path.subpath(i3, qy_path.size() - 1).vertex_set();
    const VertexSet qz_tail = qz_path.subpath(i3, qz_path.size() - 1).vertex_set();
    const VertexSet s_set = s.vertex_set();
    const VertexSet q = set_union({&qy_tail, &qz_tail, &s_set});
    if (opt.check_invariants) {
      check_aug(!dist_within(g, s_set, myz_ends, 3 * ell).finite(), "dist(S, M_y u M_z) <= 3ell");
      check_aug(dist_at_least(g, myz_ends, q, 3 * ell), "dist(M_y u M_z, Q) < 3ell");
      check_aug(!dist_within(g, pset, q, 3 * ell).finite(), "dist(P, Q) <= 3ell");
    }
    const TripodResult tr = tripod(g, TripodProblem{{vy, vz, w}, q, ell, 4 * ell},
                                   TripodOptions{.check_invariants = opt.check_invariants});
    out.branch_sets[sub.middle] = Part(tr.z);
    out.branch_parts[sub.first] = Part(tr.p[0]);
    out.branch_parts[sub.second] = Part(tr.p[1]);
    const auto leaf = out.pattern.add_leaf(sub.middle);
    res.h2 = leaf.vertex;
    res.pendant_edge = leaf.edge;
    out.branch_sets[leaf.vertex] = Part(VertexSet{a});
    out.branch_parts[leaf.edge] = Part(set_union(tr.p[2], pset));
  }

  const auto bad = validate_model(g, out);
  check_aug(bad.empty(), "output is not a model: " + (bad.empty() ? std::string() : bad.front().message));
  check_aug(is_fat(g, out, ell), "output is not ell-fat (measured " + fatness(g, out).str() + ")");
  check_aug(radius_center(g, out.part(res.h1).vertices()).radius <= 4 * ell, "radius(N_h') > 4ell");
  if (res.outcome == AugmentResult::Outcome::kSubdivided)
    check_aug(out.part(res.h1).vertices().contains(a), "a is not in N_h'");
  res.model = std::move(out);
  return res;
}

}  // namespace cgallai

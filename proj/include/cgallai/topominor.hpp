#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cgallai/errors.hpp"
#include "cgallai/graph.hpp"
#include "cgallai/model.hpp"
#include "cgallai/tripod.hpp"

namespace cgallai {

struct TopologicalOptions {
  bool check_invariants = false;
};

/// Turns a 7 ell-fat model of a subcubic pattern into an ell-fat model whose
/// branch sets all have radius at most floor(1.5 ell).
inline FatModel make_topological(const Graph& g, const FatModel& m, std::int64_t ell,
                                 const TopologicalOptions& opt = {}) {
  require(ell >= 1, "make_topological: ell must be positive");
  require(m.pattern.max_degree_at_most(3), "make_topological: pattern is not subcubic");
  require_valid_model(g, m, "make_topological");
  if (!is_fat(g, m, 7 * ell))
    throw ContractError("make_topological: model must be " + std::to_string(7 * ell) + "-fat, measured fatness " +
                        fatness(g, m).str());

  // W_e and its two ends x_{e,u}, each at distance exactly 2 ell from M_u.
  std::map<PatternEdge, Path> w;
  for (PatternEdge e : m.pattern.edges()) {
    const auto [u, v] = m.pattern.endpoints(e);
    const VertexSet& part = m.part(e).vertices();
    const VertexMask inside = make_mask(g, part);
    const auto p = st_path(g, set_intersection(ball(g, m.part(u).vertices(), 2 * ell), part),
                           set_intersection(ball(g, m.part(v).vertices(), 2 * ell), part), &inside);
    require(p.has_value(), "make_topological: no ball-to-ball path inside the part of " + to_string(e));
    w[e] = *p;
  }
  auto x_of = [&](PatternEdge e, PatternVertex u) {
    return m.pattern.endpoints(e).first == u ? w.at(e).front() : w.at(e).back();
  };

  FatModel out;
  out.pattern = m.pattern;
  std::map<std::pair<int, int>, VertexSet> legs;  // (edge, vertex) -> P_{e,u}
  for (PatternVertex u : m.pattern.vertices()) {
    const VertexSet& mu = m.part(u).vertices();
    const auto& inc = m.pattern.incident_edges(u);
    if (opt.check_invariants)
      for (PatternEdge e : inc) require(dist(g, VertexSet{x_of(e, u)}, mu) == 2 * ell, "make_topological: x_{e,u} not at 2ell");
    switch (inc.size()) {
      case 0:
        out.branch_sets[u] = Part(VertexSet{mu.front()});
        break;
      case 1: {
        const Path p = *st_path(g, VertexSet{x_of(inc[0], u)}, mu);
        legs[{inc[0].id, u.id}] = p.vertex_set();
        out.branch_sets[u] = Part(VertexSet{p.back()});
        break;
      }
      case 2: {
        const Path q1 = *st_path(g, VertexSet{x_of(inc[0], u)}, mu);
        const Path q2 = *st_path(g, VertexSet{x_of(inc[1], u)}, mu);
        out.branch_sets[u] = Part(q1);
        legs[{inc[0].id, u.id}] = VertexSet{x_of(inc[0], u)};
        legs[{inc[1].id, u.id}] = set_union(mu, q2.vertex_set());
        require(radius_center(g, q1.vertex_set()).radius <= ell, "make_topological: degree-2 branch set radius > ell");
        break;
      }
      default: {
        TripodProblem pr{{x_of(inc[0], u), x_of(inc[1], u), x_of(inc[2], u)}, mu, ell, 2 * ell};
        const TripodResult tr = tripod(g, pr, TripodOptions{.check_invariants = opt.check_invariants});
        out.branch_sets[u] = Part(tr.z);
        for (int i = 0; i < 3; ++i) legs[{inc[i].id, u.id}] = tr.p[i];
        break;
      }
    }
  }
  for (PatternEdge e : m.pattern.edges()) {
    const auto [u, v] = m.pattern.endpoints(e);
    const VertexSet wv = w.at(e).vertex_set();
    out.branch_parts[e] = Part(set_union({&legs.at({e.id, u.id}), &wv, &legs.at({e.id, v.id})}));
  }

  const auto bad = validate_model(g, out);
  require(bad.empty(), "make_topological: output is not a model: " + (bad.empty() ? std::string() : bad.front().message));
  require(is_fat(g, out, ell), "make_topological: output is not ell-fat");
  for (PatternVertex u : out.pattern.vertices())
    require(radius_center(g, out.part(u).vertices()).radius <= ell + ell / 2,
            "make_topological: branch set radius exceeds floor(1.5 ell)");
  return out;
}

}  // namespace cgallai

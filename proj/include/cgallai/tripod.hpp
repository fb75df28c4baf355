#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cgallai/errors.hpp"
#include "cgallai/graph.hpp"

namespace cgallai {

/// Three far-apart vertices v_i around a connected set Q.
struct TripodProblem {
  std::array<Vertex, 3> v{};
  VertexSet q;
  std::int64_t ell = 1;
  std::int64_t d = 1;
};

struct TripodLeg {
  Path r;    // v_i .. w_i
  Vertex w = -1;
  Path b;    // w_i .. c_i, a shortest w_i-C path of length ell
  Vertex c() const { return b.back(); }
};

struct Tripoid {
  VertexSet c;
  int xi = 0;  // 0-based
  std::array<TripodLeg, 3> legs;
};

struct TripodResult {
  VertexSet z;
  std::array<VertexSet, 3> p;
  int final_case = 0;         // 1 (R close to B_xi) or 2 (two B's close)
  std::size_t iterations = 0;  // tripod_step calls, including the final one
};

struct TripodOptions {
  bool check_invariants = false;
};

namespace detail {

inline std::int64_t floor_three_halves(std::int64_t ell) { return ell + ell / 2; }

inline VertexSet tripod_allowed_zone(const Graph& g, const TripodProblem& pr, int i) {
  return set_union(ball(g, pr.v[i], pr.d - pr.ell - 1), ball(g, pr.q, pr.ell));
}

}  // namespace detail

/// Checks the tripod hypotheses; throws naming the first failure.
inline void check_tripod_problem(const Graph& g, const TripodProblem& pr) {
  require(pr.ell >= 1 && pr.d >= 1, "tripod: ell and d must be positive");
  check_ids(g, pr.q);
  for (Vertex x : pr.v)
    if (!g.valid(x)) throw InputError("tripod: vertex id out of range");
  require(is_connected_set(g, pr.q), "tripod: Q must be nonempty and connected");
  for (int i = 0; i < 3; ++i) {
    const Distance dq = dist(g, VertexSet{pr.v[i]}, pr.q);
    const std::string who = "tripod: v" + std::to_string(i + 1);
    require(dq >= pr.ell, who + " violates dist(v_i,Q) >= ell (" + dq.str() + ")");
    require(dq <= pr.d, who + " violates dist(v_i,Q) <= d (" + dq.str() + ")");
    for (int j = i + 1; j < 3; ++j) {
      const Distance dv = dist(g, pr.v[i], pr.v[j]);
      require(dv >= 2 * pr.d, "tripod: dist(v" + std::to_string(i + 1) + ",v" + std::to_string(j + 1) +
                                  ") >= 2d violated (" + dv.str() + ")");
    }
  }
}

/// Conditions (A)-(G) of a tripoid; empty iff all hold.
inline std::vector<std::string> tripoid_violations(const Graph& g, const TripodProblem& pr, const Tripoid& t) {
  std::vector<std::string> out;
  const std::int64_t ell = pr.ell;
  if (t.xi < 0 || t.xi > 2) out.push_back("(A) xi out of range");
  if (!is_subset(t.c, pr.q) || !is_connected_set(g, t.c)) out.push_back("(A) C is not a connected subgraph of Q");
  for (int i = 0; i < 3; ++i) {
    const TripodLeg& L = t.legs[i];
    const std::string tag = " for i=" + std::to_string(i + 1);
    if (!is_path_in(g, L.r) || L.r.front() != pr.v[i] || L.r.back() != L.w) {
      out.push_back("(B) R_i is not a v_i-w_i path" + tag);
      continue;
    }
    if (!dist_at_least(g, L.r.vertex_set(), t.c, ell)) out.push_back("(C) dist(R_i,C) < ell" + tag);
    if (dist(g, VertexSet{L.w}, t.c) != ell || !is_path_in(g, L.b) || L.b.front() != L.w ||
        L.b.length() != ell || !t.c.contains(L.b.back()))
      out.push_back("(D) B_i is not a shortest w_i-C path of length ell" + tag);
    if (!is_subset(L.r.vertex_set(), detail::tripod_allowed_zone(g, pr, i)))
      out.push_back("(E) R_i leaves B(v_i,d-ell-1) u B(Q,ell)" + tag);
  }
  if (!out.empty()) return out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const VertexSet ri = t.legs[i].r.vertex_set();
      if (i < j && !dist_at_least(g, ri, t.legs[j].r.vertex_set(), ell))
        out.push_back("(F) dist(R_" + std::to_string(i + 1) + ",R_" + std::to_string(j + 1) + ") < ell");
      if (j != t.xi && !dist_at_least(g, ri, t.legs[j].b.vertex_set(), ell))
        out.push_back("(G) dist(R_" + std::to_string(i + 1) + ",B_" + std::to_string(j + 1) + ") < ell");
    }
  return out;
}

/// Splits shortest v_i-Q paths at distance ell from Q; xi = first index.
inline Tripoid init_tripoid(const Graph& g, const TripodProblem& pr) {
  check_tripod_problem(g, pr);
  Tripoid t;
  t.c = pr.q;
  t.xi = 0;
  for (int i = 0; i < 3; ++i) {
    const Path s = *st_path(g, VertexSet{pr.v[i]}, pr.q);
    const auto split = static_cast<std::size_t>(s.length() - pr.ell);
    t.legs[i].r = s.subpath(0, split);
    t.legs[i].w = s[split];
    t.legs[i].b = s.subpath(split, s.size() - 1);
  }
  return t;
}

/// Conclusions (1)-(5); empty iff all hold.
inline std::vector<std::string> tripod_result_violations(const Graph& g, const TripodProblem& pr,
                                                         const TripodResult& res) {
  std::vector<std::string> out;
  if (!is_connected_set(g, res.z)) {
    out.push_back("Z is not connected");
    return out;
  }
  for (int i = 0; i < 3; ++i) {
    const std::string n = std::to_string(i + 1);
    if (!is_connected_set(g, res.p[i])) out.push_back("P_" + n + " is not connected");
    if (!res.p[i].contains(pr.v[i])) out.push_back("(1) v_" + n + " not in P_" + n);
    if (!intersects(res.z, res.p[i])) out.push_back("(1) Z misses P_" + n);
    if (!is_subset(res.p[i], detail::tripod_allowed_zone(g, pr, i)))
      out.push_back("(4) P_" + n + " leaves B(v_i,d-ell-1) u B(Q,ell)");
    for (int j = i + 1; j < 3; ++j)
      if (!dist_at_least(g, res.p[i], res.p[j], pr.ell))
        out.push_back("(5) dist(P_" + n + ",P_" + std::to_string(j + 1) + ") < ell");
  }
  if (!out.empty()) return out;
  const std::int64_t rad = radius_center(g, res.z).radius;
  if (rad > detail::floor_three_halves(pr.ell)) out.push_back("(2) radius(Z) = " + std::to_string(rad));
  if (!is_subset(res.z, ball(g, pr.q, 2 * pr.ell - 1))) out.push_back("(3) Z leaves B(Q,2ell-1)");
  return out;
}

/// One round of the improvement loop: either finishes (two direct cases) or
/// returns a tripoid with a strictly smaller C.
inline std::variant<TripodResult, Tripoid> tripod_step(const Graph& g, const TripodProblem& pr, const Tripoid& t) {
  const std::int64_t ell = pr.ell;
  const auto& L = t.legs;
  auto rset = [&](int i) { return L[i].r.vertex_set(); };
  auto bset = [&](int i) { return L[i].b.vertex_set(); };
  auto third = [](int a, int b) { return 3 - a - b; };

  // Case 1: some R_alpha comes close to B_xi.
  for (int alpha = 0; alpha < 3; ++alpha) {
    if (alpha == t.xi) continue;
    if (dist_at_least(g, rset(alpha), bset(t.xi), ell)) continue;
    const int beta = third(alpha, t.xi);
    const Path s = *st_path(g, rset(alpha), bset(t.xi));
    TripodResult res;
    res.final_case = 1;
    res.z = set_union(bset(t.xi), s.vertex_set());
    res.p[alpha] = rset(alpha);
    res.p[t.xi] = rset(t.xi);
    const VertexSet rb = rset(beta), bb = bset(beta);
    res.p[beta] = set_union({&rb, &bb, &t.c});
    return res;
  }

  // Case 2: two B's are close.
  for (int alpha = 0; alpha < 3; ++alpha)
    for (int beta = alpha + 1; beta < 3; ++beta) {
      if (dist_at_least(g, bset(alpha), bset(beta), ell)) continue;
      const int gamma = third(alpha, beta);
      const Path s = *st_path(g, bset(alpha), bset(beta));
      TripodResult res;
      res.final_case = 2;
      const VertexSet ba = bset(alpha), bb = bset(beta), ss = s.vertex_set();
      res.z = set_union({&ba, &bb, &ss});
      res.p[alpha] = rset(alpha);
      res.p[beta] = rset(beta);
      const VertexSet rg = rset(gamma), bg = bset(gamma);
      res.p[gamma] = set_union({&rg, &bg, &t.c});
      return res;
    }

  // Case 3: shrink C to the component of C - c_alpha holding the other two.
  if (t.c.size() < 3) throw ContractError("tripod: reached the shrinking case with |C| < 3");
  for (int alpha = 0; alpha < 3; ++alpha) {
    const int beta = (alpha + 1) % 3;
    const int gamma = (alpha + 2) % 3;
    const Vertex ca = L[alpha].c();
    VertexSet rest = t.c;
    {
      std::vector<Vertex> ids = rest.ids();
      std::erase(ids, ca);
      rest = VertexSet(std::move(ids));
    }
    const VertexMask mask = make_mask(g, rest);
    const Vertex cb = L[beta].c();
    const BfsResult comp = bfs(g, std::span<const Vertex>(&cb, 1), {.allowed = &mask});
    if (!comp.reached(L[gamma].c())) continue;
    const VertexSet dset(comp.order);

    Tripoid next = t;
    next.c = dset;
    next.xi = alpha;
    TripodLeg& leg = next.legs[alpha];
    const Distance dw = dist(g, VertexSet{leg.w}, dset);
    if (dw == ell) {
      leg.b = *st_path(g, VertexSet{leg.w}, dset);
    } else {
      require(dw > ell, "tripod: dist(w_alpha, D) < ell");
      const Vertex w2 = leg.b[1];
      Vertex c2 = -1;
      for (Vertex x : g.neighbors(ca))
        if (dset.contains(x)) {
          c2 = x;
          break;
        }
      require(c2 >= 0, "tripod: c_alpha has no neighbour in D");
      leg.r.push_back(w2);
      leg.w = w2;
      Path nb = leg.b.subpath(1, leg.b.size() - 1);
      nb.push_back(c2);
      leg.b = std::move(nb);
    }
    return next;
  }
  throw ContractError("tripod: no alpha separates the other two attachment points");
}

/// Runs the improvement loop to completion and verifies all five conclusions.
inline TripodResult tripod(const Graph& g, const TripodProblem& pr, const TripodOptions& opt = {}) {
  Tripoid t = init_tripoid(g, pr);
  const std::size_t bound = pr.q.size();
  for (std::size_t it = 1;; ++it) {
    if (opt.check_invariants) {
      const auto bad = tripoid_violations(g, pr, t);
      if (!bad.empty()) throw ContractError("tripod: tripoid invariant " + bad.front());
    }
    require(it <= bound, "tripod: iteration bound |Q| exceeded");
    auto step = tripod_step(g, pr, t);
    if (auto* done = std::get_if<TripodResult>(&step)) {
      done->iterations = it;
      const auto bad = tripod_result_violations(g, pr, *done);
      if (!bad.empty()) throw ContractError("tripod: conclusion " + bad.front());
      return *done;
    }
    Tripoid next = std::get<Tripoid>(std::move(step));
    require(next.c.size() < t.c.size(), "tripod: C did not shrink");
    t = std::move(next);
  }
}

}  // namespace cgallai

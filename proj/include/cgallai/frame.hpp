#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cgallai/augment.hpp"
#include "cgallai/errors.hpp"
#include "cgallai/forest.hpp"
#include "cgallai/graph.hpp"
#include "cgallai/model.hpp"

namespace cgallai {

/// Derived constants of the solver for given k and d.
struct SolveParams {
  std::int64_t k = 1;
  std::int64_t d = 1;
  bool coarse = false;
  std::int64_t f = 0;  // hitting-set size bound 4k-4
  std::int64_t g = 0;  // hitting radius 256^k d
  std::int64_t r = 0;  // branch-set radius bound 4 16^(2k-2) d

  static SolveParams make(std::int64_t k, std::int64_t d, bool coarse = false) {
    if (k < 1 || d < 1) throw InputError("k and d must be positive");
    constexpr std::int64_t kCap = std::int64_t{1} << 62;
    // 256^k d < 2^62 requires 8k + log2(d) < 62.
    if (k > 7 || d >= (kCap >> (8 * k)))
      throw ParameterRangeError("256^k * d does not fit: k=" + std::to_string(k) + " d=" + std::to_string(d));
    SolveParams p;
    p.k = k;
    p.d = d;
    p.coarse = coarse;
    p.f = 4 * k - 4;
    p.g = pow16(2 * k) * d;
    p.r = 4 * pow16(2 * k - 2) * d;
    return p;
  }

  std::int64_t steps() const { return 2 * k - 1; }
  /// Fatness of the frame with index i: 16^(2k-1-i) d.
  std::int64_t frame_fatness(std::int64_t i) const { return pow16(2 * k - 1 - i) * d; }
  /// ell used by the step that extends frame i.
  std::int64_t step_ell(std::int64_t i) const { return frame_fatness(i + 1); }

 private:
  static std::int64_t pow16(std::int64_t e) {
    std::int64_t out = 1;
    for (std::int64_t j = 0; j < e; ++j) out *= 16;
    return out;
  }
};

struct Frame {
  FatModel model;
  std::int64_t i = 0;
  std::int64_t ell = 1;
  std::int64_t r = 1;
  bool coarse = false;
  VertexSet a;
};

inline Frame empty_frame(const SolveParams& p, VertexSet a) {
  return Frame{FatModel{PatternGraph(true), {}, {}}, 0, p.frame_fatness(0), p.r, p.coarse, std::move(a)};
}

/// (f1)-(f5), model validity and coarseness; each entry starts with its tag.
inline std::vector<std::string> validate_frame(const Graph& g, const Frame& fr) {
  std::vector<std::string> out;
  const FatModel& m = fr.model;
  if (!m.pattern.is_forest() || !m.pattern.max_degree_at_most(3)) {
    out.push_back("(F) pattern is not a subcubic forest");
    return out;
  }
  for (const auto& v : validate_model(g, m)) out.push_back("(model) " + v.message);
  if (!out.empty()) return out;

  const DegreeClasses dc = degree_classes(m.pattern);
  const auto low = static_cast<std::int64_t>(dc.v0.size() + dc.v1.size() + dc.v2.size()) - dc.m;
  if (low != fr.i) out.push_back("(f1) i=" + std::to_string(fr.i) + " but |V0|+|V1|+|V2|-m=" + std::to_string(low));
  if (!is_fat(g, m, fr.ell)) out.push_back("(f2) model is not " + std::to_string(fr.ell) + "-fat");
  for (PatternVertex v : m.pattern.vertices()) {
    const auto rad = radius_center(g, m.part(v).vertices()).radius;
    if (rad > fr.r) out.push_back("(f3) radius of " + to_string(v) + " is " + std::to_string(rad));
  }
  for (const auto* cls : {&dc.v1, &dc.v2})
    for (PatternVertex v : *cls)
      if (!intersects(fr.a, m.part(v).vertices())) out.push_back("(f4) branch set of " + to_string(v) + " misses A");
  for (PatternVertex v : dc.v0) {
    const Part& p = m.part(v);
    if (!p.is_path() || p.path().size() < 2 || !fr.a.contains(p.path().front()) || !fr.a.contains(p.path().back()))
      out.push_back("(f5) branch set of " + to_string(v) + " is not an A-path");
  }
  if (fr.coarse && !dc.v0.empty()) out.push_back("(coarse) frame has isolated pattern vertices");
  return out;
}

struct AvoidingPath {
  Path path;     // from a to a'
  bool coarse;   // dist_G(a, a') >= ell
};

/// An A-path inside G[allowed], ell-coarse when any avoiding component has
/// such a pair; otherwise the least pair of the first component with two
/// A-vertices.
inline std::optional<AvoidingPath> find_avoiding_a_path(const Graph& g, const VertexSet& a, const VertexMask& allowed,
                                                        std::int64_t ell) {
  VertexMask seen(static_cast<std::size_t>(g.size()), 0);
  std::optional<std::pair<Vertex, Vertex>> fallback;
  for (Vertex s : a) {
    if (seen[s] || !allowed[s]) continue;
    const BfsResult comp = bfs(g, std::span<const Vertex>(&s, 1), {.allowed = &allowed});
    std::vector<Vertex> as;
    for (Vertex x : comp.order) {
      seen[x] = 1;
      if (a.contains(x)) as.push_back(x);
    }
    if (as.size() < 2) continue;
    std::sort(as.begin(), as.end());
    if (!fallback) fallback = std::make_pair(as[0], as[1]);

    // One BFS from the least A-vertex either finds a far partner or, when
    // every A-vertex is within (ell-1)/2 of it, rules out any far pair.
    const BfsResult first = bfs(g, std::span<const Vertex>(&as[0], 1), {.limit = ell - 1});
    std::int64_t spread = 0;
    std::optional<Vertex> partner;
    for (Vertex x : as) {
      if (!first.reached(x)) {
        partner = x;
        break;
      }
      spread = std::max<std::int64_t>(spread, first.depth[x]);
    }
    std::optional<std::pair<Vertex, Vertex>> pair;
    if (partner) {
      pair = std::make_pair(as[0], *partner);
    } else if (2 * spread >= ell) {
      for (std::size_t j = 1; j < as.size() && !pair; ++j) {
        const BfsResult r = bfs(g, std::span<const Vertex>(&as[j], 1), {.limit = ell - 1});
        for (std::size_t k = j + 1; k < as.size(); ++k)
          if (!r.reached(as[k])) {
            pair = std::make_pair(as[j], as[k]);
            break;
          }
      }
    }
    if (pair) return AvoidingPath{*st_path(g, VertexSet{pair->first}, VertexSet{pair->second}, &allowed), true};
  }
  if (!fallback) return std::nullopt;
  const Path p = *st_path(g, VertexSet{fallback->first}, VertexSet{fallback->second}, &allowed);
  return AvoidingPath{p, dist(g, fallback->first, fallback->second) >= ell};
}

struct NewFrame {
  Frame frame;
  int case_id = 0;       // 1 augment, 2 new K2, 3 new isolated A-path
  int augment_case = 0;  // when case_id == 1
};

struct HitSet {
  VertexSet x;
  std::int64_t radius = 0;                      // r + 8 ell
  std::optional<std::int64_t> coarse_threshold;  // set when only ell-coarse A-paths are hit
};

struct ExtendOptions {
  bool check_invariants = false;
};

/// One induction step: grows a frame of fatness >= 16 ell into a frame of
/// fatness ell with index i+1, or returns a small hitting set.
inline std::variant<NewFrame, HitSet> extend_or_hit(const Graph& g, const Frame& fr, std::int64_t ell,
                                                    const ExtendOptions& opt = {}) {
  require(ell >= 1, "extend_or_hit: ell must be positive");
  require(fr.r >= 4 * ell, "extend_or_hit: need r >= 4ell");
  require(fr.ell >= 16 * ell, "extend_or_hit: frame must be 16ell-fat");
  if (opt.check_invariants) {
    const auto bad = validate_frame(g, fr);
    if (!bad.empty()) throw ContractError("extend_or_hit: input frame invalid: " + bad.front());
  }

  const SimpleModel sm = fat_to_clean(g, fr.model, 8 * ell, 4 * ell);
  const FatModel& m = sm.model();

  std::vector<Vertex> centers;
  for (PatternVertex v : m.pattern.vertices()) centers.push_back(radius_center(g, m.part(v).vertices()).center);
  const VertexSet x(std::move(centers));
  require(static_cast<std::int64_t>(x.size()) <= 2 * fr.i, "extend_or_hit: |X| > 2i");

  const std::int64_t hit_radius = fr.r + 8 * ell;
  VertexMask allowed(static_cast<std::size_t>(g.size()), 1);
  for (Vertex v : ball(g, x, hit_radius)) allowed[v] = 0;
  const auto found = find_avoiding_a_path(g, fr.a, allowed, ell);
  if (!found) return HitSet{x, hit_radius, std::nullopt};

  const Path& p = found->path;
  const Vertex a = p.front();
  const Vertex a2 = p.back();

  Frame next{m, fr.i + 1, ell, fr.r, fr.coarse, fr.a};
  NewFrame res;

  const VertexSet edge_parts = m.union_of_branch_parts();
  std::optional<std::size_t> hit_idx;
  if (!edge_parts.empty()) {
    const BfsResult near = bfs(g, edge_parts.span(), {.limit = 4 * ell});
    for (std::size_t j = 0; j < p.size() && !hit_idx; ++j)
      if (near.reached(p[j])) hit_idx = j;
  }

  if (hit_idx) {
    // Case 1: P comes within 4 ell of a branch path.
    const Path p1 = p.subpath(0, *hit_idx);
    const Vertex w = p1.back();
    std::optional<PatternEdge> yz;
    for (PatternEdge e : m.pattern.edges())
      if (dist_within(g, VertexSet{w}, m.part(e).vertices(), 4 * ell).finite()) {
        yz = e;
        break;
      }
    require(yz.has_value(), "extend_or_hit: no branch path near w");
    AugmentResult ar = augment(g, sm, a, *yz, p1, ell, AugmentOptions{.check_invariants = opt.check_invariants});
    next.model = std::move(ar.model);
    res.case_id = 1;
    res.augment_case = ar.case_id;
  } else if (found->coarse) {
    // Case 2: a new K2 whose ends sit on a and a'.
    const auto k2 = next.model.pattern.add_k2();
    next.model.branch_sets[k2.first] = Part(VertexSet{a});
    next.model.branch_sets[k2.second] = Part(VertexSet{a2});
    next.model.branch_parts[k2.edge] = Part(p);
    res.case_id = 2;
  } else {
    // Case 3: no ell-coarse avoiding A-path exists.
    if (fr.coarse) return HitSet{x, hit_radius, ell};
    const PatternVertex h = next.model.pattern.add_isolated();
    next.model.branch_sets[h] = Part(*st_path(g, a, a2));
    res.case_id = 3;
  }

  const auto bad = validate_frame(g, next);
  if (!bad.empty()) throw ContractError("extend_or_hit: new frame invalid: " + bad.front());
  res.frame = std::move(next);
  return res;
}

/// At least (i+1)/2 A-paths pairwise at distance >= fr.ell, drawn from the
/// isolated A-path branch sets and Z-paths of the forest.
inline std::vector<Path> frame_to_packing(const Graph& g, const Frame& fr) {
  require(fr.i >= 1 && fr.i % 2 == 1, "frame_to_packing: i must be odd and positive");
  const FatModel& m = fr.model;
  const DegreeClasses dc = degree_classes(m.pattern);
  std::vector<Path> out;
  for (PatternVertex v : dc.v0) out.push_back(m.part(v).path());

  std::vector<PatternVertex> z = dc.v1;
  z.insert(z.end(), dc.v2.begin(), dc.v2.end());
  std::sort(z.begin(), z.end());
  for (const auto& q : extract_z_paths(m.pattern, z)) {
    std::vector<Vertex> host;
    auto add = [&host](const Part& part) { host.insert(host.end(), part.vertices().begin(), part.vertices().end()); };
    for (std::size_t j = 0; j < q.size(); ++j) {
      add(m.part(q[j]));
      if (j + 1 < q.size()) {
        std::optional<PatternEdge> e;
        for (PatternEdge f : m.pattern.incident_edges(q[j]))
          if (m.pattern.other_end(f, q[j]) == q[j + 1]) e = f;
        require(e.has_value(), "frame_to_packing: Z-path uses a non-edge");
        add(m.part(*e));
      }
    }
    const VertexSet inside(std::move(host));
    const VertexSet ax = set_intersection(fr.a, m.part(q.front()).vertices());
    const VertexSet ay = set_intersection(fr.a, m.part(q.back()).vertices());
    require(!ax.empty() && !ay.empty(), "frame_to_packing: Z endpoint without an A-vertex");
    const VertexMask mask = make_mask(g, inside);
    const auto path = st_path(g, VertexSet{ax.front()}, VertexSet{ay.front()}, &mask);
    require(path.has_value(), "frame_to_packing: union of parts along a Z-path is disconnected");
    out.push_back(*path);
  }
  require(static_cast<std::int64_t>(out.size()) >= (fr.i + 1) / 2, "frame_to_packing: too few paths");
  return out;
}

struct Packing {
  std::vector<Path> paths;
  std::int64_t d = 1;
  bool coarse = false;
};

struct Hitting {
  VertexSet x;
  std::int64_t radius = 0;
  std::optional<std::int64_t> coarse_threshold;
};

using Certificate = std::variant<Packing, Hitting>;

struct StepInfo {
  std::int64_t i = 0;     // index of the frame produced
  std::int64_t ell = 0;
  int case_id = 0;
  int augment_case = 0;
};

struct SolveOptions {
  bool check_invariants = false;
  std::function<void(const Frame&, const StepInfo&)> frame_observer;
};

/// Either k A-paths pairwise at distance >= d (d-coarse in coarse mode) or a
/// set X of at most 4k-4 vertices whose g-balls meet every (g-coarse) A-path.
inline Certificate solve(const Graph& g, const VertexSet& a, const SolveParams& params, const SolveOptions& opt = {}) {
  check_ids(g, a);
  Frame fr = empty_frame(params, a);
  for (std::int64_t i = 0; i < params.steps(); ++i) {
    const std::int64_t ell = params.step_ell(i);
    auto step = extend_or_hit(g, fr, ell, ExtendOptions{.check_invariants = opt.check_invariants});
    if (auto* hit = std::get_if<HitSet>(&step)) {
      require(static_cast<std::int64_t>(hit->x.size()) <= params.f, "solve: hitting set exceeds 4k-4");
      require(hit->radius <= params.g, "solve: hitting radius exceeds g");
      return Hitting{hit->x, params.g, params.coarse ? std::optional<std::int64_t>(params.g) : std::nullopt};
    }
    NewFrame nf = std::get<NewFrame>(std::move(step));
    fr = std::move(nf.frame);
    require(fr.ell == params.frame_fatness(i + 1), "solve: frame fatness off schedule");
    if (opt.check_invariants) {
      const auto bad = validate_frame(g, fr);
      if (!bad.empty()) throw ContractError("solve: frame " + std::to_string(fr.i) + " invalid: " + bad.front());
    }
    if (opt.frame_observer) opt.frame_observer(fr, StepInfo{fr.i, ell, nf.case_id, nf.augment_case});
  }
  std::vector<Path> paths = frame_to_packing(g, fr);
  std::sort(paths.begin(), paths.end(), [](const Path& x, const Path& y) {
    return *std::min_element(x.begin(), x.end()) < *std::min_element(y.begin(), y.end());
  });
  paths.resize(static_cast<std::size_t>(params.k));
  return Packing{std::move(paths), params.d, params.coarse};
}

}  // namespace cgallai

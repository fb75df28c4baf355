#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cgallai/errors.hpp"
#include "cgallai/graph.hpp"
#include "cgallai/pattern.hpp"

namespace cgallai {

/// The host subgraph assigned to one pattern element: a connected vertex
/// set, optionally carrying an explicit path order.
class Part {
 public:
  Part() = default;
  explicit Part(VertexSet vertices) : vertices_(std::move(vertices)) {}
  explicit Part(Path path) : vertices_(path.vertex_set()), path_(std::move(path)) {}

  const VertexSet& vertices() const { return vertices_; }
  bool is_path() const { return path_.has_value(); }
  const Path& path() const {
    if (!path_) throw ContractError("part has no path order");
    return *path_;
  }

  friend bool operator==(const Part&, const Part&) = default;

 private:
  VertexSet vertices_;
  std::optional<Path> path_;
};

using ModelElement = std::variant<PatternVertex, PatternEdge>;

inline std::string to_string(const ModelElement& x) {
  return std::visit([](auto e) { return to_string(e); }, x);
}

/// A model (M_x | x in V(H) u E(H)) of `pattern` in a host graph.
struct FatModel {
  PatternGraph pattern;
  std::map<PatternVertex, Part> branch_sets;
  std::map<PatternEdge, Part> branch_parts;

  const Part& part(PatternVertex v) const { return lookup(branch_sets, v); }
  const Part& part(PatternEdge e) const { return lookup(branch_parts, e); }
  const Part& part(const ModelElement& x) const {
    return std::visit([this](auto e) -> const Part& { return part(e); }, x);
  }

  std::vector<ModelElement> elements() const {
    std::vector<ModelElement> out;
    for (PatternVertex v : pattern.vertices()) out.emplace_back(v);
    for (PatternEdge e : pattern.edges()) out.emplace_back(e);
    return out;
  }

  /// Vertex-edge pairs that are incident are exempt from fatness.
  bool exempt(const ModelElement& x, const ModelElement& y) const {
    if (const auto* v = std::get_if<PatternVertex>(&x))
      if (const auto* e = std::get_if<PatternEdge>(&y)) return pattern.incident(*v, *e);
    if (const auto* e = std::get_if<PatternEdge>(&x))
      if (const auto* v = std::get_if<PatternVertex>(&y)) return pattern.incident(*v, *e);
    return false;
  }

  VertexSet union_of_branch_sets() const {
    std::vector<Vertex> all;
    for (const auto& [_, p] : branch_sets) all.insert(all.end(), p.vertices().begin(), p.vertices().end());
    return VertexSet(std::move(all));
  }
  VertexSet union_of_branch_parts() const {
    std::vector<Vertex> all;
    for (const auto& [_, p] : branch_parts) all.insert(all.end(), p.vertices().begin(), p.vertices().end());
    return VertexSet(std::move(all));
  }

 private:
  template <class Key>
  static const Part& lookup(const std::map<Key, Part>& parts, Key k) {
    auto it = parts.find(k);
    if (it == parts.end()) throw InputError("no part for pattern element " + to_string(k));
    return it->second;
  }
};

struct ModelViolation {
  enum class Kind {
    kEmptyPart,
    kDisconnectedPart,
    kInvalidPath,
    kIncidentDisjoint,     // incident vertex/edge parts do not meet
    kSharedEndpointLeak,   // M_x n M_y not inside M_z for edges sharing z
    kNonIncidentOverlap,   // non-incident parts intersect
  };
  Kind kind;
  ModelElement first;
  std::optional<ModelElement> second;
  std::string message;
};

/// Empty iff every part is connected, incident vertex-edge parts meet,
/// edges sharing an endpoint z meet only inside M_z, and non-incident parts
/// are disjoint.
inline std::vector<ModelViolation> validate_model(const Graph& g, const FatModel& m) {
  using K = ModelViolation::Kind;
  for (const auto& [v, _] : m.branch_sets)
    if (!m.pattern.has_vertex(v)) throw InputError("part for unknown pattern vertex " + to_string(v));
  for (const auto& [e, _] : m.branch_parts)
    if (!m.pattern.has_edge(e)) throw InputError("part for unknown pattern edge " + to_string(e));

  std::vector<ModelViolation> out;
  const auto elems = m.elements();
  for (const auto& x : elems) {
    const Part& p = m.part(x);
    check_ids(g, p.vertices());
    if (p.vertices().empty()) {
      out.push_back({K::kEmptyPart, x, std::nullopt, to_string(x) + " has an empty part"});
      continue;
    }
    if (p.is_path() && !is_path_in(g, p.path()))
      out.push_back({K::kInvalidPath, x, std::nullopt, to_string(x) + " path is not a path of G"});
    if (!is_connected_set(g, p.vertices()))
      out.push_back({K::kDisconnectedPart, x, std::nullopt, to_string(x) + " part is disconnected"});
  }

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const auto& x = elems[i];
      const auto& y = elems[j];
      const VertexSet& px = m.part(x).vertices();
      const VertexSet& py = m.part(y).vertices();
      const std::string pair = "(" + to_string(x) + "," + to_string(y) + ")";
      if (m.exempt(x, y)) {
        if (!intersects(px, py)) out.push_back({K::kIncidentDisjoint, x, y, "incident pair " + pair + " does not meet"});
        continue;
      }
      const auto* ex = std::get_if<PatternEdge>(&x);
      const auto* ey = std::get_if<PatternEdge>(&y);
      if (ex && ey) {
        if (auto z = m.pattern.shared_endpoint(*ex, *ey)) {
          if (!is_subset(set_intersection(px, py), m.part(*z).vertices()))
            out.push_back({K::kSharedEndpointLeak, x, y,
                           "edges " + pair + " meet outside the part of " + to_string(*z)});
          continue;
        }
      }
      if (intersects(px, py)) out.push_back({K::kNonIncidentOverlap, x, y, "non-incident pair " + pair + " intersects"});
    }
  }
  return out;
}

/// Minimum distance over non-exempt pairs; unbounded when there is no pair.
struct Fatness {
  Distance min_distance = Distance::unreachable();
  bool unbounded() const { return !min_distance.finite(); }
  bool at_least(std::int64_t ell) const { return min_distance >= ell; }
  std::string str() const { return unbounded() ? "unbounded" : min_distance.str(); }
};

inline void require_valid_model(const Graph& g, const FatModel& m, const std::string& who) {
  const auto violations = validate_model(g, m);
  if (!violations.empty()) throw ContractError(who + ": invalid model: " + violations.front().message);
}

inline Fatness fatness(const Graph& g, const FatModel& m) {
  require_valid_model(g, m, "fatness");
  const auto elems = m.elements();
  Fatness f;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const BfsResult r = bfs(g, m.part(elems[i]).vertices().span());
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (m.exempt(elems[i], elems[j])) continue;
      for (Vertex v : m.part(elems[j]).vertices())
        if (r.reached(v)) f.min_distance = std::min(f.min_distance, Distance(r.depth[v]));
    }
  }
  return f;
}

/// Whether every non-exempt pair is at distance >= ell. Only explores balls
/// of radius ell - 1, so it is cheaper than `fatness` on large hosts.
inline bool is_fat(const Graph& g, const FatModel& m, std::int64_t ell) {
  if (ell <= 0) return true;
  const auto elems = m.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const BfsResult r = bfs(g, m.part(elems[i]).vertices().span(), {.limit = ell - 1});
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j || m.exempt(elems[i], elems[j])) continue;
      for (Vertex v : m.part(elems[j]).vertices())
        if (r.reached(v)) return false;
    }
  }
  return true;
}

/// A model whose every branch path is an explicit V(M_u)-V(M_v) path,
/// oriented from the part of the edge's first endpoint.
class SimpleModel {
 public:
  static SimpleModel from(const Graph& g, FatModel m) {
    for (PatternEdge e : m.pattern.edges()) {
      const Part& part = m.part(e);
      if (!part.is_path()) throw ContractError("model is not simple: " + to_string(e) + " has no path form");
      const Path& p = part.path();
      if (!is_path_in(g, p)) throw ContractError("model is not simple: " + to_string(e) + " is not a path of G");
      auto [u, v] = m.pattern.endpoints(e);
      const VertexSet& mu = m.part(u).vertices();
      const VertexSet& mv = m.part(v).vertices();
      Path oriented = p;
      if (mv.contains(p.front()) && mu.contains(p.back())) oriented = p.reversed();
      if (!mu.contains(oriented.front()) || !mv.contains(oriented.back()))
        throw ContractError("model is not simple: " + to_string(e) + " does not join its branch sets");
      for (std::size_t i = 1; i + 1 < oriented.size(); ++i)
        if (mu.contains(oriented[i]) || mv.contains(oriented[i]))
          throw ContractError("model is not simple: " + to_string(e) + " has an internal vertex in a branch set");
      if (oriented.size() < 2 && !(mu.contains(oriented.front()) && mv.contains(oriented.front())))
        throw ContractError("model is not simple: " + to_string(e));
      m.branch_parts[e] = Part(std::move(oriented));
    }
    return SimpleModel(std::move(m));
  }

  const FatModel& model() const { return model_; }
  const PatternGraph& pattern() const { return model_.pattern; }
  /// Branch path of e, starting in the part of endpoints(e).first.
  const Path& path(PatternEdge e) const { return model_.part(e).path(); }

 private:
  explicit SimpleModel(FatModel m) : model_(std::move(m)) {}
  FatModel model_;
};

/// For every incident pair (v, e) and every i in 0..ell, exactly one vertex of
/// M_e lies at distance i from M_v.
inline bool is_clean(const Graph& g, const SimpleModel& sm, std::int64_t ell) {
  const FatModel& m = sm.model();
  for (PatternEdge e : m.pattern.edges()) {
    const Path& p = sm.path(e);
    auto [a, b] = m.pattern.endpoints(e);
    for (PatternVertex v : {a, b}) {
      const BfsResult r = bfs(g, m.part(v).vertices().span(), {.limit = ell});
      std::vector<int> count(static_cast<std::size_t>(ell) + 1, 0);
      for (Vertex x : p)
        if (r.reached(x)) ++count[r.depth[x]];
      for (int c : count)
        if (c != 1) return false;
    }
  }
  return true;
}

/// Keeps every branch set and reroutes each branch path as
/// u'' W_u u' W_uv v' W_v v'': W_uv a B(M_u,ell)-B(M_v,ell) path inside the
/// old part, W_u and W_v shortest attachments of length ell. A
/// (q + 2 ell)-fat input yields a q-fat, ell-clean simple model.
inline SimpleModel fat_to_clean(const Graph& g, const FatModel& m, std::int64_t q, std::int64_t ell) {
  require(q >= ell && ell >= 1, "fat_to_clean: need q >= ell >= 1");
  require_valid_model(g, m, "fat_to_clean");
  if (!is_fat(g, m, q + 2 * ell))
    throw ContractError("fat_to_clean: model must be " + std::to_string(q + 2 * ell) +
                        "-fat, measured fatness " + fatness(g, m).str());

  FatModel out;
  out.pattern = m.pattern;
  out.branch_sets = m.branch_sets;
  for (PatternEdge e : m.pattern.edges()) {
    auto [u, v] = m.pattern.endpoints(e);
    const VertexSet& mu = m.part(u).vertices();
    const VertexSet& mv = m.part(v).vertices();
    const VertexSet& old = m.part(e).vertices();
    const VertexMask inside = make_mask(g, old);
    const VertexSet near_u = set_intersection(ball(g, mu, ell), old);
    const VertexSet near_v = set_intersection(ball(g, mv, ell), old);
    const auto w_uv = st_path(g, near_u, near_v, &inside);
    if (!w_uv) throw ContractError("fat_to_clean: no ball-to-ball path inside the part of " + to_string(e));
    const auto w_u = st_path(g, mu, VertexSet{w_uv->front()});
    const auto w_v = st_path(g, mv, VertexSet{w_uv->back()});
    require(w_u && w_u->length() == ell && w_v && w_v->length() == ell,
            "fat_to_clean: attachment paths must have length ell");
    std::vector<Vertex> seq(w_u->begin(), w_u->end());
    seq.insert(seq.end(), w_uv->begin() + 1, w_uv->end());
    const Path back = w_v->reversed();
    seq.insert(seq.end(), back.begin() + 1, back.end());
    out.branch_parts[e] = Part(Path(std::move(seq)));
  }

  SimpleModel result = SimpleModel::from(g, std::move(out));
  require(validate_model(g, result.model()).empty(), "fat_to_clean: output is not a model");
  require(is_fat(g, result.model(), q), "fat_to_clean: output is not q-fat");
  require(is_clean(g, result, ell), "fat_to_clean: output is not ell-clean");
  return result;
}

/// Human-readable listing of pattern elements and their vertex sets.
inline std::string dump_model(const FatModel& m) {
  std::ostringstream os;
  auto put = [&os](const Part& p) {
    os << (p.is_path() ? " path:" : " set:");
    if (p.is_path())
      for (Vertex x : p.path()) os << ' ' << x;
    else
      for (Vertex x : p.vertices()) os << ' ' << x;
    os << '\n';
  };
  for (PatternVertex v : m.pattern.vertices()) {
    os << "vertex " << v.id << " deg " << m.pattern.degree(v);
    if (auto it = m.branch_sets.find(v); it != m.branch_sets.end()) put(it->second); else os << " (none)\n";
  }
  for (PatternEdge e : m.pattern.edges()) {
    auto [a, b] = m.pattern.endpoints(e);
    os << "edge " << e.id << " " << a.id << "-" << b.id;
    if (auto it = m.branch_parts.find(e); it != m.branch_parts.end()) put(it->second); else os << " (none)\n";
  }
  return os.str();
}

}  // namespace cgallai

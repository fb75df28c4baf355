#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgallai/errors.hpp"

namespace cgallai {

struct PatternVertex {
  int id = -1;
  friend auto operator<=>(PatternVertex, PatternVertex) = default;
};

struct PatternEdge {
  int id = -1;
  friend auto operator<=>(PatternEdge, PatternEdge) = default;
};

inline std::string to_string(PatternVertex v) { return "v" + std::to_string(v.id); }
inline std::string to_string(PatternEdge e) { return "e" + std::to_string(e.id); }

/// The graph being modelled (H, F, H', H'' ...). Vertices are never removed,
/// so vertex ids are dense; edge ids are stable and never reused.
class PatternGraph {
 public:
  struct Subdivision {
    PatternVertex middle;
    PatternEdge first;   // joins the edge's first endpoint to `middle`
    PatternEdge second;  // joins `middle` to the edge's second endpoint
  };
  struct Leaf {
    PatternVertex vertex;
    PatternEdge edge;
  };
  struct K2 {
    PatternVertex first;
    PatternVertex second;
    PatternEdge edge;
  };

  PatternGraph() = default;
  explicit PatternGraph(bool subcubic) : subcubic_(subcubic) {}

  bool subcubic_enforced() const { return subcubic_; }
  int vertex_count() const { return static_cast<int>(incident_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return incident_.empty(); }

  bool has_vertex(PatternVertex v) const { return v.id >= 0 && v.id < vertex_count(); }
  bool has_edge(PatternEdge e) const { return edges_.contains(e.id); }

  std::vector<PatternVertex> vertices() const {
    std::vector<PatternVertex> out;
    for (int i = 0; i < vertex_count(); ++i) out.push_back({i});
    return out;
  }
  std::vector<PatternEdge> edges() const {
    std::vector<PatternEdge> out;
    for (const auto& [id, _] : edges_) out.push_back({id});
    return out;
  }

  std::pair<PatternVertex, PatternVertex> endpoints(PatternEdge e) const {
    auto it = edges_.find(e.id);
    if (it == edges_.end()) throw InputError("unknown pattern edge " + to_string(e));
    return it->second;
  }
  PatternVertex other_end(PatternEdge e, PatternVertex v) const {
    auto [a, b] = endpoints(e);
    if (a == v) return b;
    if (b == v) return a;
    throw ContractError(to_string(v) + " is not an endpoint of " + to_string(e));
  }
  bool incident(PatternVertex v, PatternEdge e) const {
    auto [a, b] = endpoints(e);
    return a == v || b == v;
  }
  /// Two distinct edges sharing an endpoint; returns that endpoint.
  std::optional<PatternVertex> shared_endpoint(PatternEdge e, PatternEdge f) const {
    if (e == f) return std::nullopt;
    auto [a, b] = endpoints(e);
    auto [c, d] = endpoints(f);
    if (a == c || a == d) return a;
    if (b == c || b == d) return b;
    return std::nullopt;
  }

  int degree(PatternVertex v) const { return static_cast<int>(incident_edges(v).size()); }
  const std::vector<PatternEdge>& incident_edges(PatternVertex v) const {
    if (!has_vertex(v)) throw InputError("unknown pattern vertex " + to_string(v));
    return incident_[v.id];
  }
  std::vector<PatternVertex> neighbors(PatternVertex v) const {
    std::vector<PatternVertex> out;
    for (PatternEdge e : incident_edges(v)) out.push_back(other_end(e, v));
    std::sort(out.begin(), out.end());
    return out;
  }

  PatternVertex add_vertex() {
    incident_.emplace_back();
    return {vertex_count() - 1};
  }

  PatternEdge add_edge(PatternVertex u, PatternVertex v) {
    if (!has_vertex(u) || !has_vertex(v)) throw InputError("add_edge: unknown endpoint");
    if (u == v) throw ContractError("pattern graphs are simple: loop at " + to_string(u));
    for (PatternEdge e : incident_[u.id])
      if (other_end(e, u) == v)
        throw ContractError("pattern graphs are simple: parallel edge " + to_string(u) + to_string(v));
    if (subcubic_ && (degree(u) >= 3 || degree(v) >= 3))
      throw ContractError("edge " + to_string(u) + "-" + to_string(v) + " would exceed degree 3");
    const PatternEdge e{next_edge_++};
    edges_.emplace(e.id, std::make_pair(u, v));
    insert_sorted(incident_[u.id], e);
    insert_sorted(incident_[v.id], e);
    return e;
  }

  void remove_edge(PatternEdge e) {
    auto [u, v] = endpoints(e);
    std::erase(incident_[u.id], e);
    std::erase(incident_[v.id], e);
    edges_.erase(e.id);
  }

  /// Replaces edge uv by u-h-v with a fresh vertex h.
  Subdivision subdivide(PatternEdge e) {
    auto [u, v] = endpoints(e);
    remove_edge(e);
    const PatternVertex h = add_vertex();
    const PatternEdge first = add_edge(u, h);
    const PatternEdge second = add_edge(h, v);
    return {h, first, second};
  }

  Leaf add_leaf(PatternVertex at) {
    if (!has_vertex(at)) throw InputError("add_leaf: unknown vertex");
    // Check before adding, so a refused leaf leaves the graph untouched.
    if (subcubic_ && degree(at) >= 3) throw ContractError("leaf at " + to_string(at) + " would exceed degree 3");
    const PatternVertex h = add_vertex();
    return {h, add_edge(at, h)};
  }

  PatternVertex add_isolated() { return add_vertex(); }

  K2 add_k2() {
    const PatternVertex a = add_vertex();
    const PatternVertex b = add_vertex();
    return {a, b, add_edge(a, b)};
  }

  bool max_degree_at_most(int bound) const {
    return std::all_of(incident_.begin(), incident_.end(),
                       [&](const auto& list) { return static_cast<int>(list.size()) <= bound; });
  }

  /// Component label per vertex (labels ordered by least vertex).
  std::vector<int> component_labels() const {
    std::vector<int> label(incident_.size(), -1);
    int next = 0;
    for (int s = 0; s < vertex_count(); ++s) {
      if (label[s] >= 0) continue;
      std::vector<int> stack{s};
      label[s] = next;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (PatternVertex y : neighbors({x}))
          if (label[y.id] < 0) {
            label[y.id] = next;
            stack.push_back(y.id);
          }
      }
      ++next;
    }
    return label;
  }

  bool is_forest() const {
    const auto labels = component_labels();
    const int comps = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    return edge_count() == vertex_count() - comps;
  }

 private:
  static void insert_sorted(std::vector<PatternEdge>& list, PatternEdge e) {
    list.insert(std::lower_bound(list.begin(), list.end(), e), e);
  }

  bool subcubic_ = true;
  std::vector<std::vector<PatternEdge>> incident_;
  std::map<int, std::pair<PatternVertex, PatternVertex>> edges_;
  int next_edge_ = 0;
};

}  // namespace cgallai

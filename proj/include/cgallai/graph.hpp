#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cgallai/errors.hpp"

namespace cgallai {

using Vertex = int;

/// Graph distance: a nonnegative integer or Unreachable, which compares
/// greater than every finite value.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::int64_t value) : value_(value) {}

  static constexpr Distance unreachable() { return Distance(); }

  constexpr bool finite() const { return value_ != kInf; }
  constexpr std::int64_t value() const {
    if (!finite()) throw ContractError("value() of an unreachable distance");
    return value_;
  }

  friend constexpr auto operator<=>(Distance, Distance) = default;
  friend constexpr bool operator==(Distance a, std::int64_t b) { return a.value_ == b; }
  friend constexpr auto operator<=>(Distance a, std::int64_t b) { return a.value_ <=> b; }

  std::string str() const { return finite() ? std::to_string(value_) : "inf"; }

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t value_ = kInf;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : ids_(ids) { normalize(); }
  explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) { normalize(); }

  template <class It>
  VertexSet(It first, It last) : ids_(first, last) {
    normalize();
  }

  bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
  void insert(Vertex v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  Vertex front() const { return ids_.front(); }
  Vertex back() const { return ids_.back(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<Vertex>& ids() const { return ids_; }
  std::span<const Vertex> span() const { return ids_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }
  std::vector<Vertex> ids_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_union(std::initializer_list<const VertexSet*> parts) {
  std::vector<Vertex> out;
  for (const VertexSet* p : parts) out.insert(out.end(), p->begin(), p->end());
  return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Ordered vertex sequence. Validity against a host graph is checked by
/// `is_path_in`; the class itself only stores the order.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}
  Path(std::initializer_list<Vertex> vertices) : vertices_(vertices) {}

  std::int64_t length() const { return static_cast<std::int64_t>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  VertexSet vertex_set() const { return VertexSet(vertices_); }
  Path reversed() const { return Path(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend())); }
  /// Vertices at positions [from, to] inclusive.
  Path subpath(std::size_t from, std::size_t to) const {
    return Path(std::vector<Vertex>(vertices_.begin() + from, vertices_.begin() + to + 1));
  }
  std::optional<std::size_t> index_of(Vertex v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }
  void push_back(Vertex v) { vertices_.push_back(v); }

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Finite undirected simple graph on vertices [0, n) with sorted adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(check_order(n)) {}

  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : adj_(check_order(n)) {
    for (auto [u, v] : edges) {
      if (!valid(u) || !valid(v))
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      edges_ += static_cast<std::int64_t>(list.size());
    }
    edges_ /= 2;
  }

  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

  int size() const { return static_cast<int>(adj_.size()); }
  std::int64_t edge_count() const { return edges_; }
  bool valid(Vertex v) const { return v >= 0 && v < size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const {
    return valid(u) && valid(v) && std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  std::vector<std::pair<Vertex, Vertex>> edge_list() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  static std::size_t check_order(int n) {
    if (n < 0) throw InputError("negative vertex count");
    return static_cast<std::size_t>(n);
  }
  std::vector<std::vector<Vertex>> adj_;
  std::int64_t edges_ = 0;
};

/// Per-vertex membership flags, indexed by vertex id.
using VertexMask = std::vector<char>;

inline VertexMask make_mask(const Graph& g, const VertexSet& s) {
  VertexMask m(static_cast<std::size_t>(g.size()), 0);
  for (Vertex v : s) m[v] = 1;
  return m;
}

inline void check_ids(const Graph& g, const VertexSet& s) {
  if (!s.empty() && (s.front() < 0 || s.back() >= g.size()))
    throw InputError("vertex id out of range [0," + std::to_string(g.size()) + ")");
}

inline bool is_path_in(const Graph& g, const Path& p) {
  if (p.empty()) return false;
  for (Vertex v : p)
    if (!g.valid(v)) return false;
  if (p.vertex_set().size() != p.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  return true;
}

inline constexpr std::int64_t kNoLimit = std::numeric_limits<std::int64_t>::max();

struct BfsOptions {
  std::int64_t limit = kNoLimit;          // do not discover vertices deeper than this
  const VertexMask* allowed = nullptr;    // restrict the search to G[allowed]
  const VertexMask* targets = nullptr;    // stop at the first target discovered
};

struct BfsResult {
  std::vector<std::int32_t> depth;  // -1 when not reached
  std::vector<Vertex> parent;       // -1 for sources and unreached vertices
  std::vector<Vertex> order;        // discovery order
  Vertex hit = -1;                  // first target discovered, if any

  bool reached(Vertex v) const { return depth[v] >= 0; }
  Path path_to(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex x = v; x != -1; x = parent[x]) out.push_back(x);
    std::reverse(out.begin(), out.end());
    return Path(std::move(out));
  }
};

/// Multi-source BFS. Sources are seeded in the given (ascending) order and
/// neighbours are explored in ascending id, so the result is deterministic.
inline BfsResult bfs(const Graph& g, std::span<const Vertex> sources, const BfsOptions& opt = {}) {
  const auto n = static_cast<std::size_t>(g.size());
  BfsResult res{std::vector<std::int32_t>(n, -1), std::vector<Vertex>(n, -1), {}, -1};
  auto allowed = [&](Vertex v) { return opt.allowed == nullptr || (*opt.allowed)[v] != 0; };
  auto is_target = [&](Vertex v) { return opt.targets != nullptr && (*opt.targets)[v] != 0; };
  if (opt.limit < 0) return res;
  for (Vertex s : sources) {
    if (res.depth[s] >= 0 || !allowed(s)) continue;
    res.depth[s] = 0;
    res.order.push_back(s);
    if (res.hit < 0 && is_target(s)) res.hit = s;
  }
  if (res.hit >= 0) return res;
  for (std::size_t head = 0; head < res.order.size(); ++head) {
    const Vertex u = res.order[head];
    if (res.depth[u] >= opt.limit) break;
    for (Vertex v : g.neighbors(u)) {
      if (res.depth[v] >= 0 || !allowed(v)) continue;
      res.depth[v] = res.depth[u] + 1;
      res.parent[v] = u;
      res.order.push_back(v);
      if (is_target(v)) {
        res.hit = v;
        return res;
      }
    }
  }
  return res;
}

/// dist_G(S, T). Unreachable when either set is empty.
inline Distance dist(const Graph& g, const VertexSet& s, const VertexSet& t) {
  check_ids(g, s);
  check_ids(g, t);
  if (s.empty() || t.empty()) return Distance::unreachable();
  const VertexMask targets = make_mask(g, t);
  const BfsResult r = bfs(g, s.span(), {.targets = &targets});
  return r.hit >= 0 ? Distance(r.depth[r.hit]) : Distance::unreachable();
}

inline Distance dist(const Graph& g, Vertex u, Vertex v) { return dist(g, VertexSet{u}, VertexSet{v}); }

/// dist_G(S, T) if it is at most `limit`, otherwise Unreachable. Explores
/// only B(S, limit).
inline Distance dist_within(const Graph& g, const VertexSet& s, const VertexSet& t, std::int64_t limit) {
  check_ids(g, s);
  check_ids(g, t);
  if (s.empty() || t.empty() || limit < 0) return Distance::unreachable();
  const VertexMask targets = make_mask(g, t);
  const BfsResult r = bfs(g, s.span(), {.limit = limit, .targets = &targets});
  return r.hit >= 0 ? Distance(r.depth[r.hit]) : Distance::unreachable();
}

/// dist_G(S, T) >= bound, deciding it inside B(S, bound - 1).
inline bool dist_at_least(const Graph& g, const VertexSet& s, const VertexSet& t, std::int64_t bound) {
  if (bound <= 0) return true;
  return !dist_within(g, s, t, bound - 1).finite();
}

/// B_G(X, r) = {y : dist_G(X, y) <= r}; empty for negative r.
inline VertexSet ball(const Graph& g, const VertexSet& x, std::int64_t r) {
  check_ids(g, x);
  if (r < 0) return {};
  return VertexSet(bfs(g, x.span(), {.limit = r}).order);
}

inline VertexSet ball(const Graph& g, Vertex x, std::int64_t r) { return ball(g, VertexSet{x}, r); }

/// A shortest S-T path inside G[allowed] (whole graph when `allowed` is
/// null). Ties go to lower ids; when S and T meet, the least common id.
inline std::optional<Path> st_path(const Graph& g, const VertexSet& s, const VertexSet& t,
                                   const VertexMask* allowed = nullptr) {
  check_ids(g, s);
  check_ids(g, t);
  if (s.empty() || t.empty()) return std::nullopt;
  const VertexMask targets = make_mask(g, t);
  const BfsResult r = bfs(g, s.span(), {.allowed = allowed, .targets = &targets});
  if (r.hit < 0) return std::nullopt;
  return r.path_to(r.hit);
}

inline std::optional<Path> st_path(const Graph& g, Vertex s, Vertex t) {
  return st_path(g, VertexSet{s}, VertexSet{t});
}

inline bool is_connected_set(const Graph& g, const VertexSet& sub) {
  if (sub.empty()) return false;
  const VertexMask mask = make_mask(g, sub);
  const Vertex start = sub.front();
  return bfs(g, std::span<const Vertex>(&start, 1), {.allowed = &mask}).order.size() == sub.size();
}

struct RadiusCenter {
  Vertex center;
  std::int64_t radius;
};

/// Center and radius of the connected induced subgraph G[sub]. A singleton
/// has radius 0; ties go to the lowest center id.
inline RadiusCenter radius_center(const Graph& g, const VertexSet& sub) {
  check_ids(g, sub);
  if (sub.empty()) throw ContractError("radius_center: empty vertex set");
  const VertexMask mask = make_mask(g, sub);
  RadiusCenter best{-1, kNoLimit};
  for (Vertex c : sub) {
    // Anything with eccentricity >= best is useless, so stop early.
    const std::int64_t limit = best.center < 0 ? kNoLimit : best.radius - 1;
    const BfsResult r = bfs(g, std::span<const Vertex>(&c, 1), {.limit = limit, .allowed = &mask});
    if (r.order.size() != sub.size()) {
      if (best.center < 0) throw ContractError("radius_center: induced subgraph is disconnected");
      continue;
    }
    const std::int64_t ecc = r.depth[r.order.back()];
    if (ecc < best.radius) best = {c, ecc};
  }
  return best;
}

/// Connected components of G[sub], each sorted, listed by least element.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& sub) {
  check_ids(g, sub);
  const VertexMask mask = make_mask(g, sub);
  VertexMask seen(static_cast<std::size_t>(g.size()), 0);
  std::vector<VertexSet> out;
  for (Vertex v : sub) {
    if (seen[v]) continue;
    BfsResult r = bfs(g, std::span<const Vertex>(&v, 1), {.allowed = &mask});
    for (Vertex x : r.order) seen[x] = 1;
    out.emplace_back(std::move(r.order));
  }
  return out;
}

}  // namespace cgallai

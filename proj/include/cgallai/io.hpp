#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cgallai/errors.hpp"
#include "cgallai/frame.hpp"
#include "cgallai/graph.hpp"
#include "cgallai/model.hpp"
#include "cgallai/oracle.hpp"
#include "json.hpp"

namespace cgallai {

namespace detail {

// Whitespace-separated integer tokens; '#' starts a comment up to end of line.
inline std::vector<std::int64_t> read_tokens(std::istream& in) {
  std::vector<std::int64_t> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw InputError("not an integer: '" + tok + "'");
      }
      if (used != tok.size()) throw InputError("not an integer: '" + tok + "'");
      out.push_back(v);
    }
  }
  return out;
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

inline Vertex as_vertex(std::int64_t v) {
  if (v < 0 || v > std::numeric_limits<Vertex>::max()) throw InputError("vertex id out of range: " + std::to_string(v));
  return static_cast<Vertex>(v);
}

}  // namespace detail

/// "n m" then m lines "u v".
inline Graph read_graph(std::istream& in) {
  const auto t = detail::read_tokens(in);
  if (t.size() < 2) throw InputError("graph: missing header 'n m'");
  const std::int64_t n = t[0], m = t[1];
  if (n < 0 || m < 0 || n > std::numeric_limits<int>::max()) throw InputError("graph: bad header");
  if (static_cast<std::int64_t>(t.size()) != 2 + 2 * m)
    throw InputError("graph: expected " + std::to_string(m) + " edges, found " + std::to_string((t.size() - 2) / 2.0));
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i)
    edges.emplace_back(detail::as_vertex(t[2 + 2 * i]), detail::as_vertex(t[3 + 2 * i]));
  return Graph(static_cast<int>(n), edges);
}

inline Graph read_graph_file(const std::string& path) {
  auto in = detail::open_in(path);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

inline VertexSet read_vertex_set(std::istream& in, const Graph& g) {
  std::vector<Vertex> ids;
  for (std::int64_t v : detail::read_tokens(in)) ids.push_back(detail::as_vertex(v));
  VertexSet s(std::move(ids));
  check_ids(g, s);
  return s;
}

inline VertexSet read_vertex_set_file(const std::string& path, const Graph& g) {
  auto in = detail::open_in(path);
  return read_vertex_set(in, g);
}

inline void write_vertex_set(std::ostream& out, const VertexSet& s) {
  bool first = true;
  for (Vertex v : s) {
    out << (first ? "" : " ") << v;
    first = false;
  }
  out << '\n';
}

// ---- certificates ----

using Json = nlohmann::ordered_json;

struct CertificateFile {
  Certificate cert;
  std::int64_t k = 1;
  std::int64_t d = 1;
  bool coarse = false;
};

inline Json certificate_to_json(const Certificate& c, const SolveParams& p) {
  Json j;
  if (const auto* pk = std::get_if<Packing>(&c)) {
    j["type"] = "packing";
    j["k"] = p.k;
    j["d"] = p.d;
    j["coarse"] = p.coarse;
    Json paths = Json::array();
    for (const Path& path : pk->paths) paths.push_back(path.vertices());
    j["paths"] = std::move(paths);
  } else {
    const auto& h = std::get<Hitting>(c);
    j["type"] = "hitting";
    j["k"] = p.k;
    j["d"] = p.d;
    j["coarse"] = p.coarse;
    j["x"] = h.x.ids();
    j["radius"] = h.radius;
    if (h.coarse_threshold) j["coarse_threshold"] = *h.coarse_threshold;
  }
  j["bounds"] = {{"f", p.f}, {"g", p.g}};
  return j;
}

inline CertificateFile certificate_from_json(const Json& j) {
  try {
    CertificateFile cf;
    cf.k = j.at("k").get<std::int64_t>();
    cf.d = j.at("d").get<std::int64_t>();
    cf.coarse = j.at("coarse").get<bool>();
    const auto type = j.at("type").get<std::string>();
    if (type == "packing") {
      Packing pk;
      pk.d = cf.d;
      pk.coarse = cf.coarse;
      for (const auto& p : j.at("paths")) pk.paths.emplace_back(p.get<std::vector<Vertex>>());
      cf.cert = std::move(pk);
    } else if (type == "hitting") {
      Hitting h;
      h.x = VertexSet(j.at("x").get<std::vector<Vertex>>());
      h.radius = j.at("radius").get<std::int64_t>();
      if (j.contains("coarse_threshold")) h.coarse_threshold = j.at("coarse_threshold").get<std::int64_t>();
      cf.cert = std::move(h);
    } else {
      throw InputError("certificate: unknown type '" + type + "'");
    }
    return cf;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("certificate: ") + e.what());
  }
}

/// First reason the certificate is not a valid answer for (G, A); checks
/// the claimed bounds against k and d rather than trusting the file.
inline std::optional<std::string> certificate_violation(const Graph& g, const VertexSet& a, const CertificateFile& cf) {
  const SolveParams p = SolveParams::make(cf.k, cf.d, cf.coarse);
  if (const auto* pk = std::get_if<Packing>(&cf.cert))
    return packing_violation(g, a, pk->paths, p.k, p.d, p.coarse);
  const auto& h = std::get<Hitting>(cf.cert);
  if (h.radius > p.g) return "radius " + std::to_string(h.radius) + " exceeds g = " + std::to_string(p.g);
  if (p.coarse && !h.coarse_threshold) return "coarse certificate without a coarse threshold";
  if (h.coarse_threshold && *h.coarse_threshold > p.g)
    return "coarse threshold " + std::to_string(*h.coarse_threshold) + " exceeds g";
  if (h.coarse_threshold && !p.coarse) return "coarse threshold on a non-coarse certificate";
  return hitting_violation(g, a, h.x, h.radius, p.f, h.coarse_threshold);
}

// ---- models ----

inline Json model_to_json(const FatModel& m) {
  Json j;
  j["vertices"] = Json::array();
  for (PatternVertex v : m.pattern.vertices()) {
    Json e{{"id", v.id}};
    if (auto it = m.branch_sets.find(v); it != m.branch_sets.end()) {
      if (it->second.is_path()) e["path"] = it->second.path().vertices();
      else e["set"] = it->second.vertices().ids();
    }
    j["vertices"].push_back(std::move(e));
  }
  j["edges"] = Json::array();
  for (PatternEdge ed : m.pattern.edges()) {
    const auto [u, v] = m.pattern.endpoints(ed);
    Json e{{"id", ed.id}, {"u", u.id}, {"v", v.id}};
    if (auto it = m.branch_parts.find(ed); it != m.branch_parts.end()) {
      if (it->second.is_path()) e["path"] = it->second.path().vertices();
      else e["set"] = it->second.vertices().ids();
    }
    j["edges"].push_back(std::move(e));
  }
  return j;
}

/// Pattern vertices must be numbered 0..n-1; edges are renumbered in file order.
inline FatModel model_from_json(const Json& j, bool subcubic = true) {
  try {
    FatModel m{PatternGraph(subcubic), {}, {}};
    auto part_of = [](const Json& e) {
      if (e.contains("path")) return Part(Path(e.at("path").get<std::vector<Vertex>>()));
      return Part(VertexSet(e.at("set").get<std::vector<Vertex>>()));
    };
    const auto& vs = j.at("vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].at("id").get<int>() != static_cast<int>(i)) throw InputError("model: vertex ids must be 0..n-1 in order");
      const PatternVertex v = m.pattern.add_vertex();
      m.branch_sets[v] = part_of(vs[i]);
    }
    for (const auto& e : j.at("edges")) {
      const PatternVertex u{e.at("u").get<int>()}, v{e.at("v").get<int>()};
      const PatternEdge ed = m.pattern.add_edge(u, v);
      m.branch_parts[ed] = part_of(e);
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("model: ") + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  auto in = detail::open_in(path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

// ---- generators ----

struct GenSpec {
  std::string family = "path";  // path | cycle | spider | disjoint_paths | grid | random
  int n = 10;
  std::uint64_t seed = 1;
  std::string a_policy = "endpoints";  // endpoints | all | random_p
  int legs = 3;      // spider
  int count = 3;     // disjoint_paths
  double p = 0.1;    // random_p
};

struct Instance {
  Graph graph;
  VertexSet a;
};

/// Deterministic instance families. For path and cycle n is the vertex
/// count; for spider and disjoint_paths it is the leg/path length; grid is
/// n x n; random has n vertices.
inline Instance generate(const GenSpec& s) {
  if (s.n < 1) throw InputError("gen: n must be positive");
  std::mt19937_64 rng(s.seed);
  std::vector<std::pair<Vertex, Vertex>> e;
  int n = 0;
  std::vector<Vertex> special;  // endpoint policy for degree-free families
  if (s.family == "path") {
    n = s.n;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  } else if (s.family == "cycle") {
    if (s.n < 3) throw InputError("gen: cycle needs n >= 3");
    n = s.n;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    special = {0, n / 2};
  } else if (s.family == "spider") {
    if (s.legs < 1) throw InputError("gen: spider needs legs >= 1");
    n = 1 + s.legs * s.n;
    for (int j = 0; j < s.legs; ++j)
      for (int t = 1; t <= s.n; ++t) e.emplace_back(t == 1 ? 0 : 1 + j * s.n + t - 2, 1 + j * s.n + t - 1);
  } else if (s.family == "disjoint_paths") {
    if (s.count < 1) throw InputError("gen: disjoint_paths needs count >= 1");
    n = s.count * (s.n + 1);
    for (int j = 0; j < s.count; ++j)
      for (int t = 0; t < s.n; ++t) e.emplace_back(j * (s.n + 1) + t, j * (s.n + 1) + t + 1);
  } else if (s.family == "grid") {
    n = s.n * s.n;
    for (int r = 0; r < s.n; ++r)
      for (int c = 0; c < s.n; ++c) {
        if (c + 1 < s.n) e.emplace_back(r * s.n + c, r * s.n + c + 1);
        if (r + 1 < s.n) e.emplace_back(r * s.n + c, (r + 1) * s.n + c);
      }
    special = {0, s.n - 1, s.n * (s.n - 1), s.n * s.n - 1};
  } else if (s.family == "random") {
    n = s.n;
    for (int v = 1; v < n; ++v)
      if (rng() % 10 < 9) e.emplace_back(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v)), v);
    if (n >= 2)
      for (int t = 0; t < n / 5; ++t) {
        const auto u = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
        const auto v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
        if (u != v) e.emplace_back(u, v);
      }
  } else {
    throw InputError("gen: unknown family '" + s.family + "'");
  }
  Graph g(n, e);

  std::vector<Vertex> a;
  if (s.a_policy == "endpoints") {
    if (!special.empty()) {
      a = special;
    } else {
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) <= 1) a.push_back(v);
    }
  } else if (s.a_policy == "all") {
    for (Vertex v = 0; v < n; ++v) a.push_back(v);
  } else if (s.a_policy == "random_p") {
    if (!(s.p >= 0.0 && s.p <= 1.0)) throw InputError("gen: p must lie in [0,1]");
    const auto cut = static_cast<std::uint64_t>(s.p * 1'000'000.0);
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 1'000'000 < cut) a.push_back(v);
  } else {
    throw InputError("gen: unknown A policy '" + s.a_policy + "'");
  }
  return Instance{std::move(g), VertexSet(std::move(a))};
}

}  // namespace cgallai

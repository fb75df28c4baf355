#include <gtest/gtest.h>

#include "cgallai/frame.hpp"
#include "cgallai/io.hpp"
#include "cgallai/oracle.hpp"
#include "support.hpp"

namespace cgallai {
namespace {

struct Trace {
  std::vector<StepInfo> steps;
};

SolveOptions traced(Trace& t) {
  SolveOptions opt;
  opt.check_invariants = true;
  opt.frame_observer = [&t](const Frame&, const StepInfo& s) { t.steps.push_back(s); };
  return opt;
}

Instance gen(const std::string& family, int n, int legs = 3, int count = 3) {
  GenSpec s;
  s.family = family;
  s.n = n;
  s.legs = legs;
  s.count = count;
  return generate(s);
}

TEST(SolveParams, Constants) {
  const SolveParams p = SolveParams::make(2, 1);
  EXPECT_EQ(p.f, 4);
  EXPECT_EQ(p.g, 65536);
  EXPECT_EQ(p.r, 1024);
  EXPECT_EQ(p.steps(), 3);
  EXPECT_EQ(p.frame_fatness(0), 4096);
  EXPECT_EQ(p.step_ell(0), 256);
  EXPECT_EQ(p.step_ell(1), 16);
  EXPECT_EQ(p.step_ell(2), 1);
  const SolveParams one = SolveParams::make(1, 3);
  EXPECT_EQ(one.f, 0);
  EXPECT_EQ(one.g, 768);
  EXPECT_EQ(one.steps(), 1);
  EXPECT_EQ(one.step_ell(0), 3);
  EXPECT_THROW(SolveParams::make(8, 1), ParameterRangeError);
  EXPECT_THROW(SolveParams::make(7, std::int64_t{1} << 6), ParameterRangeError);
  EXPECT_NO_THROW(SolveParams::make(7, 63));
  EXPECT_THROW(SolveParams::make(0, 1), InputError);
}

TEST(Frame, EmptyFrameIsValid) {
  const Graph g(3, {{0, 1}});
  const Frame fr = empty_frame(SolveParams::make(2, 1), VertexSet{0, 2});
  EXPECT_TRUE(validate_frame(g, fr).empty());
  EXPECT_EQ(fr.ell, 4096);
}

TEST(Frame, ValidateFrameFlagsEachCondition) {
  const Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}});
  Frame fr;
  fr.a = VertexSet{0, 5};
  fr.ell = 1;
  fr.r = 0;
  const auto k = fr.model.pattern.add_k2();
  fr.model.branch_sets[k.first] = Part(VertexSet{0, 1});
  fr.model.branch_sets[k.second] = Part(VertexSet{4});
  fr.model.branch_parts[k.edge] = Part(Path{1, 2, 3, 4});
  fr.i = 1;
  auto tags = [&] {
    std::string s;
    for (const auto& e : validate_frame(g, fr)) s += e.substr(0, e.find(' ')) + " ";
    return s;
  };
  EXPECT_EQ(tags(), "(f3) (f4) ");
  fr.r = 1;
  fr.model.branch_sets[k.second] = Part(VertexSet{4, 5});
  EXPECT_EQ(tags(), "");
  fr.i = 2;
  EXPECT_EQ(tags(), "(f1) ");
  fr.i = 1;
  fr.ell = 4;
  EXPECT_EQ(tags(), "(f2) ");
  fr.ell = 1;

  // An isolated pattern vertex whose branch set is a path between non-A vertices.
  const auto iso = fr.model.pattern.add_isolated();
  fr.model.branch_sets[iso] = Part(Path{6, 7});
  fr.i = 2;
  EXPECT_EQ(tags(), "(f5) ");
  fr.coarse = true;
  EXPECT_EQ(tags(), "(f5) (coarse) ");
  fr.a = VertexSet{0, 5, 6, 7};
  EXPECT_EQ(tags(), "(coarse) ");

  // A part overlapping a non-incident one is reported before anything else.
  fr.coarse = false;
  fr.model.branch_sets[iso] = Part(VertexSet{2});
  EXPECT_EQ(tags(), "(model) ");
}

TEST(Frame, AvoidingPathPrefersCoarsePairs) {
  // Component {0..3} has A = {0,1} (close); component {4..9} has A = {4,9}.
  const Graph g(10, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
  const VertexMask all(10, 1);
  const auto p = find_avoiding_a_path(g, VertexSet{0, 1, 4, 9}, all, 3);
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(p->coarse);
  EXPECT_EQ(p->path.front(), 4);
  EXPECT_EQ(p->path.back(), 9);
  const auto q = find_avoiding_a_path(g, VertexSet{0, 1, 4, 9}, all, 6);
  ASSERT_TRUE(q.has_value());
  EXPECT_FALSE(q->coarse);
  EXPECT_EQ(q->path, (Path{0, 1}));
  EXPECT_FALSE(find_avoiding_a_path(g, VertexSet{0, 4}, all, 1).has_value());
}

TEST(Frame, ExtendAddsK2ThenAugments) {
  // Path of 200: the first step adds a K2 on the two ends. The A-path
  // between two pendant tips then runs into the stored branch path, so the
  // next step must augment.
  testing::HostBuilder hb;
  const auto spine = hb.fresh_path(199);
  const auto hang = hb.extend(spine[100], 30);
  const auto hang2 = hb.extend(spine[150], 30);
  const Graph g = hb.build();
  const VertexSet a{spine.front(), spine.back(), hang.back(), hang2.back()};
  Frame fr{FatModel{}, 0, 64, 16, false, a};
  auto step = extend_or_hit(g, fr, 4, {.check_invariants = true});
  ASSERT_TRUE(std::holds_alternative<NewFrame>(step));
  const NewFrame& nf = std::get<NewFrame>(step);
  EXPECT_EQ(nf.case_id, 2);
  EXPECT_EQ(nf.frame.i, 1);
  EXPECT_TRUE(validate_frame(g, nf.frame).empty());

  Frame f2 = nf.frame;
  f2.ell = 16;
  f2.r = 4;
  auto step2 = extend_or_hit(g, f2, 1, {.check_invariants = true});
  ASSERT_TRUE(std::holds_alternative<NewFrame>(step2));
  const NewFrame& nf2 = std::get<NewFrame>(step2);
  EXPECT_EQ(nf2.case_id, 1);
  EXPECT_EQ(nf2.frame.i, 2);
  EXPECT_TRUE(validate_frame(g, nf2.frame).empty());
}

TEST(Frame, ExtendHitsWhenEverythingIsNearTheFrame) {
  const Graph g = gen("spider", 10, 4).graph;
  const VertexSet a = gen("spider", 10, 4).a;
  Frame fr{FatModel{}, 0, 16, 4, false, a};
  auto step = extend_or_hit(g, fr, 1);
  ASSERT_TRUE(std::holds_alternative<NewFrame>(step));
  Frame f1 = std::get<NewFrame>(step).frame;
  f1.ell = 16;
  f1.r = 4;
  auto step2 = extend_or_hit(g, f1, 1);
  ASSERT_TRUE(std::holds_alternative<HitSet>(step2));
  const HitSet& h = std::get<HitSet>(step2);
  EXPECT_EQ(h.radius, 4 + 8);
  EXPECT_LE(static_cast<std::int64_t>(h.x.size()), 2 * f1.i);
  EXPECT_TRUE(verify_hitting(g, a, h.x, h.radius, 2, std::nullopt));
}

TEST(Frame, NonCoarseCase3AddsIsolatedPath) {
  // Two A-vertices at distance 1, far from everything else.
  const Graph g(2, {{0, 1}});
  Frame fr{FatModel{}, 0, 64, 16, false, VertexSet{0, 1}};
  auto step = extend_or_hit(g, fr, 4, {.check_invariants = true});
  ASSERT_TRUE(std::holds_alternative<NewFrame>(step));
  const NewFrame& nf = std::get<NewFrame>(step);
  EXPECT_EQ(nf.case_id, 3);
  EXPECT_EQ(degree_classes(nf.frame.model.pattern).v0.size(), 1u);
  const auto paths = frame_to_packing(g, nf.frame);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0], (Path{0, 1}));

  fr.coarse = true;
  auto hit = extend_or_hit(g, fr, 4);
  ASSERT_TRUE(std::holds_alternative<HitSet>(hit));
  EXPECT_EQ(std::get<HitSet>(hit).coarse_threshold, 4);
  EXPECT_TRUE(std::get<HitSet>(hit).x.empty());
}

// Three disjoint paths of length 5000, k = 2, d = 1.
TEST(Solve, DisjointPathsWalkThrough) {
  const Instance in = gen("disjoint_paths", 5000);
  ASSERT_EQ(in.a.size(), 6u);
  const SolveParams p = SolveParams::make(2, 1);
  Trace t;
  const Certificate c = solve(in.graph, in.a, p, traced(t));
  ASSERT_TRUE(std::holds_alternative<Packing>(c));
  const auto& pk = std::get<Packing>(c);
  ASSERT_EQ(pk.paths.size(), 2u);
  EXPECT_FALSE(dist(in.graph, pk.paths[0].vertex_set(), pk.paths[1].vertex_set()).finite());
  EXPECT_TRUE(verify_packing(in.graph, in.a, pk.paths, 2, 1, false));
  ASSERT_EQ(t.steps.size(), 3u);
  const std::array<std::int64_t, 3> ells{256, 16, 1};
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_EQ(t.steps[j].ell, ells[j]);
    EXPECT_EQ(t.steps[j].case_id, 2);
    EXPECT_EQ(t.steps[j].i, static_cast<std::int64_t>(j) + 1);
  }
}

TEST(Solve, SpiderWalkThrough) {
  const Instance in = gen("spider", 10, 4);
  ASSERT_EQ(in.a.size(), 4u);
  const SolveParams p = SolveParams::make(2, 1);
  Trace t;
  const Certificate c = solve(in.graph, in.a, p, traced(t));
  ASSERT_TRUE(std::holds_alternative<Hitting>(c));
  const auto& h = std::get<Hitting>(c);
  EXPECT_LE(static_cast<std::int64_t>(h.x.size()), 4);
  EXPECT_EQ(h.radius, 65536);
  EXPECT_TRUE(verify_hitting(in.graph, in.a, h.x, h.radius, 4, std::nullopt));
  // No two tips are 256 apart, so the first step stores the A-path between
  // the two lowest tips; its centre is the spider's body, which hits it all.
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].case_id, 3);
  EXPECT_EQ(h.x, VertexSet{0});
}

TEST(Solve, KOneNeedsOnePathOrNoPath) {
  const Graph g(4, {{0, 1}, {2, 3}});
  const SolveParams p = SolveParams::make(1, 1);
  const Certificate c = solve(g, VertexSet{0, 1}, p);
  ASSERT_TRUE(std::holds_alternative<Packing>(c));
  EXPECT_EQ(std::get<Packing>(c).paths[0], (Path{0, 1}));
  const Certificate none = solve(g, VertexSet{0, 2}, p);
  ASSERT_TRUE(std::holds_alternative<Hitting>(none));
  EXPECT_TRUE(std::get<Hitting>(none).x.empty());
}

TEST(Solve, CoarseModeNeedsFarEndpoints) {
  // Only A-path is a single edge: fine normally, never d-coarse for d = 2.
  const Graph g(2, {{0, 1}});
  const Certificate normal = solve(g, VertexSet{0, 1}, SolveParams::make(1, 2));
  EXPECT_TRUE(std::holds_alternative<Packing>(normal));
  const Certificate coarse = solve(g, VertexSet{0, 1}, SolveParams::make(1, 2, true));
  ASSERT_TRUE(std::holds_alternative<Hitting>(coarse));
  EXPECT_EQ(std::get<Hitting>(coarse).coarse_threshold, 512);
}

TEST(Solve, RejectsOutOfRangeVertices) {
  const Graph g(2, {{0, 1}});
  EXPECT_THROW(solve(g, VertexSet{0, 5}, SolveParams::make(1, 1)), InputError);
}

}  // namespace
}  // namespace cgallai

#include <gtest/gtest.h>

#include "cgallai/augment.hpp"
#include "naive.hpp"
#include "support.hpp"

namespace cgallai {
namespace {

// K2 pattern yz laid on a straight route. A probe vertex w sits 4 ell from
// M_yz, joined to route positions p1 and p1 + gap (gap = 0: one leg), and a
// path of `tail` edges leads from w out to a.
struct AugmentFixture {
  Graph g;
  FatModel m;
  Vertex a = -1;
  PatternEdge yz;
  Path p;
  std::int64_t ell = 1;
};

AugmentFixture make_fixture(std::int64_t ell, std::int64_t gap, std::int64_t tail) {
  testing::HostBuilder hb;
  const auto my = hb.fresh_path(2);
  const std::int64_t p1 = 12 * ell + 1;
  const std::int64_t len = p1 + gap + 12 * ell + 1;
  const auto route = hb.extend(my.back(), len);
  const auto mz = hb.extend(route.back(), 2);
  const auto leg1 = hb.extend(route[static_cast<std::size_t>(p1)], 4 * ell);
  const Vertex w = leg1.back();
  if (gap > 0) {
    const auto leg2 = hb.extend(route[static_cast<std::size_t>(p1 + gap)], 4 * ell - 1);
    hb.edge(leg2.back(), w);
  }
  const auto probe = hb.extend(w, tail);

  AugmentFixture f;
  f.g = hb.build();
  const auto k = f.m.pattern.add_k2();
  f.m.branch_sets[k.first] = Part(VertexSet(my));
  f.m.branch_sets[k.second] = Part(VertexSet(mz));
  f.m.branch_parts[k.edge] = Part(Path(route));
  f.yz = k.edge;
  f.a = probe.back();
  f.p = Path(probe).reversed();
  f.ell = ell;
  return f;
}

void expect_valid_output(const AugmentFixture& f, const AugmentResult& r) {
  const FatModel& n = r.model;
  EXPECT_TRUE(validate_model(f.g, n).empty());
  EXPECT_GE(fatness(f.g, n).min_distance, f.ell);
  EXPECT_LE(naive::induced_radius(f.g, n.part(r.h1).vertices()), 4 * f.ell);
  // Old branch sets are kept.
  for (const auto& [v, part] : f.m.branch_sets) EXPECT_EQ(n.part(v), part);
  // h' subdivides yz.
  EXPECT_FALSE(n.pattern.has_edge(f.yz));
  EXPECT_EQ(n.pattern.degree(r.h1), r.h2 ? 3 : 2);
  if (r.h2) {
    EXPECT_EQ(n.part(*r.h2).vertices(), VertexSet{f.a});
    EXPECT_EQ(n.pattern.degree(*r.h2), 1);
  } else {
    EXPECT_TRUE(n.part(r.h1).vertices().contains(f.a));
  }
}

TEST(Augment, FixturesSatisfyPreconditions) {
  for (std::int64_t ell : {1, 2, 3}) {
    const AugmentFixture f = make_fixture(ell, ell, 0);
    const SimpleModel sm = SimpleModel::from(f.g, f.m);
    EXPECT_TRUE(is_fat(f.g, f.m, 8 * ell));
    EXPECT_TRUE(is_clean(f.g, sm, 4 * ell));
  }
}

TEST(Augment, Case1SubdividesThroughA) {
  for (std::int64_t ell : {1, 2, 3}) {
    for (std::int64_t tail = 0; tail <= 2 * ell - 1; ++tail) {
      const AugmentFixture f = make_fixture(ell, 2 * ell, tail);
      const auto r = augment(f.g, SimpleModel::from(f.g, f.m), f.a, f.yz, f.p, ell, {.check_invariants = true});
      EXPECT_EQ(r.case_id, 1);
      EXPECT_EQ(r.outcome, AugmentResult::Outcome::kSubdivided);
      expect_valid_output(f, r);
    }
  }
}

TEST(Augment, Case2AttachesPendant) {
  for (std::int64_t ell : {1, 2, 3}) {
    const AugmentFixture f = make_fixture(ell, 3 * ell, 2 * ell + 3);
    const auto r = augment(f.g, SimpleModel::from(f.g, f.m), f.a, f.yz, f.p, ell, {.check_invariants = true});
    EXPECT_EQ(r.case_id, 2);
    EXPECT_EQ(r.outcome, AugmentResult::Outcome::kAttached);
    ASSERT_TRUE(r.pendant_edge.has_value());
    EXPECT_EQ(r.model.part(*r.pendant_edge).vertices(), f.p.vertex_set());
    expect_valid_output(f, r);
  }
}

TEST(Augment, Case3UsesTripod) {
  for (std::int64_t ell : {1, 2, 3}) {
    for (std::int64_t gap : {std::int64_t{0}, ell - 1}) {
      for (std::int64_t tail : {std::int64_t{0}, ell, 3 * ell}) {
        const AugmentFixture f = make_fixture(ell, gap, tail);
        const auto r = augment(f.g, SimpleModel::from(f.g, f.m), f.a, f.yz, f.p, ell, {.check_invariants = true});
        EXPECT_EQ(r.case_id, 3) << "ell=" << ell << " gap=" << gap;
        EXPECT_EQ(r.outcome, AugmentResult::Outcome::kAttached);
        expect_valid_output(f, r);
      }
    }
  }
}

TEST(Augment, RejectsBrokenPreconditions) {
  const std::int64_t ell = 2;
  AugmentFixture f = make_fixture(ell, 2 * ell, 1);
  const SimpleModel sm = SimpleModel::from(f.g, f.m);
  // p must end at its first vertex inside B(M_yz, 4ell).
  Path longer = f.p;
  const auto into = st_path(f.g, VertexSet{f.p.back()}, f.m.part(f.yz).vertices());
  longer.push_back((*into)[1]);
  EXPECT_THROW(augment(f.g, sm, f.a, f.yz, longer, ell), ContractError);
  // At 3ell the probe already starts inside B(M_yz, 12ell).
  EXPECT_THROW(augment(f.g, sm, f.a, f.yz, f.p, 3 * ell), ContractError);
  // p must start at a.
  EXPECT_THROW(augment(f.g, sm, f.p.back(), f.yz, f.p, ell), ContractError);
}

}  // namespace
}  // namespace cgallai

#include <gtest/gtest.h>

#include <algorithm>

#include "k3walls/brill_noether.hpp"
#include "k3walls/errors.hpp"
#include "k3walls/nef_cone.hpp"
#include "k3walls/walls.hpp"
#include "support/oracles.hpp"

namespace k3walls {
namespace {

bool collinear(const DivisorClass& a, const DivisorClass& b) { return cross(a, b) == 0; }

DivisorClass ray_class(const Ray& ray) {
  return {{Rational(ray.coords[0]), Rational(ray.coords[1])}};
}

const HyperplaneEntry* find_ray(const std::vector<HyperplaneEntry>& list, std::int64_t x,
                                std::int64_t y) {
  const auto it = std::find_if(list.begin(), list.end(), [&](const HyperplaneEntry& e) {
    return e.ray.coords[0] == x && e.ray.coords[1] == y;
  });
  return it == list.end() ? nullptr : &*it;
}

TEST(Perp, RankZeroGenusTwo) {
  const LatticeContext ctx(2);
  const PerpContext pc = perp_context(MukaiVector{0, 1, 0}, ctx);
  EXPECT_EQ(pc.basis[0], (MukaiVector{1, 0, 0}));
  EXPECT_EQ(pc.basis[1], (MukaiVector{0, 0, 1}));
  EXPECT_EQ(pc.gram[0][0], 0);
  EXPECT_EQ(pc.gram[0][1], -1);
  EXPECT_EQ(pc.gram[1][0], -1);
  EXPECT_EQ(pc.gram[1][1], 0);
}

TEST(Perp, ContainsStructureSheafForSquareTwoClass) {
  const PerpContext pc = perp_context(MukaiVector{1, 0, -1}, LatticeContext(6));
  EXPECT_TRUE(std::find(pc.basis.begin(), pc.basis.end(), kStructureSheaf) != pc.basis.end());
}

TEST(Perp, RejectsBadVectors) {
  const LatticeContext ctx(2);
  EXPECT_THROW(perp_context(kStructureSheaf, ctx), Error);
  EXPECT_THROW(perp_context(MukaiVector{0, 2, 0}, ctx), Error);
  EXPECT_THROW(perp_context(MukaiVector{0, 0, 1}, ctx), Error);
}

TEST(PerpProperty, SaturatedHyperbolicBasis) {
  oracle::Generator gen(0x9e4b);
  int checked = 0;
  while (checked < 300) {
    const std::int64_t h2 = gen.h_squared();
    const LatticeContext ctx(h2);
    const MukaiVector v = gen.vector(25);
    if (!is_primitive(v) || square(v, ctx) <= 0) continue;
    ++checked;
    const PerpContext pc = perp_context(v, ctx);
    for (int i = 0; i < 2; ++i) {
      EXPECT_EQ(pair(pc.basis[i], v, ctx), 0);
      for (int j = 0; j < 2; ++j) EXPECT_EQ(pc.gram[i][j], pair(pc.basis[i], pc.basis[j], ctx));
    }
    EXPECT_LT(pc.gram[0][0] * pc.gram[1][1] - pc.gram[0][1] * pc.gram[1][0], 0);
    // Saturation: every integer vector of v-perp in a small box has integer coordinates.
    for (std::int64_t r = -4; r <= 4; ++r) {
      for (std::int64_t c = -4; c <= 4; ++c) {
        for (std::int64_t s = -4; s <= 4; ++s) {
          const MukaiVector x{r, c, s};
          if (pair(x, v, ctx) != 0) continue;
          const DivisorClass dc = to_coords(RationalMukaiVector(x), pc);
          EXPECT_EQ(dc.coords[0].get_den(), 1);
          EXPECT_EQ(dc.coords[1].get_den(), 1);
          EXPECT_EQ(to_lattice(dc, pc), RationalMukaiVector(x));
        }
      }
    }
  }
}

TEST(Hyperplane, Examples) {
  const LatticeContext ctx(2);
  const MukaiVector v{0, 1, 0};
  const PerpContext pc = perp_context(v, ctx);
  const Ray o = hyperplane_of(kStructureSheaf, pc, ctx);
  EXPECT_EQ(o.coords, (std::array<std::int64_t, 2>{1, -1}));
  EXPECT_EQ(o.generator, (MukaiVector{1, 0, -1}));
  EXPECT_EQ(hyperplane_of(MukaiVector{1, 0, 0}, pc, ctx).coords,
            (std::array<std::int64_t, 2>{1, 0}));
  EXPECT_EQ(hyperplane_of(v + kStructureSheaf, pc, ctx), o);
  EXPECT_THROW(hyperplane_of(MukaiVector{0, 3, 0}, pc, ctx), Error);
}

TEST(HyperplaneProperty, InvariantUnderAddingV) {
  oracle::Generator gen(0x4a1);
  int checked = 0;
  while (checked < 300) {
    const LatticeContext ctx(gen.h_squared());
    const MukaiVector v = gen.vector(10);
    if (!is_primitive(v) || square(v, ctx) <= 0) continue;
    const MukaiVector a = gen.vector(10);
    if (is_proportional(a, v)) continue;
    ++checked;
    const PerpContext pc = perp_context(v, ctx);
    const Ray ray = hyperplane_of(a, pc, ctx);
    EXPECT_EQ(pair(ray.generator, a, ctx), 0);
    EXPECT_EQ(pair(ray.generator, v, ctx), 0);
    EXPECT_EQ(std::gcd(ray.coords[0], ray.coords[1]), 1);
    EXPECT_EQ(hyperplane_of(a + gen.integer(-5, 5) * v, pc, ctx), ray);
  }
}

TEST(Hyperplanes, GenusTwoArrangement) {
  const LatticeContext ctx(2);
  const auto arr = nef_hyperplanes(MukaiVector{0, 1, 0}, 5, ctx);
  EXPECT_EQ(arr.search_bound, 5);
  // The generator (1,0,-1) has square 2 > 0, so its line passes through the
  // interior of the positive cone.
  const HyperplaneEntry* o = find_ray(arr.cutting, 1, -1);
  ASSERT_NE(o, nullptr);
  EXPECT_EQ(o->generator_square, 2);
  EXPECT_TRUE(std::find(o->witnesses.begin(), o->witnesses.end(), kStructureSheaf) !=
              o->witnesses.end());
  const HyperplaneEntry* b = find_ray(arr.boundary, 0, 1);
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->ray.generator, (MukaiVector{0, 0, 1}));
  EXPECT_EQ(b->generator_square, 0);
  for (const auto& e : arr.cutting) {
    EXPECT_GT(e.generator_square, 0);
    EXPECT_EQ(e.ray_class, RayClass::kCutting);
  }
  for (const auto& e : arr.boundary) EXPECT_EQ(e.generator_square, 0);
  for (const auto& e : arr.non_cutting) EXPECT_LT(e.generator_square, 0);
}

TEST(Hyperplanes, WitnessesSatisfyFilters) {
  for (std::int64_t g = 2; g <= 5; ++g) {
    const LatticeContext ctx = LatticeContext::from_genus(g);
    const MukaiVector v = bn_vector(g, g - 1);
    const std::int64_t v_sq = square(v, ctx);
    const auto arr = nef_hyperplanes(v, 4, ctx, 3);
    for (const auto* list : {&arr.cutting, &arr.boundary, &arr.non_cutting}) {
      for (const auto& e : *list) {
        ASSERT_FALSE(e.witnesses.empty());
        for (const MukaiVector& a : e.witnesses) {
          EXPECT_GE(square(a, ctx), -2);
          EXPECT_LE(2 * std::abs(pair(v, a, ctx)), v_sq);
          EXPECT_EQ(pair(e.ray.generator, a, ctx), 0);
        }
      }
    }
  }
}

TEST(HyperplanesProperty, MonotoneInBound) {
  const LatticeContext ctx(2);
  const auto small = nef_hyperplanes(MukaiVector{0, 1, 0}, 5, ctx);
  const auto large = nef_hyperplanes(MukaiVector{0, 1, 0}, 8, ctx, 4);
  auto rays = [](const std::vector<HyperplaneEntry>& list) {
    std::vector<Ray> out;
    for (const auto& e : list) out.push_back(e.ray);
    std::sort(out.begin(), out.end());
    return out;
  };
  for (auto member : {&HyperplaneArrangement::cutting, &HyperplaneArrangement::boundary,
                      &HyperplaneArrangement::non_cutting}) {
    const auto s = rays(small.*member);
    const auto l = rays(large.*member);
    EXPECT_TRUE(std::includes(l.begin(), l.end(), s.begin(), s.end()));
  }
}

TEST(Positivity, Examples) {
  const LatticeContext ctx(2);
  const MukaiVector v{0, 1, 0};
  const PerpContext pc = perp_context(v, ctx);
  const DivisorClass d4 = positivity_divisor(v, StabilityPoint(0, 4), pc, ctx);
  EXPECT_EQ(d4, (DivisorClass{{Rational(-2), Rational(8)}}));
  const DivisorClass d1 = positivity_divisor(v, StabilityPoint(0, 1), pc, ctx);
  EXPECT_EQ(d1, (DivisorClass{{Rational(-2), Rational(2)}}));
  EXPECT_TRUE(collinear(d1, ray_class(hyperplane_of(kStructureSheaf, pc, ctx))));
}

TEST(Positivity, DegenerateChargeThrows) {
  // Z(v) = 0 forces v^2 < 0, so the failure is reachable only through the raw class.
  try {
    positivity_class(kStructureSheaf, StabilityPoint(0, 1), LatticeContext(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateCharge);
  }
}

TEST(PositivityProperty, SolvesLinearSystemAndIsOrthogonal) {
  oracle::Generator gen(0x905);
  int checked = 0;
  while (checked < 300) {
    const std::int64_t h2 = gen.h_squared();
    const LatticeContext ctx(h2);
    const MukaiVector v = gen.vector(12);
    if (!is_primitive(v) || square(v, ctx) <= 0) continue;
    const StabilityPoint p(gen.rational(20, 9), gen.positive_rational(20, 9));
    const ChargeValue zv = oracle::charge(v, p.beta(), p.t(), h2);
    if (zv.re == 0 && zv.im_over_alpha == 0) continue;
    ++checked;
    const PerpContext pc = perp_context(v, ctx);
    const RationalMukaiVector m = to_lattice(positivity_divisor(v, p, pc, ctx), pc);
    EXPECT_EQ(oracle::gram_pair(m, RationalMukaiVector(v), h2), 0);
    for (const MukaiVector& x : {MukaiVector{1, 0, 0}, MukaiVector{0, 1, 0}, MukaiVector{0, 0, 1},
                                 gen.vector(9)}) {
      const ChargeValue zx = oracle::charge(x, p.beta(), p.t(), h2);
      EXPECT_EQ(oracle::gram_pair(m, RationalMukaiVector(x), h2),
                zx.im_over_alpha * zv.re - zx.re * zv.im_over_alpha);
    }
  }
}

TEST(PositivityProperty, BNWallPointsGiveContractionRay) {
  for (std::int64_t g = 2; g <= 10; ++g) {
    const LatticeContext ctx = LatticeContext::from_genus(g);
    for (std::int64_t d = 1; d <= g - 1; ++d) {
      const MukaiVector v = bn_vector(g, d);
      const PerpContext pc = perp_context(v, ctx);
      const DivisorClass bn_ray = ray_class(hyperplane_of(kStructureSheaf, pc, ctx));
      const Semicircle s = std::get<Semicircle>(bn_wall(g, d).shape);
      int used = 0;
      for (int i = 0; used < 3; ++i) {
        // beta = 0 hits alpha_0; other rational beta give rational t inside the arc.
        const Rational beta = s.center + oracle::ratio(i, 2 * i + 3) - oracle::ratio(1, 3);
        const Rational t = s.radius_sq - (beta - s.center) * (beta - s.center);
        if (t <= 0) continue;
        ++used;
        EXPECT_TRUE(collinear(positivity_divisor(v, StabilityPoint(beta, t), pc, ctx), bn_ray))
            << "g=" << g << " d=" << d << " beta=" << to_string(beta);
      }
      EXPECT_TRUE(collinear(
          positivity_divisor(v, StabilityPoint(0, oracle::ratio(2, ctx.h_squared())), pc, ctx),
          bn_ray));
    }
  }
}

TEST(PositivityProperty, GiesekerPathStaysOnOneSide) {
  for (std::int64_t g = 2; g <= 10; ++g) {
    const LatticeContext ctx = LatticeContext::from_genus(g);
    for (std::int64_t d = 1; d <= g - 1; ++d) {
      const MukaiVector v = bn_vector(g, d);
      const PerpContext pc = perp_context(v, ctx);
      const DivisorClass bn_ray = ray_class(hyperplane_of(kStructureSheaf, pc, ctx));
      const PositiveCone cone(pc, positivity_divisor(v, StabilityPoint(0, 4), pc, ctx));
      int side = 0;
      for (const Rational& t : {Rational(4), Rational(3), Rational(2), Rational(1),
                                oracle::ratio(3, ctx.h_squared())}) {
        if (t <= oracle::ratio(2, ctx.h_squared())) continue;
        const DivisorClass dc = positivity_divisor(v, StabilityPoint(0, t), pc, ctx);
        EXPECT_TRUE(cone.contains(dc));
        const int s = sgn(cross(dc, bn_ray));
        EXPECT_NE(s, 0);
        if (side == 0) side = s;
        EXPECT_EQ(s, side);
      }
      const DivisorClass edge =
          positivity_divisor(v, StabilityPoint(0, oracle::ratio(2, ctx.h_squared())), pc, ctx);
      EXPECT_EQ(sgn(cross(edge, bn_ray)), 0);
    }
  }
}

TEST(PositiveCone, ComponentSelection) {
  const LatticeContext ctx(2);
  const PerpContext pc = perp_context(MukaiVector{0, 1, 0}, ctx);
  const PositiveCone cone(pc, DivisorClass{{Rational(-2), Rational(8)}});
  EXPECT_TRUE(cone.contains(DivisorClass{{Rational(-1), Rational(1)}}));
  EXPECT_FALSE(cone.contains(DivisorClass{{Rational(1), Rational(-1)}}));
  EXPECT_FALSE(cone.contains(DivisorClass{{Rational(0), Rational(1)}}));
  EXPECT_TRUE(cone.in_closure(DivisorClass{{Rational(0), Rational(1)}}));
  EXPECT_FALSE(cone.contains(DivisorClass{{Rational(1), Rational(1)}}));
}

}  // namespace
}  // namespace k3walls

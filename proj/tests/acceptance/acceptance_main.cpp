// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "k3walls/brill_noether.hpp"
#include "k3walls/nef_cone.hpp"
#include "k3walls/stability.hpp"
#include "k3walls/walls.hpp"
#include "support/oracles.hpp"

using namespace k3walls;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Each check returns an empty string on success or a description of the first failure.
using Check = std::function<std::string()>;

std::string identities() {
  const auto start = Clock::now();
  for (std::int64_t g = 2; g <= 30; ++g) {
    const std::int64_t h2 = 2 * g - 2;
    const LatticeContext ctx(h2);
    for (std::int64_t d = 1; d <= g - 1; ++d) {
      for (std::int64_t r = 0; r <= 10; ++r) {
        const MukaiVector w = w_vector(g, d, r);
        const RationalMukaiVector wq(w);
        const std::int64_t p = rho(r, d, g);
        if (oracle::gram_pair(wq, wq, h2) != 2 * p - 2 || square(w, ctx) != 2 * p - 2) {
          return "w_r^2 != 2 rho - 2 at g=" + std::to_string(g) + " d=" + std::to_string(d);
        }
        if (oracle::gram_pair(wq, RationalMukaiVector(kStructureSheaf), h2) != 2 * r + 1 + g - d ||
            pair(w, kStructureSheaf, ctx) != 2 * r + 1 + g - d) {
          return "(w_r, O_X) mismatch at g=" + std::to_string(g) + " d=" + std::to_string(d);
        }
      }
    }
  }
  if (seconds_since(start) >= 1.0) return "took longer than 1 s";
  return {};
}

std::string dimension_count() {
  for (std::int64_t g = 2; g <= 30; ++g) {
    const LatticeContext ctx = LatticeContext::from_genus(g);
    for (std::int64_t d = 1; d <= g - 1; ++d) {
      for (std::int64_t r = 0; r <= 10; ++r) {
        const std::int64_t lhs = (square(w_vector(g, d, r), ctx) + 2) + (r + 1) * (g - d + r);
        if (lhs != rho(r, d, g) + g) return "mismatch at g=" + std::to_string(g);
        const BNReport rep = bn_report({g, d, r});
        if (rep.grassmannian_dim != (r + 1) * (g - d + r)) return "grassmannian_dim mismatch";
        if (rep.rho >= 0 && rep.dim_Vrd_linear_system != rep.rho + g) return "dim V mismatch";
      }
    }
  }
  return {};
}

std::string bn_wall_geometry() {
  for (std::int64_t g = 2; g <= 30; ++g) {
    const std::int64_t h2 = 2 * g - 2;
    for (std::int64_t d = 1; d <= g - 1; ++d) {
      const Wall w = bn_wall(g, d);
      const auto* s = std::get_if<Semicircle>(&w.shape);
      if (!s) return "not a semicircle";
      const Rational t0 = oracle::ratio(2, h2);
      if (s->center != oracle::ratio(d + 1 - g, h2)) return "center mismatch";
      if (s->center * s->center + t0 != s->radius_sq) return "misses (0, 2/H^2)";
      if (oracle::alignment(kStructureSheaf, bn_vector(g, d), 0, t0, h2) != 0) {
        return "alignment does not vanish at (0, 2/H^2)";
      }
      // Two further points of the arc also lie on the alignment locus.
      for (const Rational& off : {Rational(1, 7), Rational(-2, 9)}) {
        const Rational beta = s->center + off;
        const Rational t = s->radius_sq - off * off;
        if (t > 0 && oracle::alignment(kStructureSheaf, bn_vector(g, d), beta, t, h2) != 0) {
          return "alignment does not vanish on the arc";
        }
      }
    }
  }
  return {};
}

// Lemma 6.1 on enumerated candidates. A wall point carries destabilizer a only
// where 0 < im(a) < im(v); the segment beta = 0, t > 2/H^2 must carry none.
// Whole circles centered at m/H^2 may still rise above the bound when their
// destabilizers live on an arc cut off by a non-geometric point; those are
// counted in `high_circles` and reported alongside the verdict.
std::string gieseker_segment(int& high_circles) {
  for (std::int64_t h2 = 2; h2 <= 60; h2 += 2) {
    for (std::int64_t m = -40; m <= 40; ++m) {
      const auto c = gieseker_path_clear(MukaiVector{0, 1, m}, LatticeContext(h2));
      if (!c.clear || c.certificate != "quantization") return "path not certified clear";
    }
  }
  const Region region{Rational(-1), Rational(1), Rational(1, 100), Rational(4)};
  for (std::int64_t g = 2; g <= 10; ++g) {
    const LatticeContext ctx = LatticeContext::from_genus(g);
    const std::int64_t h2 = ctx.h_squared();
    for (std::int64_t d = 1; d <= g - 1; ++d) {
      const MukaiVector v = bn_vector(g, d);
      const Rational center = oracle::ratio(v.s, h2);
      const Rational limit = oracle::ratio(2, h2) + center * center;
      for (const Wall& w : enumerate_candidate_walls(v, region, {6, 1}, ctx)) {
        const auto* s = std::get_if<Semicircle>(&w.shape);
        if (!s) return "vertical wall for a rank-zero class";
        if (s->center != center) return "wall not centered at m/H^2";
        if (s->radius_sq <= limit) continue;
        ++high_circles;
        const Rational t0 = s->radius_sq - center * center;
        const ChargeValue zv = oracle::charge(v, 0, t0, h2);
        for (const MukaiVector& a : w.destabilizers) {
          const ChargeValue za = oracle::charge(a, 0, t0, h2);
          if (za.im_over_alpha > 0 && za.im_over_alpha < zv.im_over_alpha) {
            return "destabilizer admissible on the Gieseker segment at g=" + std::to_string(g) +
                   " d=" + std::to_string(d);
          }
        }
      }
    }
  }
  return {};
}

std::string contraction() {
  for (std::int64_t g = 2; g <= 10; ++g) {
    const LatticeContext ctx = LatticeContext::from_genus(g);
    const std::int64_t h2 = ctx.h_squared();
    for (std::int64_t d = 1; d <= g - 1; ++d) {
      const MukaiVector v = bn_vector(g, d);
      const PerpContext pc = perp_context(v, ctx);
      const Ray ray = hyperplane_of(kStructureSheaf, pc, ctx);
      const RationalMukaiVector gen(ray.generator);
      if (oracle::gram_pair(gen, RationalMukaiVector(kStructureSheaf), h2) != 0 ||
          oracle::gram_pair(gen, RationalMukaiVector(v), h2) != 0) {
        return "BN ray generator not in v-perp and O_X-perp";
      }
      const Semicircle s = std::get<Semicircle>(bn_wall(g, d).shape);
      const std::vector<Rational> offsets = {-s.center, Rational(1, 5) - s.center, Rational(-1, 3)};
      for (const Rational& off : offsets) {
        const Rational beta = s.center + off;
        const Rational t = s.radius_sq - off * off;
        if (t <= 0) continue;
        // The divisor m solves (m, x) = Im Z(x) Re Z(v) - Re Z(x) Im Z(v); check
        // it against the charge oracle on a basis, then test collinearity with
        // the generator in the lattice.
        const StabilityPoint p(beta, t);
        const RationalMukaiVector m = to_lattice(positivity_divisor(v, p, pc, ctx), pc);
        const ChargeValue zv = oracle::charge(v, beta, t, h2);
        for (const MukaiVector& x : {MukaiVector{1, 0, 0}, MukaiVector{0, 1, 0}, MukaiVector{0, 0, 1}}) {
          const ChargeValue zx = oracle::charge(x, beta, t, h2);
          if (oracle::gram_pair(m, RationalMukaiVector(x), h2) !=
              zx.im_over_alpha * zv.re - zx.re * zv.im_over_alpha) {
            return "positivity divisor fails the linear system";
          }
        }
        if (m.r * gen.c != m.c * gen.r || m.r * gen.s != m.s * gen.r || m.c * gen.s != m.s * gen.c) {
          return "not collinear with the BN ray at g=" + std::to_string(g);
        }
      }
    }
  }
  const LatticeContext ctx(2);
  const PerpContext pc = perp_context(MukaiVector{0, 1, 0}, ctx);
  const DivisorClass dc = positivity_divisor(MukaiVector{0, 1, 0}, StabilityPoint(0, 1), pc, ctx);
  if (dc.coords[0] != -2 || dc.coords[1] != 2) return "g=2 d=1 divisor is not (-2, 2)";
  const Ray ray = hyperplane_of(kStructureSheaf, pc, ctx);
  if (ray.coords[0] != 1 || ray.coords[1] != -1) return "g=2 d=1 BN ray is not (1, -1)";
  return {};
}

std::string emptiness() {
  if (rho(1, 2, 4) != -2 || bn_report({4, 2, 1}).verdict != Verdict::kEmpty) return "(4,2,1)";
  if (rho(1, 3, 4) != 0 || verdict_string(bn_report({4, 3, 1})) != "nonempty_dim(0)") {
    return "(4,3,1)";
  }
  for (std::int64_t g = 2; g <= 30; ++g) {
    for (std::int64_t d = 1; d <= g - 1; ++d) {
      for (std::int64_t r = 0; r <= 10; ++r) {
        const std::int64_t p = g - (r + 1) * (g - d + r);
        const BNReport rep = bn_report({g, d, r});
        const bool nonempty = rep.verdict == Verdict::kNonEmpty;
        if (nonempty != (p >= 0)) return "verdict disagrees with rho >= 0";
        if (nonempty && verdict_string(rep) != "nonempty_dim(" + std::to_string(p) + ")") {
          return "verdict dimension mismatch";
        }
      }
    }
  }
  return {};
}

std::string oracles() {
  oracle::Generator gen(20261016);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t h2 = gen.h_squared(8);
    const Rational beta = gen.rational(24, 12);
    const Rational t = gen.positive_rational(24, 12) / 8;
    if (geometric_check(StabilityPoint(beta, t), LatticeContext(h2)) !=
        oracle::geometric_by_roots(beta, t, h2, 50)) {
      return "geometric_check disagrees with root enumeration at beta=" + to_string(beta) +
             " t=" + to_string(t);
    }
  }
  int walls = 0;
  while (walls < 200) {
    const std::int64_t h2 = gen.h_squared();
    const MukaiVector a = gen.vector(8);
    const MukaiVector v = gen.vector(8);
    if (is_proportional(a, v)) continue;
    const auto w = wall_of_pair(a, v, LatticeContext(h2));
    if (!w) continue;
    ++walls;
    int points = 0;
    if (const auto* s = std::get_if<Semicircle>(&w->shape)) {
      for (const auto& [beta, t] : oracle::arc_points(s->center, s->radius_sq, 20)) {
        ++points;
        if (t <= 0 || oracle::alignment(a, v, beta, t, h2) != 0) return "semicircle off locus";
      }
      if (points != 20) return "could not sample 20 points";
    } else {
      const Rational beta = std::get<VerticalLine>(w->shape).beta;
      for (int k = 1; k <= 20; ++k) {
        if (oracle::alignment(a, v, beta, oracle::ratio(k, 3), h2) != 0) return "line off locus";
      }
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t h2 = gen.h_squared();
    const LatticeContext ctx(h2);
    const MukaiVector a = gen.vector(30);
    const MukaiVector b = gen.vector(30);
    const Rational beta = gen.rational(40, 12);
    if (oracle::gram_pair(twist(a, beta, ctx), twist(b, beta, ctx), h2) !=
        oracle::gram_pair(RationalMukaiVector(a), RationalMukaiVector(b), h2)) {
      return "twist is not an isometry";
    }
  }
  return {};
}

std::string strict_inequalities() {
  for (std::int64_t w_sq = -2; w_sq <= 60; w_sq += 2) {
    for (std::int64_t k = 1; k <= 10; ++k) {
      for (std::int64_t e = 1; e <= 10; ++e) {
        if (jh_locus_dim(w_sq, k, e) >= w_sq + 2) return "jh_locus_dim not strict";
      }
    }
  }
  for (std::int64_t g = 2; g <= 30; ++g) {
    for (std::int64_t d = 1; d <= g - 1; ++d) {
      for (std::int64_t r = 1; r <= 10; ++r) {
        for (const auto& step : reduction_ledger(g, d, r)) {
          const std::int64_t lhs = (g - (r + 1) * (g - step.d_prime + r)) + d - step.d_prime;
          const std::int64_t rhs = g - (r + 1) * (g - d + r);
          if (step.lhs != lhs || step.rhs != rhs || !(lhs < rhs) || !step.strict) {
            return "reduction step not strict at g=" + std::to_string(g);
          }
        }
      }
    }
  }
  return {};
}

std::string serre() {
  oracle::Generator gen(0x5e44e);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t g = gen.integer(2, 40);
    const std::int64_t d = gen.integer(1, 2 * g - 3);
    const std::int64_t r = gen.integer(0, 12);
    const SerreDual dual = serre_dual(g, d, r);
    if (dual.r != g - 1 - d + r || dual.d != 2 * g - 2 - d) return "formula mismatch";
    if (rho(dual.r, dual.d, g) != rho(r, d, g)) return "rho not invariant";
    if (!(serre_dual(g, dual.d, dual.r) == SerreDual{r, d})) return "not an involution";
  }
  return {};
}

}  // namespace

int main() {
  const auto start = Clock::now();
  int high_circles = 0;
  const std::vector<std::pair<std::string, Check>> criteria = {
      {"1. identity suite: w_r^2 = 2 rho - 2 and (w_r, O_X) = 2r + 1 + g - d", identities},
      {"2. dimension count: (w_r^2 + 2) + (r + 1)(g - d + r) = rho + g", dimension_count},
      {"3. BN wall passes through (0, 2/H^2) with center (d + 1 - g)/H^2", bn_wall_geometry},
      {"4. Gieseker segment beta = 0, t > 2/H^2 carries no admissible destabilizer",
       [&] { return gieseker_segment(high_circles); }},
      {"5. positivity divisor on the BN wall is the contraction ray", contraction},
      {"6. emptiness verdicts follow rho >= 0", emptiness},
      {"7. closed forms agree with root enumeration and alignment sampling", oracles},
      {"8. strict inequalities for JH strata and the reduction ledger", strict_inequalities},
      {"9. Serre duality preserves rho and is an involution", serre},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    std::string problem;
    try {
      problem = check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    std::cout << (problem.empty() ? "[PASS] " : "[FAIL] ") << name;
    if (name.front() == '4' && problem.empty()) {
      std::cout << " (path certified; " << high_circles
                << " whole circles exceed the radius bound, none admissible at beta = 0)";
    }
    if (!problem.empty()) {
      std::cout << " (" << problem << ")";
      ++failures;
    }
    std::cout << '\n';
  }

  const auto enum_start = Clock::now();
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli({"walls", "enumerate", "--g", "4", "--d", "3", "--rank-bound", "6"},
                                out, err);
  const double enum_seconds = seconds_since(enum_start);
  const double total_seconds = seconds_since(start);
  const bool runtime_ok = code == 0 && enum_seconds < 1.0 && total_seconds < 10.0;
  char detail[128];
  std::snprintf(detail, sizeof detail, " (suite %.2f s, walls enumerate %.3f s)", total_seconds,
                enum_seconds);
  std::cout << (runtime_ok ? "[PASS] " : "[FAIL] ")
            << "10. runtime: suite under 10 s, walls enumerate g=4 d=3 rank 6 under 1 s" << detail
            << '\n';
  if (!runtime_ok) ++failures;

  return failures == 0 ? 0 : 1;
}

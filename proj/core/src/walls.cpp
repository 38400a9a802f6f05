#include "k3walls/walls.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>
#include <string>

#include "checked.hpp"
#include "k3walls/errors.hpp"

namespace k3walls {

using detail::narrow;
using detail::Wide;

const Rational& BivariatePoly::coef(int beta_power, int t_power) const {
  return coef_.at(static_cast<std::size_t>(beta_power))
      .at(static_cast<std::size_t>(t_power));
}

Rational& BivariatePoly::coef(int beta_power, int t_power) {
  return coef_.at(static_cast<std::size_t>(beta_power))
      .at(static_cast<std::size_t>(t_power));
}

Rational BivariatePoly::eval(const Rational& beta, const Rational& t) const {
  Rational total = 0;
  Rational beta_pow = 1;
  for (int i = 0; i <= kMaxBeta; ++i) {
    total += beta_pow * (coef(i, 0) + coef(i, 1) * t);
    beta_pow *= beta;
  }
  return total;
}

bool BivariatePoly::is_zero() const {
  for (const auto& row : coef_) {
    for (const auto& c : row) {
      if (sgn(c) != 0) return false;
    }
  }
  return true;
}

namespace {

// Re Z and Im Z / alpha as polynomials in (beta, t).
BivariatePoly real_part(const MukaiVector& x, const LatticeContext& ctx) {
  const Rational h2(ctx.h_squared());
  BivariatePoly p;
  p.coef(0, 0) = -Rational(x.s);
  p.coef(1, 0) = Rational(x.c) * h2;
  p.coef(0, 1) = h2 * x.r / 2;
  p.coef(2, 0) = -h2 * x.r / 2;
  return p;
}

BivariatePoly imaginary_part(const MukaiVector& x, const LatticeContext& ctx) {
  const Rational h2(ctx.h_squared());
  BivariatePoly p;
  p.coef(0, 0) = Rational(x.c) * h2;
  p.coef(1, 0) = -Rational(x.r) * h2;
  return p;
}

BivariatePoly multiply(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (int i = 0; i <= BivariatePoly::kMaxBeta; ++i) {
    for (int j = 0; j <= BivariatePoly::kMaxT; ++j) {
      if (sgn(a.coef(i, j)) == 0) continue;
      for (int k = 0; k <= BivariatePoly::kMaxBeta; ++k) {
        for (int l = 0; l <= BivariatePoly::kMaxT; ++l) {
          if (sgn(b.coef(k, l)) == 0) continue;
          if (i + k > BivariatePoly::kMaxBeta || j + l > BivariatePoly::kMaxT) {
            throw std::logic_error("alignment polynomial degree overflow");
          }
          out.coef(i + k, j + l) += a.coef(i, j) * b.coef(k, l);
        }
      }
    }
  }
  return out;
}

BivariatePoly subtract(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (int i = 0; i <= BivariatePoly::kMaxBeta; ++i) {
    for (int j = 0; j <= BivariatePoly::kMaxT; ++j) {
      out.coef(i, j) = a.coef(i, j) - b.coef(i, j);
    }
  }
  return out;
}

// Orders semicircles before vertical lines; semicircles by center ascending
// then radius_sq descending; lines by beta.
struct ShapeLess {
  bool operator()(const WallShape& lhs, const WallShape& rhs) const {
    if (lhs.index() != rhs.index()) return lhs.index() < rhs.index();
    if (const auto* a = std::get_if<Semicircle>(&lhs)) {
      const auto& b = std::get<Semicircle>(rhs);
      if (a->center != b.center) return a->center < b.center;
      return a->radius_sq > b.radius_sq;
    }
    return std::get<VerticalLine>(lhs).beta < std::get<VerticalLine>(rhs).beta;
  }
};

using WallMap = std::map<WallShape, std::vector<MukaiVector>, ShapeLess>;

// Interval of beta values; an open end excludes the endpoint itself.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_open = false;
  bool hi_open = false;
  bool empty() const { return lo > hi || (lo == hi && (lo_open || hi_open)); }
};

// Intersects `iv` with {beta : offset - beta * slope > 0}.
void restrict_positive(Interval& iv, std::int64_t offset, std::int64_t slope) {
  if (slope == 0) {
    if (offset <= 0) iv.hi = iv.lo - 1;
    return;
  }
  const Rational root = make_rational(offset, slope);
  if (slope > 0) {
    if (root <= iv.hi) {
      iv.hi = root;
      iv.hi_open = true;
    }
  } else if (root >= iv.lo) {
    iv.lo = root;
    iv.lo_open = true;
  }
}

// Range of k2 beta^2 + k1 beta over [lo, hi].
Interval quadratic_range(const Rational& k2, const Rational& k1, const Interval& iv) {
  auto value = [&](const Rational& b) { return Rational(k2 * b * b + k1 * b); };
  Rational lo = std::min(value(iv.lo), value(iv.hi));
  Rational hi = std::max(value(iv.lo), value(iv.hi));
  if (sgn(k2) != 0) {
    const Rational vertex = -k1 / (2 * k2);
    if (vertex > iv.lo && vertex < iv.hi) {
      const Rational at_vertex = value(vertex);
      lo = std::min(lo, at_vertex);
      hi = std::max(hi, at_vertex);
    }
  }
  return {lo, hi};
}

struct SBounds {
  std::optional<Integer> lo;
  std::optional<Integer> hi;
};

// Bounds on s_a from a^2 >= -2 and (v - a)^2 >= -2; each is one-sided when
// the corresponding rank is nonzero.
SBounds square_filter_bounds(const MukaiVector& v, std::int64_t r_a,
                             std::int64_t c_a, const LatticeContext& ctx) {
  SBounds out;
  auto tighten_hi = [&](const Rational& x) {
    const Integer b = floor(x);
    if (!out.hi || b < *out.hi) out.hi = b;
  };
  auto tighten_lo = [&](const Rational& x) {
    const Integer b = ceil(x);
    if (!out.lo || b > *out.lo) out.lo = b;
  };
  const Integer h2(ctx.h_squared());
  // 2 r_a s_a <= c_a^2 H^2 + 2
  if (r_a != 0) {
    const Rational bound = make_rational(Integer(c_a) * c_a * h2 + 2, Integer(2) * r_a);
    r_a > 0 ? tighten_hi(bound) : tighten_lo(bound);
  }
  // 2 dr (s_v - s_a) <= dc^2 H^2 + 2
  const std::int64_t dr = narrow(Wide{v.r} - r_a, "rank difference");
  const std::int64_t dc = narrow(Wide{v.c} - c_a, "degree difference");
  if (dr != 0) {
    const Rational bound =
        Rational(v.s) - make_rational(Integer(dc) * dc * h2 + 2, Integer(2) * dr);
    dr > 0 ? tighten_lo(bound) : tighten_hi(bound);
  }
  return out;
}

// Whether the wall has a point with beta in `iv` and t in [t_min, t_max].
bool meets(const WallShape& shape, const Interval& iv, const Region& region) {
  if (const auto* line = std::get_if<VerticalLine>(&shape)) {
    const bool above_lo = iv.lo_open ? line->beta > iv.lo : line->beta >= iv.lo;
    const bool below_hi = iv.hi_open ? line->beta < iv.hi : line->beta <= iv.hi;
    return above_lo && below_hi;
  }
  const auto& arc = std::get<Semicircle>(shape);
  auto height = [&](const Rational& b) {
    const Rational off = b - arc.center;
    return Rational(arc.radius_sq - off * off);
  };
  // The height is concave in beta, so its image over the interval is an
  // interval; track whether each end of that image is attained.
  Rational top;
  bool top_attained = true;
  if (arc.center <= iv.lo) {
    top = height(iv.lo);
    top_attained = !iv.lo_open;
  } else if (arc.center >= iv.hi) {
    top = height(iv.hi);
    top_attained = !iv.hi_open;
  } else {
    top = height(arc.center);
  }
  const Rational h_lo = height(iv.lo);
  const Rational h_hi = height(iv.hi);
  Rational bottom;
  bool bottom_attained = true;
  if (h_lo < h_hi) {
    bottom = h_lo;
    bottom_attained = !iv.lo_open;
  } else if (h_hi < h_lo) {
    bottom = h_hi;
    bottom_attained = !iv.hi_open;
  } else {
    bottom = h_lo;
    bottom_attained = !iv.lo_open || !iv.hi_open;
  }
  const bool reaches_min = top > region.t_min || (top == region.t_min && top_attained);
  const bool reaches_max = bottom < region.t_max || (bottom == region.t_max && bottom_attained);
  return reaches_min && reaches_max;
}

void collect_for_rank(const MukaiVector& v, std::int64_t r_a, const Region& region,
                      const LatticeContext& ctx, WallMap& out) {
  if (r_a == 0 && v.r == 0) return;
  const std::int64_t dr = narrow(Wide{v.r} - r_a, "rank difference");
  const Integer c_lo = ceil(std::min(region.beta_min * r_a, region.beta_max * r_a));
  const Integer c_hi = floor(std::max(Rational(v.c - region.beta_min * dr),
                                      Rational(v.c - region.beta_max * dr)));
  if (!c_lo.fits_slong_p() || !c_hi.fits_slong_p()) {
    throw Error(ErrorCode::kOverflow, "degree range leaves int64");
  }
  const Rational h2(ctx.h_squared());
  for (std::int64_t c_a = c_lo.get_si(); c_a <= c_hi.get_si(); ++c_a) {
    // Feasible beta: 0 < im(a) < im(v). At a wall point where either
    // inequality is an equality, alignment forces Z(a) = 0 or Z(v - a) = 0.
    Interval iv{region.beta_min, region.beta_max};
    restrict_positive(iv, c_a, r_a);
    restrict_positive(iv, narrow(Wide{v.c} - c_a, "degree difference"), dr);
    if (iv.empty()) continue;

    SBounds bounds = square_filter_bounds(v, r_a, c_a, ctx);
    const Rational k = h2 * narrow(Wide{r_a} * v.c - Wide{v.r} * c_a, "K") / 2;
    if (sgn(k) == 0) {
      // Same slope as v: the only locus is the vertical line beta = mu(v),
      // where im(a) and im(v) both vanish, so it never carries a proper wall.
      continue;
    } else {
      // The wall through (beta, t) has s_a = N(beta, t) / D(beta) with
      // N = K (t + beta^2) - s_v r_a beta + s_v c_a, D = c_v - r_v beta > 0 on iv.
      const Interval quad =
          quadratic_range(k, Rational(narrow(-Wide{v.s} * r_a, "N")), iv);
      const Rational t_part_a = k * region.t_min;
      const Rational t_part_b = k * region.t_max;
      const Rational constant = Rational(narrow(Wide{v.s} * c_a, "N"));
      const Rational n_lo = quad.lo + std::min(t_part_a, t_part_b) + constant;
      const Rational n_hi = quad.hi + std::max(t_part_a, t_part_b) + constant;
      const Rational d_a = Rational(v.c) - iv.lo * v.r;
      const Rational d_b = Rational(v.c) - iv.hi * v.r;
      if (sgn(d_a) <= 0 || sgn(d_b) <= 0) {
        throw std::logic_error("im(v) vanishes on a feasible interval with K != 0");
      }
      const Rational s_lo = std::min(n_lo / d_a, n_lo / d_b);
      const Rational s_hi = std::max(n_hi / d_a, n_hi / d_b);
      const Integer lo = ceil(s_lo);
      const Integer hi = floor(s_hi);
      if (!bounds.lo || lo > *bounds.lo) bounds.lo = lo;
      if (!bounds.hi || hi < *bounds.hi) bounds.hi = hi;
    }
    if (*bounds.lo > *bounds.hi) continue;
    if (!bounds.lo->fits_slong_p() || !bounds.hi->fits_slong_p()) {
      throw Error(ErrorCode::kOverflow, "s range leaves int64");
    }
    for (std::int64_t s_a = bounds.lo->get_si(); s_a <= bounds.hi->get_si(); ++s_a) {
      const MukaiVector a{r_a, c_a, s_a};
      if (is_proportional(a, v)) continue;
      if (square(a, ctx) < -2 || square(v - a, ctx) < -2) continue;
      const std::optional<Wall> wall = wall_of_pair(a, v, ctx);
      if (!wall || !meets(wall->shape, iv, region)) continue;
      out[wall->shape].push_back(a);
    }
  }
}

}  // namespace

BivariatePoly alignment_poly(const MukaiVector& a, const MukaiVector& v,
                             const LatticeContext& ctx) {
  return subtract(multiply(real_part(a, ctx), imaginary_part(v, ctx)),
                  multiply(real_part(v, ctx), imaginary_part(a, ctx)));
}

void Region::validate() const {
  if (beta_min > beta_max) {
    throw Error(ErrorCode::kInvalidArgument, "region needs beta_min <= beta_max");
  }
  if (sgn(t_min) <= 0 || t_min > t_max) {
    throw Error(ErrorCode::kInvalidArgument, "region needs 0 < t_min <= t_max");
  }
}

std::optional<Wall> wall_of_pair(const MukaiVector& a, const MukaiVector& v,
                                 const LatticeContext& ctx) {
  const BivariatePoly w = alignment_poly(a, v, ctx);
  if (w.is_zero()) {
    throw Error(ErrorCode::kProportionalClasses, "classes are proportional");
  }
  if (sgn(w.coef(3, 0)) != 0 || sgn(w.coef(1, 1)) != 0 ||
      w.coef(2, 0) != w.coef(0, 1)) {
    throw std::logic_error("alignment polynomial is not of wall shape");
  }
  const Rational& k = w.coef(0, 1);
  const Rational& b = w.coef(1, 0);
  const Rational& c = w.coef(0, 0);
  Wall wall{.shape = VerticalLine{}, .destabilizers = {a}, .for_vector = v};
  if (sgn(k) != 0) {
    // k (t + beta^2) + b beta + c = 0  <=>  t + (beta - center)^2 = radius_sq
    const Rational center = -b / (2 * k);
    const Rational radius_sq = center * center - c / k;
    if (sgn(radius_sq) <= 0) return std::nullopt;
    wall.shape = Semicircle{center, radius_sq};
    return wall;
  }
  if (sgn(b) != 0) {
    wall.shape = VerticalLine{Rational(-c / b)};
    return wall;
  }
  return std::nullopt;
}

Wall bn_wall(std::int64_t g, std::int64_t d) {
  if (g < 2 || d <= 0 || d > g - 1) {
    throw Error(ErrorCode::kOutOfRange,
                "BN wall needs 0 < d <= g - 1, got g = " + std::to_string(g) +
                    ", d = " + std::to_string(d));
  }
  const LatticeContext ctx = LatticeContext::from_genus(g);
  const MukaiVector v{0, 1, d + 1 - g};
  std::optional<Wall> wall = wall_of_pair(kStructureSheaf, v, ctx);
  const Rational endpoint_t = make_rational(2, ctx.h_squared());
  if (!wall || sgn(alignment_poly(kStructureSheaf, v, ctx).eval(0, endpoint_t)) != 0) {
    throw std::logic_error("BN wall does not pass through (0, 2/H^2)");
  }
  return *wall;
}

std::vector<Wall> enumerate_candidate_walls(const MukaiVector& v,
                                            const Region& region,
                                            const EnumerationOptions& options,
                                            const LatticeContext& ctx) {
  region.validate();
  if (!is_primitive(v) || square(v, ctx) < -2) {
    throw Error(ErrorCode::kBadVector,
                "enumeration needs a primitive v with v^2 >= -2");
  }
  if (options.rank_bound < 0) {
    throw Error(ErrorCode::kInvalidArgument, "rank bound must be >= 0");
  }
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  std::vector<std::int64_t> ranks;
  for (std::int64_t r = -options.rank_bound; r <= options.rank_bound; ++r) {
    ranks.push_back(r);
  }

  std::vector<WallMap> partial(jobs);
  auto work = [&](std::size_t worker) {
    for (std::size_t i = worker; i < ranks.size(); i += jobs) {
      collect_for_rank(v, ranks[i], region, ctx, partial[worker]);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::future<void>> futures;
    for (std::size_t worker = 0; worker < jobs; ++worker) {
      futures.push_back(std::async(std::launch::async, work, worker));
    }
    for (auto& f : futures) f.get();
  }

  WallMap merged;
  for (auto& part : partial) {
    for (auto& [shape, destabilizers] : part) {
      auto& slot = merged[shape];
      slot.insert(slot.end(), destabilizers.begin(), destabilizers.end());
    }
  }
  std::vector<Wall> walls;
  walls.reserve(merged.size());
  for (auto& [shape, destabilizers] : merged) {
    std::sort(destabilizers.begin(), destabilizers.end());
    destabilizers.erase(std::unique(destabilizers.begin(), destabilizers.end()),
                        destabilizers.end());
    walls.push_back(Wall{shape, std::move(destabilizers), v, true});
  }
  return walls;
}

PathClearance gieseker_path_clear(const MukaiVector& v, const LatticeContext&) {
  if (v.r != 0) {
    throw Error(ErrorCode::kNotRankZero, "path clearance needs a rank-0 class");
  }
  if (v.c == 1) return {true, "quantization"};
  return {false, std::nullopt};
}

std::string_view side_name(Side side) {
  switch (side) {
    case Side::kInside:
      return "inside";
    case Side::kOn:
      return "on";
    case Side::kOutside:
      return "outside";
    case Side::kLeft:
      return "left";
    case Side::kRight:
      return "right";
  }
  return "unknown";
}

Side side_of(const Wall& wall, const StabilityPoint& p) {
  if (const auto* line = std::get_if<VerticalLine>(&wall.shape)) {
    const int c = cmp(p.beta(), line->beta);
    return c < 0 ? Side::kLeft : (c == 0 ? Side::kOn : Side::kRight);
  }
  const auto& arc = std::get<Semicircle>(wall.shape);
  const Rational off = p.beta() - arc.center;
  const int c = cmp(Rational(off * off + p.t()), arc.radius_sq);
  return c < 0 ? Side::kInside : (c == 0 ? Side::kOn : Side::kOutside);
}

bool in_gieseker_chamber(const MukaiVector& v, const std::vector<Wall>& walls,
                         const StabilityPoint& p, const LatticeContext& ctx) {
  if (v.r < 0) {
    throw Error(ErrorCode::kBadVector, "Gieseker chamber needs r >= 0");
  }
  if (v.r > 0 && p.beta() >= make_rational(v.c, v.r)) return false;
  const Rational im_v = eval_charge(v, p, ctx).im_over_alpha;
  for (const Wall& wall : walls) {
    const auto* arc = std::get_if<Semicircle>(&wall.shape);
    if (!arc || side_of(wall, p) == Side::kOutside) continue;
    // The wall crosses the ray above p at this beta; it separates p from the
    // large volume limit when some destabilizer is admissible there.
    for (const MukaiVector& a : wall.destabilizers) {
      const Rational im_a = eval_charge(a, p, ctx).im_over_alpha;
      if (sgn(im_a) > 0 && im_a < im_v) return false;
    }
  }
  return true;
}

}  // namespace k3walls

#include "k3walls/nef_cone.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "checked.hpp"
#include "k3walls/errors.hpp"

namespace k3walls {

using detail::narrow;
using detail::Wide;

namespace {

using IntRow = std::array<Integer, 3>;

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::kOverflow, "value leaves int64");
  return z.get_si();
}

MukaiVector to_mukai(const IntRow& row) {
  return {to_int64(row[0]), to_int64(row[1]), to_int64(row[2])};
}

// Kernel of the row vector `form` over Z, via unimodular column operations
// that reduce `form` to (g, 0, 0) up to order. The kernel columns of the
// transform form a saturated basis.
std::array<IntRow, 2> integer_kernel(IntRow form) {
  std::array<IntRow, 3> columns{};
  for (std::size_t i = 0; i < 3; ++i) columns[i][i] = 1;
  for (;;) {
    std::size_t pivot = 3;
    for (std::size_t i = 0; i < 3; ++i) {
      if (form[i] != 0 && (pivot == 3 || abs(form[i]) < abs(form[pivot]))) pivot = i;
    }
    if (pivot == 3) throw std::logic_error("kernel of the zero form");
    bool reduced = true;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j == pivot || form[j] == 0) continue;
      const Integer q = form[j] / form[pivot];
      form[j] -= q * form[pivot];
      for (std::size_t k = 0; k < 3; ++k) columns[j][k] -= q * columns[pivot][k];
      if (form[j] != 0) reduced = false;
    }
    if (reduced) {
      std::array<IntRow, 2> kernel{};
      std::size_t n = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j != pivot) kernel[n++] = columns[j];
      }
      return kernel;
    }
  }
}

// Row-style Hermite normal form of a rank-2 integer matrix with 3 columns.
std::array<IntRow, 2> hermite_normal_form(std::array<IntRow, 2> rows) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < 3 && pivot_row < 2; ++col) {
    for (;;) {
      std::size_t best = 2;
      for (std::size_t i = pivot_row; i < 2; ++i) {
        if (rows[i][col] != 0 && (best == 2 || abs(rows[i][col]) < abs(rows[best][col]))) {
          best = i;
        }
      }
      if (best == 2) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < 2; ++i) {
        const Integer q = rows[i][col] / rows[pivot_row][col];
        for (std::size_t k = 0; k < 3; ++k) rows[i][k] -= q * rows[pivot_row][k];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0) {
      for (auto& x : rows[pivot_row]) x = -x;
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(),
                 rows[pivot_row][col].get_mpz_t());
      for (std::size_t k = 0; k < 3; ++k) rows[i][k] -= q * rows[pivot_row][k];
    }
    ++pivot_row;
  }
  if (pivot_row != 2) throw std::logic_error("perp basis is rank deficient");
  return rows;
}

std::size_t leading_index(const MukaiVector& b) {
  if (b.r != 0) return 0;
  if (b.c != 0) return 1;
  return 2;
}

Rational component(const RationalMukaiVector& x, std::size_t i) {
  return i == 0 ? x.r : (i == 1 ? x.c : x.s);
}

// Solves gram * m = rhs exactly by Gaussian elimination.
std::array<Rational, 3> solve3(std::array<std::array<Rational, 3>, 3> a,
                               std::array<Rational, 3> rhs) {
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    while (pivot < 3 && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == 3) throw std::logic_error("singular Mukai Gram matrix");
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t i = 0; i < 3; ++i) {
      if (i == col || sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col] / a[col][col];
      for (std::size_t k = col; k < 3; ++k) a[i][k] -= f * a[col][k];
      rhs[i] -= f * rhs[col];
    }
  }
  return {rhs[0] / a[0][0], rhs[1] / a[1][1], rhs[2] / a[2][2]};
}

Rational bilinear(const DivisorClass& a, const DivisorClass& b,
                  const PerpContext& pc) {
  Rational total = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) total += a.coords[i] * pc.gram[i][j] * b.coords[j];
  }
  return total;
}

void collect_rays(const MukaiVector& v, std::int64_t bound, std::int64_t r,
                  const PerpContext& pc, const LatticeContext& ctx,
                  std::map<Ray, std::vector<MukaiVector>>& out) {
  const Wide v_sq = square(v, ctx);
  for (std::int64_t c = -bound; c <= bound; ++c) {
    for (std::int64_t s = -bound; s <= bound; ++s) {
      const MukaiVector a{r, c, s};
      if (is_proportional(a, v) || square(a, ctx) < -2) continue;
      const Wide p = pair(v, a, ctx);
      if (2 * (p < 0 ? -p : p) > v_sq) continue;
      out[hyperplane_of(a, pc, ctx)].push_back(a);
    }
  }
}

}  // namespace

PerpContext perp_context(const MukaiVector& v, const LatticeContext& ctx) {
  if (!is_primitive(v) || square(v, ctx) <= 0) {
    throw Error(ErrorCode::kBadVector, "v^perp needs a primitive v with v^2 > 0");
  }
  // (v, x) = -s_v r_x + c_v H^2 c_x - r_v s_x.
  const IntRow form{Integer(-v.s), Integer(v.c) * ctx.h_squared(), Integer(-v.r)};
  const auto basis = hermite_normal_form(integer_kernel(form));

  PerpContext pc;
  pc.v = v;
  pc.basis = {to_mukai(basis[0]), to_mukai(basis[1])};
  for (std::size_t i = 0; i < 2; ++i) {
    if (pair(pc.basis[i], v, ctx) != 0) throw std::logic_error("basis not in v^perp");
    for (std::size_t j = 0; j < 2; ++j) {
      pc.gram[i][j] = pair(pc.basis[i], pc.basis[j], ctx);
    }
  }
  if (sgn(pc.gram[0][0] * pc.gram[1][1] - pc.gram[0][1] * pc.gram[1][0]) >= 0) {
    throw std::logic_error("v^perp is not hyperbolic");
  }
  return pc;
}

RationalMukaiVector to_lattice(const DivisorClass& d, const PerpContext& pc) {
  return d.coords[0] * RationalMukaiVector(pc.basis[0]) +
         d.coords[1] * RationalMukaiVector(pc.basis[1]);
}

DivisorClass to_coords(const RationalMukaiVector& x, const PerpContext& pc) {
  // Echelon basis: basis[1] vanishes at the leading index of basis[0].
  const std::size_t p0 = leading_index(pc.basis[0]);
  const std::size_t p1 = leading_index(pc.basis[1]);
  const RationalMukaiVector b0(pc.basis[0]);
  const RationalMukaiVector b1(pc.basis[1]);
  DivisorClass d;
  d.coords[0] = component(x, p0) / component(b0, p0);
  d.coords[1] = (component(x, p1) - d.coords[0] * component(b0, p1)) / component(b1, p1);
  if (to_lattice(d, pc) != x) {
    throw Error(ErrorCode::kInvalidArgument, "class is not orthogonal to v");
  }
  return d;
}

Rational divisor_square(const DivisorClass& d, const PerpContext& pc) {
  return bilinear(d, d, pc);
}

Rational cross(const DivisorClass& a, const DivisorClass& b) {
  return a.coords[0] * b.coords[1] - a.coords[1] * b.coords[0];
}

Ray hyperplane_of(const MukaiVector& a, const PerpContext& pc,
                  const LatticeContext& ctx) {
  if (is_proportional(a, pc.v)) {
    throw Error(ErrorCode::kProportionalClasses, "a is proportional to v");
  }
  // x = x0 b0 + x1 b1 is in a^perp iff x0 (a, b0) + x1 (a, b1) = 0.
  const std::int64_t e0 = pair(a, pc.basis[0], ctx);
  const std::int64_t e1 = pair(a, pc.basis[1], ctx);
  if (e0 == 0 && e1 == 0) {
    throw std::logic_error("a^perp contains v^perp for non-proportional a");
  }
  std::int64_t x0 = -e1;
  std::int64_t x1 = e0;
  const std::int64_t g = std::gcd(x0, x1);
  x0 /= g;
  x1 /= g;
  if (x0 < 0 || (x0 == 0 && x1 < 0)) {
    x0 = -x0;
    x1 = -x1;
  }
  Ray ray;
  ray.coords = {x0, x1};
  ray.generator = x0 * pc.basis[0] + x1 * pc.basis[1];
  return ray;
}

std::string_view ray_class_name(RayClass c) {
  switch (c) {
    case RayClass::kCutting:
      return "cutting";
    case RayClass::kBoundary:
      return "boundary";
    case RayClass::kNonCutting:
      return "non-cutting";
  }
  return "unknown";
}

HyperplaneArrangement nef_hyperplanes(const MukaiVector& v,
                                      std::int64_t search_bound,
                                      const LatticeContext& ctx,
                                      std::size_t jobs) {
  if (search_bound < 1) {
    throw Error(ErrorCode::kInvalidArgument, "search bound must be positive");
  }
  const PerpContext pc = perp_context(v, ctx);
  jobs = std::max<std::size_t>(1, jobs);
  std::vector<std::map<Ray, std::vector<MukaiVector>>> partial(jobs);
  auto work = [&](std::size_t worker) {
    std::size_t index = 0;
    for (std::int64_t r = -search_bound; r <= search_bound; ++r, ++index) {
      if (index % jobs == worker) collect_rays(v, search_bound, r, pc, ctx, partial[worker]);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::future<void>> futures;
    for (std::size_t w = 0; w < jobs; ++w) {
      futures.push_back(std::async(std::launch::async, work, w));
    }
    for (auto& f : futures) f.get();
  }
  std::map<Ray, std::vector<MukaiVector>> merged;
  for (auto& part : partial) {
    for (auto& [ray, witnesses] : part) {
      auto& slot = merged[ray];
      slot.insert(slot.end(), witnesses.begin(), witnesses.end());
    }
  }

  HyperplaneArrangement out;
  out.v = v;
  out.search_bound = search_bound;
  for (auto& [ray, witnesses] : merged) {
    std::sort(witnesses.begin(), witnesses.end());
    HyperplaneEntry entry{ray, square(ray.generator, ctx), RayClass::kCutting,
                          std::move(witnesses)};
    if (entry.generator_square > 0) {
      out.cutting.push_back(std::move(entry));
    } else if (entry.generator_square == 0) {
      entry.ray_class = RayClass::kBoundary;
      out.boundary.push_back(std::move(entry));
    } else {
      entry.ray_class = RayClass::kNonCutting;
      out.non_cutting.push_back(std::move(entry));
    }
  }
  return out;
}

RationalMukaiVector positivity_class(const MukaiVector& v, const StabilityPoint& p,
                                     const LatticeContext& ctx) {
  const ChargeValue zv = eval_charge(v, p, ctx);
  if (sgn(zv.re) == 0 && sgn(zv.im_over_alpha) == 0) {
    throw Error(ErrorCode::kDegenerateCharge, "Z(v) = 0 at the given point");
  }
  // Functional w(x) = im(x) re(v) - re(x) im(v) on the standard basis.
  const std::array<MukaiVector, 3> unit{MukaiVector{1, 0, 0}, MukaiVector{0, 1, 0},
                                        MukaiVector{0, 0, 1}};
  std::array<Rational, 3> rhs;
  std::array<std::array<Rational, 3>, 3> gram;
  for (std::size_t i = 0; i < 3; ++i) {
    const ChargeValue zx = eval_charge(unit[i], p, ctx);
    rhs[i] = zx.im_over_alpha * zv.re - zx.re * zv.im_over_alpha;
    for (std::size_t j = 0; j < 3; ++j) gram[i][j] = pair(unit[i], unit[j], ctx);
  }
  const auto m = solve3(gram, rhs);
  RationalMukaiVector out{m[0], m[1], m[2]};
  if (sgn(pair(out, RationalMukaiVector(v), ctx)) != 0) {
    throw std::logic_error("positivity class is not orthogonal to v");
  }
  return out;
}

DivisorClass positivity_divisor(const MukaiVector& v, const StabilityPoint& p,
                                const PerpContext& pc, const LatticeContext& ctx) {
  return to_coords(positivity_class(v, p, ctx), pc);
}

PositiveCone::PositiveCone(const PerpContext& pc, DivisorClass reference)
    : pc_(pc), reference_(std::move(reference)) {
  if (sgn(divisor_square(reference_, pc_)) <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "positive cone reference needs positive square");
  }
}

bool PositiveCone::contains(const DivisorClass& d) const {
  return sgn(divisor_square(d, pc_)) > 0 && sgn(bilinear(d, reference_, pc_)) > 0;
}

bool PositiveCone::in_closure(const DivisorClass& d) const {
  return sgn(divisor_square(d, pc_)) >= 0 && sgn(bilinear(d, reference_, pc_)) >= 0;
}

}  // namespace k3walls

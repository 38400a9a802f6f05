#include "k3walls/stability.hpp"

#include "k3walls/errors.hpp"

namespace k3walls {

StabilityPoint::StabilityPoint(Rational beta, Rational t)
    : beta_(std::move(beta)), t_(std::move(t)) {
  if (sgn(t_) <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "stability point needs t = alpha^2 > 0, got " + to_string(t_));
  }
}

ChargeValue operator+(const ChargeValue& a, const ChargeValue& b) {
  return {a.re + b.re, a.im_over_alpha + b.im_over_alpha};
}

ChargeValue operator-(const ChargeValue& a) {
  return {Rational(-a.re), Rational(-a.im_over_alpha)};
}

ChargeValue eval_charge(const RationalMukaiVector& v, const StabilityPoint& p,
                        const LatticeContext& ctx) {
  const Rational h2(ctx.h_squared());
  const Rational& beta = p.beta();
  return {-v.s + beta * v.c * h2 + (p.t() - beta * beta) * h2 * v.r / 2,
          (v.c - beta * v.r) * h2};
}

ChargeValue eval_charge(const MukaiVector& v, const StabilityPoint& p,
                        const LatticeContext& ctx) {
  return eval_charge(RationalMukaiVector(v), p, ctx);
}

ExtRational slope_nu(const MukaiVector& v, const StabilityPoint& p,
                     const LatticeContext& ctx) {
  const ChargeValue z = eval_charge(v, p, ctx);
  const int im_sign = sgn(z.im_over_alpha);
  if (im_sign > 0) return Rational(-z.re / z.im_over_alpha);
  if (im_sign == 0 && sgn(z.re) < 0) return PosInfinity{};
  throw Error(ErrorCode::kIllDefinedSlope,
              "slope undefined: Re Z = " + to_string(z.re) +
                  ", Im Z / alpha = " + to_string(z.im_over_alpha));
}

std::optional<MukaiVector> critical_root(const Rational& beta,
                                         const LatticeContext& ctx) {
  const Integer p = beta.get_num();
  const Integer q = beta.get_den();
  const Integer numerator = p * p * ctx.h_squared() + 2;
  const Integer denominator = 2 * q;
  if (numerator % denominator != 0) return std::nullopt;
  const Integer s = numerator / denominator;
  if (!q.fits_slong_p() || !p.fits_slong_p() || !s.fits_slong_p()) {
    throw Error(ErrorCode::kOverflow, "critical root leaves int64 range");
  }
  return MukaiVector{q.get_si(), p.get_si(), s.get_si()};
}

bool geometric_check(const StabilityPoint& p, const LatticeContext& ctx) {
  const Rational& beta = p.beta();
  const Integer q = beta.get_den();
  const Integer numerator = beta.get_num() * beta.get_num() * ctx.h_squared() + 2;
  if (numerator % (2 * q) != 0) return true;
  const Rational threshold = make_rational(2, q * q * ctx.h_squared());
  return p.t() > threshold;
}

bool sufficient_geometric(const StabilityPoint& p, const LatticeContext& ctx) {
  return p.t() * ctx.h_squared() > 2;
}

}  // namespace k3walls

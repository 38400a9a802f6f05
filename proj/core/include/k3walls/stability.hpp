#pragma once

// Central charge Z_{alpha,beta} on the (beta, t = alpha^2) chart.
//
// Every quantity here is rational in (beta, t). The imaginary part of the
// charge is alpha * (c - beta r) H^2; we store it divided by alpha, which has
// the same sign. Consequently slope_nu returns alpha * nu_{alpha,beta}: for a
// fixed point all slope comparisons agree with the unscaled slope.

#include <optional>

#include "k3walls/lattice.hpp"

namespace k3walls {

class StabilityPoint {
 public:
  /// Throws Error(kInvalidArgument) unless t > 0.
  StabilityPoint(Rational beta, Rational t);

  const Rational& beta() const noexcept { return beta_; }
  const Rational& t() const noexcept { return t_; }

  friend bool operator==(const StabilityPoint&, const StabilityPoint&) = default;

 private:
  Rational beta_;
  Rational t_;
};

struct ChargeValue {
  Rational re;
  Rational im_over_alpha;

  friend bool operator==(const ChargeValue&, const ChargeValue&) = default;
};

ChargeValue operator+(const ChargeValue& a, const ChargeValue& b);
ChargeValue operator-(const ChargeValue& a);

/// re = -s + beta c H^2 + (t - beta^2) H^2 r / 2,
/// im_over_alpha = (c - beta r) H^2.
ChargeValue eval_charge(const RationalMukaiVector& v, const StabilityPoint& p,
                        const LatticeContext& ctx);
ChargeValue eval_charge(const MukaiVector& v, const StabilityPoint& p,
                        const LatticeContext& ctx);

/// -re / im_over_alpha when im_over_alpha > 0, +inf when it is 0 and re < 0.
/// Throws Error(kIllDefinedSlope) otherwise: such a class has no
/// representative in the heart at p with the given sign.
ExtRational slope_nu(const MukaiVector& v, const StabilityPoint& p,
                     const LatticeContext& ctx);

/// Exact form of the geometricity criterion: Re Z(delta) > 0 for every root
/// delta with rk(delta) > 0 and mu_beta(delta) = 0.
///
/// With beta = p/q in lowest terms such a root has r = kq, c = kp and
/// s = (k^2 p^2 H^2 + 2) / (2kq). Integrality needs k | 2, and k = 2 fails
/// modulo 4, so a root exists iff 2q | p^2 H^2 + 2, with r = q. Its charge is
/// Re Z = t H^2 q / 2 - 1/q, giving the threshold t > 2 / (q^2 H^2).
bool geometric_check(const StabilityPoint& p, const LatticeContext& ctx);

/// Sufficient condition t H^2 > 2, valid for every beta. Equality is not
/// enough: at integral beta the root of rank one has Re Z = 0 there.
bool sufficient_geometric(const StabilityPoint& p, const LatticeContext& ctx);

/// The root realising the criterion at p (rank q, mu_beta = 0), if any.
std::optional<MukaiVector> critical_root(const Rational& beta,
                                         const LatticeContext& ctx);

}  // namespace k3walls

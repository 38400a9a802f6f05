#pragma once

// Arithmetic in the rank-3 algebraic Mukai lattice of a Picard-rank-one K3
// surface. A class (r, cH, s) is stored as the integer triple (r, c, s), so
// H.v1 = c H^2 and v1^2 = c^2 H^2.

#include <compare>
#include <cstdint>

#include "k3walls/rational.hpp"

namespace k3walls {

/// The polarisation data (H^2, g) with H^2 = 2g - 2.
class LatticeContext {
 public:
  /// Throws Error(kInvalidArgument) unless h_squared is even and >= 2.
  explicit LatticeContext(std::int64_t h_squared);

  /// Throws Error(kInvalidArgument) unless genus >= 2.
  static LatticeContext from_genus(std::int64_t genus);

  std::int64_t h_squared() const noexcept { return h_squared_; }
  std::int64_t genus() const noexcept { return h_squared_ / 2 + 1; }

  friend bool operator==(const LatticeContext&, const LatticeContext&) = default;

 private:
  std::int64_t h_squared_;
};

struct MukaiVector {
  std::int64_t r = 0;
  std::int64_t c = 0;
  std::int64_t s = 0;

  friend auto operator<=>(const MukaiVector&, const MukaiVector&) = default;
};

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator-(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator-(const MukaiVector& a);
MukaiVector operator*(std::int64_t k, const MukaiVector& a);

/// v(O_X) = (1, 0, 1), the class of the structure sheaf.
inline constexpr MukaiVector kStructureSheaf{1, 0, 1};

struct RationalMukaiVector {
  Rational r;
  Rational c;
  Rational s;

  RationalMukaiVector() = default;
  RationalMukaiVector(Rational r_, Rational c_, Rational s_)
      : r(std::move(r_)), c(std::move(c_)), s(std::move(s_)) {}
  explicit RationalMukaiVector(const MukaiVector& v) : r(v.r), c(v.c), s(v.s) {}

  friend bool operator==(const RationalMukaiVector&,
                         const RationalMukaiVector&) = default;
};

RationalMukaiVector operator+(const RationalMukaiVector& a,
                              const RationalMukaiVector& b);
RationalMukaiVector operator-(const RationalMukaiVector& a,
                              const RationalMukaiVector& b);
RationalMukaiVector operator*(const Rational& k, const RationalMukaiVector& a);

/// Mukai pairing (a, b) = c_a c_b H^2 - r_a s_b - s_a r_b. The integer overload
/// throws Error(kOverflow) if the result leaves the int64 range.
std::int64_t pair(const MukaiVector& a, const MukaiVector& b,
                  const LatticeContext& ctx);
Rational pair(const RationalMukaiVector& a, const RationalMukaiVector& b,
              const LatticeContext& ctx);

std::int64_t square(const MukaiVector& a, const LatticeContext& ctx);
Rational square(const RationalMukaiVector& a, const LatticeContext& ctx);

bool is_root(const MukaiVector& a, const LatticeContext& ctx);

/// gcd(|r|, |c|, |s|) == 1. The zero vector is not primitive.
bool is_primitive(const MukaiVector& a);

/// True when a and b span a rank <= 1 subspace over Q (includes zero vectors).
bool is_proportional(const MukaiVector& a, const MukaiVector& b);

/// e^{-beta H} a = (r, c - beta r, s - beta c H^2 + beta^2 H^2 r / 2).
/// An isometry of the pairing for every beta.
RationalMukaiVector twist(const RationalMukaiVector& a, const Rational& beta,
                          const LatticeContext& ctx);
RationalMukaiVector twist(const MukaiVector& a, const Rational& beta,
                          const LatticeContext& ctx);

/// Twisted slope mu_beta = c/r - beta for r > 0 and +inf otherwise. The
/// convention is only meaningful for sheaf-like classes (positive rank or
/// torsion); other classes also map to +inf.
ExtRational mu_beta(const MukaiVector& a, const Rational& beta);

}  // namespace k3walls

#include "k3walls/lattice.hpp"

#include <numeric>
#include <string>

#include "checked.hpp"
#include "k3walls/errors.hpp"

namespace k3walls {

using detail::narrow;
using detail::Wide;

LatticeContext::LatticeContext(std::int64_t h_squared) : h_squared_(h_squared) {
  if (h_squared < 2 || h_squared % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "H^2 must be even and >= 2, got " + std::to_string(h_squared));
  }
}

LatticeContext LatticeContext::from_genus(std::int64_t genus) {
  if (genus < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "genus must be >= 2, got " + std::to_string(genus));
  }
  return LatticeContext(narrow(Wide{2} * genus - 2, "from_genus"));
}

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
  return {narrow(Wide{a.r} + b.r, "+"), narrow(Wide{a.c} + b.c, "+"),
          narrow(Wide{a.s} + b.s, "+")};
}

MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) {
  return {narrow(Wide{a.r} - b.r, "-"), narrow(Wide{a.c} - b.c, "-"),
          narrow(Wide{a.s} - b.s, "-")};
}

MukaiVector operator-(const MukaiVector& a) { return MukaiVector{} - a; }

MukaiVector operator*(std::int64_t k, const MukaiVector& a) {
  return {narrow(Wide{k} * a.r, "*"), narrow(Wide{k} * a.c, "*"),
          narrow(Wide{k} * a.s, "*")};
}

RationalMukaiVector operator+(const RationalMukaiVector& a,
                              const RationalMukaiVector& b) {
  return {a.r + b.r, a.c + b.c, a.s + b.s};
}

RationalMukaiVector operator-(const RationalMukaiVector& a,
                              const RationalMukaiVector& b) {
  return {a.r - b.r, a.c - b.c, a.s - b.s};
}

RationalMukaiVector operator*(const Rational& k, const RationalMukaiVector& a) {
  return {k * a.r, k * a.c, k * a.s};
}

std::int64_t pair(const MukaiVector& a, const MukaiVector& b,
                  const LatticeContext& ctx) {
  const Wide value = Wide{a.c} * b.c * ctx.h_squared() - Wide{a.r} * b.s -
                     Wide{a.s} * b.r;
  return narrow(value, "pair");
}

Rational pair(const RationalMukaiVector& a, const RationalMukaiVector& b,
              const LatticeContext& ctx) {
  return a.c * b.c * ctx.h_squared() - a.r * b.s - a.s * b.r;
}

std::int64_t square(const MukaiVector& a, const LatticeContext& ctx) {
  return pair(a, a, ctx);
}

Rational square(const RationalMukaiVector& a, const LatticeContext& ctx) {
  return pair(a, a, ctx);
}

bool is_root(const MukaiVector& a, const LatticeContext& ctx) {
  return square(a, ctx) == -2;
}

bool is_primitive(const MukaiVector& a) {
  return std::gcd(std::gcd(a.r, a.c), a.s) == 1;
}

bool is_proportional(const MukaiVector& a, const MukaiVector& b) {
  // All 2x2 minors of the matrix with rows a, b vanish.
  return Wide{a.r} * b.c == Wide{a.c} * b.r && Wide{a.r} * b.s == Wide{a.s} * b.r &&
         Wide{a.c} * b.s == Wide{a.s} * b.c;
}

RationalMukaiVector twist(const RationalMukaiVector& a, const Rational& beta,
                          const LatticeContext& ctx) {
  const Rational h2(ctx.h_squared());
  return {a.r, a.c - beta * a.r,
          a.s - beta * a.c * h2 + beta * beta * h2 * a.r / 2};
}

RationalMukaiVector twist(const MukaiVector& a, const Rational& beta,
                          const LatticeContext& ctx) {
  return twist(RationalMukaiVector(a), beta, ctx);
}

ExtRational mu_beta(const MukaiVector& a, const Rational& beta) {
  if (a.r <= 0) return PosInfinity{};
  return Rational(make_rational(a.c, a.r) - beta);
}

}  // namespace k3walls

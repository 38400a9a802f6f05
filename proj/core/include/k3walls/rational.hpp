#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

namespace k3walls {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" form with q > 0 and gcd(|p|, q) = 1; "p" alone when q = 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts "p", "p/q" and a leading sign. Throws Error(kInvalidArgument) on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// num / den in canonical form. Throws Error(kInvalidArgument) if den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// The point at +infinity of the extended rational line.
struct PosInfinity {
  friend bool operator==(PosInfinity, PosInfinity) = default;
};

using ExtRational = std::variant<Rational, PosInfinity>;

inline bool is_infinite(const ExtRational& value) {
  return std::holds_alternative<PosInfinity>(value);
}

/// Total order with +inf above every finite value. Returns -1, 0 or 1.
int compare(const ExtRational& lhs, const ExtRational& rhs);

/// Finite values use to_string(Rational); +infinity renders as "+inf".
std::string to_string(const ExtRational& value);

}  // namespace k3walls

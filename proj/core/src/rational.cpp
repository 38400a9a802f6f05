#include "k3walls/rational.hpp"

#include <cctype>

#include "k3walls/errors.hpp"

namespace k3walls {

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const Rational& value) {
  // mpq_class arithmetic keeps values canonical; get_str omits "/1".
  return value.get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  const bool den_signed = !den.empty() && (den.front() == '-' || den.front() == '+');
  if (!is_integer_literal(num) || !is_integer_literal(den) || den_signed) {
    throw Error(ErrorCode::kInvalidArgument,
                "malformed rational '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
  };
  Integer p(strip_plus(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "zero denominator in '" + std::string(text) + "'");
  }
  Rational result(p, q);
  result.canonicalize();
  return result;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  Rational result(num, den);
  result.canonicalize();
  return result;
}

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

int compare(const ExtRational& lhs, const ExtRational& rhs) {
  const bool li = is_infinite(lhs);
  const bool ri = is_infinite(rhs);
  if (li || ri) return static_cast<int>(li) - static_cast<int>(ri);
  const int c = cmp(std::get<Rational>(lhs), std::get<Rational>(rhs));
  return (c > 0) - (c < 0);
}

std::string to_string(const ExtRational& value) {
  if (is_infinite(value)) return "+inf";
  return to_string(std::get<Rational>(value));
}

}  // namespace k3walls

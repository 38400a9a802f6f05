#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "k3walls/lattice.hpp"
#include "k3walls/stability.hpp"

namespace k3walls {

/// Polynomial in (beta, t) with degree <= 3 in beta and <= 1 in t.
class BivariatePoly {
 public:
  static constexpr int kMaxBeta = 3;
  static constexpr int kMaxT = 1;

  const Rational& coef(int beta_power, int t_power) const;
  Rational& coef(int beta_power, int t_power);

  Rational eval(const Rational& beta, const Rational& t) const;
  bool is_zero() const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  std::array<std::array<Rational, kMaxT + 1>, kMaxBeta + 1> coef_{};
};

/// W(beta, t) = re(a) * im(v) - re(v) * im(a), with im = im_over_alpha.
/// Vanishes exactly where Z(a) and Z(v) are aligned (or anti-aligned). The
/// beta^3 and beta*t terms always cancel, leaving K (t + beta^2) + B beta + C.
BivariatePoly alignment_poly(const MukaiVector& a, const MukaiVector& v,
                             const LatticeContext& ctx);

struct Semicircle {
  Rational center;
  Rational radius_sq;

  friend bool operator==(const Semicircle&, const Semicircle&) = default;
};

struct VerticalLine {
  Rational beta;

  friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

using WallShape = std::variant<Semicircle, VerticalLine>;

/// A numerical candidate wall for `for_vector`. Object-level facts (totally
/// semistable walls, existence of stable factors) are not checked, hence
/// candidate_only is always true.
struct Wall {
  WallShape shape;
  std::vector<MukaiVector> destabilizers;
  MukaiVector for_vector;
  bool candidate_only = true;
};

struct Region {
  Rational beta_min;
  Rational beta_max;
  Rational t_min;
  Rational t_max;

  /// Throws Error(kInvalidArgument) unless beta_min <= beta_max and
  /// 0 < t_min <= t_max.
  void validate() const;
};

/// Solves W(beta, t) = 0. Semicircle when the t-coefficient is nonzero,
/// vertical line when W is linear in beta only, nullopt when there is no
/// solution with t > 0. Throws Error(kProportionalClasses) when W vanishes
/// identically.
std::optional<Wall> wall_of_pair(const MukaiVector& a, const MukaiVector& v,
                                 const LatticeContext& ctx);

/// The wall where Z(O_X) aligns with Z(0, H, d + 1 - g), for 0 < d <= g - 1.
/// Its closure passes through (beta, t) = (0, 2 / H^2).
Wall bn_wall(std::int64_t g, std::int64_t d);

struct EnumerationOptions {
  std::int64_t rank_bound = 6;
  /// Number of worker threads splitting the destabilizer rank range.
  std::size_t jobs = 1;
};

/// Every candidate wall for v meeting `region`, from destabilizers a with
/// |r_a| <= rank_bound, a^2 >= -2, (v - a)^2 >= -2, and a point of the wall in
/// the region where 0 < im(a) < im(v). Walls with equal loci are merged and
/// ordered by center ascending then radius_sq descending (for rank-0 v:
/// radius_sq descending). The vertical line beta = mu(v) is never reported:
/// both im(a) and im(v) vanish on it, so no point there is admissible.
///
/// Throws Error(kBadVector) unless v is primitive with v^2 >= -2.
std::vector<Wall> enumerate_candidate_walls(const MukaiVector& v,
                                            const Region& region,
                                            const EnumerationOptions& options,
                                            const LatticeContext& ctx);

struct PathClearance {
  bool clear = false;
  /// "quantization" when the clearance is certified.
  std::optional<std::string> certificate;
};

/// Whether no wall for v = (0, c, m) crosses {beta = 0, t > 2 / H^2}.
/// Certified for c = 1: at beta = 0 every im(a) / H^2 is an integer, and a
/// proper destabilizer needs 0 < im(a) < im(v) = H^2. Returns clear = false
/// without certificate otherwise. Throws Error(kNotRankZero) if r != 0.
PathClearance gieseker_path_clear(const MukaiVector& v,
                                  const LatticeContext& ctx);

enum class Side { kInside, kOn, kOutside, kLeft, kRight };

std::string_view side_name(Side side);

/// Semicircles: inside iff (beta - center)^2 + t < radius_sq. Vertical lines:
/// left/on/right of the line.
Side side_of(const Wall& wall, const StabilityPoint& p);

/// Gieseker-chamber label: along the vertical ray from p to t = +inf no wall in
/// `walls` carries a destabilizer with 0 < im(a) < im(v), and, for r_v > 0, p
/// is strictly left of mu(v). Only as reliable as the wall list.
bool in_gieseker_chamber(const MukaiVector& v, const std::vector<Wall>& walls,
                         const StabilityPoint& p, const LatticeContext& ctx);

}  // namespace k3walls

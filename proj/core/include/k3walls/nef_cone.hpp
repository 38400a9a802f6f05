#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "k3walls/lattice.hpp"
#include "k3walls/stability.hpp"

namespace k3walls {

/// v^perp for a primitive v with v^2 > 0, with a saturated integer basis in
/// Hermite normal form and the restricted Gram matrix (signature (1, 1)).
struct PerpContext {
  MukaiVector v;
  std::array<MukaiVector, 2> basis;
  std::array<std::array<Rational, 2>, 2> gram;
};

/// A class in v^perp (x) Q, in PerpContext basis coordinates.
struct DivisorClass {
  std::array<Rational, 2> coords;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Throws Error(kBadVector) when v^2 <= 0 or v is imprimitive.
PerpContext perp_context(const MukaiVector& v, const LatticeContext& ctx);

RationalMukaiVector to_lattice(const DivisorClass& d, const PerpContext& pc);

/// Throws Error(kInvalidArgument) if x is not in v^perp (x) Q.
DivisorClass to_coords(const RationalMukaiVector& x, const PerpContext& pc);

Rational divisor_square(const DivisorClass& d, const PerpContext& pc);

/// Zero iff the two classes span the same line.
Rational cross(const DivisorClass& a, const DivisorClass& b);

struct Ray {
  /// Primitive integer coordinates, first nonzero entry positive.
  std::array<std::int64_t, 2> coords;
  MukaiVector generator;

  friend auto operator<=>(const Ray&, const Ray&) = default;
};

/// Generator of the line v^perp cap a^perp. Depends on a only modulo Q v.
/// Throws Error(kProportionalClasses) when a is Q-proportional to v.
Ray hyperplane_of(const MukaiVector& a, const PerpContext& pc,
                  const LatticeContext& ctx);

/// Where a line sits relative to the positive cone {D^2 > 0} of the
/// signature (1, 1) plane v^perp: a line meets the interior iff its generator
/// has positive square.
enum class RayClass { kCutting, kBoundary, kNonCutting };

std::string_view ray_class_name(RayClass c);

struct HyperplaneEntry {
  Ray ray;
  std::int64_t generator_square = 0;
  RayClass ray_class = RayClass::kCutting;
  /// Every a in the search box mapping to this ray.
  std::vector<MukaiVector> witnesses;
};

struct HyperplaneArrangement {
  MukaiVector v;
  std::int64_t search_bound = 0;
  std::vector<HyperplaneEntry> cutting;
  std::vector<HyperplaneEntry> boundary;
  std::vector<HyperplaneEntry> non_cutting;
};

/// Lines v^perp cap a^perp for integer a with max(|r|, |c|, |s|) <= bound,
/// a^2 >= -2 and 2 |(v, a)| <= v^2, deduplicated and split by RayClass. Each
/// list is sorted by ray coordinates. Complete only within the bound; the rays
/// accumulate towards the boundary of the positive cone.
HyperplaneArrangement nef_hyperplanes(const MukaiVector& v,
                                      std::int64_t search_bound,
                                      const LatticeContext& ctx,
                                      std::size_t jobs = 1);

/// The class m with (m, x) = im(x) re(v) - re(x) im(v) for all x, i.e.
/// Im(Z(x) conj(-Z(v))) up to the positive factor alpha. This is the
/// Positivity-Lemma divisor theta_v(Im Z) normalised by Z(v) = -1, up to
/// positive scaling. Throws Error(kDegenerateCharge) when Z(v) = 0 at p.
DivisorClass positivity_divisor(const MukaiVector& v, const StabilityPoint& p,
                                const PerpContext& pc,
                                const LatticeContext& ctx);

/// Same class as a lattice vector (before changing to PerpContext coords).
RationalMukaiVector positivity_class(const MukaiVector& v,
                                     const StabilityPoint& p,
                                     const LatticeContext& ctx);

/// The component of {D^2 > 0} containing `reference` (normally the
/// positivity divisor at a Gieseker-chamber point).
class PositiveCone {
 public:
  /// Throws Error(kInvalidArgument) unless reference has positive square.
  PositiveCone(const PerpContext& pc, DivisorClass reference);

  bool contains(const DivisorClass& d) const;
  bool in_closure(const DivisorClass& d) const;

 private:
  PerpContext pc_;
  DivisorClass reference_;
};

}  // namespace k3walls

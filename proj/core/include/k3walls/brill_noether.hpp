#pragma once

// Dimension bookkeeping for Brill-Noether loci of curves in |H| on a K3 of
// Picard rank one, via v = (0, 1, d + 1 - g) and the Lazarsfeld-Mukai class
// w_r = v - (r + 1) v(O_X).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3walls/lattice.hpp"

namespace k3walls {

struct BNInput {
  std::int64_t g = 2;
  std::int64_t d = 1;
  std::int64_t r = 0;
};

/// rho(r, d, g) = g - (r + 1)(g - d + r).
std::int64_t rho(std::int64_t r, std::int64_t d, std::int64_t g);

/// (0, 1, d + 1 - g).
MukaiVector bn_vector(std::int64_t g, std::int64_t d);

/// (-(r + 1), 1, d - g - r); bn_vector(g, d) = (r + 1) O_X + w_vector(g, d, r).
MukaiVector w_vector(std::int64_t g, std::int64_t d, std::int64_t r);

/// nullopt means the moduli space is empty (v^2 < -2); otherwise v^2 + 2.
/// Throws Error(kNonPrimitive) for imprimitive v.
std::optional<std::int64_t> moduli_dim(const MukaiVector& v,
                                       const LatticeContext& ctx);

/// w_sq + 2 - k e - k^2: dimension of the locus of classes whose
/// Jordan-Holder filtration is O_X^k -> W -> W'. Throws Error(kInvalidArgument)
/// when k < 0, or k >= 1 with e < 1.
std::int64_t jh_locus_dim(std::int64_t w_sq, std::int64_t k, std::int64_t e);

enum class Verdict { kEmpty, kNonEmpty };

struct BNStratum {
  std::int64_t r = 0;
  std::int64_t rho = 0;
  MukaiVector w;
  std::int64_t w_sq = 0;
  std::optional<std::int64_t> moduli_dim_w;
  std::int64_t ext1_dim = 0;
  std::int64_t grassmannian_dim = 0;
  std::optional<std::int64_t> dim_Vrd_linear_system;
};

struct BNReport {
  BNInput input;
  std::int64_t rho = 0;
  MukaiVector v;
  MukaiVector w;
  std::int64_t w_sq = 0;
  std::int64_t moduli_dim_v = 0;
  std::optional<std::int64_t> moduli_dim_w;
  /// (w_r, v(O_X)) = 2r + 1 + g - d.
  std::int64_t ext1_dim = 0;
  /// (r + 1)(g - d + r) = dim Gr(r + 1, ext1_dim).
  std::int64_t grassmannian_dim = 0;
  /// rho + g when rho >= 0.
  std::optional<std::int64_t> dim_Vrd_linear_system;
  /// Absent in raw mode.
  std::optional<Verdict> verdict;
  /// Every r' >= r with rho(r') >= 0; empty in raw mode.
  std::vector<BNStratum> strata;
  std::optional<std::string> warning;
};

enum class ReportMode {
  /// Requires g >= 2, r >= 0 and 0 < d <= g - 1; throws Error(kOutOfRange).
  kVerdict,
  /// Formula evaluation only, for any g >= 2 and r >= 0.
  kRaw,
};

BNReport bn_report(const BNInput& input, ReportMode mode = ReportMode::kVerdict);

std::string verdict_string(const BNReport& report);

struct ReductionStep {
  std::int64_t d_prime = 0;
  /// rho(r, d', g) + d - d'.
  std::int64_t lhs = 0;
  /// rho(r, d, g).
  std::int64_t rhs = 0;
  bool strict = false;
};

/// One entry per 0 < d' < d. Throws Error(kOutOfRange) for r < 1 (the bound
/// needs r >= 1) or d outside 0 < d <= g - 1.
std::vector<ReductionStep> reduction_ledger(std::int64_t g, std::int64_t d,
                                            std::int64_t r);

struct SerreDual {
  std::int64_t r = 0;
  std::int64_t d = 0;
  friend bool operator==(const SerreDual&, const SerreDual&) = default;
};

/// (r, d) -> (g - 1 - d + r, 2g - 2 - d); an involution preserving rho.
SerreDual serre_dual(std::int64_t g, std::int64_t d, std::int64_t r);

struct JHDecomposition {
  std::int64_t k = 0;
  /// w_r - k v(O_X).
  MukaiVector w_prime;
  std::int64_t w_prime_sq = 0;
  /// (v(O_X), w').
  std::int64_t pairing_with_structure_sheaf = 0;
  bool admissible = false;
  std::int64_t locus_dim = 0;
};

inline constexpr std::int64_t kDefaultJHMultiplicity = 10;

/// k = 0..k_max. Admissible iff w'^2 >= -2 and (O_X, w') >= 0. Throws
/// Error(kOutOfRange) when rho(r, d, g) < 0.
std::vector<JHDecomposition> enumerate_jh_decompositions(
    std::int64_t g, std::int64_t d, std::int64_t r,
    std::int64_t k_max = kDefaultJHMultiplicity);

}  // namespace k3walls

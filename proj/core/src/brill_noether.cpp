#include "k3walls/brill_noether.hpp"

#include <string>

#include "checked.hpp"
#include "k3walls/errors.hpp"

namespace k3walls {

using detail::narrow;
using detail::Wide;

namespace {

void require_range(std::int64_t g, std::int64_t d) {
  if (g < 2 || d <= 0 || d > g - 1) {
    throw Error(ErrorCode::kOutOfRange,
                "need 0 < d <= g - 1 with g >= 2, got g = " + std::to_string(g) +
                    ", d = " + std::to_string(d));
  }
}

std::int64_t grassmannian_dim(std::int64_t g, std::int64_t d, std::int64_t r) {
  return narrow((Wide{r} + 1) * (Wide{g} - d + r), "grassmannian_dim");
}

BNStratum make_stratum(std::int64_t g, std::int64_t d, std::int64_t r,
                       const LatticeContext& ctx) {
  BNStratum st;
  st.r = r;
  st.rho = rho(r, d, g);
  st.w = w_vector(g, d, r);
  st.w_sq = square(st.w, ctx);
  st.moduli_dim_w = moduli_dim(st.w, ctx);
  st.ext1_dim = pair(st.w, kStructureSheaf, ctx);
  st.grassmannian_dim = grassmannian_dim(g, d, r);
  if (st.rho >= 0) st.dim_Vrd_linear_system = narrow(Wide{st.rho} + g, "dim V");
  return st;
}

}  // namespace

std::int64_t rho(std::int64_t r, std::int64_t d, std::int64_t g) {
  return narrow(Wide{g} - (Wide{r} + 1) * (Wide{g} - d + r), "rho");
}

MukaiVector bn_vector(std::int64_t g, std::int64_t d) {
  return {0, 1, narrow(Wide{d} + 1 - g, "bn_vector")};
}

MukaiVector w_vector(std::int64_t g, std::int64_t d, std::int64_t r) {
  return {narrow(-(Wide{r} + 1), "w_vector"), 1,
          narrow(Wide{d} - g - r, "w_vector")};
}

std::optional<std::int64_t> moduli_dim(const MukaiVector& v,
                                       const LatticeContext& ctx) {
  if (!is_primitive(v)) {
    throw Error(ErrorCode::kNonPrimitive, "moduli dimension needs a primitive class");
  }
  const std::int64_t sq = square(v, ctx);
  if (sq < -2) return std::nullopt;
  return sq + 2;
}

std::int64_t jh_locus_dim(std::int64_t w_sq, std::int64_t k, std::int64_t e) {
  if (k < 0 || (k >= 1 && e < 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "jh_locus_dim needs k >= 0, and e >= 1 when k >= 1");
  }
  return narrow(Wide{w_sq} + 2 - Wide{k} * e - Wide{k} * k, "jh_locus_dim");
}

BNReport bn_report(const BNInput& input, ReportMode mode) {
  const auto [g, d, r] = input;
  if (mode == ReportMode::kVerdict) {
    require_range(g, d);
  } else if (g < 2) {
    throw Error(ErrorCode::kOutOfRange, "genus must be >= 2");
  }
  if (r < 0) throw Error(ErrorCode::kOutOfRange, "r must be >= 0");

  const LatticeContext ctx = LatticeContext::from_genus(g);
  const BNStratum top = make_stratum(g, d, r, ctx);

  BNReport report;
  report.input = input;
  report.rho = top.rho;
  report.v = bn_vector(g, d);
  report.w = top.w;
  report.w_sq = top.w_sq;
  // v = (0, 1, m) is primitive with v^2 = H^2 >= 2.
  report.moduli_dim_v = *moduli_dim(report.v, ctx);
  report.moduli_dim_w = top.moduli_dim_w;
  report.ext1_dim = top.ext1_dim;
  report.grassmannian_dim = top.grassmannian_dim;
  report.dim_Vrd_linear_system = top.dim_Vrd_linear_system;

  if (mode == ReportMode::kRaw) {
    if (d <= 0 || d > g - 1) {
      report.warning = "d outside 0 < d <= g - 1: raw formula evaluation, no verdict";
    }
    return report;
  }
  report.verdict = report.rho >= 0 ? Verdict::kNonEmpty : Verdict::kEmpty;
  // rho strictly decreases in r when d <= g - 1, so this terminates.
  for (std::int64_t rp = r; rho(rp, d, g) >= 0; ++rp) {
    report.strata.push_back(make_stratum(g, d, rp, ctx));
  }
  return report;
}

std::string verdict_string(const BNReport& report) {
  if (!report.verdict) return "unavailable";
  if (*report.verdict == Verdict::kEmpty) return "empty";
  return "nonempty_dim(" + std::to_string(report.rho) + ")";
}

std::vector<ReductionStep> reduction_ledger(std::int64_t g, std::int64_t d,
                                            std::int64_t r) {
  if (r < 1) {
    throw Error(ErrorCode::kOutOfRange,
                "reduction inequality only holds for r >= 1");
  }
  require_range(g, d);
  std::vector<ReductionStep> steps;
  const std::int64_t rhs = rho(r, d, g);
  for (std::int64_t dp = 1; dp < d; ++dp) {
    const std::int64_t lhs = narrow(Wide{rho(r, dp, g)} + d - dp, "reduction");
    steps.push_back({dp, lhs, rhs, lhs < rhs});
  }
  return steps;
}

SerreDual serre_dual(std::int64_t g, std::int64_t d, std::int64_t r) {
  return {narrow(Wide{g} - 1 - d + r, "serre_dual"),
          narrow(Wide{2} * g - 2 - d, "serre_dual")};
}

std::vector<JHDecomposition> enumerate_jh_decompositions(std::int64_t g,
                                                         std::int64_t d,
                                                         std::int64_t r,
                                                         std::int64_t k_max) {
  if (rho(r, d, g) < 0) {
    throw Error(ErrorCode::kOutOfRange, "JH decompositions need rho >= 0");
  }
  if (k_max < 0) throw Error(ErrorCode::kInvalidArgument, "k_max must be >= 0");
  const LatticeContext ctx = LatticeContext::from_genus(g);
  const MukaiVector w = w_vector(g, d, r);
  const std::int64_t w_sq = square(w, ctx);
  const std::int64_t e = pair(w, kStructureSheaf, ctx);
  std::vector<JHDecomposition> out;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    JHDecomposition jh;
    jh.k = k;
    jh.w_prime = w - k * kStructureSheaf;
    jh.w_prime_sq = square(jh.w_prime, ctx);
    jh.pairing_with_structure_sheaf = pair(kStructureSheaf, jh.w_prime, ctx);
    jh.admissible = jh.w_prime_sq >= -2 && jh.pairing_with_structure_sheaf >= 0;
    jh.locus_dim = jh_locus_dim(w_sq, k, e);
    out.push_back(jh);
  }
  return out;
}

}  // namespace k3walls

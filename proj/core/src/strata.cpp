#include "hss/strata.hpp"

#include <stdexcept>

namespace hss {

std::string Stratum::to_string() const {
  switch (kind) {
    case StratumKind::AffineCell:
      return "affine_cell(" + std::to_string(index) + ")";
    case StratumKind::MDiff:
      return "M_diff(" + std::to_string(index) + ")";
    case StratumKind::VDiff:
      return "V_diff(" + std::to_string(index) + ")";
    case StratumKind::NFixed:
      return "N_fixed(" + std::to_string(index) + ")";
  }
  return "?";
}

std::set<std::size_t> block_support(const ProjPoint& z) {
  if (!z.has_blocks()) throw std::invalid_argument("block_support: no block structure");
  std::set<std::size_t> support;
  for (std::size_t j = 0; j < z.block_count(); ++j)
    if (!z.block_is_zero(j)) support.insert(j);
  return support;
}

bool in_M(const ProjPoint& z, std::size_t k) {
  const std::size_t r = z.block_count() - 1;
  if (k < 1 || k > r) throw std::invalid_argument("in_M: k out of range");
  for (std::size_t j = 0; j <= r - k; ++j)
    if (!z.block_is_zero(j)) return false;
  return true;
}

bool in_V(const ProjPoint& z, std::size_t k) {
  const std::size_t r = z.block_count() - 1;
  if (k > r) throw std::invalid_argument("in_V: k out of range");
  for (std::size_t j = k + 1; j <= r; ++j)
    if (!z.block_is_zero(j)) return false;
  return true;
}

Stratum classify_stratum(const HSSFamily& f, const ProjPoint& z) {
  const ModelInfo info = model_info(f);
  const auto support = block_support(z);
  if (support.empty()) throw std::logic_error("classify_stratum: empty support");
  const std::size_t smallest = *support.begin();
  const std::size_t largest = *support.rbegin();
  if (smallest == 0) return {StratumKind::AffineCell, largest};
  if (support.size() == 1) return {StratumKind::NFixed, smallest};
  if (largest == info.r) return {StratumKind::MDiff, info.r - smallest + 1};
  return {StratumKind::VDiff, largest};
}

BBReport bb_full_report(const HSSFamily& f, std::size_t samples_per_rank, std::uint64_t seed) {
  BBReport report;
  report.family = f;
  const MarkedDatum md = build_marked_datum(f);
  report.n = md.noncompact.size();
  SplitMix64 rng(seed);
  report.pass = true;
  for (const BBRow& row : bb_dimension_table(md)) {
    BBReportRow out;
    out.i = row.i;
    out.dim_N = row.dim_N;
    out.plus_fiber = row.plus_fiber;
    out.minus_fiber = row.minus_fiber;
    out.sum = row.dim_N + row.plus_fiber + row.minus_fiber;
    out.pass = out.sum == report.n;
    out.sampled_limits = samples_per_rank;
    for (std::size_t s = 0; s < samples_per_rank; ++s) {
      const TangentVec v = random_tangent_of_rank(f, row.i, rng);
      const ProjPoint limit = phi_limit_at_infinity(v);
      const Stratum st = classify_stratum(f, limit);
      const bool fixed = cstar_act_target(Rat(2), limit) == limit;
      if (st == Stratum{StratumKind::NFixed, row.i} && fixed) ++out.limits_in_N;
    }
    if (out.limits_in_N != out.sampled_limits) out.pass = false;
    if (!out.pass) report.pass = false;
    report.rows.push_back(out);
  }
  return report;
}

}  // namespace hss

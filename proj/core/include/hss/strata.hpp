#pragma once

#include "hss/lm_map.hpp"
#include "hss/proj_point.hpp"
#include "hss/restricted_roots.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace hss {

enum class StratumKind { AffineCell, MDiff, VDiff, NFixed };

struct Stratum {
  StratumKind kind = StratumKind::AffineCell;
  std::size_t index = 0;

  friend bool operator==(const Stratum& a, const Stratum& b) = default;
  std::string to_string() const;
};

// Indices of the nonzero blocks; requires block structure.
std::set<std::size_t> block_support(const ProjPoint& z);

// z in P_{I_k} (blocks 0..r-k all zero) / z in P_{J_k} (blocks k+1..r all
// zero). Points are assumed to lie on X by construction (phi / limits).
bool in_M(const ProjPoint& z, std::size_t k);
bool in_V(const ProjPoint& z, std::size_t k);

// Block 0 nonzero -> affine cell (index = largest nonzero block, the V-cell
// index); a single nonzero block k >= 1 -> N_fixed(k); otherwise the
// boundary strata M_diff / V_diff per the linear-section characterizations.
Stratum classify_stratum(const HSSFamily& f, const ProjPoint& z);

struct BBReportRow {
  std::size_t i = 0;
  std::size_t dim_N = 0;
  std::size_t plus_fiber = 0;
  std::size_t minus_fiber = 0;
  std::size_t sum = 0;
  bool pass = false;
  std::size_t sampled_limits = 0;   // rank-i samples whose flow limit ...
  std::size_t limits_in_N = 0;      // ... classified as N_fixed(i) and C*-fixed
};

struct BBReport {
  HSSFamily family;
  std::size_t n = 0;
  std::vector<BBReportRow> rows;
  bool pass = false;
};

// Merges the root-combinatorics dimension table with empirical flow-limit
// classifications of sampled rank-i tangents.
BBReport bb_full_report(const HSSFamily& f, std::size_t samples_per_rank, std::uint64_t seed);

}  // namespace hss

#pragma once

#include "hss/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hss {

/// Point of projective space, stored as the normalized representative with
/// first nonzero coordinate equal to 1. May carry a graded block structure
/// (block lengths summing to the coordinate count).
class ProjPoint {
 public:
  ProjPoint(RatVec coords, std::optional<std::vector<std::size_t>> blocks = std::nullopt);

  const RatVec& coords() const { return coords_; }
  const std::optional<std::vector<std::size_t>>& blocks() const { return blocks_; }

  bool has_blocks() const { return blocks_.has_value(); }
  std::size_t block_count() const;
  // Coordinates of block j (copy).
  RatVec block(std::size_t j) const;
  std::size_t block_offset(std::size_t j) const;
  bool block_is_zero(std::size_t j) const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.coords_ == b.coords_;
  }

 private:
  RatVec coords_;
  std::optional<std::vector<std::size_t>> blocks_;
};

// Normalized projective point. Throws std::domain_error on the zero vector,
// std::invalid_argument if blocks do not sum to the coordinate count.
ProjPoint proj_point(RatVec v,
                     std::optional<std::vector<std::size_t>> blocks = std::nullopt);

}  // namespace hss

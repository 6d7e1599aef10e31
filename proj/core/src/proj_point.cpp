#include "hss/proj_point.hpp"

#include <numeric>
#include <stdexcept>

namespace hss {

ProjPoint::ProjPoint(RatVec coords, std::optional<std::vector<std::size_t>> blocks)
    : coords_(std::move(coords)), blocks_(std::move(blocks)) {
  if (blocks_) {
    std::size_t total = std::accumulate(blocks_->begin(), blocks_->end(), std::size_t{0});
    if (total != coords_.size())
      throw std::invalid_argument("ProjPoint: block lengths do not sum to coordinate count");
  }
}

std::size_t ProjPoint::block_count() const {
  if (!blocks_) throw std::invalid_argument("ProjPoint: no block structure");
  return blocks_->size();
}

std::size_t ProjPoint::block_offset(std::size_t j) const {
  if (!blocks_) throw std::invalid_argument("ProjPoint: no block structure");
  if (j >= blocks_->size()) throw std::out_of_range("ProjPoint: block index");
  std::size_t off = 0;
  for (std::size_t t = 0; t < j; ++t) off += (*blocks_)[t];
  return off;
}

RatVec ProjPoint::block(std::size_t j) const {
  const std::size_t off = block_offset(j);
  return RatVec(coords_.begin() + off, coords_.begin() + off + (*blocks_)[j]);
}

bool ProjPoint::block_is_zero(std::size_t j) const {
  const std::size_t off = block_offset(j);
  for (std::size_t t = 0; t < (*blocks_)[j]; ++t)
    if (coords_[off + t] != 0) return false;
  return true;
}

ProjPoint proj_point(RatVec v, std::optional<std::vector<std::size_t>> blocks) {
  std::size_t first = v.size();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      first = i;
      break;
    }
  if (first == v.size()) throw std::domain_error("proj_point: zero vector");
  const Rat pivot = v[first];
  if (pivot != 1)
    for (auto& c : v) c /= pivot;
  return ProjPoint(std::move(v), std::move(blocks));
}

}  // namespace hss

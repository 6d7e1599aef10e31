#include "hss/family.hpp"

#include <numeric>
#include <stdexcept>

namespace hss {

HSSFamily HSSFamily::grassmann(std::size_t p, std::size_t q) {
  if (q < 2 || p < q) throw std::invalid_argument("grassmann: need p >= q >= 2");
  HSSFamily f;
  f.tag = FamilyTag::Grassmann;
  f.p = p;
  f.q = q;
  return f;
}

HSSFamily HSSFamily::orth_grassmann(std::size_t n) {
  if (n < 4) throw std::invalid_argument("orth_grassmann: need n >= 4");
  HSSFamily f;
  f.tag = FamilyTag::OrthGrassmann;
  f.n = n;
  return f;
}

HSSFamily HSSFamily::lag_grassmann(std::size_t n) {
  if (n < 2) throw std::invalid_argument("lag_grassmann: need n >= 2");
  HSSFamily f;
  f.tag = FamilyTag::LagGrassmann;
  f.n = n;
  return f;
}

HSSFamily HSSFamily::quadric(std::size_t n, QuadricForm form) {
  if (n < 3) throw std::invalid_argument("quadric: need n >= 3");
  HSSFamily f;
  f.tag = FamilyTag::Quadric;
  f.n = n;
  f.form = form;
  return f;
}

HSSFamily HSSFamily::cayley_plane() {
  HSSFamily f;
  f.tag = FamilyTag::CayleyPlane;
  return f;
}

HSSFamily HSSFamily::freudenthal() {
  HSSFamily f;
  f.tag = FamilyTag::Freudenthal;
  return f;
}

std::string HSSFamily::name() const {
  switch (tag) {
    case FamilyTag::Grassmann:
      return "grassmann(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case FamilyTag::OrthGrassmann:
      return "orth-grassmann(" + std::to_string(n) + ")";
    case FamilyTag::LagGrassmann:
      return "lag-grassmann(" + std::to_string(n) + ")";
    case FamilyTag::Quadric:
      return "quadric(" + std::to_string(n) + ")";
    case FamilyTag::CayleyPlane:
      return "cayley-plane";
    case FamilyTag::Freudenthal:
      return "freudenthal";
  }
  return "?";
}

bool HSSFamily::is_tube() const {
  switch (tag) {
    case FamilyTag::Grassmann:
      return p == q;
    case FamilyTag::OrthGrassmann:
      return n % 2 == 0;
    case FamilyTag::LagGrassmann:
    case FamilyTag::Quadric:
    case FamilyTag::Freudenthal:
      return true;
    case FamilyTag::CayleyPlane:
      return false;
  }
  return false;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

ModelInfo model_info(const HSSFamily& f) {
  ModelInfo info;
  switch (f.tag) {
    case FamilyTag::Grassmann: {
      info.n = f.p * f.q;
      info.r = f.q;
      for (std::size_t j = 0; j <= f.q; ++j)
        info.block_sizes.push_back(binomial(f.p, j) * binomial(f.q, j));
      break;
    }
    case FamilyTag::OrthGrassmann: {
      info.n = f.n * (f.n - 1) / 2;
      info.r = f.n / 2;
      for (std::size_t j = 0; j <= info.r; ++j)
        info.block_sizes.push_back(binomial(f.n, 2 * j));
      break;
    }
    case FamilyTag::LagGrassmann: {
      info.n = f.n * (f.n + 1) / 2;
      info.r = f.n;
      for (std::size_t j = 0; j <= f.n; ++j) {
        const std::size_t c = binomial(f.n, j);
        info.block_sizes.push_back(c * (c + 1) / 2);
      }
      break;
    }
    case FamilyTag::Quadric: {
      info.n = f.n;
      info.r = 2;
      info.block_sizes = {1, f.n, 1};
      break;
    }
    case FamilyTag::CayleyPlane: {
      info.n = 16;
      info.r = 2;
      info.block_sizes = {1, 16, 10};
      break;
    }
    case FamilyTag::Freudenthal: {
      info.n = 27;
      info.r = 3;
      info.block_sizes = {1, 27, 27, 1};
      break;
    }
  }
  info.N = std::accumulate(info.block_sizes.begin(), info.block_sizes.end(), std::size_t{0}) - 1;
  return info;
}

}  // namespace hss

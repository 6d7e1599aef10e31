#include "hss/restricted_roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace hss {

namespace {

const Rat kHalf(1, 2);

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

}  // namespace

bool RestrictedRoot::is_zero() const {
  return std::all_of(coeff.begin(), coeff.end(), [](const Rat& c) { return c == 0; });
}

bool RestrictedRoot::is_half_pair(std::size_t& l, std::size_t& j) const {
  std::vector<std::size_t> halves, ones;
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    if (coeff[i] == kHalf)
      halves.push_back(i + 1);
    else if (coeff[i] == 1)
      ones.push_back(i + 1);
    else if (coeff[i] != 0)
      return false;
  }
  if (ones.size() == 1 && halves.empty()) {
    l = j = ones[0];
    return true;
  }
  if (ones.empty() && halves.size() == 2) {
    l = halves[0];
    j = halves[1];
    return true;
  }
  return false;
}

bool RestrictedRoot::is_half_single(std::size_t& l) const {
  std::size_t where = 0;
  int count = 0;
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    if (coeff[i] == kHalf || coeff[i] == -kHalf) {
      where = i + 1;
      ++count;
    } else if (coeff[i] != 0) {
      return false;
    }
  }
  if (count == 1) {
    l = where;
    return true;
  }
  return false;
}

bool strongly_orthogonal(const RootDatum& datum, const RatVec& a, const RatVec& b) {
  if (dot(a, b) != 0) return false;
  return !datum.is_root(vec_add(a, b)) && !datum.is_root(vec_sub(a, b));
}

std::vector<Root> strongly_orthogonal_chain(const MarkedDatum& d) {
  std::vector<Root> chain;
  while (true) {
    // candidates: noncompact positive roots strongly orthogonal to the chain
    std::vector<const Root*> candidates;
    for (const Root& beta : d.noncompact) {
      bool ok = true;
      for (const Root& alpha : chain)
        if (!strongly_orthogonal(d.datum, beta.ambient, alpha.ambient)) {
          ok = false;
          break;
        }
      if (ok) candidates.push_back(&beta);
    }
    if (candidates.empty()) break;
    long best_height = -1;
    for (const Root* r : candidates) best_height = std::max(best_height, r->height);
    std::vector<const Root*> top;
    for (const Root* r : candidates)
      if (r->height == best_height) top.push_back(r);
    if (top.size() != 1)
      throw std::logic_error("strongly_orthogonal_chain: highest candidate not unique");
    chain.push_back(*top[0]);
  }
  return chain;
}

RestrictedRoot restrict_root(const RatVec& beta, const std::vector<Root>& chain) {
  RestrictedRoot rr;
  rr.coeff.reserve(chain.size());
  for (const Root& alpha : chain)
    rr.coeff.push_back(dot(beta, alpha.ambient) / dot(alpha.ambient, alpha.ambient));
  // classification check: coefficients in {0, +-1/2, +-1}, and the support
  // pattern is one of +-e_i, (1/2)(+-e_i +- e_j), +-(1/2)e_i, or 0.
  int full = 0, half = 0;
  for (const Rat& c : rr.coeff) {
    if (c == 1 || c == -1)
      ++full;
    else if (c == kHalf || c == -kHalf)
      ++half;
    else if (c != 0)
      throw std::logic_error("restrict_root: coefficient outside {0, +-1/2, +-1}");
  }
  const bool ok = (full == 0 && half == 0) || (full == 1 && half == 0) ||
                  (full == 0 && half == 2) || (full == 0 && half == 1);
  if (!ok) throw std::logic_error("restrict_root: projection outside the classified set");
  return rr;
}

TubeReport classify_tube(const MarkedDatum& d) {
  const auto chain = strongly_orthogonal_chain(d);
  TubeReport report;
  report.is_tube = true;
  for (const Root& beta : d.noncompact) {
    const RestrictedRoot rr = restrict_root(beta.ambient, chain);
    std::size_t l = 0;
    if (rr.is_half_single(l)) {
      report.is_tube = false;
      report.violations.emplace_back(beta, l);
    }
  }
  return report;
}

std::size_t infinity_locus_dim(const MarkedDatum& d, std::size_t k) {
  const auto chain = strongly_orthogonal_chain(d);
  if (k < 1 || k > chain.size())
    throw std::invalid_argument("infinity_locus_dim: k out of range");
  std::size_t count = 0;
  for (const Root& beta : d.noncompact) {
    std::size_t hits = 0;
    for (std::size_t s = 0; s < k; ++s)
      if (d.datum.is_root(vec_sub(chain[s].ambient, beta.ambient))) ++hits;
    if (hits == 1) ++count;
  }
  return count;
}

std::size_t balanced_dim(const MarkedDatum& d, std::size_t k) {
  const auto chain = strongly_orthogonal_chain(d);
  if (k < 1 || k > chain.size()) throw std::invalid_argument("balanced_dim: k out of range");
  std::size_t count = 0;
  for (const Root& beta : d.noncompact) {
    const RestrictedRoot rr = restrict_root(beta.ambient, chain);
    std::size_t l = 0, j = 0;
    if (rr.is_half_pair(l, j) && j <= k) ++count;
  }
  return count;
}

std::size_t char_dim(const MarkedDatum& d, std::size_t k) {
  const auto chain = strongly_orthogonal_chain(d);
  if (k > chain.size()) throw std::invalid_argument("char_dim: k out of range");
  std::size_t count = 0;
  for (const Root& beta : d.noncompact) {
    const RestrictedRoot rr = restrict_root(beta.ambient, chain);
    std::size_t l = 0, j = 0;
    if (rr.is_half_pair(l, j)) {
      if (l >= k + 1) ++count;
    } else if (rr.is_half_single(l)) {
      if (l >= k + 1) ++count;
    }
  }
  return count;
}

bool transversal_partition(const MarkedDatum& d, std::size_t k) {
  const auto chain = strongly_orthogonal_chain(d);
  const std::size_t r = chain.size();
  if (k < 1 || k > r) throw std::invalid_argument("transversal_partition: k out of range");
  const std::size_t cut = r - k + 1;  // boundary index
  for (const Root& beta : d.noncompact) {
    const RestrictedRoot rr = restrict_root(beta.ambient, chain);
    std::size_t l = 0, j = 0;
    int memberships = 0;
    if (rr.is_half_pair(l, j)) {
      if (l >= cut + 1 && j >= cut + 1) ++memberships;  // class 1
      if (l <= cut && j <= cut) ++memberships;          // class 2
      if (l <= cut && j > cut) ++memberships;           // class 3
    } else if (rr.is_half_single(l)) {
      // half-singles split across the same cut: class 1 above it, class 3
      // at or below it (the pair index j is vacuous for them)
      if (l >= cut + 1) ++memberships;
      if (l <= cut) ++memberships;
    } else {
      return false;  // noncompact root restricting to 0 or a non-positive shape
    }
    if (memberships != 1) return false;
  }
  return true;
}

std::vector<BBRow> bb_dimension_table(const MarkedDatum& d) {
  const auto chain = strongly_orthogonal_chain(d);
  const std::size_t r = chain.size();
  const std::size_t n = d.noncompact.size();
  std::vector<BBRow> rows;
  for (std::size_t i = 1; i <= r; ++i) {
    BBRow row;
    row.i = i;
    row.dim_N = infinity_locus_dim(d, i);
    row.plus_fiber = char_dim(d, i);
    row.minus_fiber = balanced_dim(d, i);
    if (row.dim_N + row.plus_fiber + row.minus_fiber != n)
      throw std::logic_error("bb_dimension_table: row " + std::to_string(i) +
                             " does not close to n");
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hss

#include "hss/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hss {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_)
    throw std::invalid_argument("RatMatrix: entry count does not match shape");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RatMatrix::is_antisymmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (at(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  }
  return true;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
  RatMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      if (row_idx[i] >= rows_ || col_idx[j] >= cols_)
        throw std::out_of_range("RatMatrix::submatrix: index out of range");
      s.at(i, j) = at(row_idx[i], col_idx[j]);
    }
  return s;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  RatMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
  return c;
}

RatMatrix operator*(const Rat& c, const RatMatrix& a) {
  RatMatrix b(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) b.e_[i] = c * a.e_[i];
  return b;
}

Rat det(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  RatMatrix w = m;
  Rat result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w.at(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
      result = -result;
    }
    const Rat p = w.at(col, col);
    result *= p;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (w.at(i, col) == 0) continue;
      const Rat f = w.at(i, col) / p;
      for (std::size_t j = col; j < n; ++j) w.at(i, j) -= f * w.at(col, j);
    }
  }
  return result;
}

std::size_t mat_rank(const RatMatrix& m) {
  RatMatrix w = m;
  const std::size_t rows = w.rows(), cols = w.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && w.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(w.at(piv, j), w.at(rank, j));
    const Rat p = w.at(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (w.at(i, col) == 0) continue;
      const Rat f = w.at(i, col) / p;
      for (std::size_t j = col; j < cols; ++j) w.at(i, j) -= f * w.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    // advance to next lexicographic combination
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::vector<Rat> minors(const RatMatrix& m, std::size_t k) {
  std::vector<Rat> out;
  if (k == 0) return {Rat(1)};
  if (k > m.rows() || k > m.cols()) return out;
  const auto row_sets = combinations(m.rows(), k);
  const auto col_sets = combinations(m.cols(), k);
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) out.push_back(det(m.submatrix(rs, cs)));
  return out;
}

namespace {

Rat pfaffian_of(const RatMatrix& a, const std::vector<std::size_t>& idx) {
  const std::size_t m = idx.size();
  if (m == 0) return 1;
  if (m % 2 != 0) return 0;
  // expand along the first remaining row
  Rat result = 0;
  for (std::size_t j = 1; j < m; ++j) {
    const Rat& a0j = a.at(idx[0], idx[j]);
    if (a0j == 0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(m - 2);
    for (std::size_t t = 1; t < m; ++t)
      if (t != j) rest.push_back(idx[t]);
    const Rat term = a0j * pfaffian_of(a, rest);
    if (j % 2 == 1)
      result += term;
    else
      result -= term;
  }
  return result;
}

}  // namespace

Rat pfaffian(const RatMatrix& a) {
  if (!a.is_antisymmetric()) throw std::invalid_argument("pfaffian: matrix not antisymmetric");
  if (a.rows() % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
  std::vector<std::size_t> idx(a.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian_of(a, idx);
}

std::vector<Rat> sub_pfaffians(const RatMatrix& a, std::size_t m) {
  if (!a.is_antisymmetric())
    throw std::invalid_argument("sub_pfaffians: matrix not antisymmetric");
  if (m % 2 != 0) throw std::invalid_argument("sub_pfaffians: odd order");
  std::vector<Rat> out;
  if (m > a.rows()) return out;
  for (const auto& idx : combinations(a.rows(), m)) out.push_back(pfaffian_of(a, idx));
  return out;
}

RatMatrix adjugate(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("adjugate: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rs, cs;
      for (std::size_t t = 0; t < n; ++t) {
        if (t != j) rs.push_back(t);
        if (t != i) cs.push_back(t);
      }
      const Rat c = det(m.submatrix(rs, cs));
      adj.at(i, j) = ((i + j) % 2 == 0) ? c : -c;
    }
  return adj;
}

RatMatrix pf_adjugate(const RatMatrix& a) {
  if (!a.is_antisymmetric())
    throw std::invalid_argument("pf_adjugate: matrix not antisymmetric");
  const std::size_t n = a.rows();
  if (n % 2 != 0) throw std::invalid_argument("pf_adjugate: odd size");
  RatMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> idx;
      for (std::size_t t = 0; t < n; ++t)
        if (t != i && t != j) idx.push_back(t);
      const Rat p = pfaffian_of(a, idx);
      const Rat val = ((i + j) % 2 == 0) ? p : -p;
      b.at(i, j) = val;
      b.at(j, i) = -val;
    }
  return b;
}

}  // namespace hss

#pragma once

#include "hss/rational.hpp"

#include <cstddef>
#include <vector>

namespace hss {

/// Dense matrix over Rat, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  const std::vector<Rat>& entries() const { return e_; }

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;

  RatMatrix transposed() const;
  RatMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rat& c, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

Rat det(const RatMatrix& m);

// Rank by exact elimination (Bareiss-style fraction-free pivoting on the
// cleared-denominator matrix).
std::size_t mat_rank(const RatMatrix& m);

// All k x k minors, ordered lexicographically by (row index set, column
// index set). Length C(rows,k) * C(cols,k).
std::vector<Rat> minors(const RatMatrix& m, std::size_t k);

// Pfaffians of all principal m x m submatrices of an antisymmetric matrix,
// index sets in lexicographic order; recursive first-row expansion.
std::vector<Rat> sub_pfaffians(const RatMatrix& a, std::size_t m);

Rat pfaffian(const RatMatrix& a);

// Classical adjugate: m * adjugate(m) = det(m) * I.
RatMatrix adjugate(const RatMatrix& m);

// Antisymmetric analogue of the adjugate: for antisymmetric A of even size,
// A * pf_adjugate(A) = pfaffian(A) * I, and the result is antisymmetric.
RatMatrix pf_adjugate(const RatMatrix& a);

// All size-k subsets of {0,...,n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace hss

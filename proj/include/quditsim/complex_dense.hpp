// Copyright 2026 The quditsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUDITSIM_COMPLEX_DENSE_HPP
#define QUDITSIM_COMPLEX_DENSE_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "quditsim/config.hpp"

namespace quditsim {

/// Dense complex column vector. Entries are finite and dim() >= 1.
class CVector {
 public:
  /// Zero vector of the given dimension.
  explicit CVector(std::size_t dim);
  explicit CVector(std::vector<cplx> entries);
  CVector(std::initializer_list<cplx> entries);

  std::size_t dim() const noexcept { return entries_.size(); }
  const cplx& operator[](std::size_t i) const { return entries_[i]; }
  cplx& operator[](std::size_t i) { return entries_[i]; }

  std::span<const cplx> data() const noexcept { return entries_; }
  std::span<cplx> data() noexcept { return entries_; }
  const std::vector<cplx>& entries() const noexcept { return entries_; }

  friend bool operator==(const CVector&, const CVector&) = default;

 private:
  std::vector<cplx> entries_;
};

/// Dense complex matrix stored row-major.
class CMatrix {
 public:
  /// Zero matrix.
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> row_major);
  /// Nested rows; every row must have the same length.
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(const CVector& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const cplx& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const cplx> data() const noexcept { return entries_; }
  const std::vector<cplx>& entries() const noexcept { return entries_; }

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<cplx> entries_;
};

CVector matvec(const CMatrix& m, const CVector& v);
CMatrix matmul(const CMatrix& a, const CMatrix& b);

/// (a (x) b)[i*b.rows + k, j*b.cols + l] = a[i,j] * b[k,l]. Throws
/// DimensionError when the result would exceed max_dimension() entries.
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron_vec(const CVector& u, const CVector& v);

CMatrix adjoint(const CMatrix& m);
CMatrix scaled(const CMatrix& m, cplx factor);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);

/// Conjugate-linear in the first argument.
cplx inner(const CVector& a, const CVector& b);
double norm(const CVector& v);

/// max_i |a_i - b_i|; throws DimensionError on shape mismatch.
double max_abs_diff(const CVector& a, const CVector& b);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

bool approx_equal(const CVector& a, const CVector& b, double tol = kDefaultTol);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol = kDefaultTol);

/// max |U U^dagger - I| over entries.
double unitarity_deviation(const CMatrix& u);

/// Smallest achievable max|a - c b| over unit-modulus c, with c taken from the
/// ratio at the largest-modulus entry of b. Throws DomainError on a zero input.
double global_phase_deviation(const CVector& a, const CVector& b);

bool equal_up_to_global_phase(const CVector& a, const CVector& b,
                              double tol = kDefaultTol);

}  // namespace quditsim

#endif  // QUDITSIM_COMPLEX_DENSE_HPP

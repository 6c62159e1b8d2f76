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

#include "quditsim/complex_dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace quditsim {

namespace {

void require_finite(std::span<const cplx> entries) {
  for (const cplx& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("non-finite complex entry");
    }
  }
}

std::string shape_str(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_entry_budget(std::size_t rows, std::size_t cols) {
  if (rows != 0 && cols > std::numeric_limits<std::size_t>::max() / rows) {
    throw DimensionError("matrix size overflows");
  }
  if (rows * cols > max_dimension()) {
    throw DimensionError("matrix " + shape_str(rows, cols) +
                         " exceeds the dimension guard of " +
                         std::to_string(max_dimension()) + " entries");
  }
}

}  // namespace

CVector::CVector(std::size_t dim) : entries_(dim) {
  if (dim == 0) {
    throw DimensionError("vector dimension must be positive");
  }
  if (dim > max_dimension()) {
    throw DimensionError("vector dimension " + std::to_string(dim) +
                         " exceeds the dimension guard");
  }
}

CVector::CVector(std::vector<cplx> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw DimensionError("vector dimension must be positive");
  }
  require_finite(entries_);
}

CVector::CVector(std::initializer_list<cplx> entries)
    : CVector(std::vector<cplx>(entries)) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  require_entry_budget(rows, cols);
  entries_.assign(rows * cols, cplx{});
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> row_major)
    : rows_(rows), cols_(cols), entries_(std::move(row_major)) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    throw DimensionError("expected " + std::to_string(rows * cols) +
                         " entries, got " + std::to_string(entries_.size()));
  }
  require_finite(entries_);
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ragged matrix literal");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  require_finite(entries_);
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

CMatrix CMatrix::diagonal(const CVector& diag) {
  CMatrix m(diag.dim(), diag.dim());
  for (std::size_t i = 0; i < diag.dim(); ++i) {
    m(i, i) = diag[i];
  }
  return m;
}

CVector matvec(const CMatrix& m, const CVector& v) {
  if (m.cols() != v.dim()) {
    throw DimensionError("matvec: " + shape_str(m.rows(), m.cols()) +
                         " times vector of length " + std::to_string(v.dim()));
  }
  CVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    cplx acc{};
    for (std::size_t j = 0; j < m.cols(); ++j) {
      acc += m(i, j) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + shape_str(a.rows(), a.cols()) + " times " +
                         shape_str(b.rows(), b.cols()));
  }
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  require_entry_budget(rows, cols);
  CMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

CVector kron_vec(const CVector& u, const CVector& v) {
  CVector out(u.dim() * v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t k = 0; k < v.dim(); ++k) {
      out[i * v.dim() + k] = u[i] * v[k];
    }
  }
  return out;
}

CMatrix adjoint(const CMatrix& m) {
  CMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(j, i) = std::conj(m(i, j));
    }
  }
  return out;
}

CMatrix scaled(const CMatrix& m, cplx factor) {
  std::vector<cplx> e(m.entries());
  for (cplx& z : e) {
    z *= factor;
  }
  return CMatrix(m.rows(), m.cols(), std::move(e));
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix difference shape mismatch");
  }
  std::vector<cplx> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] -= b.data()[i];
  }
  return CMatrix(a.rows(), a.cols(), std::move(e));
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix sum shape mismatch");
  }
  std::vector<cplx> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] += b.data()[i];
  }
  return CMatrix(a.rows(), a.cols(), std::move(e));
}

cplx inner(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("inner product length mismatch");
  }
  cplx acc{};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    acc += std::conj(a[i]) * b[i];
  }
  return acc;
}

double norm(const CVector& v) {
  double acc = 0.0;
  for (const cplx& z : v.data()) {
    acc += std::norm(z);
  }
  return std::sqrt(acc);
}

double max_abs_diff(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("vector length mismatch: " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix shape mismatch: " + shape_str(a.rows(), a.cols()) +
                         " vs " + shape_str(b.rows(), b.cols()));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

bool approx_equal(const CVector& a, const CVector& b, double tol) {
  return a.dim() == b.dim() && max_abs_diff(a, b) <= tol;
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}

double unitarity_deviation(const CMatrix& u) {
  if (u.rows() != u.cols()) {
    throw DimensionError("unitarity check needs a square matrix");
  }
  return max_abs_diff(matmul(u, adjoint(u)), CMatrix::identity(u.rows()));
}

double global_phase_deviation(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("vector length mismatch");
  }
  std::size_t pivot = 0;
  double a_max = 0.0;
  double b_max = 0.0;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    a_max = std::max(a_max, std::abs(a[i]));
    if (std::abs(b[i]) > b_max) {
      b_max = std::abs(b[i]);
      pivot = i;
    }
  }
  if (a_max == 0.0 || b_max == 0.0) {
    throw DomainError("global phase comparison of a zero vector");
  }
  cplx phase = a[pivot] / b[pivot];
  phase = std::abs(phase) == 0.0 ? cplx{1.0} : phase / std::abs(phase);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    worst = std::max(worst, std::abs(a[i] - phase * b[i]));
  }
  return worst;
}

bool equal_up_to_global_phase(const CVector& a, const CVector& b, double tol) {
  return global_phase_deviation(a, b) <= tol;
}

}  // namespace quditsim

// Copyright 2026 The qcsd developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcsd {

using Complex = std::complex<double>;

/**
 * Error type thrown by every qcsd operation on contract violations
 * (dimension mismatches, non-unitary inputs, malformed files, ...).
 */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/**
 * Tolerances used by the structural predicates and the decomposition
 * kernels. All values are dimensionless Frobenius/entrywise thresholds.
 */
struct Tolerance {
  double unitary_tol = 1e-10;
  double diag_tol = 1e-10;
  double zero_tol = 1e-12;

  void validate() const;
};

/**
 * Dense square complex matrix, row-major.
 *
 * Index convention: entry (row, col) maps input basis state `col` to output
 * basis state `row`. Basis states are labelled x in [0, 2^n) with bit n-1
 * most significant, i.e. bit alpha of x carries weight 2^alpha and the
 * leftmost tensor factor acts on the highest bit.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim)
      : dim_(dim), entries_(dim * dim, Complex(0, 0)) {}

  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);

  /// Diagonal matrix from its diagonal entries.
  static ComplexMatrix diagonal(const std::vector<Complex>& diag);

  /// Convenience row-major initializer, mostly for tests and 2x2 gates.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  const std::vector<Complex>& entries() const { return entries_; }
  std::vector<Complex>& entries() { return entries_; }

  /// Exact entrywise equality (no tolerance).
  bool operator==(const ComplexMatrix& other) const = default;

  /// Half-blocks of an even-dimensional matrix, 0-indexed by (row, col).
  ComplexMatrix block(std::size_t row_half, std::size_t col_half) const;

  std::vector<Complex> diagonal_entries() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

// Largest dense dimension the library will allocate. Beyond this, tensor
// products and generators raise an Error instead of exhausting memory.
inline constexpr std::size_t kMaxDenseDim = std::size_t{1} << 13;

/// Exact matrix product. Throws on dimension mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product: (a (x) b)[i*bd + k, j*bd + l] = a[i,j] * b[k,l].
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block-diagonal [[a, 0], [0, b]].
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

/// a (+) a (+) ... (+) a, `count` copies.
ComplexMatrix direct_sum_pow(const ComplexMatrix& a, std::size_t count);

ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix dagger(const ComplexMatrix& a);

/// Frobenius norm of (a - b). Throws on dimension mismatch.
double frobenius_dist(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);

/// True iff ||a'a - I||_F <= dim * tol.
bool is_unitary(const ComplexMatrix& a, double tol);

/// True iff every off-diagonal entry has magnitude <= tol.
bool is_diagonal(const ComplexMatrix& a, double tol);

/// True iff max |a - I| entrywise <= tol.
bool is_identity(const ComplexMatrix& a, double tol);

/// Largest off-diagonal magnitude (0 for dim 1).
double max_offdiag_abs(const ComplexMatrix& a);

/// Measured ||a'a - I||_F, the quantity is_unitary thresholds.
double unitarity_defect(const ComplexMatrix& a);

// --- ".cmat" text format -------------------------------------------------
//
// Line 1 is the integer dimension; the following dim lines carry dim
// "re im" pairs in scientific notation with 17 significant digits,
// row-major. The reader accepts arbitrary whitespace between tokens.

void write_cmat(const ComplexMatrix& m, std::ostream& out);
void write_cmat_file(const ComplexMatrix& m, const std::string& path);

ComplexMatrix read_cmat(std::istream& in);
ComplexMatrix read_cmat_file(const std::string& path);

/// Formats a double with 17 significant digits (lossless for IEEE doubles).
std::string format_double(double value);

}  // namespace qcsd

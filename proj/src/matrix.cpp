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

#include "qcsd/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qcsd {

void Tolerance::validate() const {
  if (unitary_tol <= 0 || diag_tol <= 0 || zero_tol <= 0) {
    throw Error("tolerances must be strictly positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) {
    throw Error("matrix dimension must be >= 1");
  }
  if (entries_.size() != dim_ * dim_) {
    throw Error("entry count " + std::to_string(entries_.size()) +
                " does not match dim " + std::to_string(dim_));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = Complex(1, 0);
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  std::size_t dim = rows.size();
  ComplexMatrix m(dim);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim) {
      throw Error("from_rows requires a square initializer");
    }
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

ComplexMatrix ComplexMatrix::block(std::size_t row_half,
                                   std::size_t col_half) const {
  if (dim_ % 2 != 0) {
    throw Error("block extraction requires even dimension, got " +
                std::to_string(dim_));
  }
  std::size_t m = dim_ / 2;
  ComplexMatrix out(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      out(r, c) = (*this)(row_half * m + r, col_half * m + c);
    }
  }
  return out;
}

std::vector<Complex> ComplexMatrix::diagonal_entries() const {
  std::vector<Complex> d(dim_);
  for (std::size_t i = 0; i < dim_; ++i) d[i] = (*this)(i, i);
  return d;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error("matmul dimension mismatch: " + std::to_string(a.dim()) +
                " vs " + std::to_string(b.dim()));
  }
  std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Complex aik = a(i, k);
      if (aik == Complex(0, 0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() == 0 || b.dim() == 0) {
    throw Error("tensor of an empty matrix");
  }
  if (a.dim() > kMaxDenseDim / b.dim()) {
    throw Error("tensor product dimension " + std::to_string(a.dim()) + "*" +
                std::to_string(b.dim()) + " exceeds the dense budget of " +
                std::to_string(kMaxDenseDim));
  }
  std::size_t ad = a.dim(), bd = b.dim();
  ComplexMatrix out(ad * bd);
  for (std::size_t i = 0; i < ad; ++i) {
    for (std::size_t j = 0; j < ad; ++j) {
      Complex aij = a(i, j);
      if (aij == Complex(0, 0)) continue;
      for (std::size_t k = 0; k < bd; ++k) {
        for (std::size_t l = 0; l < bd; ++l) {
          out(i * bd + k, j * bd + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  std::size_t ad = a.dim(), bd = b.dim();
  ComplexMatrix out(ad + bd);
  for (std::size_t i = 0; i < ad; ++i) {
    for (std::size_t j = 0; j < ad; ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < bd; ++i) {
    for (std::size_t j = 0; j < bd; ++j) out(ad + i, ad + j) = b(i, j);
  }
  return out;
}

ComplexMatrix direct_sum_pow(const ComplexMatrix& a, std::size_t count) {
  if (count == 0) {
    throw Error("direct_sum_pow requires at least one copy");
  }
  std::size_t ad = a.dim();
  if (count > kMaxDenseDim / ad) {
    throw Error("direct sum dimension exceeds the dense budget");
  }
  ComplexMatrix out(ad * count);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < ad; ++i) {
      for (std::size_t j = 0; j < ad; ++j) {
        out(k * ad + i, k * ad + j) = a(i, j);
      }
    }
  }
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(j, i) = a(i, j);
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

double frobenius_dist(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error("frobenius_dist dimension mismatch: " +
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
  double acc = 0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    acc += std::norm(a.entries()[i] - b.entries()[i]);
  }
  return std::sqrt(acc);
}

double frobenius_norm(const ComplexMatrix& a) {
  double acc = 0;
  for (const Complex& v : a.entries()) acc += std::norm(v);
  return std::sqrt(acc);
}

double unitarity_defect(const ComplexMatrix& a) {
  return frobenius_dist(matmul(dagger(a), a),
                        ComplexMatrix::identity(a.dim()));
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  return unitarity_defect(a) <= static_cast<double>(a.dim()) * tol;
}

double max_offdiag_abs(const ComplexMatrix& a) {
  double worst = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) worst = std::max(worst, std::abs(a(i, j)));
    }
  }
  return worst;
}

bool is_diagonal(const ComplexMatrix& a, double tol) {
  return max_offdiag_abs(a) <= tol;
}

bool is_identity(const ComplexMatrix& a, double tol) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Complex want = (i == j) ? Complex(1, 0) : Complex(0, 0);
      if (std::abs(a(i, j) - want) > tol) return false;
    }
  }
  return true;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.16e", value);
  return buf;
}

void write_cmat(const ComplexMatrix& m, std::ostream& out) {
  out << m.dim() << "\n";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c != 0) out << ' ';
      out << format_double(m(r, c).real()) << ' '
          << format_double(m(r, c).imag());
    }
    out << "\n";
  }
}

void write_cmat_file(const ComplexMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open '" + path + "' for writing");
  }
  write_cmat(m, out);
  if (!out) {
    throw Error("write to '" + path + "' failed");
  }
}

ComplexMatrix read_cmat(std::istream& in) {
  long long dim = 0;
  if (!(in >> dim) || dim < 1) {
    throw Error("cmat: missing or invalid dimension header");
  }
  if (static_cast<std::size_t>(dim) > kMaxDenseDim) {
    throw Error("cmat: dimension " + std::to_string(dim) +
                " exceeds the dense budget");
  }
  std::size_t n = static_cast<std::size_t>(dim);
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    double re = 0, im = 0;
    if (!(in >> re >> im)) {
      throw Error("cmat: truncated or malformed entry " + std::to_string(i) +
                  " of " + std::to_string(n * n));
    }
    entries.emplace_back(re, im);
  }
  return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix read_cmat_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open '" + path + "' for reading");
  }
  return read_cmat(in);
}

}  // namespace qcsd

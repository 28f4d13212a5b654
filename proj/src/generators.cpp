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

#include "qcsd/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qcsd {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t checked_dim(std::size_t nb) {
  if (nb == 0) {
    throw Error("register width must be >= 1");
  }
  if (nb >= 63 || (std::size_t{1} << nb) > kMaxDenseDim) {
    throw Error("register width " + std::to_string(nb) +
                " exceeds the dense matrix budget");
  }
  return std::size_t{1} << nb;
}

void check_bit(std::size_t nb, std::size_t alpha) {
  if (alpha >= nb) {
    throw Error("bit index " + std::to_string(alpha) +
                " out of range for a " + std::to_string(nb) +
                "-bit register");
  }
}

}  // namespace

ComplexMatrix pauli(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::x:
      return ComplexMatrix::from_rows({{0, 1}, {1, 0}});
    case PauliAxis::y:
      return ComplexMatrix::from_rows(
          {{0, Complex(0, -1)}, {Complex(0, 1), 0}});
    case PauliAxis::z:
      return ComplexMatrix::from_rows({{1, 0}, {0, -1}});
  }
  throw Error("unknown Pauli axis");
}

ComplexMatrix hadamard1() {
  double h = 1.0 / std::sqrt(2.0);
  return ComplexMatrix::from_rows({{h, h}, {h, -h}});
}

ComplexMatrix hadamard_n(std::size_t nb) {
  checked_dim(nb);
  ComplexMatrix out = hadamard1();
  for (std::size_t i = 1; i < nb; ++i) out = tensor(out, hadamard1());
  return out;
}

ComplexMatrix dft(std::size_t nb) {
  std::size_t ns = checked_dim(nb);
  ComplexMatrix out(ns);
  double scale = 1.0 / std::sqrt(static_cast<double>(ns));
  for (std::size_t x = 0; x < ns; ++x) {
    for (std::size_t y = 0; y < ns; ++y) {
      // x*y mod ns keeps the angle argument small without changing the phase.
      std::size_t e = (x * y) % ns;
      double angle = 2.0 * kPi * static_cast<double>(e) /
                     static_cast<double>(ns);
      out(x, y) = scale * Complex(std::cos(angle), std::sin(angle));
    }
  }
  return out;
}

ComplexMatrix d_matrix(std::size_t r) {
  std::size_t dim = checked_dim(r);
  std::size_t m = dim / 2;
  double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < m; ++i) {
    out(i, i) = h;
    out(i, m + i) = -h;
    out(m + i, i) = h;
    out(m + i, m + i) = h;
  }
  return out;
}

ComplexMatrix omega_gate(std::size_t nb) {
  std::size_t ns = checked_dim(nb);
  double angle = 2.0 * kPi / static_cast<double>(ns);
  return ComplexMatrix::diagonal(
      {Complex(1, 0), Complex(std::cos(angle), std::sin(angle))});
}

ComplexMatrix v_gate(std::size_t nb, std::size_t alpha, std::size_t beta) {
  std::size_t ns = checked_dim(nb);
  check_bit(nb, alpha);
  check_bit(nb, beta);
  if (alpha == beta) {
    throw Error("v_gate requires two distinct bits, got " +
                std::to_string(alpha) + " twice");
  }
  std::size_t gap = (alpha > beta) ? alpha - beta : beta - alpha;
  double angle = kPi / static_cast<double>(std::size_t{1} << gap);
  ComplexMatrix out = ComplexMatrix::identity(ns);
  for (std::size_t x = 0; x < ns; ++x) {
    if (((x >> alpha) & 1) && ((x >> beta) & 1)) {
      out(x, x) = Complex(std::cos(angle), std::sin(angle));
    }
  }
  return out;
}

ComplexMatrix bit_reversal(std::size_t nb) {
  std::size_t ns = checked_dim(nb);
  ComplexMatrix out(ns);
  for (std::size_t x = 0; x < ns; ++x) {
    std::size_t y = 0;
    for (std::size_t b = 0; b < nb; ++b) {
      if ((x >> b) & 1) y |= std::size_t{1} << (nb - 1 - b);
    }
    out(y, x) = Complex(1, 0);
  }
  return out;
}

ComplexMatrix exchange(std::size_t nb, std::size_t i, std::size_t j) {
  std::size_t ns = checked_dim(nb);
  check_bit(nb, i);
  check_bit(nb, j);
  if (i == j) {
    throw Error("exchange requires two distinct bits");
  }
  ComplexMatrix out(ns);
  for (std::size_t x = 0; x < ns; ++x) {
    std::size_t bi = (x >> i) & 1, bj = (x >> j) & 1;
    std::size_t y = x;
    y &= ~((std::size_t{1} << i) | (std::size_t{1} << j));
    y |= bi << j;
    y |= bj << i;
    out(y, x) = Complex(1, 0);
  }
  return out;
}

ComplexMatrix embed(const ComplexMatrix& gate2, std::size_t nb,
                    std::size_t alpha) {
  if (gate2.dim() != 2) {
    throw Error("embed expects a 2x2 gate, got dim " +
                std::to_string(gate2.dim()));
  }
  std::size_t ns = checked_dim(nb);
  check_bit(nb, alpha);
  ComplexMatrix out(ns);
  std::size_t mask = std::size_t{1} << alpha;
  for (std::size_t x = 0; x < ns; ++x) {
    std::size_t bx = (x >> alpha) & 1;
    out(x & ~mask, x) += gate2(0, bx);
    out(x | mask, x) += gate2(1, bx);
  }
  return out;
}

ComplexMatrix delta_op(std::size_t nb, std::size_t top_bit) {
  std::size_t ns = checked_dim(nb);
  check_bit(nb, top_bit);
  ComplexMatrix out = embed(pauli(PauliAxis::z), nb, top_bit);
  for (std::size_t beta = 0; beta < top_bit; ++beta) {
    ComplexMatrix v = v_gate(nb, top_bit, beta);
    for (std::size_t x = 0; x < ns; ++x) out(x, x) *= v(x, x);
  }
  return out;
}

std::pair<ComplexMatrix, ComplexMatrix> ab_blocks(std::size_t r,
                                                  std::size_t nb) {
  checked_dim(nb);
  if (r >= nb) {
    throw Error("ab_blocks requires r < nb");
  }
  std::size_t dim = std::size_t{1} << r;
  ComplexMatrix a = ComplexMatrix::identity(dim);
  ComplexMatrix omega = omega_gate(nb);
  // B_r = -(Omega^{2^{nb-2}} (x) Omega^{2^{nb-3}} (x) ...), r factors.
  ComplexMatrix b = ComplexMatrix::from_rows({{-1}});
  for (std::size_t k = 1; k <= r; ++k) {
    std::size_t e = std::size_t{1} << (nb - 1 - k);
    ComplexMatrix pw = ComplexMatrix::identity(2);
    for (std::size_t p = 0; p < e; ++p) pw = matmul(pw, omega);
    b = tensor(b, pw);
  }
  return {std::move(a), std::move(b)};
}

namespace {

// Explicit Box-Muller on mt19937_64 keeps the stream pinned by this code
// rather than by the standard library's distribution internals.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform_open();
    double u2 = uniform_open();
    double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return mag * std::cos(2.0 * kPi * u2);
  }

 private:
  double uniform_open() {
    // 53-bit mantissa draw in (0, 1].
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  }

  std::mt19937_64 rng_;
  double spare_ = 0;
  bool have_spare_ = false;
};

}  // namespace

ComplexMatrix random_unitary(std::size_t nb, std::uint64_t seed) {
  std::size_t ns = checked_dim(nb);
  GaussianStream g(seed);
  ComplexMatrix m(ns);
  for (std::size_t r = 0; r < ns; ++r) {
    for (std::size_t c = 0; c < ns; ++c) {
      m(r, c) = Complex(g.next(), g.next());
    }
  }
  // Modified Gram-Schmidt over columns, run twice for orthogonality at
  // machine precision.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t c = 0; c < ns; ++c) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        Complex proj(0, 0);
        for (std::size_t r = 0; r < ns; ++r) {
          proj += std::conj(m(r, prev)) * m(r, c);
        }
        for (std::size_t r = 0; r < ns; ++r) m(r, c) -= proj * m(r, prev);
      }
      double norm2 = 0;
      for (std::size_t r = 0; r < ns; ++r) norm2 += std::norm(m(r, c));
      double inv = 1.0 / std::sqrt(norm2);
      for (std::size_t r = 0; r < ns; ++r) m(r, c) *= inv;
    }
  }
  return m;
}

}  // namespace qcsd

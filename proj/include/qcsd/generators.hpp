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

#include <cstdint>
#include <utility>

#include "qcsd/matrix.hpp"

namespace qcsd {

/**
 * Constructors for the named matrices and bit-labelled operators the
 * compiler works with. All outputs are unitary; the register convention is
 * bit nb-1 as the leftmost (most significant) tensor factor throughout.
 */

enum class PauliAxis { x, y, z };

ComplexMatrix pauli(PauliAxis axis);

/// One-bit Hadamard, (1/sqrt(2)) [[1, 1], [1, -1]].
ComplexMatrix hadamard1();

/// H tensored nb times; dim 2^nb, real symmetric.
ComplexMatrix hadamard_n(std::size_t nb);

/// Discrete Fourier Transform: entries exp(i 2 pi x y / 2^nb) / sqrt(2^nb).
ComplexMatrix dft(std::size_t nb);

/// D_r = (H sigma_z) (x) I^{(x) r-1}: the uniform Y-rotation block of dim 2^r.
ComplexMatrix d_matrix(std::size_t r);

/// Omega = diag(1, omega) with omega = exp(i 2 pi / 2^nb).
ComplexMatrix omega_gate(std::size_t nb);

/**
 * Controlled-phase diagonal V(alpha, beta): basis state x picks up the
 * phase exp[i pi b_alpha(x) b_beta(x) / 2^|alpha-beta|]. Symmetric in its
 * two (distinct) bit arguments.
 */
ComplexMatrix v_gate(std::size_t nb, std::size_t alpha, std::size_t beta);

/// Permutation matrix reversing the bit string of every basis state.
ComplexMatrix bit_reversal(std::size_t nb);

/// Permutation matrix swapping the values of bits i and j.
ComplexMatrix exchange(std::size_t nb, std::size_t i, std::size_t j);

/// I^{(x) nb-1-alpha} (x) gate2 (x) I^{(x) alpha}: one-qubit gate on bit alpha.
ComplexMatrix embed(const ComplexMatrix& gate2, std::size_t nb,
                    std::size_t alpha);

/// Delta(top_bit) = sigma_z(top_bit) * prod_{beta < top_bit} V(top_bit, beta).
ComplexMatrix delta_op(std::size_t nb, std::size_t top_bit);

/**
 * The diagonal halves of Delta: delta_op(nb, r) equals
 * I^{(x) nb-1-r} (x) (A_r (+) B_r), with A_r = I_{2^r} and
 * B_r = - Omega^{2^{nb-2}} (x) Omega^{2^{nb-3}} (x) ... (r factors).
 */
std::pair<ComplexMatrix, ComplexMatrix> ab_blocks(std::size_t r,
                                                  std::size_t nb);

/**
 * Deterministic Haar-like unitary: a seeded complex Gaussian matrix
 * orthonormalized column by column. Identical seed, identical matrix.
 */
ComplexMatrix random_unitary(std::size_t nb, std::uint64_t seed);

}  // namespace qcsd

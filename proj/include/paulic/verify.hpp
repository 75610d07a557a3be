// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "paulic/circuit.hpp"
#include "paulic/pauli.hpp"

namespace paulic {

using DenseUnitary = Eigen::MatrixXcd;

inline constexpr int kMaxVerifyQubits = 12;

/// exp(-i theta/2 P) = cos(theta/2) I - i sin(theta/2) P. Qubit 0 is the
/// least significant bit of the basis index.
DenseUnitary pauli_exponential(const PauliString& ps, double theta);

/// Product of gate matrices in circuit order (first gate applied first).
/// Throws VerifyError on RESET or more than kMaxVerifyQubits qubits.
DenseUnitary circuit_unitary(const Circuit& circ,
                             std::span<const double> thetas = {});

/// Ordered product of the block's string exponentials, first string
/// applied first; each string contributes
/// exp(-i coefficient*theta[angle_ref]/2 P).
DenseUnitary block_reference(const Block& block, int n_qubits,
                             std::span<const double> thetas);

/// Reference for a whole kernel in the given (scheduled) block order.
DenseUnitary kernel_reference(const Kernel& kernel,
                              const std::vector<int>& block_order,
                              std::span<const double> thetas);

/// True iff the physical circuit, restricted to all unmapped physical
/// qubits starting in |0>, equals u_ref up to one global phase and the
/// relocation from initial to final placement. The global phase is fixed
/// against the largest-magnitude reference entry.
bool circuit_matches_reference(const Circuit& phys_circ,
                               const DenseUnitary& u_ref,
                               const std::vector<int>& initial_log2phys,
                               const std::vector<int>& final_log2phys,
                               std::span<const double> thetas = {},
                               double tol = 1e-8);

/// Same check on a precomputed circuit unitary.
bool equivalent_up_to_phase_and_permutation(
    const DenseUnitary& u_circ, const DenseUnitary& u_ref,
    const std::vector<int>& initial_log2phys,
    const std::vector<int>& final_log2phys, double tol = 1e-8);

}  // namespace paulic

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "paulic/pauli.hpp"

namespace paulic {

/// Synthetic UCCSD-shaped kernel: each block is a Jordan-Wigner single
/// excitation ({X Z..Z X, Y Z..Z Y} over a random orbital pair) or a
/// double excitation (eight odd-Y-count strings over four orbitals with
/// Z padding). Requires n_qubits >= 4.
Kernel gen_ucc(int n_qubits, int n_blocks, std::uint64_t seed);

/// QAOA MaxCut kernel over a random graph: every pair becomes an edge
/// with probability `density`; one single-string ZZ block per edge.
Kernel gen_qaoa_random(int n, double density, std::uint64_t seed);

/// QAOA MaxCut kernel over a random d-regular graph (configuration
/// model). Requires n > degree and n*degree even.
Kernel gen_qaoa_regular(int n, int degree, std::uint64_t seed);

}  // namespace paulic

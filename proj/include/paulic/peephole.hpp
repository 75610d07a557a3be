// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "paulic/circuit.hpp"

namespace paulic {

struct CancelResult {
  Circuit circuit;
  int canceled_cnots = 0;
  int canceled_1q = 0;
};

/// Fixpoint adjacent-inverse cancellation with no commutation reasoning:
/// removes pairs g1,g2 where g2 is the next gate on every operand wire of
/// g1 and equals its inverse (H/H, X/X, CNOT/CNOT with identical operands,
/// RX(a)/RX(-a)); adjacent RZ/RZ on one wire merge their symbolic angles.
/// SWAP and RESET are opaque barriers.
CancelResult cancel(const Circuit& circ);

/// canceled logical CNOTs / pre-cancellation logical CNOT count
/// (SWAP-induced CNOTs excluded); absent when the denominator is zero.
std::optional<double> gate_cancellation_ratio(const Circuit& before,
                                              int canceled_cnots);

}  // namespace paulic

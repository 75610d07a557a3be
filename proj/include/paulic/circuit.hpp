// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

namespace paulic {

enum class GateKind { H, X, RX, RZ, CNOT, SWAP, RESET };

/// One term of a symbolic rotation angle: coeff * theta[ref], where
/// ref == -1 denotes the constant 1 (fixed numeric angles).
struct AngleTerm {
  int ref = -1;
  double coeff = 0.0;
  bool operator==(const AngleTerm&) const = default;
};

struct Gate {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;  // second operand of CNOT/SWAP
  std::vector<AngleTerm> angle;

  bool is_two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::SWAP;
  }
};

Gate make_h(int q);
Gate make_x(int q);
Gate make_rx(int q, double angle);
Gate make_rz(int q, int angle_ref, double coeff);
Gate make_cnot(int control, int target);
Gate make_swap(int a, int b);
Gate make_reset(int q);

/// Sorts terms by ref, merges duplicates, drops near-zero coefficients.
std::vector<AngleTerm> normalize_angle(std::vector<AngleTerm> terms);

/// Numeric value of a gate's angle under a theta binding.
double angle_value(const Gate& g, std::span<const double> thetas);

/// Ordered gate netlist over physical or logical qubit indices.
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  void push(Gate g) { gates.push_back(std::move(g)); }
  void append(const std::vector<Gate>& gs) {
    gates.insert(gates.end(), gs.begin(), gs.end());
  }

  int cnot_count() const;
  int swap_count() const;
  int one_qubit_count() const;
  int two_qubit_count() const;  // CNOTs + 3 per SWAP
  std::size_t size() const { return gates.size(); }
};

/// SWAP(a,b) -> CNOT(a,b), CNOT(b,a), CNOT(a,b).
Circuit decompose_swaps(const Circuit& circ);

std::string gate_name(GateKind kind);

}  // namespace paulic

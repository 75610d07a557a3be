// SPDX-License-Identifier: Apache-2.0
#include "paulic/circuit.hpp"

#include <algorithm>
#include <cmath>

namespace paulic {

Gate make_h(int q) { return Gate{GateKind::H, q, -1, {}}; }
Gate make_x(int q) { return Gate{GateKind::X, q, -1, {}}; }

Gate make_rx(int q, double angle) {
  return Gate{GateKind::RX, q, -1, {AngleTerm{-1, angle}}};
}

Gate make_rz(int q, int angle_ref, double coeff) {
  return Gate{GateKind::RZ, q, -1, {AngleTerm{angle_ref, coeff}}};
}

Gate make_cnot(int control, int target) {
  return Gate{GateKind::CNOT, control, target, {}};
}

Gate make_swap(int a, int b) { return Gate{GateKind::SWAP, a, b, {}}; }
Gate make_reset(int q) { return Gate{GateKind::RESET, q, -1, {}}; }

std::vector<AngleTerm> normalize_angle(std::vector<AngleTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const AngleTerm& a, const AngleTerm& b) { return a.ref < b.ref; });
  std::vector<AngleTerm> out;
  for (const AngleTerm& t : terms) {
    if (!out.empty() && out.back().ref == t.ref)
      out.back().coeff += t.coeff;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const AngleTerm& t) { return std::abs(t.coeff) < 1e-12; });
  return out;
}

double angle_value(const Gate& g, std::span<const double> thetas) {
  double v = 0.0;
  for (const AngleTerm& t : g.angle)
    v += t.coeff * (t.ref < 0 ? 1.0 : thetas[static_cast<std::size_t>(t.ref)]);
  return v;
}

int Circuit::cnot_count() const {
  return static_cast<int>(std::count_if(
      gates.begin(), gates.end(),
      [](const Gate& g) { return g.kind == GateKind::CNOT; }));
}

int Circuit::swap_count() const {
  return static_cast<int>(std::count_if(
      gates.begin(), gates.end(),
      [](const Gate& g) { return g.kind == GateKind::SWAP; }));
}

int Circuit::one_qubit_count() const {
  return static_cast<int>(std::count_if(
      gates.begin(), gates.end(), [](const Gate& g) {
        return !g.is_two_qubit() && g.kind != GateKind::RESET;
      }));
}

int Circuit::two_qubit_count() const {
  return cnot_count() + 3 * swap_count();
}

Circuit decompose_swaps(const Circuit& circ) {
  Circuit out;
  out.n_qubits = circ.n_qubits;
  for (const Gate& g : circ.gates) {
    if (g.kind == GateKind::SWAP) {
      out.push(make_cnot(g.q0, g.q1));
      out.push(make_cnot(g.q1, g.q0));
      out.push(make_cnot(g.q0, g.q1));
    } else {
      out.push(g);
    }
  }
  return out;
}

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::RX: return "rx";
    case GateKind::RZ: return "rz";
    case GateKind::CNOT: return "cx";
    case GateKind::SWAP: return "swap";
    case GateKind::RESET: return "reset";
  }
  return "?";
}

}  // namespace paulic

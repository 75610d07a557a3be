// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "paulic/metrics.hpp"
#include "paulic/peephole.hpp"
#include "paulic/verify.hpp"

using namespace paulic;

namespace {

Circuit make_circ(int n, std::vector<Gate> gates) {
  Circuit c;
  c.n_qubits = n;
  c.gates = std::move(gates);
  return c;
}

Circuit random_circuit(int n, int len, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<int> qubit(0, n - 1);
  std::uniform_real_distribution<double> angle(-1.5, 1.5);
  Circuit c;
  c.n_qubits = n;
  for (int i = 0; i < len; ++i) {
    int q = qubit(rng);
    switch (kind(rng)) {
      case 0: c.push(make_h(q)); break;
      case 1: c.push(make_x(q)); break;
      case 2: c.push(make_rx(q, angle(rng))); break;
      case 3: c.push(make_rz(q, -1, angle(rng))); break;
      default: {
        int r = qubit(rng);
        if (r == q) r = (q + 1) % n;
        c.push(make_cnot(q, r));
      }
    }
    // Seed explicit inverse pairs so there is something to cancel.
    if (i % 3 == 0) c.push(c.gates.back());
  }
  return c;
}

}  // namespace

TEST_CASE("adjacent CNOT pair cancels; blocked pair survives") {
  CancelResult r = cancel(make_circ(2, {make_cnot(0, 1), make_cnot(0, 1)}));
  CHECK(r.circuit.gates.empty());
  CHECK(r.canceled_cnots == 2);

  CancelResult blocked =
      cancel(make_circ(2, {make_cnot(0, 1), make_h(0), make_cnot(0, 1)}));
  CHECK(blocked.circuit.size() == 3);
  CHECK(blocked.canceled_cnots == 0);

  // Reversed direction is not an inverse pair.
  CancelResult dir = cancel(make_circ(2, {make_cnot(0, 1), make_cnot(1, 0)}));
  CHECK(dir.circuit.size() == 2);
}

TEST_CASE("one-qubit inverse pairs cancel") {
  CHECK(cancel(make_circ(1, {make_h(0), make_h(0)})).circuit.gates.empty());
  CHECK(cancel(make_circ(1, {make_x(0), make_x(0)})).circuit.gates.empty());
  CHECK(cancel(make_circ(1, {make_rx(0, 0.4), make_rx(0, -0.4)}))
            .circuit.gates.empty());
  CHECK(cancel(make_circ(1, {make_rx(0, 0.4), make_rx(0, 0.3)})).circuit.size() ==
        2);
  // A gate on another wire does not block.
  CancelResult r =
      cancel(make_circ(2, {make_h(0), make_x(1), make_h(0)}));
  CHECK(r.circuit.size() == 1);
  CHECK(r.canceled_1q == 2);
}

TEST_CASE("adjacent RZ gates merge symbolic angle sums") {
  CancelResult r =
      cancel(make_circ(1, {make_rz(0, 0, 1.0), make_rz(0, 0, 2.0)}));
  REQUIRE(r.circuit.size() == 1);
  CHECK(r.circuit.gates[0].angle ==
        std::vector<AngleTerm>{AngleTerm{0, 3.0}});
  CHECK(r.canceled_1q == 1);

  // Mixed references keep both terms.
  CancelResult mixed =
      cancel(make_circ(1, {make_rz(0, 0, 1.0), make_rz(0, 1, 0.5)}));
  REQUIRE(mixed.circuit.size() == 1);
  CHECK(mixed.circuit.gates[0].angle.size() == 2);

  // Opposite rotations vanish entirely.
  CHECK(cancel(make_circ(1, {make_rz(0, 2, 0.7), make_rz(0, 2, -0.7)}))
            .circuit.gates.empty());
}

TEST_CASE("cascaded cancellation reaches the fixpoint") {
  // H CNOT CNOT H collapses completely, needing two waves.
  CancelResult r = cancel(make_circ(
      2, {make_h(0), make_cnot(0, 1), make_cnot(0, 1), make_h(0)}));
  CHECK(r.circuit.gates.empty());
  CHECK(r.canceled_cnots == 2);
  CHECK(r.canceled_1q == 2);
}

TEST_CASE("SWAP and RESET are opaque barriers") {
  CHECK(cancel(make_circ(2, {make_cnot(0, 1), make_swap(0, 1),
                             make_cnot(0, 1)}))
            .circuit.size() == 3);
  CHECK(cancel(make_circ(2, {make_swap(0, 1), make_swap(0, 1)}))
            .circuit.size() == 2);
  CHECK(cancel(make_circ(1, {make_h(0), make_reset(0), make_h(0)}))
            .circuit.size() == 3);
}

TEST_CASE("cancellation preserves the unitary and never grows the circuit") {
  for (std::uint32_t seed = 0; seed < 12; ++seed) {
    Circuit c = random_circuit(4, 60, seed);
    CancelResult r = cancel(c);
    CHECK(r.circuit.size() <= c.size());
    CHECK(depth(r.circuit) <= depth(c));
    DenseUnitary before = circuit_unitary(c);
    DenseUnitary after = circuit_unitary(r.circuit);
    CHECK((before - after).cwiseAbs().maxCoeff() < 1e-9);
    // Fixpoint: a second pass removes nothing.
    CancelResult again = cancel(r.circuit);
    CHECK(again.circuit.size() == r.circuit.size());
    CHECK(again.canceled_cnots == 0);
  }
}

TEST_CASE("gate cancellation ratio") {
  Circuit sixteen;
  sixteen.n_qubits = 2;
  for (int i = 0; i < 16; ++i) sixteen.push(make_cnot(0, 1));
  CHECK(*gate_cancellation_ratio(sixteen, 4) == doctest::Approx(0.25));
  CHECK(*gate_cancellation_ratio(sixteen, 0) == doctest::Approx(0.0));
  Circuit none = make_circ(1, {make_h(0)});
  CHECK(!gate_cancellation_ratio(none, 0).has_value());
}

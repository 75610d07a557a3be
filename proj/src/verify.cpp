// SPDX-License-Identifier: Apache-2.0
#include "paulic/verify.hpp"

#include <complex>

#include "paulic/errors.hpp"

namespace paulic {

namespace {

using cd = std::complex<double>;

void check_size(int n) {
  if (n < 1 || n > kMaxVerifyQubits)
    throw VerifyError("verification limited to 1.." +
                      std::to_string(kMaxVerifyQubits) + " qubits, got " +
                      std::to_string(n));
}

Eigen::Matrix2cd one_qubit_matrix(const Gate& g,
                                  std::span<const double> thetas) {
  Eigen::Matrix2cd m;
  switch (g.kind) {
    case GateKind::H:
      m << 1, 1, 1, -1;
      return m / std::sqrt(2.0);
    case GateKind::X:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::RX: {
      double half = angle_value(g, thetas) / 2.0;
      m << std::cos(half), cd(0, -std::sin(half)), cd(0, -std::sin(half)),
          std::cos(half);
      return m;
    }
    case GateKind::RZ: {
      double half = angle_value(g, thetas) / 2.0;
      m << std::exp(cd(0, -half)), 0, 0, std::exp(cd(0, half));
      return m;
    }
    default:
      throw VerifyError("unsupported one-qubit gate");
  }
}

/// Applies one gate in place to every column of `state` (rows indexed by
/// basis states, qubit 0 = least significant bit).
void apply_gate(Eigen::MatrixXcd& state, const Gate& g,
                std::span<const double> thetas) {
  const Eigen::Index dim = state.rows();
  if (g.kind == GateKind::CNOT || g.kind == GateKind::SWAP) {
    const Eigen::Index b0 = Eigen::Index(1) << g.q0;
    const Eigen::Index b1 = Eigen::Index(1) << g.q1;
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (g.kind == GateKind::CNOT) {
        if ((i & b0) && !(i & b1)) state.row(i).swap(state.row(i | b1));
      } else {
        if ((i & b0) && !(i & b1)) state.row(i).swap(state.row((i ^ b0) | b1));
      }
    }
    return;
  }
  if (g.kind == GateKind::RESET)
    throw VerifyError("RESET is not unitary; verify on the ancilla subspace");
  Eigen::Matrix2cd m = one_qubit_matrix(g, thetas);
  const Eigen::Index bit = Eigen::Index(1) << g.q0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i & bit) continue;
    for (Eigen::Index c = 0; c < state.cols(); ++c) {
      cd a = state(i, c), b = state(i | bit, c);
      state(i, c) = m(0, 0) * a + m(0, 1) * b;
      state(i | bit, c) = m(1, 0) * a + m(1, 1) * b;
    }
  }
}

Eigen::MatrixXcd apply_circuit(const Circuit& circ, Eigen::MatrixXcd state,
                               std::span<const double> thetas) {
  for (const Gate& g : circ.gates) apply_gate(state, g, thetas);
  return state;
}

/// Basis index of the physical state embedding logical word x with all
/// unmapped physical qubits in |0>.
Eigen::Index embed_index(Eigen::Index x, const std::vector<int>& log2phys) {
  Eigen::Index out = 0;
  for (std::size_t q = 0; q < log2phys.size(); ++q)
    if (x & (Eigen::Index(1) << q)) out |= Eigen::Index(1) << log2phys[q];
  return out;
}

bool compare_embedded(const Eigen::MatrixXcd& actual, const DenseUnitary& u_ref,
                      const std::vector<int>& final_log2phys, double tol) {
  const Eigen::Index k_dim = u_ref.rows();
  Eigen::MatrixXcd expected =
      Eigen::MatrixXcd::Zero(actual.rows(), actual.cols());
  for (Eigen::Index x = 0; x < k_dim; ++x)
    for (Eigen::Index y = 0; y < k_dim; ++y)
      expected(embed_index(y, final_log2phys), x) = u_ref(y, x);

  Eigen::Index mr = 0, mc = 0;
  expected.cwiseAbs().maxCoeff(&mr, &mc);
  cd ref = expected(mr, mc);
  if (std::abs(ref) < tol) return actual.cwiseAbs().maxCoeff() < tol;
  cd phase = actual(mr, mc) / ref;
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  return (actual - phase * expected).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

DenseUnitary pauli_exponential(const PauliString& ps, double theta) {
  const int n = static_cast<int>(ps.size());
  check_size(n);
  const Eigen::Index dim = Eigen::Index(1) << n;
  // P|x> = phase(x) |x ^ flip_mask>: X/Y flip their bit, Y and Z add
  // phases depending on the incoming bit value.
  Eigen::Index flip = 0;
  std::vector<PauliOp> ops(ps.ops);
  for (int q = 0; q < n; ++q)
    if (ops[static_cast<std::size_t>(q)] == PauliOp::X ||
        ops[static_cast<std::size_t>(q)] == PauliOp::Y)
      flip |= Eigen::Index(1) << q;

  DenseUnitary u = DenseUnitary::Zero(dim, dim);
  const cd c = std::cos(theta / 2.0);
  const cd s = cd(0, -1) * std::sin(theta / 2.0);
  for (Eigen::Index x = 0; x < dim; ++x) {
    cd phase = 1.0;
    for (int q = 0; q < n; ++q) {
      bool bit = (x >> q) & 1;
      switch (ops[static_cast<std::size_t>(q)]) {
        case PauliOp::Y: phase *= bit ? cd(0, -1) : cd(0, 1); break;
        case PauliOp::Z: phase *= bit ? -1.0 : 1.0; break;
        default: break;
      }
    }
    u(x, x) += c;
    u(x ^ flip, x) += s * phase;
  }
  return u;
}

DenseUnitary circuit_unitary(const Circuit& circ,
                             std::span<const double> thetas) {
  check_size(circ.n_qubits);
  const Eigen::Index dim = Eigen::Index(1) << circ.n_qubits;
  return apply_circuit(circ, Eigen::MatrixXcd::Identity(dim, dim), thetas);
}

DenseUnitary block_reference(const Block& block, int n_qubits,
                             std::span<const double> thetas) {
  check_size(n_qubits);
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  for (const PauliString& ps : block.strings) {
    if (static_cast<int>(ps.size()) != n_qubits)
      throw VerifyError("string width " + std::to_string(ps.size()) +
                        " does not match reference width " +
                        std::to_string(n_qubits));
    double theta =
        ps.coefficient *
        (ps.angle_ref < 0 ? 1.0
                          : thetas[static_cast<std::size_t>(ps.angle_ref)]);
    u = pauli_exponential(ps, theta) * u;  // first string applied first
  }
  return u;
}

DenseUnitary kernel_reference(const Kernel& kernel,
                              const std::vector<int>& block_order,
                              std::span<const double> thetas) {
  check_size(kernel.n_qubits);
  const Eigen::Index dim = Eigen::Index(1) << kernel.n_qubits;
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  for (int b : block_order)
    u = block_reference(kernel.blocks[static_cast<std::size_t>(b)],
                        kernel.n_qubits, thetas) *
        u;
  return u;
}

bool circuit_matches_reference(const Circuit& phys_circ,
                               const DenseUnitary& u_ref,
                               const std::vector<int>& initial_log2phys,
                               const std::vector<int>& final_log2phys,
                               std::span<const double> thetas, double tol) {
  check_size(phys_circ.n_qubits);
  const Eigen::Index dim = Eigen::Index(1) << phys_circ.n_qubits;
  const Eigen::Index k_dim = u_ref.rows();
  Eigen::MatrixXcd state = Eigen::MatrixXcd::Zero(dim, k_dim);
  for (Eigen::Index x = 0; x < k_dim; ++x)
    state(embed_index(x, initial_log2phys), x) = 1.0;
  state = apply_circuit(phys_circ, std::move(state), thetas);
  return compare_embedded(state, u_ref, final_log2phys, tol);
}

bool equivalent_up_to_phase_and_permutation(
    const DenseUnitary& u_circ, const DenseUnitary& u_ref,
    const std::vector<int>& initial_log2phys,
    const std::vector<int>& final_log2phys, double tol) {
  const Eigen::Index k_dim = u_ref.rows();
  Eigen::MatrixXcd actual(u_circ.rows(), k_dim);
  for (Eigen::Index x = 0; x < k_dim; ++x)
    actual.col(x) = u_circ.col(embed_index(x, initial_log2phys));
  return compare_embedded(actual, u_ref, final_log2phys, tol);
}

}  // namespace paulic

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace paulic {

/// Single-qubit Pauli operator. I means "no gate on this qubit".
enum class PauliOp : std::uint8_t { I, X, Y, Z };

char to_char(PauliOp op);
PauliOp pauli_from_char(char c);

/// A word over {I,X,Y,Z}, one operator per logical qubit, with a real
/// weight and a reference to the block's shared rotation parameter.
/// Weight and angle are carried through compilation but never influence
/// the circuit structure.
struct PauliString {
  std::vector<PauliOp> ops;
  double coefficient = 1.0;
  int angle_ref = 0;

  std::size_t size() const { return ops.size(); }
  std::string word() const;

  bool operator==(const PauliString&) const = default;
};

/// An ordered group of Pauli strings sharing one rotation-angle factor.
///
/// After build_ir():
///   leaf_set  - maximal qubit set where every string carries the same
///               non-I operator (the cancelable section),
///   root_set  - remaining non-I support,
///   qubit_order - root qubits then leaf qubits, each ascending.
struct Block {
  std::vector<PauliString> strings;
  std::set<int> leaf_set;
  std::set<int> root_set;
  std::vector<int> qubit_order;

  bool operator==(const Block& o) const { return strings == o.strings; }
};

struct Kernel {
  int n_qubits = 0;
  std::vector<Block> blocks;

  bool operator==(const Kernel& o) const {
    return n_qubits == o.n_qubits && blocks == o.blocks;
  }
};

/// Parses the block-structured IR text format: blocks separated by one
/// blank line, one string per line over {I,X,Y,Z}, optional "; w=<float>"
/// suffix, '#' comments. Throws ParseError with a line number.
Kernel parse_kernel(const std::string& text);

/// Inverse of parse_kernel up to formatting; parse(emit(k)) == k.
std::string emit_kernel(const Kernel& kernel);

/// Populates leaf_set/root_set/qubit_order for every block. Single-string
/// blocks get leaf_set = {} (no inter-string cancellation exists, so the
/// root-tree path handles everything). Idempotent.
void build_ir(Kernel& kernel);
void build_ir(Block& block, int n_qubits);

/// Number of non-identity operators in the block's union support.
int active_length(const Block& block);

/// Common leaf operator of a built block at a leaf qubit.
PauliOp leaf_op(const Block& block, int qubit);

}  // namespace paulic

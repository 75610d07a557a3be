// SPDX-License-Identifier: Apache-2.0
#include "paulic/pauli.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "paulic/errors.hpp"

namespace paulic {

char to_char(PauliOp op) {
  switch (op) {
    case PauliOp::I: return 'I';
    case PauliOp::X: return 'X';
    case PauliOp::Y: return 'Y';
    case PauliOp::Z: return 'Z';
  }
  return '?';
}

PauliOp pauli_from_char(char c) {
  switch (c) {
    case 'I': return PauliOp::I;
    case 'X': return PauliOp::X;
    case 'Y': return PauliOp::Y;
    case 'Z': return PauliOp::Z;
    default:
      throw ParseError(std::string("invalid operator '") + c + "'");
  }
}

std::string PauliString::word() const {
  std::string s;
  s.reserve(ops.size());
  for (PauliOp op : ops) s += to_char(op);
  return s;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Kernel parse_kernel(const std::string& text) {
  Kernel kernel;
  Block current;
  int block_start_line = 0;
  int line_no = 0;
  int n_qubits = -1;

  auto flush_block = [&]() {
    if (current.strings.empty()) return;
    kernel.blocks.push_back(std::move(current));
    current = Block{};
  };

  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    line = strip(line);
    if (line.empty()) {
      flush_block();
      continue;
    }
    if (current.strings.empty()) block_start_line = line_no;

    PauliString ps;
    ps.angle_ref = static_cast<int>(kernel.blocks.size());
    std::string word = line;
    if (auto pos = line.find(';'); pos != std::string::npos) {
      word = strip(line.substr(0, pos));
      std::string tail = strip(line.substr(pos + 1));
      if (tail.rfind("w=", 0) != 0)
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected \"; w=<float>\" suffix");
      try {
        std::size_t used = 0;
        ps.coefficient = std::stod(tail.substr(2), &used);
        if (used != tail.size() - 2) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": malformed weight \"" + tail + "\"");
      }
    }
    if (word.empty())
      throw ParseError("line " + std::to_string(line_no) + ": empty string");
    for (char c : word) {
      try {
        ps.ops.push_back(pauli_from_char(c));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (n_qubits < 0) {
      n_qubits = static_cast<int>(ps.ops.size());
    } else if (static_cast<int>(ps.ops.size()) != n_qubits) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": string length " + std::to_string(ps.ops.size()) +
                       " does not match kernel width " +
                       std::to_string(n_qubits));
    }
    current.strings.push_back(std::move(ps));
  }
  flush_block();

  if (kernel.blocks.empty())
    throw ParseError("line " + std::to_string(block_start_line + 1) +
                     ": no Pauli strings found");
  kernel.n_qubits = n_qubits;
  return kernel;
}

std::string emit_kernel(const Kernel& kernel) {
  std::ostringstream out;
  out.precision(std::numeric_limits<double>::max_digits10);
  bool first = true;
  for (const Block& block : kernel.blocks) {
    if (!first) out << "\n";
    first = false;
    for (const PauliString& ps : block.strings) {
      out << ps.word();
      if (ps.coefficient != 1.0) out << " ; w=" << ps.coefficient;
      out << "\n";
    }
  }
  return out.str();
}

void build_ir(Block& block, int n_qubits) {
  if (block.strings.empty()) throw ParseError("empty block");
  block.leaf_set.clear();
  block.root_set.clear();
  block.qubit_order.clear();

  for (int q = 0; q < n_qubits; ++q) {
    PauliOp first = block.strings.front().ops[q];
    bool any_non_i = first != PauliOp::I;
    bool all_same = true;
    for (const PauliString& ps : block.strings) {
      if (ps.ops[q] != first) all_same = false;
      if (ps.ops[q] != PauliOp::I) any_non_i = true;
    }
    if (!any_non_i) continue;
    // Single-string blocks have no cancelable section by convention.
    if (all_same && first != PauliOp::I && block.strings.size() > 1)
      block.leaf_set.insert(q);
    else
      block.root_set.insert(q);
  }
  block.qubit_order.assign(block.root_set.begin(), block.root_set.end());
  block.qubit_order.insert(block.qubit_order.end(), block.leaf_set.begin(),
                           block.leaf_set.end());
}

void build_ir(Kernel& kernel) {
  for (Block& block : kernel.blocks) build_ir(block, kernel.n_qubits);
}

int active_length(const Block& block) {
  return static_cast<int>(block.root_set.size() + block.leaf_set.size());
}

PauliOp leaf_op(const Block& block, int qubit) {
  return block.strings.front().ops[qubit];
}

}  // namespace paulic

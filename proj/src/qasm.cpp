// SPDX-License-Identifier: Apache-2.0
#include "paulic/qasm.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

#include "paulic/errors.hpp"

namespace paulic {

std::string emit_qasm(const Circuit& circ, std::span<const double> thetas) {
  Circuit dec = decompose_swaps(circ);
  std::ostringstream out;
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n"
      << "qreg q[" << dec.n_qubits << "];\n";
  for (const Gate& g : dec.gates) {
    switch (g.kind) {
      case GateKind::H:
        out << "h q[" << g.q0 << "];\n";
        break;
      case GateKind::X:
        out << "x q[" << g.q0 << "];\n";
        break;
      case GateKind::RX:
      case GateKind::RZ:
        for (const AngleTerm& t : g.angle)
          if (t.ref >= 0 && t.ref >= static_cast<int>(thetas.size()))
            throw SynthesisError("unbound rotation parameter theta[" +
                                 std::to_string(t.ref) + "]");
        out << (g.kind == GateKind::RX ? "rx(" : "rz(")
            << angle_value(g, thetas) << ") q[" << g.q0 << "];\n";
        break;
      case GateKind::CNOT:
        out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      case GateKind::RESET:
        out << "reset q[" << g.q0 << "];\n";
        break;
      case GateKind::SWAP:
        throw SynthesisError("SWAP survived decomposition");
    }
  }
  return out.str();
}

namespace {

int parse_operand(const std::string& tok, int line_no) {
  auto open = tok.find("q[");
  auto close = tok.find(']', open);
  if (open == std::string::npos || close == std::string::npos)
    throw ParseError("qasm line " + std::to_string(line_no) +
                     ": expected operand q[<i>]");
  return std::stoi(tok.substr(open + 2, close - open - 2));
}

}  // namespace

Circuit parse_qasm(const std::string& text) {
  Circuit circ;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto c = line.find("//"); c != std::string::npos) line.erase(c);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "OPENQASM" || head == "include") continue;
    if (head == "qreg") {
      std::string reg;
      ls >> reg;
      auto open = reg.find('[');
      if (open == std::string::npos)
        throw ParseError("qasm line " + std::to_string(line_no) +
                         ": malformed qreg");
      circ.n_qubits = std::stoi(reg.substr(open + 1));
      continue;
    }
    std::string rest;
    std::getline(ls, rest);
    if (auto sc = rest.find(';'); sc != std::string::npos) rest.erase(sc);
    if (head == "h") {
      circ.push(make_h(parse_operand(rest, line_no)));
    } else if (head == "x") {
      circ.push(make_x(parse_operand(rest, line_no)));
    } else if (head == "reset") {
      circ.push(make_reset(parse_operand(rest, line_no)));
    } else if (head == "cx") {
      auto comma = rest.find(',');
      if (comma == std::string::npos)
        throw ParseError("qasm line " + std::to_string(line_no) +
                         ": cx needs two operands");
      circ.push(make_cnot(parse_operand(rest.substr(0, comma), line_no),
                          parse_operand(rest.substr(comma + 1), line_no)));
    } else if (head.rfind("rx(", 0) == 0 || head.rfind("rz(", 0) == 0) {
      std::string full = head + rest;
      auto close = full.find(')');
      if (close == std::string::npos)
        throw ParseError("qasm line " + std::to_string(line_no) +
                         ": unterminated angle");
      double angle = std::stod(full.substr(3, close - 3));
      int q = parse_operand(full.substr(close + 1), line_no);
      circ.push(head[1] == 'x' ? make_rx(q, angle)
                               : Gate{GateKind::RZ, q, -1, {{-1, angle}}});
    } else {
      throw ParseError("qasm line " + std::to_string(line_no) +
                       ": unsupported statement \"" + head + "\"");
    }
  }
  return circ;
}

}  // namespace paulic

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>

#include "paulic/circuit.hpp"

namespace paulic {

/// OpenQASM 2.0 subset {h, x, rx, rz, cx, reset}. SWAPs are decomposed
/// first and symbolic angles bound against `thetas`.
std::string emit_qasm(const Circuit& circ, std::span<const double> thetas = {});

/// Parses the subset emitted above; angles come back as constants.
Circuit parse_qasm(const std::string& text);

}  // namespace paulic

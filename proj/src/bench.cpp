// SPDX-License-Identifier: Apache-2.0
#include "paulic/bench.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "paulic/errors.hpp"

namespace paulic {

namespace {

PauliString make_string(int n, const std::vector<std::pair<int, PauliOp>>& ops,
                        int angle_ref) {
  PauliString ps;
  ps.ops.assign(static_cast<std::size_t>(n), PauliOp::I);
  ps.angle_ref = angle_ref;
  for (auto [q, op] : ops) ps.ops[static_cast<std::size_t>(q)] = op;
  return ps;
}

void pad_z(PauliString& ps, int lo, int hi) {
  for (int q = lo + 1; q < hi; ++q)
    ps.ops[static_cast<std::size_t>(q)] = PauliOp::Z;
}

Block single_excitation(int n, int p, int q, int angle_ref) {
  Block b;
  for (PauliOp op : {PauliOp::X, PauliOp::Y}) {
    PauliString ps = make_string(n, {{p, op}, {q, op}}, angle_ref);
    pad_z(ps, p, q);
    b.strings.push_back(std::move(ps));
  }
  return b;
}

Block double_excitation(int n, const std::vector<int>& orbs, int angle_ref) {
  // The eight odd-Y-count patterns of the JW double excitation.
  static constexpr const char* kPatterns[8] = {"XXXY", "XXYX", "XYXX", "YXXX",
                                               "XYYY", "YXYY", "YYXY", "YYYX"};
  Block b;
  for (const char* pat : kPatterns) {
    std::vector<std::pair<int, PauliOp>> ops;
    for (int i = 0; i < 4; ++i)
      ops.emplace_back(orbs[static_cast<std::size_t>(i)],
                       pat[i] == 'X' ? PauliOp::X : PauliOp::Y);
    PauliString ps = make_string(n, ops, angle_ref);
    pad_z(ps, orbs[0], orbs[1]);
    pad_z(ps, orbs[2], orbs[3]);
    b.strings.push_back(std::move(ps));
  }
  return b;
}

Kernel edges_to_kernel(int n, const std::vector<std::pair<int, int>>& edges) {
  Kernel k;
  k.n_qubits = n;
  int angle_ref = 0;
  for (auto [u, v] : edges) {
    Block b;
    b.strings.push_back(
        make_string(n, {{u, PauliOp::Z}, {v, PauliOp::Z}}, angle_ref++));
    k.blocks.push_back(std::move(b));
  }
  build_ir(k);
  return k;
}

}  // namespace

Kernel gen_ucc(int n_qubits, int n_blocks, std::uint64_t seed) {
  if (n_qubits < 4) throw ParseError("gen_ucc requires n_qubits >= 4");
  std::mt19937_64 rng(seed);
  Kernel k;
  k.n_qubits = n_qubits;
  std::uniform_int_distribution<int> orbital(0, n_qubits - 1);
  std::bernoulli_distribution is_single(0.5);
  for (int b = 0; b < n_blocks; ++b) {
    std::set<int> orbs;
    int want = is_single(rng) ? 2 : 4;
    while (static_cast<int>(orbs.size()) < want) orbs.insert(orbital(rng));
    std::vector<int> sorted(orbs.begin(), orbs.end());
    k.blocks.push_back(want == 2
                           ? single_excitation(n_qubits, sorted[0], sorted[1], b)
                           : double_excitation(n_qubits, sorted, b));
  }
  build_ir(k);
  return k;
}

Kernel gen_qaoa_random(int n, double density, std::uint64_t seed) {
  if (n < 3) throw ParseError("gen_qaoa_random requires n >= 3");
  if (density <= 0.0 || density > 1.0)
    throw ParseError("graph density must lie in (0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(density);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) edges.emplace_back(u, v);
  if (edges.empty()) edges.emplace_back(0, 1);  // degenerate draw
  return edges_to_kernel(n, edges);
}

Kernel gen_qaoa_regular(int n, int degree, std::uint64_t seed) {
  if (degree < 1 || n <= degree)
    throw ParseError("regular graph requires n > degree >= 1");
  if ((static_cast<long>(n) * degree) % 2 != 0)
    throw ParseError("regular graph infeasible: n*degree is odd");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int d = 0; d < degree; ++d) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> edge_set;
    bool ok = true;
    for (std::size_t i = 0; ok && i < stubs.size(); i += 2) {
      int u = std::min(stubs[i], stubs[i + 1]);
      int v = std::max(stubs[i], stubs[i + 1]);
      if (u == v || !edge_set.emplace(u, v).second) ok = false;
    }
    if (!ok) continue;
    return edges_to_kernel(
        n, std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end()));
  }
  throw ParseError("regular graph sampling did not converge");
}

}  // namespace paulic

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace paulic {

/// Undirected physical-qubit connectivity. Immutable after construction.
struct CouplingGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

CouplingGraph make_linear(int n);
CouplingGraph make_grid(int rows, int cols);
/// Heavy-hexagon lattice for odd distance d >= 3: (d+1)/2 rows of length
/// 4d-1 joined by d-1 rung qubits per gap. d=5 gives 65 nodes, degree <= 3.
CouplingGraph make_heavy_hex(int distance);
/// Diagonal-grid lattice, degree <= 4; 8x8 gives the 64-qubit layout.
CouplingGraph make_sycamore(int rows, int cols);

/// "n <count>" header then one "u v" edge per line.
CouplingGraph load_coupling(std::istream& in);
std::string coupling_to_text(const CouplingGraph& g);

/// Builder by CLI name: linear|grid|heavyhex|sycamore (with optional
/// ":<dims>"), otherwise treated as a path to a coupling file.
CouplingGraph topology_by_name(const std::string& name, int min_qubits);

/// Minimal-length path from a to b whose interior avoids `excluded`;
/// deterministic lexicographically-smallest tie-break. Throws RoutingError
/// if no such path exists.
std::vector<int> shortest_path(const CouplingGraph& g, int a, int b,
                               const std::vector<char>& excluded = {});

/// Path length (edge count) of shortest_path, or -1 if disconnected.
int excluded_distance(const CouplingGraph& g, int a, int b,
                      const std::vector<char>& excluded);

/// Plain BFS distances from src (no exclusions).
std::vector<int> bfs_distances(const CouplingGraph& g, int src);

enum class Liveness : std::uint8_t { Untouched, InUse, ReleasedZero };

/// Logical-to-physical placement plus liveness of free physical qubits.
/// Free qubits in state Untouched or ReleasedZero are guaranteed |0>.
class Mapping {
 public:
  Mapping() = default;
  Mapping(int n_logical, int n_phys);

  /// Logical qubit i placed at the i-th node of a breadth-first traversal
  /// of g from node 0 (neighbors in ascending order).
  static Mapping identity_bfs(const CouplingGraph& g, int n_logical);
  static Mapping from_vector(const std::vector<int>& log2phys, int n_phys);

  int n_logical() const { return static_cast<int>(log2phys_.size()); }
  int n_phys() const { return static_cast<int>(phys2log_.size()); }
  int phys_of(int q) const { return log2phys_[q]; }
  /// Logical occupant of a physical node, or -1 if free.
  int logical_at(int p) const { return phys2log_[p]; }
  bool zero_state(int p) const {
    return phys2log_[p] < 0 && live_[p] != Liveness::InUse;
  }
  Liveness liveness(int p) const { return live_[p]; }
  void mark_released(int p);

  void apply_swap(int pa, int pb);

  const std::vector<int>& log2phys() const { return log2phys_; }

 private:
  std::vector<int> log2phys_;
  std::vector<int> phys2log_;
  std::vector<Liveness> live_;
};

/// Physical node minimizing the summed shortest distance to the current
/// placements of `roots` (ties: smallest index), plus one shortest path
/// per root toward the center (empty when the root already sits there).
std::pair<int, std::vector<std::vector<int>>> find_center(
    const CouplingGraph& g, const Mapping& mapping,
    const std::vector<int>& roots);

}  // namespace paulic

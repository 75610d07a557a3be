// SPDX-License-Identifier: Apache-2.0
#include "paulic/synth.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numbers>
#include <set>
#include <tuple>

#include "paulic/errors.hpp"

namespace paulic {

namespace {

constexpr double kHalfPi = std::numbers::pi_v<double> / 2.0;

Gate inverted(Gate g) {
  // H, X, CNOT and SWAP are self-inverse; rotations negate their angle.
  if (g.kind == GateKind::RX || g.kind == GateKind::RZ)
    for (AngleTerm& t : g.angle) t.coeff = -t.coeff;
  return g;
}

/// CNOT(path[0], path[k]) across non-participating interior nodes using the
/// four-CNOT long-range identity; interior states are preserved exactly.
void lr_cnot(std::vector<Gate>& out, const std::vector<int>& path) {
  if (path.size() == 2) {
    out.push_back(make_cnot(path[0], path[1]));
    return;
  }
  std::vector<int> head(path.begin(), path.end() - 1);
  int mid = path[path.size() - 2];
  int last = path.back();
  lr_cnot(out, head);
  out.push_back(make_cnot(mid, last));
  lr_cnot(out, head);
  out.push_back(make_cnot(mid, last));
}

int node_depth(const SynthesisTree& t, int id) {
  int d = 0;
  for (int cur = id; t.nodes.at(cur).parent >= 0; cur = t.nodes.at(cur).parent)
    ++d;
  return d;
}

std::vector<int> path_to_root(const SynthesisTree& t, int id) {
  std::vector<int> p{id};
  while (t.nodes.at(p.back()).parent >= 0)
    p.push_back(t.nodes.at(p.back()).parent);
  return p;
}

/// Undirected tree path from a to b, endpoints inclusive.
std::vector<int> tree_path(const SynthesisTree& t, int a, int b) {
  std::vector<int> up_a = path_to_root(t, a);
  std::vector<int> up_b = path_to_root(t, b);
  std::set<int> on_b(up_b.begin(), up_b.end());
  std::vector<int> path;
  int lca = -1;
  for (int id : up_a) {
    path.push_back(id);
    if (on_b.count(id)) { lca = id; break; }
  }
  std::vector<int> tail;
  for (int id : up_b) {
    if (id == lca) break;
    tail.push_back(id);
  }
  path.insert(path.end(), tail.rbegin(), tail.rend());
  return path;
}

/// Appends one Pauli gadget for `ps` built from the synthesis tree:
/// basis changes, CNOT cascade into the minimum-depth participant, the RZ
/// rotation, then the exact mirror of the first half.
void emit_gadget(std::vector<Gate>& out, const SynthesisTree& tree,
                 const PauliString& ps) {
  auto op_of = [&](int id) {
    return id < tree.n_logical ? ps.ops[static_cast<std::size_t>(id)]
                               : PauliOp::Z;  // bridge ancillas act as Z
  };

  // A data node participates when its operator is non-I; an ancilla
  // participates when its subtree contains a participating data node.
  std::set<int> participants;
  for (const auto& [id, node] : tree.nodes)
    if (id < tree.n_logical && ps.ops[static_cast<std::size_t>(id)] != PauliOp::I)
      participants.insert(id);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [id, node] : tree.nodes)
      if (participants.count(id) && node.parent >= tree.n_logical &&
          !participants.count(node.parent)) {
        participants.insert(node.parent);
        grew = true;
      }
  }
  if (participants.empty()) return;  // identity up to global phase

  int target = -1, target_depth = std::numeric_limits<int>::max();
  for (int id : participants) {
    int d = node_depth(tree, id);
    if (d < target_depth || (d == target_depth && id < target)) {
      target = id;
      target_depth = d;
    }
  }

  // Cascade edges: each participant sends its parity to the next
  // participant toward the target, deepest chains first.
  struct Hop {
    int len;
    int id;
    std::vector<int> phys;  // id .. next participant, interior skipped nodes
  };
  std::vector<Hop> hops;
  for (int id : participants) {
    if (id == target) continue;
    std::vector<int> path = tree_path(tree, id, target);
    std::vector<int> phys{tree.nodes.at(id).phys};
    for (std::size_t i = 1; i < path.size(); ++i) {
      phys.push_back(tree.nodes.at(path[i]).phys);
      if (participants.count(path[i])) break;
    }
    hops.push_back({static_cast<int>(path.size()) - 1, id, std::move(phys)});
  }
  std::sort(hops.begin(), hops.end(), [](const Hop& a, const Hop& b) {
    return a.len != b.len ? a.len > b.len : a.id < b.id;
  });

  std::vector<Gate> first_half;
  for (int id : participants) {
    int phys = tree.nodes.at(id).phys;
    switch (op_of(id)) {
      case PauliOp::X: first_half.push_back(make_h(phys)); break;
      case PauliOp::Y: first_half.push_back(make_rx(phys, kHalfPi)); break;
      default: break;
    }
  }
  for (const Hop& hop : hops) lr_cnot(first_half, hop.phys);

  out.insert(out.end(), first_half.begin(), first_half.end());
  out.push_back(
      make_rz(tree.nodes.at(target).phys, ps.angle_ref, ps.coefficient));
  for (auto it = first_half.rbegin(); it != first_half.rend(); ++it)
    out.push_back(inverted(*it));
}

/// SWAPs the occupant of path.front() along the whole path onto
/// path.back().
std::vector<Gate> route_onto(Mapping& mapping, const std::vector<int>& path) {
  std::vector<Gate> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    out.push_back(make_swap(path[i], path[i + 1]));
    mapping.apply_swap(path[i], path[i + 1]);
  }
  return out;
}

std::vector<int> sorted_roots(const Block& block, std::vector<int>& leaves) {
  std::vector<int> roots(block.root_set.begin(), block.root_set.end());
  leaves.assign(block.leaf_set.begin(), block.leaf_set.end());
  if (roots.empty()) {
    if (leaves.empty())
      throw SynthesisError("cannot synthesize a block with empty support");
    // Uniform blocks have no root qubits; promote the smallest leaf so the
    // rotation has a home.
    roots.push_back(leaves.front());
    leaves.erase(leaves.begin());
  }
  return roots;
}

/// Chain-shaped logical tree: leaves hang off the largest root in one
/// chain (maximum adjacent-string cancellation), roots chain down to the
/// smallest root, which takes the rotation.
SynthesisTree chain_tree(const Block& block, int n_logical,
                         const Mapping* mapping) {
  std::vector<int> leaves;
  std::vector<int> roots = sorted_roots(block, leaves);
  SynthesisTree tree;
  tree.n_logical = n_logical;
  auto pos = [&](int q) { return mapping ? mapping->phys_of(q) : q; };
  tree.root = roots.front();
  tree.nodes[roots.front()] = {pos(roots.front()), -1, false};
  for (std::size_t i = 1; i < roots.size(); ++i)
    tree.nodes[roots[i]] = {pos(roots[i]), roots[i - 1], false};
  int prev = roots.back();
  for (int q : leaves) {
    tree.nodes[q] = {pos(q), prev, false};
    prev = q;
  }
  return tree;
}

/// Chain edges from the deepest node upward: (child, parent) pairs.
std::vector<std::pair<int, int>> chain_edges(const SynthesisTree& tree) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [id, node] : tree.nodes)
    if (node.parent >= 0) edges.emplace_back(id, node.parent);
  std::sort(edges.begin(), edges.end(),
            [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
              return node_depth(tree, a.first) > node_depth(tree, b.first);
            });
  return edges;
}

void refresh_phys(SynthesisTree& tree, const Mapping& mapping) {
  for (auto& [id, node] : tree.nodes)
    if (!node.ancilla) node.phys = mapping.phys_of(id);
}

/// Relocates an entire chain onto a simple hardware path. Used when the
/// cheap per-edge repair loop stalls: repairs chase moving parents and can
/// trade two qubits forever, whereas this assigns every member a static
/// target first. `members` is ordered root-first; afterwards consecutive
/// members occupy adjacent physical nodes.
std::vector<Gate> embed_chain(const CouplingGraph& g, Mapping& mapping,
                              const std::vector<int>& members) {
  const std::size_t k = members.size();
  std::vector<int> target;
  std::vector<char> used(static_cast<std::size_t>(g.n), 0);
  auto dfs = [&](auto&& self, int v) -> bool {
    target.push_back(v);
    used[static_cast<std::size_t>(v)] = 1;
    if (target.size() == k) return true;
    for (int w : g.adj[static_cast<std::size_t>(v)])
      if (!used[static_cast<std::size_t>(w)] && self(self, w)) return true;
    target.pop_back();
    used[static_cast<std::size_t>(v)] = 0;
    return false;
  };
  if (!dfs(dfs, mapping.phys_of(members.front()))) {
    for (int s = 0; s < g.n && target.empty(); ++s) {
      std::fill(used.begin(), used.end(), 0);
      dfs(dfs, s);
    }
    if (target.empty())
      throw RoutingError("no simple hardware path fits a chain of " +
                         std::to_string(k) + " qubits");
  }

  std::vector<Gate> out;
  for (int pass = 0;; ++pass) {
    if (pass >= 100) throw RoutingError("chain embedding did not converge");
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      int cur = mapping.phys_of(members[i]);
      if (cur == target[static_cast<std::size_t>(i)]) continue;
      ok = false;
      std::vector<char> placed(static_cast<std::size_t>(g.n), 0);
      for (std::size_t j = 0; j < i; ++j)
        placed[static_cast<std::size_t>(target[j])] = 1;
      std::vector<int> path;
      try {
        path = shortest_path(g, cur, target[i], placed);
      } catch (const RoutingError&) {
        path = shortest_path(g, cur, target[i]);
      }
      std::vector<Gate> swaps = route_swap(mapping, path);
      out.insert(out.end(), swaps.begin(), swaps.end());
      // route_swap stops adjacent; take the final hop onto the target.
      int at = mapping.phys_of(members[i]);
      if (at != target[i]) {
        out.push_back(make_swap(at, target[i]));
        mapping.apply_swap(at, target[i]);
      }
    }
    if (ok) break;
  }
  return out;
}

}  // namespace

double score(int dist, bool parent_is_root, int num_strings, double w) {
  return (dist - 1) * w + (parent_is_root ? 2.0 * num_strings : 2.0);
}

std::vector<Gate> route_swap(Mapping& mapping, const std::vector<int>& path) {
  std::vector<Gate> out;
  if (path.size() < 3) return out;  // already adjacent (or on target)
  for (std::size_t i = 0; i + 2 < path.size(); ++i) {
    out.push_back(make_swap(path[i], path[i + 1]));
    mapping.apply_swap(path[i], path[i + 1]);
  }
  return out;
}

std::vector<Gate> bridge_cnot(int control, int target,
                              const std::vector<int>& ancillas) {
  if (ancillas.empty()) return {make_cnot(control, target)};
  std::vector<Gate> out{make_cnot(control, ancillas.front())};
  for (std::size_t i = 0; i + 1 < ancillas.size(); ++i)
    out.push_back(make_cnot(ancillas[i], ancillas[i + 1]));
  out.push_back(make_cnot(ancillas.back(), target));
  return out;
}

std::vector<Gate> bridged_cnot_with_restore(int control, int target,
                                            const std::vector<int>& ancillas) {
  std::vector<Gate> out = bridge_cnot(control, target, ancillas);
  // Undo the opening chain except the hop onto the target; every ancilla
  // returns to |0>.
  for (std::size_t i = out.size() - 1; i-- > 0;) out.push_back(out[i]);
  return out;
}

RouteChoice choose_swap_or_bridge(
    const CouplingGraph& g, const Mapping& mapping, int qa, int qb,
    const std::vector<int>& path,
    const std::vector<std::pair<int, int>>& lookahead_pairs) {
  for (std::size_t i = 1; i + 1 < path.size(); ++i)
    if (!mapping.zero_state(path[i])) return RouteChoice::Swap;
  if (lookahead_pairs.empty()) return RouteChoice::Bridge;

  Mapping sim = mapping;
  route_swap(sim, path);
  int served = 0;
  for (auto [x, y] : lookahead_pairs) {
    if (x != qa && x != qb && y != qa && y != qb) continue;
    int now = excluded_distance(g, mapping.phys_of(x), mapping.phys_of(y), {});
    int then = excluded_distance(g, sim.phys_of(x), sim.phys_of(y), {});
    if (then >= 0 && (now < 0 || then < now)) ++served;
  }
  return served >= 2 ? RouteChoice::Swap : RouteChoice::Bridge;
}

BlockSynthesis synthesize_block(
    const CouplingGraph& g, Mapping& mapping, const Block& block,
    const SynthConfig& cfg,
    const std::vector<std::pair<int, int>>& lookahead_pairs) {
  BlockSynthesis out;
  const int n_logical = mapping.n_logical();
  const int num_ps = static_cast<int>(block.strings.size());
  out.tree.n_logical = n_logical;

  std::vector<int> leaves;
  std::vector<int> roots = sorted_roots(block, leaves);
  std::set<int> root_ids(roots.begin(), roots.end());

  // Two-root interaction with no leaf section: bridge through a free
  // |0> chain instead of SWAPping when the relocation has no reuse value.
  if (cfg.bridging && leaves.empty() && roots.size() == 2) {
    int pa = mapping.phys_of(roots[0]);
    int pb = mapping.phys_of(roots[1]);
    if (!g.has_edge(pa, pb)) {
      std::vector<int> path = shortest_path(g, pa, pb);
      if (choose_swap_or_bridge(g, mapping, roots[0], roots[1], path,
                                lookahead_pairs) == RouteChoice::Bridge) {
        out.tree.root = roots[1];
        out.tree.nodes[roots[1]] = {pb, -1, false};
        int prev = roots[1];
        for (std::size_t i = path.size() - 1; i-- > 1;) {
          int anc = n_logical + static_cast<int>(out.tree.nodes.size()) - 1;
          out.tree.nodes[anc] = {path[i], prev, true};
          prev = anc;
        }
        out.tree.nodes[roots[0]] = {pa, prev, false};
        ++out.bridges;
        for (const PauliString& ps : block.strings)
          emit_gadget(out.gates, out.tree, ps);
        for (const auto& [id, node] : out.tree.nodes)
          if (node.ancilla) mapping.mark_released(node.phys);
        return out;
      }
    }
  }

  // Phase 1: cluster the root qubits around the 1-median center. The
  // closest root lands on the center itself; the rest stop adjacent to
  // the cluster, never swapping through it.
  auto [center, center_paths] = find_center(g, mapping, roots);
  (void)center_paths;
  std::vector<char> in_cluster(static_cast<std::size_t>(g.n), 0);
  std::vector<int> remaining = roots;
  {
    std::vector<int> cdist = bfs_distances(g, center);
    auto first = std::min_element(
        remaining.begin(), remaining.end(), [&](int a, int b) {
          return std::tuple(cdist[mapping.phys_of(a)], a) <
                 std::tuple(cdist[mapping.phys_of(b)], b);
        });
    int pos = mapping.phys_of(*first);
    if (pos != center) {
      std::vector<Gate> swaps = route_onto(mapping, shortest_path(g, pos, center));
      out.gates.insert(out.gates.end(), swaps.begin(), swaps.end());
    }
    in_cluster[static_cast<std::size_t>(center)] = 1;
    remaining.erase(first);
  }
  while (!remaining.empty()) {
    int best_d = -1, best_root = -1, best_target = -1;
    for (int r : remaining) {
      for (int c = 0; c < g.n; ++c) {
        if (!in_cluster[static_cast<std::size_t>(c)]) continue;
        std::vector<char> excl = in_cluster;
        excl[static_cast<std::size_t>(c)] = 0;
        int d = excluded_distance(g, mapping.phys_of(r), c, excl);
        if (d < 0) continue;
        if (best_d < 0 || std::tuple(d, r, c) <
                              std::tuple(best_d, best_root, best_target)) {
          best_d = d;
          best_root = r;
          best_target = c;
        }
      }
    }
    if (best_d < 0)
      throw RoutingError("root clustering blocked: no admissible path");
    std::vector<char> excl = in_cluster;
    excl[static_cast<std::size_t>(best_target)] = 0;
    std::vector<Gate> swaps = route_swap(
        mapping,
        shortest_path(g, mapping.phys_of(best_root), best_target, excl));
    out.gates.insert(out.gates.end(), swaps.begin(), swaps.end());
    in_cluster[static_cast<std::size_t>(mapping.phys_of(best_root))] = 1;
    std::erase(remaining, best_root);
  }

  // Root tree: breadth-first spanning tree of the cluster from the center.
  {
    std::vector<int> parent_phys(static_cast<std::size_t>(g.n), -2);
    std::deque<int> queue{center};
    parent_phys[static_cast<std::size_t>(center)] = -1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.adj[u])
        if (in_cluster[static_cast<std::size_t>(v)] &&
            parent_phys[static_cast<std::size_t>(v)] == -2) {
          parent_phys[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        }
    }
    for (int p = 0; p < g.n; ++p) {
      if (!in_cluster[static_cast<std::size_t>(p)]) continue;
      int pp = parent_phys[static_cast<std::size_t>(p)];
      if (pp == -2) throw RoutingError("root cluster is not connected");
      int q = mapping.logical_at(p);
      out.tree.nodes[q] = {p, pp < 0 ? -1 : mapping.logical_at(pp), false};
      if (pp < 0) out.tree.root = q;
    }
  }

  // Phase 2: attach leaves greedily by score; bridge an attachment when
  // its whole path interior is a fresh |0> chain.
  std::vector<char> placed = in_cluster;
  std::set<int> unplaced(leaves.begin(), leaves.end());
  int next_anc = n_logical;
  while (!unplaced.empty()) {
    double best_score = 0.0;
    int best_leaf = -1, best_parent = -1, best_d = -1;
    for (int qn : unplaced) {
      for (const auto& [qm, node] : out.tree.nodes) {
        if (node.ancilla) continue;
        std::vector<char> excl = placed;
        excl[static_cast<std::size_t>(node.phys)] = 0;
        int d = excluded_distance(g, mapping.phys_of(qn), node.phys, excl);
        if (d < 0) continue;
        double s = score(d, root_ids.count(qm) != 0, num_ps, cfg.swap_weight);
        if (best_leaf < 0 || std::tuple(s, qn, qm) <
                                 std::tuple(best_score, best_leaf, best_parent)) {
          best_score = s;
          best_leaf = qn;
          best_parent = qm;
          best_d = d;
        }
      }
    }
    if (best_leaf < 0)
      throw RoutingError("leaf attachment blocked: no admissible path");
    int parent_phys = out.tree.nodes.at(best_parent).phys;
    std::vector<char> excl = placed;
    excl[static_cast<std::size_t>(parent_phys)] = 0;
    std::vector<int> path =
        shortest_path(g, mapping.phys_of(best_leaf), parent_phys, excl);
    bool bridge = cfg.bridging && best_d >= 2;
    for (std::size_t i = 1; bridge && i + 1 < path.size(); ++i)
      bridge = mapping.zero_state(path[i]);
    if (bridge) {
      int prev = best_parent;
      for (std::size_t i = path.size() - 1; i-- > 1;) {
        out.tree.nodes[next_anc] = {path[i], prev, true};
        placed[static_cast<std::size_t>(path[i])] = 1;
        prev = next_anc++;
      }
      out.tree.nodes[best_leaf] = {path.front(), prev, false};
      placed[static_cast<std::size_t>(path.front())] = 1;
      ++out.bridges;
    } else {
      std::vector<Gate> swaps = route_swap(mapping, path);
      out.gates.insert(out.gates.end(), swaps.begin(), swaps.end());
      int pos = mapping.phys_of(best_leaf);
      out.tree.nodes[best_leaf] = {pos, best_parent, false};
      placed[static_cast<std::size_t>(pos)] = 1;
    }
    unplaced.erase(best_leaf);
  }

  refresh_phys(out.tree, mapping);
  for (const PauliString& ps : block.strings)
    emit_gadget(out.gates, out.tree, ps);
  for (const auto& [id, node] : out.tree.nodes)
    if (node.ancilla) mapping.mark_released(node.phys);
  out.swaps = static_cast<int>(std::count_if(
      out.gates.begin(), out.gates.end(),
      [](const Gate& gate) { return gate.kind == GateKind::SWAP; }));
  return out;
}

BlockSynthesis synthesize_single_leaf(const CouplingGraph& g, Mapping& mapping,
                                      const Block& block) {
  BlockSynthesis out;
  out.tree = chain_tree(block, mapping.n_logical(), &mapping);
  auto edges = chain_edges(out.tree);
  // Deepest edge first; move the parent adjacent to its child, repairing
  // any adjacency a later move broke.
  for (int pass = 0;; ++pass) {
    if (pass >= 10) {
      std::vector<int> members{out.tree.root};
      for (auto it = edges.rbegin(); it != edges.rend(); ++it)
        members.push_back(it->first);
      std::vector<Gate> swaps = embed_chain(g, mapping, members);
      out.gates.insert(out.gates.end(), swaps.begin(), swaps.end());
      break;
    }
    bool ok = true;
    // See synthesize_naive_chain: keep satisfied members in place.
    std::vector<char> fixed(static_cast<std::size_t>(g.n), 0);
    for (auto [child, parent] : edges) {
      int pc = mapping.phys_of(child), pp = mapping.phys_of(parent);
      if (!g.has_edge(pc, pp)) {
        ok = false;
        std::vector<int> path;
        try {
          path = shortest_path(g, pp, pc, fixed);
        } catch (const RoutingError&) {
          path = shortest_path(g, pp, pc);
        }
        std::vector<Gate> swaps = route_swap(mapping, path);
        out.gates.insert(out.gates.end(), swaps.begin(), swaps.end());
      }
      fixed[static_cast<std::size_t>(mapping.phys_of(child))] = 1;
      fixed[static_cast<std::size_t>(mapping.phys_of(parent))] = 1;
    }
    if (ok) break;
  }
  refresh_phys(out.tree, mapping);
  for (const PauliString& ps : block.strings)
    emit_gadget(out.gates, out.tree, ps);
  out.swaps = static_cast<int>(std::count_if(
      out.gates.begin(), out.gates.end(),
      [](const Gate& gate) { return gate.kind == GateKind::SWAP; }));
  return out;
}

BlockSynthesis synthesize_naive_chain(const CouplingGraph& g, Mapping& mapping,
                                      const Block& block) {
  BlockSynthesis out;
  const int n_logical = mapping.n_logical();
  for (const PauliString& ps : block.strings) {
    std::vector<int> support;
    for (int q = 0; q < n_logical; ++q)
      if (ps.ops[static_cast<std::size_t>(q)] != PauliOp::I) support.push_back(q);
    if (support.empty()) continue;

    // Index-ascending chain rooted at the highest-index qubit.
    SynthesisTree tree;
    tree.n_logical = n_logical;
    tree.root = support.back();
    for (std::size_t i = 0; i < support.size(); ++i)
      tree.nodes[support[i]] = {mapping.phys_of(support[i]),
                                i + 1 < support.size() ? support[i + 1] : -1,
                                false};
    auto edges = chain_edges(tree);
    std::reverse(edges.begin(), edges.end());  // top of the chain first
    for (int pass = 0;; ++pass) {
      if (pass >= 10) {
        std::vector<int> members{tree.root};
        for (auto [child, parent] : edges) members.push_back(child);
        std::vector<Gate> swaps = embed_chain(g, mapping, members);
        out.gates.insert(out.gates.end(), swaps.begin(), swaps.end());
        break;
      }
      bool ok = true;
      // Chain members whose edge is already satisfied must not be moved
      // again, or repairs can oscillate; prefer paths around them.
      std::vector<char> fixed(static_cast<std::size_t>(g.n), 0);
      for (auto [child, parent] : edges) {
        int pc = mapping.phys_of(child), pp = mapping.phys_of(parent);
        if (!g.has_edge(pc, pp)) {
          ok = false;
          std::vector<int> path;
          try {
            path = shortest_path(g, pc, pp, fixed);
          } catch (const RoutingError&) {
            path = shortest_path(g, pc, pp);
          }
          std::vector<Gate> swaps = route_swap(mapping, path);
          out.gates.insert(out.gates.end(), swaps.begin(), swaps.end());
        }
        fixed[static_cast<std::size_t>(mapping.phys_of(child))] = 1;
        fixed[static_cast<std::size_t>(mapping.phys_of(parent))] = 1;
      }
      if (ok) break;
    }
    refresh_phys(tree, mapping);
    emit_gadget(out.gates, tree, ps);
    out.tree = tree;
  }
  out.swaps = static_cast<int>(std::count_if(
      out.gates.begin(), out.gates.end(),
      [](const Gate& gate) { return gate.kind == GateKind::SWAP; }));
  return out;
}

Circuit synthesize_max_cancel(const Block& block, int n_qubits) {
  SynthesisTree tree = chain_tree(block, n_qubits, nullptr);
  Circuit circ;
  circ.n_qubits = n_qubits;
  for (const PauliString& ps : block.strings)
    emit_gadget(circ.gates, tree, ps);
  return circ;
}

}  // namespace paulic

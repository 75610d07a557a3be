// SPDX-License-Identifier: Apache-2.0
#include "paulic/topology.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

#include "paulic/errors.hpp"

namespace paulic {

void CouplingGraph::add_edge(int u, int v) {
  if (u == v) throw ParseError("self-loop edge " + std::to_string(u));
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") out of range");
  if (has_edge(u, v)) return;
  adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
  adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

bool CouplingGraph::has_edge(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::pair<int, int>> CouplingGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

CouplingGraph empty_graph(int n) {
  if (n < 1) throw ParseError("topology size must be >= 1");
  CouplingGraph g;
  g.n = n;
  g.adj.resize(n);
  return g;
}

}  // namespace

CouplingGraph make_linear(int n) {
  CouplingGraph g = empty_graph(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

CouplingGraph make_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw ParseError("grid dimensions must be >= 1");
  CouplingGraph g = empty_graph(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

CouplingGraph make_heavy_hex(int distance) {
  if (distance < 3 || distance % 2 == 0)
    throw ParseError("heavy-hex distance must be odd and >= 3");
  const int rows = (distance + 1) / 2;
  const int cols = 4 * distance - 1;
  // Row qubits first, then rung qubits gap by gap.
  CouplingGraph g = empty_graph(rows * cols + (rows - 1) * (distance - 1));
  auto row_id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) g.add_edge(row_id(r, c), row_id(r, c + 1));
  int rung = rows * cols;
  for (int gap = 0; gap + 1 < rows; ++gap) {
    int start = (gap % 2 == 0) ? 2 : 4;
    int count = 0;
    for (int c = start; c < cols - 1 && count < distance - 1; c += 4, ++count) {
      g.add_edge(row_id(gap, c), rung);
      g.add_edge(rung, row_id(gap + 1, c));
      ++rung;
    }
  }
  return g;
}

CouplingGraph make_sycamore(int rows, int cols) {
  if (rows < 1 || cols < 1)
    throw ParseError("sycamore dimensions must be >= 1");
  CouplingGraph g = empty_graph(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      g.add_edge(id(r, c), id(r + 1, c));
      int diag = (r % 2 == 0) ? c + 1 : c - 1;
      if (diag >= 0 && diag < cols) g.add_edge(id(r, c), id(r + 1, diag));
    }
  return g;
}

CouplingGraph load_coupling(std::istream& in) {
  std::string tok;
  int n = 0;
  if (!(in >> tok) || tok != "n" || !(in >> n))
    throw ParseError("coupling file must start with \"n <count>\"");
  CouplingGraph g = empty_graph(n);
  int u, v;
  while (in >> u >> v) g.add_edge(u, v);
  return g;
}

std::string coupling_to_text(const CouplingGraph& g) {
  std::ostringstream out;
  out << "n " << g.n << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

CouplingGraph topology_by_name(const std::string& name, int min_qubits) {
  std::string base = name;
  std::string dims;
  if (auto pos = name.find(':'); pos != std::string::npos) {
    base = name.substr(0, pos);
    dims = name.substr(pos + 1);
  }
  auto parse_two = [&](int def_a, int def_b) {
    if (dims.empty()) return std::pair<int, int>{def_a, def_b};
    auto x = dims.find('x');
    if (x == std::string::npos) throw ParseError("expected <rows>x<cols>");
    return std::pair<int, int>{std::stoi(dims.substr(0, x)),
                               std::stoi(dims.substr(x + 1))};
  };
  if (base == "linear")
    return make_linear(dims.empty() ? min_qubits : std::stoi(dims));
  if (base == "grid") {
    int side = 1;
    while (side * side < min_qubits) ++side;
    auto [r, c] = parse_two(side, side);
    return make_grid(r, c);
  }
  if (base == "heavyhex") return make_heavy_hex(dims.empty() ? 5 : std::stoi(dims));
  if (base == "sycamore") {
    auto [r, c] = parse_two(8, 8);
    return make_sycamore(r, c);
  }
  std::ifstream file(name);
  if (!file) throw ParseError("unknown topology \"" + name + "\"");
  return load_coupling(file);
}

std::vector<int> bfs_distances(const CouplingGraph& g, int src) {
  std::vector<int> dist(g.n, -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

namespace {

// Distances to b on the exclusion-filtered graph; a and b always passable.
std::vector<int> filtered_dist_to(const CouplingGraph& g, int a, int b,
                                  const std::vector<char>& excluded) {
  std::vector<int> dist(g.n, -1);
  std::deque<int> queue{b};
  dist[b] = 0;
  auto blocked = [&](int v) {
    return v != a && v != b && !excluded.empty() && excluded[v];
  };
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adj[u])
      if (dist[v] < 0 && !blocked(v)) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace

std::vector<int> shortest_path(const CouplingGraph& g, int a, int b,
                               const std::vector<char>& excluded) {
  if (a == b) throw RoutingError("shortest_path requires distinct endpoints");
  std::vector<int> dist = filtered_dist_to(g, a, b, excluded);
  if (dist[a] < 0)
    throw RoutingError("no path from " + std::to_string(a) + " to " +
                       std::to_string(b) + " under exclusions");
  // Greedy descent toward b picking the smallest admissible neighbor gives
  // the lexicographically smallest node sequence among shortest paths.
  std::vector<int> path{a};
  int cur = a;
  while (cur != b) {
    for (int v : g.adj[cur])
      if (dist[v] == dist[cur] - 1) {
        path.push_back(v);
        cur = v;
        break;
      }
  }
  return path;
}

int excluded_distance(const CouplingGraph& g, int a, int b,
                      const std::vector<char>& excluded) {
  if (a == b) return 0;
  return filtered_dist_to(g, a, b, excluded)[a];
}

Mapping::Mapping(int n_logical, int n_phys) {
  if (n_logical > n_phys)
    throw SynthesisError("kernel needs " + std::to_string(n_logical) +
                         " qubits but device has " + std::to_string(n_phys));
  log2phys_.assign(n_logical, -1);
  phys2log_.assign(n_phys, -1);
  live_.assign(n_phys, Liveness::Untouched);
}

Mapping Mapping::identity_bfs(const CouplingGraph& g, int n_logical) {
  Mapping m(n_logical, g.n);
  std::vector<int> order;
  std::vector<char> seen(g.n, 0);
  for (int start = 0; start < g.n; ++start) {
    if (seen[start]) continue;
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (int v : g.adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
    }
  }
  for (int q = 0; q < n_logical; ++q) {
    m.log2phys_[q] = order[q];
    m.phys2log_[order[q]] = q;
    m.live_[order[q]] = Liveness::InUse;
  }
  return m;
}

Mapping Mapping::from_vector(const std::vector<int>& log2phys, int n_phys) {
  Mapping m(static_cast<int>(log2phys.size()), n_phys);
  for (int q = 0; q < m.n_logical(); ++q) {
    int p = log2phys[q];
    if (p < 0 || p >= n_phys || m.phys2log_[p] >= 0)
      throw SynthesisError("initial mapping is not an injection into [0, " +
                           std::to_string(n_phys) + ")");
    m.log2phys_[q] = p;
    m.phys2log_[p] = q;
    m.live_[p] = Liveness::InUse;
  }
  return m;
}

void Mapping::mark_released(int p) {
  if (phys2log_[p] < 0) live_[p] = Liveness::ReleasedZero;
}

void Mapping::apply_swap(int pa, int pb) {
  int la = phys2log_[pa], lb = phys2log_[pb];
  std::swap(phys2log_[pa], phys2log_[pb]);
  std::swap(live_[pa], live_[pb]);
  if (la >= 0) log2phys_[la] = pb;
  if (lb >= 0) log2phys_[lb] = pa;
}

std::pair<int, std::vector<std::vector<int>>> find_center(
    const CouplingGraph& g, const Mapping& mapping,
    const std::vector<int>& roots) {
  if (roots.empty()) throw SynthesisError("find_center: empty root set");
  std::vector<std::vector<int>> dists;
  dists.reserve(roots.size());
  for (int q : roots) dists.push_back(bfs_distances(g, mapping.phys_of(q)));

  int best = -1;
  long best_sum = std::numeric_limits<long>::max();
  for (int p = 0; p < g.n; ++p) {
    long sum = 0;
    bool reachable = true;
    for (const auto& d : dists) {
      if (d[p] < 0) { reachable = false; break; }
      sum += d[p];
    }
    if (reachable && sum < best_sum) {
      best_sum = sum;
      best = p;
    }
  }
  if (best < 0) throw RoutingError("find_center: no reachable center");

  std::vector<std::vector<int>> paths;
  paths.reserve(roots.size());
  for (int q : roots) {
    int pos = mapping.phys_of(q);
    if (pos == best)
      paths.emplace_back();
    else
      paths.push_back(shortest_path(g, pos, best));
  }
  return {best, paths};
}

}  // namespace paulic

#include "ofg/flip_graph.hpp"

#include <algorithm>
#include <queue>

#include "ofg/bitcomb.hpp"
#include "ofg/errors.hpp"

namespace ofg {

namespace {

void check_enum_n(int n, int limit, const char* what) {
  if (n < 1)
    throw ValidationError(ErrorCode::LimitExceeded,
                          std::string(what) + " requires n >= 1");
  if (n > limit)
    throw ValidationError(ErrorCode::LimitExceeded,
                          std::string(what) + " capped at n <= " +
                              std::to_string(limit) + ", got n = " +
                              std::to_string(n));
}

void append_class_masks(int two_n, int popcount, std::vector<std::uint32_t>& out) {
  if (popcount == 0) {
    out.push_back(0);
    return;
  }
  std::uint32_t full = low_mask(two_n);
  for (std::uint32_t m = first_combination(popcount); m != 0 && m <= full;
       m = next_combination(m))
    out.push_back(m);
}

}  // namespace

std::vector<MVAssignment> enumerate_valid(int n, Majority majority, int limit) {
  check_enum_n(n, limit, "enumerate_valid");
  int two_n = 2 * n;
  std::vector<std::uint32_t> masks;
  switch (majority) {
    case Majority::Mountain:
      append_class_masks(two_n, n + 1, masks);
      break;
    case Majority::Valley:
      append_class_masks(two_n, n - 1, masks);
      break;
    case Majority::Both: {
      std::vector<std::uint32_t> mountain, valley;
      append_class_masks(two_n, n + 1, mountain);
      append_class_masks(two_n, n - 1, valley);
      masks.resize(mountain.size() + valley.size());
      std::merge(mountain.begin(), mountain.end(), valley.begin(), valley.end(),
                 masks.begin());
      break;
    }
  }
  std::vector<MVAssignment> out;
  out.reserve(masks.size());
  for (std::uint32_t m : masks) out.emplace_back(two_n, m);
  return out;
}

int FlipGraph::index_of(std::uint32_t mask) const {
  auto it = std::lower_bound(vertex_masks.begin(), vertex_masks.end(), mask);
  if (it == vertex_masks.end() || *it != mask) return -1;
  return static_cast<int>(it - vertex_masks.begin());
}

std::vector<std::vector<std::int32_t>> FlipGraph::adjacency() const {
  std::vector<std::vector<std::int32_t>> adj(vertex_masks.size());
  for (const Edge& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

FlipGraph build_ofg_uniform(int n, int limit) {
  check_enum_n(n, limit, "build_ofg_uniform");
  FlipGraph g;
  g.degree = 2 * n;
  g.multigraph = (n == 1);
  g.name = "ofg_a" + std::to_string(2 * n);

  std::vector<MVAssignment> vertices = enumerate_valid(n, Majority::Both, limit);
  g.vertex_masks.reserve(vertices.size());
  for (const MVAssignment& mv : vertices) g.vertex_masks.push_back(mv.mask());

  for (std::size_t u = 0; u < vertices.size(); ++u) {
    const MVAssignment& mv = vertices[u];
    for (int k = 1; k <= g.degree; ++k) {
      if (!is_flippable(mv, k)) continue;
      std::uint32_t flipped = mv.mask() ^ face_flip_mask(k, g.degree);
      if (flipped < mv.mask()) continue;  // recorded from the smaller endpoint
      int v = g.index_of(flipped);
      if (v < 0)
        throw InternalError("flip of a valid assignment left the vertex set");
      g.edges.push_back({static_cast<std::int32_t>(u),
                         static_cast<std::int32_t>(v),
                         static_cast<std::int32_t>(k)});
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

// Eccentricity of src, or -1 if the graph is disconnected from src.
// visited_count reports how many vertices the BFS reached.
int bfs_eccentricity(const std::vector<std::vector<std::int32_t>>& adj, int src,
                     int* visited_count = nullptr) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(src)] = 0;
  q.push(src);
  int ecc = 0, seen = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(v)] >= 0) continue;
      dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
      ecc = std::max(ecc, dist[static_cast<std::size_t>(v)]);
      ++seen;
      q.push(v);
    }
  }
  if (visited_count) *visited_count = seen;
  return ecc;
}

// Minimum over the dihedral-and-complement images of a mask; constant on
// automorphism orbits of OFG(A_2n).
std::uint32_t orbit_canonical(std::uint32_t mask, int two_n) {
  std::uint32_t best = ~std::uint32_t{0};
  std::uint32_t images[4] = {mask, reverse_bits(mask, two_n),
                             ~mask & low_mask(two_n),
                             reverse_bits(~mask & low_mask(two_n), two_n)};
  for (std::uint32_t base : images)
    for (int r = 0; r < two_n; ++r) best = std::min(best, rotl_bits(base, r, two_n));
  return best;
}

}  // namespace

BfsMetrics bfs_metrics(const FlipGraph& g, BfsMode mode) {
  BfsMetrics m;
  if (g.vertex_count() == 0) {
    m.connected = true;
    return m;
  }
  auto adj = g.adjacency();

  int reached = 0;
  int ecc0 = bfs_eccentricity(adj, 0, &reached);
  m.connected = (reached == g.vertex_count());

  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mode == BfsMode::UniformOrbits) {
      std::uint32_t mask = g.vertex_masks[static_cast<std::size_t>(v)];
      if (orbit_canonical(mask, g.degree) != mask) continue;
    }
    int ecc = (v == 0) ? ecc0 : bfs_eccentricity(adj, v);
    m.eccentricities[v] = ecc;
    m.diameter = std::max(m.diameter, ecc);
  }
  return m;
}

int bfs_distance(const FlipGraph& g, int from, int to) {
  if (from == to) return 0;
  auto adj = g.adjacency();
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(from)] = 0;
  q.push(from);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(v)] >= 0) continue;
      dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
      if (v == to) return dist[static_cast<std::size_t>(v)];
      q.push(v);
    }
  }
  return -1;
}

std::vector<int> connected_components(const FlipGraph& g) {
  auto adj = g.adjacency();
  std::vector<int> comp(adj.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    comp[s] = next;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)])
        if (comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = next;
          q.push(v);
        }
    }
    ++next;
  }
  return comp;
}

bool is_bipartite(const FlipGraph& g) {
  auto adj = g.adjacency();
  std::vector<int> color(adj.size(), -1);
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (color[s] >= 0) continue;
    std::queue<int> q;
    color[s] = 0;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (color[static_cast<std::size_t>(v)] < 0) {
          color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (color[static_cast<std::size_t>(v)] ==
                   color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ofg

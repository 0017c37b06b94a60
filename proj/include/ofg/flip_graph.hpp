#ifndef OFG_FLIP_GRAPH_HPP
#define OFG_FLIP_GRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ofg/counting.hpp"
#include "ofg/mv_assignment.hpp"

namespace ofg {

enum class Majority { Mountain, Valley, Both };

// All valid assignments of A_2n in the requested Maekawa class(es),
// ascending by packed mask. Iterates only the C(2n, n+-1) fixed-popcount
// masks instead of filtering all 2^2n words.
std::vector<MVAssignment> enumerate_valid(int n, Majority majority,
                                          int limit = kDefaultEnumLimit);

// Vertices are valid assignments; an edge (u, v, k) records that flipping
// face a_k turns vertex u into vertex v (stored with mask[u] < mask[v],
// sorted lexicographically). OFG(A_2) is a multigraph: both faces join the
// same two vertices.
struct FlipGraph {
  int degree = 0;
  bool multigraph = false;
  std::string name;  // used by the DOT exporter
  std::vector<std::uint32_t> vertex_masks;  // ascending

  struct Edge {
    std::int32_t u = 0;
    std::int32_t v = 0;
    std::int32_t face = 0;  // 1-based
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };
  std::vector<Edge> edges;

  int vertex_count() const { return static_cast<int>(vertex_masks.size()); }
  std::size_t edge_count() const { return edges.size(); }
  MVAssignment vertex(int index) const {
    return MVAssignment(degree, vertex_masks[static_cast<std::size_t>(index)]);
  }
  // -1 when the mask is not a vertex.
  int index_of(std::uint32_t mask) const;

  // Adjacency as index lists (parallel edges repeat a neighbor).
  std::vector<std::vector<std::int32_t>> adjacency() const;
};

FlipGraph build_ofg_uniform(int n, int limit = kDefaultEnumLimit);

struct BfsMetrics {
  bool connected = false;
  // Largest eccentricity observed, unreachable pairs ignored. Equals the
  // graph diameter whenever the graph is connected.
  int diameter = 0;
  std::map<int, int> eccentricities;  // vertex index -> eccentricity
};

enum class BfsMode {
  AllSources,
  // Only BFS from one representative per orbit of the rotation/reflection/
  // complement symmetry group. Valid for OFG(A_2n), where those are graph
  // automorphisms; do not use on general-vertex graphs.
  UniformOrbits,
};

BfsMetrics bfs_metrics(const FlipGraph& g, BfsMode mode = BfsMode::AllSources);

// Shortest flip distance between two vertex indices; -1 if disconnected.
int bfs_distance(const FlipGraph& g, int from, int to);

// Component id per vertex, ids numbered 0.. in first-seen order.
std::vector<int> connected_components(const FlipGraph& g);

bool is_bipartite(const FlipGraph& g);

}  // namespace ofg

#endif  // OFG_FLIP_GRAPH_HPP

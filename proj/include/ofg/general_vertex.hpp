#ifndef OFG_GENERAL_VERTEX_HPP
#define OFG_GENERAL_VERTEX_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ofg/crease_pattern.hpp"
#include "ofg/flip_graph.hpp"
#include "ofg/mv_assignment.hpp"

namespace ofg {

// General-vertex enumeration walks all 2^2n assignments; capped by degree.
inline constexpr int kDefaultGeneralDegreeLimit = 20;

// Validity of an MV assignment on an arbitrary flat-foldable vertex, by
// iterated crimping. Each round consumes a maximal run of k equal minimal
// sector angles flanked by strictly larger ones; the k+1 creases along the
// run must carry mountains minus valleys = 0 when k is odd and +-1 when k
// is even (k = 1 is the big-little-big rule). A surviving residual crease
// keeps the run's majority parity. When all angles are equal the reduced
// cone folds iff Maekawa's |M - V| = 2 holds.
//
// The run schedule depends only on the angles, so it is precompiled once
// per pattern and replayed per assignment with integer ops only.
class CrimpPlan {
 public:
  explicit CrimpPlan(const CreasePattern& pattern);

  int degree() const { return degree_; }
  bool evaluate(std::uint32_t mv_mask) const;

 private:
  struct Step {
    int start;  // first run angle, index into the working cyclic vector
    int k;      // run length in angles; k+1 creases take part
  };
  std::vector<Step> steps_;
  int degree_ = 0;
};

bool is_valid_general(const CreasePattern& pattern, const MVAssignment& mv);

// Dispatch: Maekawa test on uniform patterns, crimp reduction otherwise.
bool is_valid(const CreasePattern& pattern, const MVAssignment& mv);

// Maekawa-only shortcut, callable only with a uniform pattern.
bool is_valid_uniform(const CreasePattern& pattern, const MVAssignment& mv);

std::vector<MVAssignment> enumerate_valid_general(
    const CreasePattern& pattern, int degree_limit = kDefaultGeneralDegreeLimit);

// OFG(C): vertices are valid assignments, edges are single face flips whose
// results stay valid.
FlipGraph build_ofg_general(const CreasePattern& pattern,
                            int degree_limit = kDefaultGeneralDegreeLimit);

// Relabeling nu(c_i) -> mu(e_{i+r}) embeds OFG(C) into OFG(A_2n); every
// image vertex is Maekawa-valid, so valid in A_2n, and every flip edge maps
// to the flip of the rotated face.
struct EmbeddingMap {
  int rotation = 0;
  std::vector<std::pair<MVAssignment, MVAssignment>> pairs;  // (C vertex, A_2n vertex)
};

EmbeddingMap embed_into_uniform(const CreasePattern& pattern, int rotation,
                                int degree_limit = kDefaultGeneralDegreeLimit);

// Number of distinct vertex-image sets among the 2n rotational embeddings.
int count_rotational_copies(const CreasePattern& pattern,
                            int degree_limit = kDefaultGeneralDegreeLimit);

struct EmbeddingReport {
  int rotations = 0;                 // 2n candidate relabelings
  int distinct_rotational = 0;       // distinct vertex-image sets among them
  bool edges_preserved = false;      // every OFG(C) edge maps to an A_2n edge, all r
  int distinct_reflected_extra = 0;  // reflected images not matching any rotational one
};

EmbeddingReport analyze_embeddings(const CreasePattern& pattern,
                                   bool include_reflections,
                                   int degree_limit = kDefaultGeneralDegreeLimit);

// {"rotation": 2, "pairs": [["MVVM...", "VMMV..."], ...]}
nlohmann::ordered_json embedding_to_json(const EmbeddingMap& map);

}  // namespace ofg

#endif  // OFG_GENERAL_VERTEX_HPP

#include "ofg/general_vertex.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include <nlohmann/json.hpp>

#include "ofg/bitcomb.hpp"
#include "ofg/errors.hpp"

namespace ofg {

CrimpPlan::CrimpPlan(const CreasePattern& pattern) : degree_(pattern.degree()) {
  std::vector<Rational> angles = pattern.angles();

  while (true) {
    const int d = static_cast<int>(angles.size());
    bool all_equal = true;
    for (int i = 1; i < d; ++i)
      if (angles[static_cast<std::size_t>(i)] != angles[0]) {
        all_equal = false;
        break;
      }
    if (all_equal) break;

    const Rational& min_angle =
        *std::min_element(angles.begin(), angles.end());

    // Lowest-index start of a maximal cyclic run of the minimum value. Its
    // flanks are strictly larger because the value is the global minimum.
    int start = -1;
    for (int s = 0; s < d; ++s) {
      if (angles[static_cast<std::size_t>(s)] == min_angle &&
          angles[static_cast<std::size_t>((s + d - 1) % d)] != min_angle) {
        start = s;
        break;
      }
    }
    if (start < 0)
      throw InternalError("crimp reduction found no run start");
    int k = 1;
    while (angles[static_cast<std::size_t>((start + k) % d)] == min_angle) ++k;
    if (k + 1 >= d)
      throw InternalError("crimp run swallowed the whole vertex; Kawasaki "
                          "validation should have rejected this pattern");

    steps_.push_back({start, k});

    // Rotate so the left flank leads, then splice. The parity replay in
    // evaluate() performs the identical rotation and splice.
    std::vector<Rational> rotated(angles.size());
    for (int p = 0; p < d; ++p)
      rotated[static_cast<std::size_t>(p)] =
          angles[static_cast<std::size_t>((start - 1 + p + d) % d)];

    std::vector<Rational> next;
    if (k % 2 == 1) {
      // Run fully consumed; flanks merge across it.
      next.push_back(rotated[0] + rotated[static_cast<std::size_t>(k + 1)] -
                     min_angle);
    } else {
      // One residual crease survives between the untouched flanks.
      next.push_back(rotated[0]);
      next.push_back(rotated[static_cast<std::size_t>(k + 1)]);
    }
    for (int p = k + 2; p < d; ++p)
      next.push_back(rotated[static_cast<std::size_t>(p)]);
    angles = std::move(next);
  }
}

bool CrimpPlan::evaluate(std::uint32_t mv_mask) const {
  int parities[kMaxDegree] = {};
  int d = degree_;
  for (int i = 0; i < d; ++i) parities[i] = (mv_mask >> i) & 1 ? +1 : -1;

  for (const Step& step : steps_) {
    // Creases e_start .. e_{start+k} border the run's angles (0-based:
    // angle p sits between creases p and p+1).
    int run_sum = 0;
    for (int j = 0; j <= step.k; ++j)
      run_sum += parities[(step.start + j) % d];
    if (step.k % 2 == 1 ? run_sum != 0 : std::abs(run_sum) != 1) return false;

    int rotated[kMaxDegree] = {};
    for (int p = 0; p < d; ++p)
      rotated[p] = parities[(step.start - 1 + p + d) % d];

    int next_len = 0;
    parities[next_len++] = rotated[0];
    if (step.k % 2 == 0) parities[next_len++] = run_sum > 0 ? +1 : -1;
    for (int p = step.k + 2; p < d; ++p) parities[next_len++] = rotated[p];
    d = next_len;
  }

  int sum = 0;
  for (int i = 0; i < d; ++i) sum += parities[i];
  return sum == 2 || sum == -2;
}

bool is_valid_general(const CreasePattern& pattern, const MVAssignment& mv) {
  if (pattern.degree() != mv.degree())
    throw ValidationError(ErrorCode::DegreeMismatch,
                          "assignment degree " + std::to_string(mv.degree()) +
                              " does not match pattern degree " +
                              std::to_string(pattern.degree()));
  return CrimpPlan(pattern).evaluate(mv.mask());
}

bool is_valid(const CreasePattern& pattern, const MVAssignment& mv) {
  if (pattern.degree() != mv.degree())
    throw ValidationError(ErrorCode::DegreeMismatch,
                          "assignment degree " + std::to_string(mv.degree()) +
                              " does not match pattern degree " +
                              std::to_string(pattern.degree()));
  if (pattern.uniform_angles()) return is_valid_uniform(mv);
  return is_valid_general(pattern, mv);
}

bool is_valid_uniform(const CreasePattern& pattern, const MVAssignment& mv) {
  if (!pattern.uniform_angles())
    throw ValidationError(ErrorCode::InvalidAngles,
                          "Maekawa-only validity applies to equal-angle "
                          "patterns; use the general check");
  if (pattern.degree() != mv.degree())
    throw ValidationError(ErrorCode::DegreeMismatch,
                          "assignment degree does not match pattern degree");
  return is_valid_uniform(mv);
}

namespace {

void check_general_degree(const CreasePattern& pattern, int degree_limit,
                          const char* what) {
  if (pattern.degree() > degree_limit)
    throw ValidationError(ErrorCode::LimitExceeded,
                          std::string(what) + " capped at degree <= " +
                              std::to_string(degree_limit) + ", got " +
                              std::to_string(pattern.degree()));
}

std::vector<std::uint32_t> valid_masks_general(const CreasePattern& pattern) {
  CrimpPlan plan(pattern);
  std::vector<std::uint32_t> masks;
  std::uint32_t end = low_mask(pattern.degree());
  for (std::uint32_t m = 0;; ++m) {
    if (plan.evaluate(m)) masks.push_back(m);
    if (m == end) break;
  }
  return masks;
}

}  // namespace

std::vector<MVAssignment> enumerate_valid_general(const CreasePattern& pattern,
                                                  int degree_limit) {
  check_general_degree(pattern, degree_limit, "enumerate_valid_general");
  std::vector<MVAssignment> out;
  for (std::uint32_t m : valid_masks_general(pattern))
    out.emplace_back(pattern.degree(), m);
  return out;
}

FlipGraph build_ofg_general(const CreasePattern& pattern, int degree_limit) {
  check_general_degree(pattern, degree_limit, "build_ofg_general");
  FlipGraph g;
  g.degree = pattern.degree();
  g.multigraph = (g.degree == 2);
  g.name = (pattern.uniform_angles() ? "ofg_a" : "ofg_c") + std::to_string(g.degree);
  g.vertex_masks = valid_masks_general(pattern);

  for (std::size_t u = 0; u < g.vertex_masks.size(); ++u) {
    std::uint32_t m = g.vertex_masks[u];
    for (int k = 1; k <= g.degree; ++k) {
      std::uint32_t flipped = m ^ face_flip_mask(k, g.degree);
      if (flipped < m) continue;
      int v = g.index_of(flipped);
      if (v < 0) continue;  // flip leaves the valid set: no edge
      g.edges.push_back({static_cast<std::int32_t>(u),
                         static_cast<std::int32_t>(v),
                         static_cast<std::int32_t>(k)});
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

void check_embeddable(const CreasePattern& pattern, const char* what) {
  if (pattern.uniform_angles())
    throw ValidationError(ErrorCode::InvalidAngles,
                          std::string(what) +
                              " expects a pattern other than A_2n itself");
}

}  // namespace

EmbeddingMap embed_into_uniform(const CreasePattern& pattern, int rotation,
                                int degree_limit) {
  check_embeddable(pattern, "embed_into_uniform");
  check_general_degree(pattern, degree_limit, "embed_into_uniform");
  int d = pattern.degree();
  if (rotation < 0 || rotation >= d)
    throw ValidationError(ErrorCode::InvalidFace,
                          "rotation must lie in 0.." + std::to_string(d - 1) +
                              ", got " + std::to_string(rotation));
  EmbeddingMap map;
  map.rotation = rotation;
  for (std::uint32_t m : valid_masks_general(pattern))
    map.pairs.emplace_back(MVAssignment(d, m),
                           MVAssignment(d, rotl_bits(m, rotation, d)));
  return map;
}

namespace {

std::vector<std::vector<std::uint32_t>> rotational_images(
    const std::vector<std::uint32_t>& masks, int d) {
  std::vector<std::vector<std::uint32_t>> images;
  images.reserve(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    std::vector<std::uint32_t> image;
    image.reserve(masks.size());
    for (std::uint32_t m : masks) image.push_back(rotl_bits(m, r, d));
    std::sort(image.begin(), image.end());
    images.push_back(std::move(image));
  }
  return images;
}

}  // namespace

int count_rotational_copies(const CreasePattern& pattern, int degree_limit) {
  check_embeddable(pattern, "count_rotational_copies");
  check_general_degree(pattern, degree_limit, "count_rotational_copies");
  std::vector<std::uint32_t> masks = valid_masks_general(pattern);
  auto images = rotational_images(masks, pattern.degree());
  std::set<std::vector<std::uint32_t>> distinct(images.begin(), images.end());
  return static_cast<int>(distinct.size());
}

EmbeddingReport analyze_embeddings(const CreasePattern& pattern,
                                   bool include_reflections, int degree_limit) {
  check_embeddable(pattern, "analyze_embeddings");
  check_general_degree(pattern, degree_limit, "analyze_embeddings");
  const int d = pattern.degree();

  FlipGraph ofg_c = build_ofg_general(pattern, degree_limit);
  auto images = rotational_images(ofg_c.vertex_masks, d);
  std::set<std::vector<std::uint32_t>> distinct(images.begin(), images.end());

  EmbeddingReport report;
  report.rotations = d;
  report.distinct_rotational = static_cast<int>(distinct.size());

  // Edge preservation: both images must be valid in A_2n (Maekawa carries
  // over) and must differ exactly on the creases of the rotated face.
  report.edges_preserved = true;
  for (int r = 0; r < d && report.edges_preserved; ++r) {
    for (const FlipGraph::Edge& e : ofg_c.edges) {
      std::uint32_t iu = rotl_bits(ofg_c.vertex_masks[static_cast<std::size_t>(e.u)], r, d);
      std::uint32_t iv = rotl_bits(ofg_c.vertex_masks[static_cast<std::size_t>(e.v)], r, d);
      int mapped_face = (e.face - 1 + r) % d + 1;
      if (!is_valid_uniform(MVAssignment(d, iu)) ||
          !is_valid_uniform(MVAssignment(d, iv)) ||
          (iu ^ iv) != face_flip_mask(mapped_face, d)) {
        report.edges_preserved = false;
        break;
      }
    }
  }

  if (include_reflections) {
    for (int r = 0; r < d; ++r) {
      std::vector<std::uint32_t> image;
      image.reserve(ofg_c.vertex_masks.size());
      for (std::uint32_t m : ofg_c.vertex_masks)
        image.push_back(rotl_bits(reverse_bits(m, d), r, d));
      std::sort(image.begin(), image.end());
      if (distinct.insert(std::move(image)).second)
        ++report.distinct_reflected_extra;
    }
  }
  return report;
}

nlohmann::ordered_json embedding_to_json(const EmbeddingMap& map) {
  nlohmann::ordered_json doc;
  doc["rotation"] = map.rotation;
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& [from, to] : map.pairs)
    pairs.push_back({from.str(), to.str()});
  doc["pairs"] = std::move(pairs);
  return doc;
}

}  // namespace ofg

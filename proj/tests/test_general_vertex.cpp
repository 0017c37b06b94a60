#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "ofg/general_vertex.hpp"
#include "ofg/graph_export.hpp"
#include "oracles.hpp"

using namespace ofg;

static CreasePattern degrees(std::initializer_list<long> values) {
  std::vector<Rational> angles;
  for (long v : values) angles.emplace_back(v);
  return CreasePattern::from_angles(std::move(angles));
}

// Degree-6 vertex whose flip graph splits into two 4-cycles. The crimp
// reduction collapses it to: e2 != e3, e5 != e6, e1 == e4.
static const CreasePattern kSplit6 = degrees({45, 15, 60, 85, 75, 80});

static bool split6_valid(std::uint32_t m) {
  auto bit = [&](int i) { return (m >> i) & 1u; };
  return bit(1) != bit(2) && bit(4) != bit(5) && bit(0) == bit(3);
}

TEST_CASE("disconnected degree-6 example: exactly 8 valid assignments") {
  std::vector<MVAssignment> valid = enumerate_valid_general(kSplit6);
  std::vector<std::uint32_t> masks;
  for (const MVAssignment& mv : valid) masks.push_back(mv.mask());
  CHECK(masks == std::vector<std::uint32_t>{18, 20, 27, 29, 34, 36, 43, 45});

  for (std::uint32_t m = 0; m < 64; ++m)
    CHECK(is_valid_general(kSplit6, MVAssignment(6, m)) == split6_valid(m));
}

TEST_CASE("disconnected degree-6 example: two disjoint 4-cycles") {
  FlipGraph g = build_ofg_general(kSplit6);
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 8);
  CHECK(g.name == "ofg_c6");

  std::vector<int> comp = connected_components(g);
  CHECK(*std::max_element(comp.begin(), comp.end()) == 1);
  std::map<int, int> sizes;
  for (int c : comp) ++sizes[c];
  CHECK(sizes[0] == 4);
  CHECK(sizes[1] == 4);

  // every vertex has degree 2 and its component has as many edges as
  // vertices: each component is a cycle
  auto adj = g.adjacency();
  for (const auto& neighbors : adj) CHECK(neighbors.size() == 2);
  std::map<int, int> comp_edges;
  for (const FlipGraph::Edge& e : g.edges) {
    CHECK(comp[static_cast<std::size_t>(e.u)] == comp[static_cast<std::size_t>(e.v)]);
    ++comp_edges[comp[static_cast<std::size_t>(e.u)]];
  }
  CHECK(comp_edges[0] == 4);
  CHECK(comp_edges[1] == 4);
  CHECK(is_bipartite(g));
}

TEST_CASE("uniform angles: crimp reduction agrees with Maekawa on every mask") {
  for (int n = 1; n <= 4; ++n) {
    CreasePattern a = CreasePattern::uniform(n);
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << (2 * n)); ++m) {
      MVAssignment mv(2 * n, m);
      CHECK(is_valid_general(a, mv) == is_valid_uniform(mv));
    }
  }
}

TEST_CASE("big-little-big: equal parity across a strict minimum is invalid") {
  // kSplit6 has its global minimum 15 between e2 and e3
  for (std::uint32_t m = 0; m < 64; ++m) {
    if (((m >> 1) & 1) == ((m >> 2) & 1))
      CHECK_FALSE(is_valid_general(kSplit6, MVAssignment(6, m)));
  }
}

TEST_CASE("degree-4 patterns with a unique strict minimum have 4 valid assignments") {
  CreasePattern p = degrees({90, 70, 90, 110});
  std::vector<MVAssignment> valid = enumerate_valid_general(p);
  std::vector<std::uint32_t> masks;
  for (const MVAssignment& mv : valid) masks.push_back(mv.mask());
  // e2 != e3 (minimum at 70), e1 == e4 (final cone)
  CHECK(masks == std::vector<std::uint32_t>{2, 4, 11, 13});

  CHECK(enumerate_valid_general(degrees({100, 30, 80, 150})).size() == 4);

  // a_2 toggles the e2 != e3 pair and a_4 toggles the e1 == e4 pair, so
  // every vertex has degree 2: one 4-cycle
  FlipGraph g = build_ofg_general(p);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  for (const FlipGraph::Edge& e : g.edges) CHECK((e.face == 2 || e.face == 4));
  std::vector<int> comp = connected_components(g);
  CHECK(*std::max_element(comp.begin(), comp.end()) == 0);
}

TEST_CASE("maximal runs of equal minimal angles") {
  // two runs of two 40s; each run's three creases must not be uniform and
  // the two run majorities must agree: 6 * 3 * 2 = 18... counted directly:
  // per run 6 words, 3 of each majority, majorities tied => 2 * 3 * 3 = 18
  CreasePattern runs = degrees({100, 40, 40, 100, 40, 40});
  std::vector<MVAssignment> valid = enumerate_valid_general(runs);
  CHECK(valid.size() == 18);
  CHECK(is_valid_general(runs, MVAssignment::from_string("MMVMMV")));
  CHECK_FALSE(is_valid_general(runs, MVAssignment::from_string("MMVVMV")));

  // the same vertex relabeled so one run wraps across e_1
  CHECK(enumerate_valid_general(degrees({40, 100, 40, 40, 100, 40})).size() == 18);
}

TEST_CASE("crimp cascade with merged angles, degree 8") {
  // reduction: e1 != e2 (at 10), e4 != e5 and e6 != e7 (at the surviving
  // 30s), then the leftover cone forces e3 == e8
  CreasePattern p = degrees({10, 30, 50, 30, 60, 30, 60, 90});
  int count = 0;
  for (std::uint32_t m = 0; m < 256; ++m) {
    auto bit = [&](int i) { return (m >> i) & 1u; };
    bool expected = bit(0) != bit(1) && bit(3) != bit(4) && bit(5) != bit(6) &&
                    bit(2) == bit(7);
    CHECK(is_valid_general(p, MVAssignment(8, m)) == expected);
    if (expected) ++count;
  }
  CHECK(count == 16);
}

TEST_CASE("odd run of three equal minima consumes four creases") {
  // rule on e2..e5: two mountains, two valleys; then e7 != e8; then e1 == e6
  CreasePattern p = degrees({90, 20, 20, 20, 40, 80, 30, 60});
  int count = 0;
  for (std::uint32_t m = 0; m < 256; ++m) {
    auto bit = [&](int i) { return static_cast<int>((m >> i) & 1u); };
    int run = bit(1) + bit(2) + bit(3) + bit(4);
    bool expected = run == 2 && bit(6) != bit(7) && bit(0) == bit(5);
    CHECK(is_valid_general(p, MVAssignment(8, m)) == expected);
    if (expected) ++count;
  }
  CHECK(count == 24);
}

TEST_CASE("validity implies Maekawa on every test pattern") {
  for (const CreasePattern& p :
       {kSplit6, degrees({90, 70, 90, 110}), degrees({100, 40, 40, 100, 40, 40}),
        degrees({10, 30, 50, 30, 60, 30, 60, 90})}) {
    for (const MVAssignment& mv : enumerate_valid_general(p))
      CHECK(is_valid_uniform(mv));
  }
}

TEST_CASE("OFG(C) never exceeds OFG(A_2n) in vertices or edges") {
  for (const CreasePattern& p :
       {kSplit6, degrees({90, 70, 90, 110}), degrees({100, 40, 40, 100, 40, 40}),
        degrees({10, 30, 50, 30, 60, 30, 60, 90}),
        degrees({90, 20, 20, 20, 40, 80, 30, 60})}) {
    FlipGraph general = build_ofg_general(p);
    FlipGraph maximal = build_ofg_uniform(p.half_degree());
    CHECK(general.vertex_count() <= maximal.vertex_count());
    CHECK(general.edge_count() <= maximal.edge_count());
    // every vertex of OFG(C) is a vertex of OFG(A_2n)
    for (std::uint32_t m : general.vertex_masks)
      CHECK(maximal.index_of(m) >= 0);
  }
}

namespace {

// Definitional reference: an assignment folds flat iff some sequence of
// crimps reduces it to an all-equal cone satisfying Maekawa. Tries every
// weak local minimum whose creases disagree, in every order.
bool oracle_foldable(std::vector<Rational> angles, std::vector<int> parity) {
  int d = static_cast<int>(angles.size());
  bool all_equal = true;
  for (int i = 1; i < d; ++i)
    if (angles[static_cast<std::size_t>(i)] != angles[0]) all_equal = false;
  if (all_equal) {
    int sum = 0;
    for (int p : parity) sum += p;
    return sum == 2 || sum == -2;
  }
  for (int j = 0; j < d; ++j) {
    const Rational& left = angles[static_cast<std::size_t>((j + d - 1) % d)];
    const Rational& right = angles[static_cast<std::size_t>((j + 1) % d)];
    const Rational& mid = angles[static_cast<std::size_t>(j)];
    if (mid > left || mid > right) continue;
    if (parity[static_cast<std::size_t>(j)] ==
        parity[static_cast<std::size_t>((j + 1) % d)])
      continue;
    std::vector<Rational> next_angles;
    std::vector<int> next_parity;
    for (int p = (j + 2) % d, taken = 0; taken < d - 3;
         p = (p + 1) % d, ++taken) {
      next_angles.push_back(angles[static_cast<std::size_t>(p)]);
      next_parity.push_back(parity[static_cast<std::size_t>(p)]);
    }
    next_angles.push_back(left - mid + right);
    next_parity.push_back(parity[static_cast<std::size_t>((j + d - 1) % d)]);
    if (oracle_foldable(std::move(next_angles), std::move(next_parity)))
      return true;
  }
  return false;
}

bool oracle_foldable(const CreasePattern& p, std::uint32_t mask) {
  std::vector<int> parity;
  for (int i = 0; i < p.degree(); ++i)
    parity.push_back((mask >> i) & 1 ? +1 : -1);
  return oracle_foldable(p.angles(), std::move(parity));
}

}  // namespace

TEST_CASE("crimp reduction agrees with exhaustive crimp search") {
  std::vector<CreasePattern> patterns = {
      kSplit6,
      degrees({90, 70, 90, 110}),
      degrees({100, 40, 40, 100, 40, 40}),
      degrees({10, 30, 50, 30, 60, 30, 60, 90}),
      degrees({90, 20, 20, 20, 40, 80, 30, 60}),
      CreasePattern::uniform(3),
  };
  // randomized flat-foldable vertices: scale odd and even sectors to 180 each
  std::mt19937_64 rng(11u);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 4 + 2 * static_cast<int>(rng() % 3);  // 4, 6, 8
    std::vector<Rational> angles(static_cast<std::size_t>(d));
    Rational odd_sum = 0, even_sum = 0;
    for (int i = 0; i < d; ++i) {
      angles[static_cast<std::size_t>(i)] = Rational(1 + static_cast<long>(rng() % 60));
      (i % 2 == 0 ? odd_sum : even_sum) += angles[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < d; ++i)
      angles[static_cast<std::size_t>(i)] *=
          Rational(180) / (i % 2 == 0 ? odd_sum : even_sum);
    patterns.push_back(CreasePattern::from_angles(std::move(angles)));
  }

  for (const CreasePattern& p : patterns) {
    CrimpPlan plan(p);
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << p.degree()); ++m)
      CHECK(plan.evaluate(m) == oracle_foldable(p, m));
  }
}

TEST_CASE("validity is invariant under relabeling the vertex by rotation") {
  for (const CreasePattern& p :
       {kSplit6, degrees({90, 70, 90, 110}), degrees({100, 40, 40, 100, 40, 40}),
        degrees({10, 30, 50, 30, 60, 30, 60, 90}),
        degrees({90, 20, 20, 20, 40, 80, 30, 60})}) {
    int d = p.degree();
    for (int r = 1; r < d; ++r) {
      std::vector<Rational> shifted;
      for (int i = 0; i < d; ++i)
        shifted.push_back(p.angles()[static_cast<std::size_t>((i + r) % d)]);
      CreasePattern rotated = CreasePattern::from_angles(std::move(shifted));
      for (std::uint32_t m = 0; m < (std::uint32_t{1} << d); ++m) {
        // crease e_{i+r} of p becomes crease e_i of the rotated pattern
        std::uint32_t m_rot = rotl_bits(m, d - r, d);
        CHECK(is_valid_general(p, MVAssignment(d, m)) ==
              is_valid_general(rotated, MVAssignment(d, m_rot)));
      }
    }
  }
}

TEST_CASE("degree-2 vertex folds only with both creases alike") {
  CreasePattern p = degrees({180, 180});
  CHECK(is_valid_general(p, MVAssignment::from_string("MM")));
  CHECK(is_valid_general(p, MVAssignment::from_string("VV")));
  CHECK_FALSE(is_valid_general(p, MVAssignment::from_string("MV")));
  CHECK_FALSE(is_valid_general(p, MVAssignment::from_string("VM")));
}

TEST_CASE("validity dispatch") {
  CreasePattern a4 = CreasePattern::uniform(2);
  CHECK(is_valid(a4, MVAssignment::from_string("MMMV")));
  CHECK_FALSE(is_valid(a4, MVAssignment::from_string("MMMM")));
  CHECK(is_valid_uniform(a4, MVAssignment::from_string("MMMV")));
  CHECK_THROWS_AS(is_valid_uniform(kSplit6, MVAssignment::from_string("MMVMMV")),
                  ValidationError);
  CHECK(is_valid(kSplit6, MVAssignment::from_string("MMVMMV")));
  CHECK_THROWS_AS(is_valid(kSplit6, MVAssignment::from_string("MMMV")),
                  ValidationError);
  CHECK_THROWS_AS(is_valid_general(kSplit6, MVAssignment::from_string("MMMV")),
                  ValidationError);
}

TEST_CASE("general OFG of uniform angles equals the Maekawa-built graph") {
  FlipGraph general = build_ofg_general(CreasePattern::uniform(2));
  FlipGraph uniform = build_ofg_uniform(2);
  CHECK(general.degree == uniform.degree);
  CHECK(general.vertex_masks == uniform.vertex_masks);
  CHECK(general.edges == uniform.edges);
  CHECK(general.name == "ofg_a4");
}

TEST_CASE("embedding: rotation relabels creases") {
  EmbeddingMap id = embed_into_uniform(kSplit6, 0);
  CHECK(id.rotation == 0);
  REQUIRE(id.pairs.size() == 8);
  for (const auto& [from, to] : id.pairs) {
    CHECK(from == to);  // r = 0 keeps labels
    CHECK(is_valid_uniform(to));
  }

  EmbeddingMap r2 = embed_into_uniform(kSplit6, 2);
  for (const auto& [from, to] : r2.pairs) {
    CHECK(is_valid_uniform(to));
    for (int i = 1; i <= 6; ++i)
      CHECK(to.value((i - 1 + 2) % 6 + 1) == from.value(i));
  }

  CHECK_THROWS_AS(embed_into_uniform(kSplit6, 6), ValidationError);
  CHECK_THROWS_AS(embed_into_uniform(kSplit6, -1), ValidationError);
  CHECK_THROWS_AS(embed_into_uniform(CreasePattern::uniform(3), 0), ValidationError);
}

TEST_CASE("every rotational image of an OFG(C) edge is an OFG(A_6) edge") {
  FlipGraph ofg_c = build_ofg_general(kSplit6);
  FlipGraph ofg_a = build_ofg_uniform(3);
  std::set<std::tuple<int, int, int>> a_edges;
  for (const FlipGraph::Edge& e : ofg_a.edges) a_edges.insert({e.u, e.v, e.face});

  for (int r = 0; r < 6; ++r) {
    for (const FlipGraph::Edge& e : ofg_c.edges) {
      int u = ofg_a.index_of(rotl_bits(ofg_c.vertex_masks[static_cast<std::size_t>(e.u)], r, 6));
      int v = ofg_a.index_of(rotl_bits(ofg_c.vertex_masks[static_cast<std::size_t>(e.v)], r, 6));
      REQUIRE(u >= 0);
      REQUIRE(v >= 0);
      int face = (e.face - 1 + r) % 6 + 1;
      CHECK(a_edges.count({std::min(u, v), std::max(u, v), face}) == 1);
    }
  }
}

TEST_CASE("rotational copy counts") {
  // The degree-6 example's valid set (e2 != e3, e5 != e6, e1 == e4) is
  // invariant under rotation by 3, so r and r+3 give the same image: only
  // 3 distinct sets among the 6 rotations.
  CHECK(count_rotational_copies(kSplit6) == 3);
  EmbeddingReport report = analyze_embeddings(kSplit6, true);
  CHECK(report.rotations == 6);
  CHECK(report.distinct_rotational == 3);
  CHECK(report.edges_preserved);
  CHECK(report.distinct_reflected_extra >= 0);
  CHECK(report.distinct_reflected_extra <= 6);

  // A vertex set with no rotational symmetry realizes the full 2n count.
  CreasePattern p4 = degrees({90, 70, 90, 110});
  CHECK(count_rotational_copies(p4) == 4);
  EmbeddingReport r4 = analyze_embeddings(p4, false);
  CHECK(r4.distinct_rotational == 4);
  CHECK(r4.edges_preserved);

  CHECK_THROWS_AS(count_rotational_copies(CreasePattern::uniform(3)), ValidationError);
}

TEST_CASE("embedding json document") {
  nlohmann::json doc = embedding_to_json(embed_into_uniform(kSplit6, 1));
  CHECK(doc["rotation"] == 1);
  REQUIRE(doc["pairs"].size() == 8);
  CHECK(doc["pairs"][0][0] == "VMVVMV");  // mask 18
  CHECK(doc["pairs"][0][1] ==
        MVAssignment(6, rotl_bits(18, 1, 6)).str());
}

TEST_CASE("degree limit guards general enumeration") {
  std::vector<Rational> angles(22, Rational(180, 11));
  angles[0] += 1;  // keep the vertex flat-foldable but not uniform
  angles[2] -= 1;
  CreasePattern big = CreasePattern::from_angles(std::move(angles));
  CHECK_THROWS_AS(enumerate_valid_general(big), ValidationError);
  CHECK_THROWS_AS(build_ofg_general(big), ValidationError);
  CHECK(enumerate_valid_general(big, 22).size() > 0);  // explicit limit raise
}

TEST_CASE("pattern/assignment degree mismatch is rejected") {
  CHECK_THROWS_AS(is_valid_general(kSplit6, MVAssignment::from_string("MMMV")),
                  ValidationError);
}

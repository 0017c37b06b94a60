#ifndef OFG_MV_ASSIGNMENT_HPP
#define OFG_MV_ASSIGNMENT_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ofg/bitcomb.hpp"
#include "ofg/errors.hpp"

// Mountain-valley assignments of a single flat-foldable vertex of degree 2n.
//
// Conventions (fixed across the project):
//   - creases e_1..e_2n and faces a_1..a_2n are 1-based; face a_k lies
//     between creases e_k and e_{k+1}, cyclically (a_2n between e_2n, e_1);
//   - an assignment packs into a word: +1 (mountain) <-> bit 1,
//     -1 (valley) <-> bit 0, crease e_1 at the least significant bit;
//   - text form is a string over {M, V} with e_1 first, e.g. "MMVVMM".

namespace ofg {

inline constexpr int kMaxDegree = 32;

class MVAssignment {
 public:
  MVAssignment() = default;

  MVAssignment(int degree, std::uint32_t mask) : degree_(degree), mask_(mask) {
    if (degree < 2 || degree > kMaxDegree || degree % 2 != 0)
      throw ValidationError(ErrorCode::InvalidMv,
                            "assignment degree must be even, 2.." +
                                std::to_string(kMaxDegree) + ", got " +
                                std::to_string(degree));
    if (mask & ~low_mask(degree))
      throw ValidationError(ErrorCode::InvalidMv,
                            "assignment mask has bits beyond degree");
  }

  static MVAssignment from_string(std::string_view s) {
    if (s.size() < 2 || s.size() > kMaxDegree || s.size() % 2 != 0)
      throw ValidationError(ErrorCode::InvalidMv,
                            "MV string must match ^[MV]{2n}$, got length " +
                                std::to_string(s.size()));
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == 'M')
        mask |= std::uint32_t{1} << i;
      else if (s[i] != 'V')
        throw ValidationError(ErrorCode::InvalidMv,
                              std::string("MV string may only contain M or V, got '") +
                                  s[i] + "'");
    }
    return MVAssignment(static_cast<int>(s.size()), mask);
  }

  int degree() const { return degree_; }
  std::uint32_t mask() const { return mask_; }

  // mu(e_i), 1-based crease index; +1 mountain, -1 valley.
  int value(int crease) const {
    check_crease(crease);
    return (mask_ >> (crease - 1)) & 1 ? +1 : -1;
  }

  std::string str() const {
    std::string s(static_cast<std::size_t>(degree_), 'V');
    for (int i = 0; i < degree_; ++i)
      if ((mask_ >> i) & 1) s[static_cast<std::size_t>(i)] = 'M';
    return s;
  }

  friend bool operator==(const MVAssignment&, const MVAssignment&) = default;
  friend std::strong_ordering operator<=>(const MVAssignment& a,
                                          const MVAssignment& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

  void check_crease(int crease) const {
    if (crease < 1 || crease > degree_)
      throw ValidationError(ErrorCode::InvalidFace,
                            "crease index " + std::to_string(crease) +
                                " out of range 1.." + std::to_string(degree_));
  }
  void check_face(int face) const {
    if (face < 1 || face > degree_)
      throw ValidationError(ErrorCode::InvalidFace,
                            "face index " + std::to_string(face) +
                                " out of range 1.." + std::to_string(degree_));
  }

 private:
  int degree_ = 0;
  std::uint32_t mask_ = 0;
};

// Subsets of the 2n faces / creases, kept as bitmasks (index i -> bit i-1).
template <class Tag>
struct IndexSet {
  int degree = 0;
  std::uint32_t bits = 0;

  bool contains(int index) const {
    return index >= 1 && index <= degree && ((bits >> (index - 1)) & 1);
  }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }

  std::vector<int> indices() const {  // ascending, 1-based
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 0; i < degree; ++i)
      if ((bits >> i) & 1) out.push_back(i + 1);
    return out;
  }

  IndexSet complement() const {
    return IndexSet{degree, ~bits & low_mask(degree)};
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

using FaceSet = IndexSet<struct FaceTag>;
using CreaseSet = IndexSet<struct CreaseTag>;

// XOR mask toggled by flipping face k: its two bordering creases.
inline std::uint32_t face_flip_mask(int face, int degree) {
  int lo = face - 1;
  int hi = face % degree;
  return (std::uint32_t{1} << lo) | (std::uint32_t{1} << hi);
}

inline int maekawa_sum(const MVAssignment& mv) {
  return 2 * std::popcount(mv.mask()) - mv.degree();
}

// Maekawa is sufficient when all sector angles are equal (the A_2n case).
inline bool is_valid_uniform(const MVAssignment& mv) {
  int s = maekawa_sum(mv);
  return s == 2 || s == -2;
}

// Total: the result may be invalid. Validity is a separate predicate.
inline MVAssignment flip_face(const MVAssignment& mv, int face) {
  mv.check_face(face);
  return MVAssignment(mv.degree(), mv.mask() ^ face_flip_mask(face, mv.degree()));
}

inline MVAssignment complement(const MVAssignment& mv) {
  return MVAssignment(mv.degree(), ~mv.mask() & low_mask(mv.degree()));
}

// Face a_k is unflippable exactly when both its creases carry the minority
// parity: flipping them would push the Maekawa sum to +-6.
inline bool is_flippable(const MVAssignment& mv, int face) {
  mv.check_face(face);
  int sum = maekawa_sum(mv);
  if (sum != 2 && sum != -2)
    throw ValidationError(ErrorCode::InvalidMv,
                          "is_flippable requires a valid assignment, got " + mv.str());
  int a = mv.value(face);
  int b = mv.value(face % mv.degree() + 1);
  return !(a == b && a != (sum > 0 ? +1 : -1));
}

inline void check_same_degree(const MVAssignment& a, const MVAssignment& b) {
  if (a.degree() != b.degree())
    throw ValidationError(ErrorCode::LengthMismatch,
                          "assignments have different degrees: " +
                              std::to_string(a.degree()) + " vs " +
                              std::to_string(b.degree()));
}

// S(mu,nu): creases where the two assignments disagree.
inline CreaseSet diff_set(const MVAssignment& mu, const MVAssignment& nu) {
  check_same_degree(mu, nu);
  return CreaseSet{mu.degree(), mu.mask() ^ nu.mask()};
}

// B(mu,nu): pair up the disagreement creases e_{i1}<...<e_{i2k} in cyclic
// order and take the faces strictly between each odd/even pair,
// B(e_a,e_b) = {a_a,...,a_{b-1}}. Flipping every face of this set (or of its
// complement) once converts mu into nu.
inline FaceSet between_faces(const MVAssignment& mu, const MVAssignment& nu) {
  CreaseSet s = diff_set(mu, nu);
  if (s.size() % 2 != 0)
    throw ValidationError(ErrorCode::InvalidMv,
                          "odd disagreement set; inputs cannot both be valid");
  std::vector<int> idx = s.indices();
  std::uint32_t bits = 0;
  for (std::size_t j = 0; j + 1 < idx.size(); j += 2)
    for (int f = idx[j]; f < idx[j + 1]; ++f) bits |= std::uint32_t{1} << (f - 1);
  return FaceSet{mu.degree(), bits};
}

}  // namespace ofg

#endif  // OFG_MV_ASSIGNMENT_HPP

#ifndef OFG_PATHFINDING_HPP
#define OFG_PATHFINDING_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ofg/mv_assignment.hpp"

namespace ofg {

// An ordered face-flip sequence claimed to turn `start` into `end` through
// valid assignments only.
struct FlipPath {
  MVAssignment start;
  MVAssignment end;
  std::vector<int> faces;  // 1-based

  friend bool operator==(const FlipPath&, const FlipPath&) = default;
};

// Walk the creases e_1..e_{2n-1} left to right, flipping face a_i whenever
// eta disagrees with nu on e_i. If a_i is blocked, scan forward for the
// first flippable face and cascade the flips back down to a_i (the shwoop).
// Never flips a_2n; O(n^2).
FlipPath fea_shwoop(const MVAssignment& mu, const MVAssignment& nu);

// Flip every face of B(mu,nu) or of its complement, whichever is smaller
// (ties keep B), always choosing the lowest-indexed currently-flippable
// face. At most n flips; O(n^2). A working set with no flippable face is a
// logic bug and raises InternalError.
FlipPath fea_halves(const MVAssignment& mu, const MVAssignment& nu);

// True iff replaying the faces from start stays valid at every step and
// lands exactly on end. The overload reports the first violation.
bool verify_path(const FlipPath& path);
bool verify_path(const FlipPath& path, std::string* diagnostic);

// {"start": "MMVVMM", "end": "MMMVVM", "faces": [4, 3]}
nlohmann::ordered_json path_to_json(const FlipPath& path);
FlipPath path_from_json(const nlohmann::json& doc);

}  // namespace ofg

#endif  // OFG_PATHFINDING_HPP

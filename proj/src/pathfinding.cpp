#include "ofg/pathfinding.hpp"

#include <nlohmann/json.hpp>

#include "ofg/errors.hpp"

namespace ofg {

namespace {

void check_pair(const MVAssignment& mu, const MVAssignment& nu, const char* what) {
  check_same_degree(mu, nu);
  if (!is_valid_uniform(mu))
    throw ValidationError(ErrorCode::InvalidMv,
                          std::string(what) + ": start assignment " + mu.str() +
                              " is not valid");
  if (!is_valid_uniform(nu))
    throw ValidationError(ErrorCode::InvalidMv,
                          std::string(what) + ": target assignment " + nu.str() +
                              " is not valid");
}

}  // namespace

FlipPath fea_shwoop(const MVAssignment& mu, const MVAssignment& nu) {
  check_pair(mu, nu, "fea_shwoop");
  const int two_n = mu.degree();
  FlipPath path{mu, nu, {}};
  MVAssignment eta = mu;

  auto flip = [&](int face) {
    eta = flip_face(eta, face);
    if (!is_valid_uniform(eta))
      throw InternalError("fea_shwoop: flipping face " + std::to_string(face) +
                          " left the valid set at " + eta.str());
    path.faces.push_back(face);
  };

  for (int i = 1; i <= two_n - 1; ++i) {
    if (eta.value(i) == nu.value(i)) continue;
    if (is_flippable(eta, i)) {
      flip(i);
      continue;
    }
    // Blocked: e_i, e_{i+1} share the minority parity. Scan forward for the
    // first flippable face, then cascade back down to a_i. The scan stays
    // below a_2n for valid inputs (a run of minority creases reaching e_2n
    // would contradict Maekawa on nu).
    int cursor = i;
    while (!is_flippable(eta, cursor)) {
      ++cursor;
      if (cursor > two_n - 1)
        throw InternalError("fea_shwoop: scan ran past face " +
                            std::to_string(two_n - 1) + " from " + eta.str());
    }
    for (int j = cursor; j >= i; --j) flip(j);
  }

  if (eta != nu)
    throw InternalError("fea_shwoop: terminated at " + eta.str() +
                        ", expected " + nu.str());
  return path;
}

FlipPath fea_halves(const MVAssignment& mu, const MVAssignment& nu) {
  check_pair(mu, nu, "fea_halves");
  const int two_n = mu.degree();
  const int n = two_n / 2;

  FaceSet working = between_faces(mu, nu);
  if (working.size() > n) working = working.complement();

  FlipPath path{mu, nu, {}};
  MVAssignment eta = mu;
  std::uint32_t remaining = working.bits;

  while (remaining != 0) {
    int chosen = 0;
    for (int k = 1; k <= two_n; ++k) {
      if (!((remaining >> (k - 1)) & 1)) continue;
      if (is_flippable(eta, k)) {
        chosen = k;
        break;
      }
    }
    if (chosen == 0)
      throw InternalError("fea_halves: no flippable face left in the working set"
                          " at " + eta.str());
    eta = flip_face(eta, chosen);
    if (!is_valid_uniform(eta))
      throw InternalError("fea_halves: flipping face " + std::to_string(chosen) +
                          " left the valid set at " + eta.str());
    path.faces.push_back(chosen);
    remaining &= ~(std::uint32_t{1} << (chosen - 1));
  }

  if (eta != nu)
    throw InternalError("fea_halves: terminated at " + eta.str() +
                        ", expected " + nu.str());
  return path;
}

bool verify_path(const FlipPath& path) { return verify_path(path, nullptr); }

bool verify_path(const FlipPath& path, std::string* diagnostic) {
  auto fail = [&](const std::string& msg) {
    if (diagnostic) *diagnostic = msg;
    return false;
  };

  if (path.start.degree() != path.end.degree())
    return fail("start and end degrees differ");
  if (!is_valid_uniform(path.start))
    return fail("start assignment " + path.start.str() + " is invalid");

  MVAssignment eta = path.start;
  for (std::size_t step = 0; step < path.faces.size(); ++step) {
    int face = path.faces[step];
    if (face < 1 || face > eta.degree())
      return fail("step " + std::to_string(step + 1) + ": face index " +
                  std::to_string(face) + " out of range");
    eta = flip_face(eta, face);
    if (!is_valid_uniform(eta))
      return fail("step " + std::to_string(step + 1) + ": flipping face " +
                  std::to_string(face) + " produced invalid " + eta.str());
  }
  if (eta != path.end)
    return fail("path terminates at " + eta.str() + ", expected " +
                path.end.str());
  return true;
}

nlohmann::ordered_json path_to_json(const FlipPath& path) {
  nlohmann::ordered_json doc;
  doc["start"] = path.start.str();
  doc["end"] = path.end.str();
  doc["faces"] = path.faces;
  return doc;
}

FlipPath path_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("start") || !doc.contains("end") ||
      !doc.contains("faces"))
    throw ValidationError(ErrorCode::BadFormat,
                          "path document needs start, end, faces");
  FlipPath p{MVAssignment::from_string(doc["start"].get<std::string>()),
             MVAssignment::from_string(doc["end"].get<std::string>()),
             doc["faces"].get<std::vector<int>>()};
  check_same_degree(p.start, p.end);
  return p;
}

}  // namespace ofg

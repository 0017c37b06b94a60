#ifndef OFG_CREASE_PATTERN_HPP
#define OFG_CREASE_PATTERN_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace ofg {

// Sector angles are exact rationals in degrees. Validity logic never touches
// floating point; comparisons and the crimp reduction stay exact.
using Rational = mpq_class;

// Accepts "45", "-3", "180/7", "22.5" (decimal expanded exactly).
Rational parse_rational(std::string_view text);

std::string rational_str(const Rational& r);

// A single flat-foldable vertex of even degree 2n: crease e_i is followed by
// sector angle angles[i-1] (between e_i and e_{i+1}, cyclic).
//
// Construction enforces: even degree >= 2, all angles positive, angle sum
// exactly 360, and the Kawasaki alternating sum a1 - a2 + ... - a_2n == 0.
class CreasePattern {
 public:
  // A_2n: all 2n sector angles equal to 180/n degrees.
  static CreasePattern uniform(int n);
  static CreasePattern from_angles(std::vector<Rational> angles_degrees);
  static CreasePattern from_strings(const std::vector<std::string>& angles);

  // Document form: {"degree": 6, "angles": ["45","15","60","85","75","80"]}
  // or the shorthand {"degree": 8, "uniform": true}.
  static CreasePattern from_json(const nlohmann::json& doc);
  static CreasePattern load(const std::string& path);

  int degree() const { return static_cast<int>(angles_.size()); }
  int half_degree() const { return degree() / 2; }  // the n in 2n
  const std::vector<Rational>& angles() const { return angles_; }
  bool uniform_angles() const { return uniform_; }

  nlohmann::json to_json() const;

  friend bool operator==(const CreasePattern&, const CreasePattern&) = default;

 private:
  explicit CreasePattern(std::vector<Rational> angles);

  std::vector<Rational> angles_;
  bool uniform_ = false;
};

}  // namespace ofg

#endif  // OFG_CREASE_PATTERN_HPP

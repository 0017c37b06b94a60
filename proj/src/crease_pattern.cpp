#include "ofg/crease_pattern.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ofg/errors.hpp"
#include "ofg/mv_assignment.hpp"

namespace ofg {

Rational parse_rational(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty())
    throw ValidationError(ErrorCode::BadFormat, "empty rational literal");

  auto bad = [&]() -> ValidationError {
    return ValidationError(ErrorCode::BadFormat,
                           "cannot parse rational '" + std::string(text) + "'");
  };

  std::string digits_ok = "0123456789";
  auto is_int = [&](const std::string& s) {
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };

  if (auto slash = t.find('/'); slash != std::string::npos) {
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw bad();
    mpz_class d(den);
    if (d == 0) throw ValidationError(ErrorCode::BadFormat, "zero denominator");
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = t.find('.'); dot != std::string::npos) {
    std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
    if (ip.empty() || ip == "+" || ip == "-") ip += "0";
    if (!is_int(ip) || fp.empty()) throw bad();
    for (char c : fp)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    mpz_class scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    mpz_class whole(ip), frac(fp);
    mpz_class num = whole * scale + (whole < 0 || ip[0] == '-' ? -frac : frac);
    Rational r(num, scale);
    r.canonicalize();
    return r;
  }
  if (!is_int(t)) throw bad();
  return Rational(mpz_class(t));
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

CreasePattern::CreasePattern(std::vector<Rational> angles) : angles_(std::move(angles)) {
  int d = degree();
  if (d < 2 || d % 2 != 0 || d > kMaxDegree)
    throw ValidationError(ErrorCode::InvalidAngles,
                          "pattern degree must be even, 2.." +
                              std::to_string(kMaxDegree) + ", got " +
                              std::to_string(d));
  Rational sum = 0, alt = 0;
  for (int i = 0; i < d; ++i) {
    if (angles_[static_cast<std::size_t>(i)] <= 0)
      throw ValidationError(ErrorCode::InvalidAngles,
                            "sector angles must be positive");
    sum += angles_[static_cast<std::size_t>(i)];
    if (i % 2 == 0)
      alt += angles_[static_cast<std::size_t>(i)];
    else
      alt -= angles_[static_cast<std::size_t>(i)];
  }
  if (sum != 360)
    throw ValidationError(ErrorCode::InvalidAngles,
                          "sector angles must sum to 360, got " + rational_str(sum));
  if (alt != 0)
    throw ValidationError(ErrorCode::Kawasaki,
                          "alternating angle sum must vanish, got " + rational_str(alt));
  Rational equal_angle = Rational(360) / d;
  uniform_ = true;
  for (const Rational& a : angles_)
    if (a != equal_angle) {
      uniform_ = false;
      break;
    }
}

CreasePattern CreasePattern::uniform(int n) {
  if (n < 1 || 2 * n > kMaxDegree)
    throw ValidationError(ErrorCode::InvalidAngles,
                          "uniform pattern needs 1 <= n <= " +
                              std::to_string(kMaxDegree / 2));
  return CreasePattern(std::vector<Rational>(static_cast<std::size_t>(2 * n),
                                             Rational(180) / n));
}

CreasePattern CreasePattern::from_angles(std::vector<Rational> angles_degrees) {
  return CreasePattern(std::move(angles_degrees));
}

CreasePattern CreasePattern::from_strings(const std::vector<std::string>& angles) {
  std::vector<Rational> parsed;
  parsed.reserve(angles.size());
  for (const std::string& a : angles) parsed.push_back(parse_rational(a));
  return CreasePattern(std::move(parsed));
}

CreasePattern CreasePattern::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("degree") ||
      !doc["degree"].is_number_integer())
    throw ValidationError(ErrorCode::BadFormat,
                          "pattern document needs an integer 'degree' field");
  int degree = doc["degree"].get<int>();
  bool uniform_flag = doc.value("uniform", false);

  std::vector<Rational> angles;
  if (doc.contains("angles")) {
    if (!doc["angles"].is_array())
      throw ValidationError(ErrorCode::BadFormat, "'angles' must be an array");
    for (const auto& a : doc["angles"]) {
      if (a.is_string())
        angles.push_back(parse_rational(a.get<std::string>()));
      else if (a.is_number_integer())
        angles.push_back(Rational(a.get<long>()));
      else
        throw ValidationError(ErrorCode::BadFormat,
                              "angle entries must be strings or integers");
    }
  } else if (uniform_flag) {
    if (degree % 2 != 0)
      throw ValidationError(ErrorCode::InvalidAngles, "uniform degree must be even");
    return CreasePattern::uniform(degree / 2);
  } else {
    throw ValidationError(ErrorCode::BadFormat,
                          "pattern document needs 'angles' or 'uniform: true'");
  }

  CreasePattern p = CreasePattern(std::move(angles));
  if (p.degree() != degree)
    throw ValidationError(ErrorCode::DegreeMismatch,
                          "'degree' is " + std::to_string(degree) + " but " +
                              std::to_string(p.degree()) + " angles given");
  if (uniform_flag && !p.uniform_angles())
    throw ValidationError(ErrorCode::InvalidAngles,
                          "'uniform: true' but angles are not all equal");
  return p;
}

CreasePattern CreasePattern::load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError(ErrorCode::BadFormat, "cannot open pattern file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(ErrorCode::BadFormat,
                          "pattern file " + path + ": " + e.what());
  }
  return from_json(doc);
}

nlohmann::json CreasePattern::to_json() const {
  nlohmann::json doc;
  doc["degree"] = degree();
  if (uniform_) doc["uniform"] = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const Rational& a : angles_) arr.push_back(rational_str(a));
  doc["angles"] = arr;
  return doc;
}

}  // namespace ofg

#include "ofg/counting.hpp"

#include <string>

#include "ofg/bitcomb.hpp"
#include "ofg/errors.hpp"

namespace ofg {

namespace {

void check_n(int n, const char* what) {
  if (n < 1)
    throw ValidationError(ErrorCode::LimitExceeded,
                          std::string(what) + " requires n >= 1, got " +
                              std::to_string(n));
}

void check_limit(int n, int limit, const char* what) {
  check_n(n, what);
  if (n > limit)
    throw ValidationError(ErrorCode::LimitExceeded,
                          std::string(what) + " capped at n <= " +
                              std::to_string(limit) + ", got n = " +
                              std::to_string(n));
}

// Exact quotient; anything else is an arithmetic bug, not bad input.
BigInt divide_exact(const BigInt& numerator, const BigInt& divisor,
                    const char* what) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(),
              divisor.get_mpz_t());
  if (r != 0)
    throw InternalError(std::string(what) + ": division left remainder " +
                        r.get_str());
  return q;
}

// Degree of the vertex `mask` (majority class chosen by `majority_bit`):
// 2n minus the number of cyclically adjacent minority-parity pairs.
inline int vertex_degree(std::uint32_t mask, int two_n, bool majority_mountain) {
  std::uint32_t shifted = rotr1_bits(mask, two_n);  // bit i -> crease e_{i+2}
  std::uint32_t bad;
  if (majority_mountain)
    bad = ~mask & ~shifted & low_mask(two_n);  // VV faces
  else
    bad = mask & shifted;  // MM faces
  return two_n - std::popcount(bad);
}

template <class Visit>
void for_each_class_mask(int two_n, int popcount, Visit&& visit) {
  if (popcount == 0) {
    visit(std::uint32_t{0});
    return;
  }
  std::uint32_t full = low_mask(two_n);
  for (std::uint32_t m = first_combination(popcount); m != 0 && m <= full;
       m = next_combination(m))
    visit(m);
}

}  // namespace

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt vertex_count_formula(int n) {
  check_n(n, "vertex_count_formula");
  return 2 * binomial(static_cast<unsigned long>(2 * n),
                      static_cast<unsigned long>(n - 1));
}

BigInt edge_count_formula(int n) {
  check_n(n, "edge_count_formula");
  BigInt numerator = BigInt(n + 1) * BigInt(3 * n - 2) *
                     binomial(static_cast<unsigned long>(2 * n),
                              static_cast<unsigned long>(n - 1));
  return divide_exact(numerator, BigInt(2 * n - 1), "edge_count_formula");
}

BigInt degree_count_formula(int n, int k) {
  if (n < 2)
    throw ValidationError(ErrorCode::LimitExceeded,
                          "degree_count_formula requires n >= 2, got " +
                              std::to_string(n));
  if (k < n + 2 || k > 2 * n) return 0;
  BigInt numerator = BigInt(4 * n) *
                     binomial(static_cast<unsigned long>(n + 1),
                              static_cast<unsigned long>(k - n - 1)) *
                     binomial(static_cast<unsigned long>(n - 2),
                              static_cast<unsigned long>(k - n - 2));
  return divide_exact(numerator, BigInt(n + 1), "degree_count_formula");
}

std::uint64_t edge_count_brute(int n, int limit) {
  check_limit(n, limit, "edge_count_brute");
  int two_n = 2 * n;
  std::uint64_t degree_sum = 0;
  for_each_class_mask(two_n, n + 1, [&](std::uint32_t m) {
    degree_sum += static_cast<std::uint64_t>(vertex_degree(m, two_n, true));
  });
  for_each_class_mask(two_n, n - 1, [&](std::uint32_t m) {
    degree_sum += static_cast<std::uint64_t>(vertex_degree(m, two_n, false));
  });
  return degree_sum / 2;
}

std::map<int, std::uint64_t> degree_histogram_brute(int n, int limit) {
  check_limit(n, limit, "degree_histogram_brute");
  int two_n = 2 * n;
  std::map<int, std::uint64_t> hist;
  for_each_class_mask(two_n, n + 1, [&](std::uint32_t m) {
    ++hist[vertex_degree(m, two_n, true)];
  });
  for_each_class_mask(two_n, n - 1, [&](std::uint32_t m) {
    ++hist[vertex_degree(m, two_n, false)];
  });
  return hist;
}

std::vector<BigInt> edge_count_sequence(int max_n) {
  check_n(max_n, "edge_count_sequence");
  std::vector<BigInt> seq;
  seq.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) seq.push_back(edge_count_formula(n));
  return seq;
}

}  // namespace ofg

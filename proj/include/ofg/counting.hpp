#ifndef OFG_COUNTING_HPP
#define OFG_COUNTING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace ofg {

using BigInt = mpz_class;

// Brute-force enumeration is capped: beyond n = 13 the per-class pattern
// count C(2n, n-1) stops being a few-second job. Overridable per call and,
// in the CLI, via OFG_MAX_N.
inline constexpr int kDefaultEnumLimit = 13;

BigInt binomial(unsigned long n, unsigned long k);

// 2 * C(2n, n-1): valid assignments of A_2n across both Maekawa classes.
BigInt vertex_count_formula(int n);

// (n+1)(3n-2)/(2n-1) * C(2n, n-1), evaluated exactly; the division is
// asserted to leave no remainder.
BigInt edge_count_formula(int n);

// f_k(2n) = 4n/(n+1) * C(n+1, k-n-1) * C(n-2, k-n-2) for n+2 <= k <= 2n,
// zero outside that range. Requires n >= 2.
BigInt degree_count_formula(int n, int k);

// Walks every valid assignment, derives its degree by counting cyclically
// adjacent minority pairs (VV when majority-mountain, MM when
// majority-valley), and halves the degree sum.
std::uint64_t edge_count_brute(int n, int limit = kDefaultEnumLimit);

// Same walk, binned by vertex degree.
std::map<int, std::uint64_t> degree_histogram_brute(int n, int limit = kDefaultEnumLimit);

// Edge counts for n = 1..max_n by the closed form.
std::vector<BigInt> edge_count_sequence(int max_n);

}  // namespace ofg

#endif  // OFG_COUNTING_HPP

#ifndef OFG_BITCOMB_HPP
#define OFG_BITCOMB_HPP

#include <bit>
#include <cassert>
#include <cstdint>

// Bit-level helpers for enumerating fixed-popcount masks over a cyclic word
// of `width` bits (width <= 32). Masks are visited in ascending numeric
// order, which doubles as colex order on the bit-position sets, so
// rank/unrank below agree with next_combination iteration.

namespace ofg {

inline std::uint32_t low_mask(int width) {
  assert(width >= 0 && width <= 32);
  return width == 32 ? 0xffffffffu : ((std::uint32_t{1} << width) - 1);
}

// Cyclic left rotation within the low `width` bits.
inline std::uint32_t rotl_bits(std::uint32_t m, int shift, int width) {
  assert(width > 0 && width <= 32);
  shift %= width;
  if (shift == 0) return m & low_mask(width);
  return ((m << shift) | (m >> (width - shift))) & low_mask(width);
}

// Bit i of the result is bit (i+1 mod width) of m.
inline std::uint32_t rotr1_bits(std::uint32_t m, int width) {
  return rotl_bits(m, width - 1, width);
}

// Reverse of the low `width` bits (a reflection of the cyclic word).
inline std::uint32_t reverse_bits(std::uint32_t m, int width) {
  std::uint32_t out = 0;
  for (int i = 0; i < width; ++i)
    if (m & (std::uint32_t{1} << i)) out |= std::uint32_t{1} << (width - 1 - i);
  return out;
}

inline std::uint32_t first_combination(int k) {
  assert(k >= 0 && k <= 32);
  return low_mask(k);
}

// Gosper's hack: smallest mask greater than v with the same popcount.
// Returns 0 on wraparound past 32 bits (or for v == 0); callers stop when
// the result exceeds low_mask(width).
inline std::uint32_t next_combination(std::uint32_t v) {
  if (v == 0) return 0;
  std::uint32_t u = v & (~v + 1);
  std::uint32_t w = v + u;
  if (w == 0) return 0;  // popcount would overflow the word
  return w | (((v ^ w) / u) >> 2);
}

// C(n, k) in 64 bits; exact for n <= 32.
inline std::uint64_t binom_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

// Colex rank of a popcount-k mask among all popcount-k masks, 0-based.
inline std::uint64_t rank_combination(std::uint32_t mask) {
  std::uint64_t rank = 0;
  int i = 1;
  while (mask) {
    int c = std::countr_zero(mask);
    rank += binom_u64(c, i);
    mask &= mask - 1;
    ++i;
  }
  return rank;
}

// Inverse of rank_combination for popcount k within `width` bits.
inline std::uint32_t unrank_combination(std::uint64_t rank, int k, int width) {
  std::uint32_t mask = 0;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 < width && binom_u64(c + 1, i) <= rank) ++c;
    mask |= std::uint32_t{1} << c;
    rank -= binom_u64(c, i);
  }
  assert(rank == 0);
  return mask;
}

}  // namespace ofg

#endif  // OFG_BITCOMB_HPP

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "tamari/errors.hpp"

namespace tamari {

/// Exact nonnegative count. Signed underneath so that alternating sums can
/// be formed before their (nonnegative) result is checked.
using Count = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Count& c) { return c.str(); }

inline Count parse_count(const std::string& text) {
  if (text.empty() ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    throw ValidationError("not a nonnegative decimal integer: '" + text + "'");
  }
  return Count(text);
}

/// n choose k; zero outside 0 <= k <= n.
inline Count binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count result = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

inline Count factorial(std::int64_t n) {
  Count result = 1;
  for (std::int64_t j = 2; j <= n; ++j) result *= j;
  return result;
}

namespace detail {

// 64-bit accumulation used by the hot counting loops. Throws on wraparound
// so the caller can redo the work in Count.
struct Overflow {};

inline void checked_add(std::uint64_t& acc, std::uint64_t v) {
  if (__builtin_add_overflow(acc, v, &acc)) throw Overflow{};
}
inline void checked_add(Count& acc, const Count& v) { acc += v; }

}  // namespace detail

}  // namespace tamari

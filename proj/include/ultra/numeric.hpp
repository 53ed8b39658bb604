#ifndef ULTRA_NUMERIC_HPP_
#define ULTRA_NUMERIC_HPP_

#include <cstddef>
#include <cstdint>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace ultra {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Enumeration budget shared by every exponential search in the library.
struct Budget {
  std::size_t limit = 1'000'000;
  std::size_t used = 0;

  bool spend(std::size_t n = 1) noexcept {
    used += n;
    return used <= limit;
  }
};

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

// Mathematical modulus; result in [0, m).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace ultra

#endif  // ULTRA_NUMERIC_HPP_

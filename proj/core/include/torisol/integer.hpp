#ifndef TORISOL_INTEGER_HPP
#define TORISOL_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>

namespace torisol {

// Exact arbitrary-precision integer. Nothing in this library ever rounds.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline bool fits_int64(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    return v >= lo && v <= hi;
}

// c = k*d + s with 0 <= s < d, for d > 0.
inline std::pair<Int, Int> div_pos_rem(const Int& c, const Int& d) {
    Int k = c / d;
    Int s = c - k * d;
    if (s < 0) {
        k -= 1;
        s += d;
    }
    return {k, s};
}

// c = k*d - s with 0 <= s < d, for d > 0.  Companion of div_pos_rem used by
// the l = -1 branch of the Diophantine solver.
inline std::pair<Int, Int> div_neg_rem(const Int& c, const Int& d) {
    auto [k, s] = div_pos_rem(c, d);
    if (s == 0) return {k, Int(0)};
    return {k + 1, d - s};
}

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace torisol

#endif

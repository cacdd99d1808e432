#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace shadowcalc {

// Exact arbitrary-precision integer used for all counts, binomials and
// partial Euler characteristics. Naturals are represented by nonnegative
// values of this type; contracts state where negatives are permitted.
using Int = boost::multiprecision::cpp_int;

inline bool fits_u64(const Int& v) {
    return v >= 0 && v <= Int(UINT64_MAX);
}

inline std::uint64_t to_u64(const Int& v) {
    return static_cast<std::uint64_t>(v);
}

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace shadowcalc

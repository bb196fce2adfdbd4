#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace fillobs {

// All linear algebra in this project is exact; intermediate entries of a
// Smith reduction can be much larger than the input, so a fixed-width type
// is never acceptable here.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline std::string to_string(const Int& v) { return v.str(); }

inline bool is_prime(const Int& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

} // namespace fillobs

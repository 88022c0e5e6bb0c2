#pragma once

// Exact arbitrary-precision integer arithmetic. Nothing in this library uses
// floating point; intermediate values in fraction-free elimination and Smith
// reduction grow well past 64 bits, so all entries are cpp_int.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tquot {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

// gcd is always nonnegative; gcd(0, 0) = 0.
inline Integer gcd_int(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

// Strict decimal parse; rejects anything cpp_int would accept as hex/octal.
inline Integer parse_integer(std::string_view s) {
    if (!is_integer_token(s)) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return Integer(std::string(s));
}

inline std::string to_string(const Integer& a) { return a.str(); }

}  // namespace tquot

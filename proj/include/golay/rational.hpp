#pragma once

#include <boost/rational.hpp>
#include <sstream>
#include <string>

namespace golay {

/// Exact rational arithmetic for the combinatorial constants. Everything
/// this library computes fits comfortably in long long (numerators stay
/// below ~10^6 before reduction).
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

}  // namespace golay

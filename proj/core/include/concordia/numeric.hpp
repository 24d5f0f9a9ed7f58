#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>

namespace concordia {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

// Renders in lowest terms; integers drop the "/1".
inline std::string to_string(const Rational& r) {
    std::string s = r.numerator().str();
    if (r.denominator() != 1) s += "/" + r.denominator().str();
    return s;
}

inline bool is_even_integer(const Rational& r) {
    return r.denominator() == 1 && r.numerator() % 2 == 0;
}

}  // namespace concordia

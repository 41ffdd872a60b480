#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace zetamap {

// Exact arbitrary-precision arithmetic. Rationals are kept in lowest terms
// with a positive denominator; comparison and addition never round.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

}  // namespace zetamap

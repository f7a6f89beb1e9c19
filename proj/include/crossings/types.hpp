#ifndef CROSSINGS_TYPES_HPP
#define CROSSINGS_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace crossings {

// Exact arithmetic everywhere upstream of the float bound/KS evaluations.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "p/q" with q > 0, lowest terms (cpp_rational keeps this canonical form).
inline std::string rational_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace crossings

#endif

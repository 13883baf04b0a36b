#ifndef P7C_RATIONAL_HPP
#define P7C_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace p7c {

using Rational = boost::multiprecision::cpp_rational;
using Weights = std::vector<Rational>;

// Accepts "7", "-3/4", "2.5" and "-0.125"; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

// Integers print bare, everything else as "p/q".
std::string to_string(const Rational& r);

// Always "p/q", even for integers.
std::string to_fraction_string(const Rational& r);

Weights unit_weights(int n);

}  // namespace p7c

#endif

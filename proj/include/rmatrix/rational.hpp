#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "rmatrix/errors.hpp"

namespace rmatrix {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always reduced with positive denominator.
using BigRat = boost::multiprecision::cpp_rational;

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const BigRat& r);

/// Parses the canonical form only. Rejects "0/1", "2/4", "+1", "01",
/// "1/-2" and anything else that rat_to_string would never produce.
BigRat parse_rational(const std::string& s);

}  // namespace rmatrix

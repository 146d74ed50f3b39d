#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lowtype {

// Arbitrary-precision integer used for all coefficients and dimensions.
using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(long long n, long long k);

}  // namespace lowtype

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chowbound {

// Arbitrary-precision signed integer. Header-only backend; value semantics.
using BigInt = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::pow;
using boost::multiprecision::powm;

}  // namespace chowbound

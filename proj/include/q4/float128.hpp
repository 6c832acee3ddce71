#pragma once
// Quad-precision scalar used for high-accuracy reference quadrature.

#include <boost/multiprecision/float128.hpp>

namespace q4 {
using f128 = boost::multiprecision::float128;
}

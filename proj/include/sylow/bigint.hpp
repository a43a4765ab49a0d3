#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sylow {

// Exact arithmetic everywhere: multiplicities, class sizes and partition
// counts overflow 64 bits well inside the supported range.
using Bint = boost::multiprecision::cpp_int;
using Brat = boost::multiprecision::cpp_rational;

}  // namespace sylow

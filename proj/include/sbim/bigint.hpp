#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sbim {

// Exact integer arithmetic everywhere; fraction-free elimination and
// back-substitution are allowed to grow coefficients without bound.
using Int = boost::multiprecision::cpp_int;

} // namespace sbim

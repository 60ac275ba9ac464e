#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gorcone {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline long to_long(const Int& v) { return static_cast<long>(v); }

} // namespace gorcone

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace carterlink {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// "3/4", "-1", "0"
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

} // namespace carterlink

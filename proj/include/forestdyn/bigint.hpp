#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace forestdyn {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace forestdyn

#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace bihamil {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rat_str(const Rational& r) { return r.str(); }

inline double rat_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace bihamil

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ecat {

// Counts, Ehrhart evaluations and volumes never leave exact arithmetic.
using ExactCount = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const ExactCount& value) { return value.str(); }

// Always "p/q", including q = 1, so golden files have a single shape.
std::string to_fraction_string(const ExactRational& value);
ExactRational parse_fraction(const std::string& text);
ExactCount parse_decimal(const std::string& text);

}  // namespace ecat

#include "ecat/exact.hpp"

#include <stdexcept>

namespace ecat {

std::string to_fraction_string(const ExactRational& value) {
  return to_decimal(boost::multiprecision::numerator(value)) + "/" +
         to_decimal(boost::multiprecision::denominator(value));
}

ExactCount parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad integer literal: " + text);
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad integer literal: " + text);
  }
  return ExactCount(text);
}

ExactRational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return ExactRational(parse_decimal(text));
  ExactCount num = parse_decimal(text.substr(0, slash));
  ExactCount den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  return ExactRational(num, den);
}

}  // namespace ecat

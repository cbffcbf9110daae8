#include "symprod/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace symprod {

std::string to_fraction_string(const Rat& x) {
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rat& x, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits,
                x.convert_to<double>());
  return std::string(buf);
}

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("cannot parse rational: " + text);
  }
}

}  // namespace symprod

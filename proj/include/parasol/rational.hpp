#ifndef PARASOL_RATIONAL_HPP
#define PARASOL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace parasol {

/// Arbitrary-precision exact rational. cpp_rational keeps the canonical form
/// (positive denominator, gcd(num, den) = 1) after every operation.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int sign_of(const Rational& q) { return q.sign(); }

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "-p" or "p/q". Throws InputError on malformed input or q <= 0
/// in a way that cannot be canonicalized (q = 0).
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  std::size_t pos = 0;
  auto parse_int = [&](const char* what) {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0)
      throw InputError(std::string("malformed rational literal '") + text + "': expected " + what);
    return Int(text.substr(start, pos - start));
  };
  Int num = parse_int("integer");
  Int den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = parse_int("denominator");
    if (den == 0) throw InputError("rational literal with zero denominator: " + text);
  }
  if (pos != text.size())
    throw InputError(std::string("trailing characters in rational literal '") + text + "'");
  return Rational(num, den);
}

}  // namespace parasol

#endif

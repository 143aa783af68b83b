#include "transcend/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>

namespace transcend {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Int pow10(std::size_t k) {
  Int r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= 10;
  return r;
}

// cpp_int's string constructor reads a leading 0 as an octal prefix ("09"
// throws); strip redundant leading zeros so digit runs parse as decimal.
Int parse_digits(std::string_view s) {
  std::size_t i = 0;
  while (i + 1 < s.size() && s[i] == '0') ++i;
  return Int(std::string(s.substr(i)));
}

}  // namespace

Rational Rational::from_decimal(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(text)) throw std::invalid_argument("bad decimal literal");
    return Rational(parse_digits(text));
  }
  std::string_view ip = text.substr(0, dot);
  std::string_view fp = text.substr(dot + 1);
  if (!all_digits(ip) || !all_digits(fp)) {
    throw std::invalid_argument("bad decimal literal");
  }
  Int scale = pow10(fp.size());
  Int num = parse_digits(ip) * scale + parse_digits(fp);
  return Rational(num, scale);
}

Rational Rational::from_fraction(std::string_view text) {
  bool neg = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    neg = text[0] == '-';
    text.remove_prefix(1);
  }
  Rational r;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!all_digits(text)) throw std::invalid_argument("bad rational literal");
    r = Rational(parse_digits(text));
  } else {
    std::string_view p = text.substr(0, slash);
    std::string_view q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) {
      throw std::invalid_argument("bad rational literal");
    }
    r = Rational(parse_digits(p), parse_digits(q));
  }
  return neg ? -r : r;
}

Rational Rational::pow(long long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long long n = invert ? static_cast<unsigned long long>(-(e + 1)) + 1
                                : static_cast<unsigned long long>(e);
  if (invert && is_zero()) throw DivisionByZero("0 raised to a negative power");
  Rational acc(1);
  Rational b = *this;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return invert ? Rational(1) / acc : acc;
}

std::string Rational::to_string() const {
  std::string s = numerator().str();
  if (!is_integer()) s += "/" + denominator().str();
  return s;
}

std::string Rational::fraction_string() const {
  return numerator().str() + "/" + denominator().str();
}

std::optional<std::string> Rational::decimal_string() const {
  Int den = denominator();
  unsigned twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;
  unsigned places = twos > fives ? twos : fives;
  Int scaled = numerator() * pow10(places) / denominator();
  bool neg = scaled < 0;
  std::string digits = (neg ? Int(-scaled) : scaled).str();
  std::string out;
  if (places == 0) {
    out = digits;
  } else {
    while (digits.size() <= places) digits.insert(digits.begin(), '0');
    out = digits.substr(0, digits.size() - places) + "." +
          digits.substr(digits.size() - places);
  }
  return neg ? "-" + out : out;
}

}  // namespace transcend

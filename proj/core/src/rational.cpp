#include "qes/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qes {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("not an exact rational literal: '" + text + "'");
  };

  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw bad();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) throw bad();
    const Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(Integer(num), d);
  }

  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    bool negative = false;
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
      negative = head[0] == '-';
      head.erase(head.begin());
    }
    if (head.empty() && frac.empty()) throw bad();
    if (!head.empty() && !is_integer_literal(head)) throw bad();
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    }
    Integer scaled = head.empty() ? Integer(0) : Integer(head);
    Integer denom = 1;
    for (char c : frac) {
      scaled = scaled * 10 + (c - '0');
      denom *= 10;
    }
    Rational r(scaled, denom);
    return negative ? -r : r;
  }

  if (!is_integer_literal(s)) throw bad();
  return Rational(Integer(s));
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace qes

#include "p7c/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace p7c {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

boost::multiprecision::cpp_int parse_int(const std::string& s) {
  return boost::multiprecision::cpp_int(s);
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::size_t b = raw.find_first_not_of(" \t\r\n");
  std::size_t e = raw.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) throw std::invalid_argument("empty rational");
  std::string s = raw.substr(b, e - b + 1);
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  Rational out;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw std::invalid_argument("bad rational: " + raw);
    auto den = parse_int(q);
    if (den == 0) throw std::invalid_argument("zero denominator: " + raw);
    out = Rational(parse_int(p), den);
  } else if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
      throw std::invalid_argument("bad rational: " + raw);
    boost::multiprecision::cpp_int den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    out = Rational(parse_int(ip + fp), den);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("bad rational: " + raw);
    out = Rational(parse_int(s));
  }
  return neg ? Rational(-out) : out;
}

std::string to_string(const Rational& r) { return r.str(); }

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Weights unit_weights(int n) { return Weights(static_cast<std::size_t>(n), Rational(1)); }

}  // namespace p7c

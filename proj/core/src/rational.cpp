#include "torideg/rational.hpp"

#include <cctype>

#include "torideg/error.hpp"

namespace torideg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const QVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

ZVector primitive(const QVector& v) {
  Integer den = 1;
  for (const auto& q : v) den = lcm(den, Integer(q.get_den()));
  ZVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * den;
    out[i] = scaled.get_num();
    g = gcd(g, out[i]);
  }
  if (g > 1)
    for (auto& z : out) z /= g;
  return out;
}

QVector to_rational(const ZVector& v) {
  QVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

QVector to_rational(const std::vector<long>& v) {
  QVector out;
  out.reserve(v.size());
  for (long z : v) out.emplace_back(z);
  return out;
}

}  // namespace torideg

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace torideg {

// gmpxx keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from strings are canonicalized
// explicitly in parse_rational.
using Integer = mpz_class;
using Rational = mpq_class;

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;
using ZVector = std::vector<Integer>;
using ZMatrix = std::vector<ZVector>;

/// Parses "7", "-3/4", "+2". Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const QVector& v);

Rational dot(const QVector& a, const QVector& b);

/// Positive integer multiple of v with coprime entries. Zero stays zero.
ZVector primitive(const QVector& v);

QVector to_rational(const ZVector& v);
QVector to_rational(const std::vector<long>& v);

}  // namespace torideg

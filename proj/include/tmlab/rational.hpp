#ifndef TMLAB_RATIONAL_HPP
#define TMLAB_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace tmlab {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// A point or coefficient vector in element space, canonical element order.
using RationalVector = std::vector<Rational>;

/// Parses "7", "-3", "p/q". Throws InputError on malformed text or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Integers print without a denominator.
std::string to_string(const Rational& q);

std::string to_string(const RationalVector& v);

}  // namespace tmlab

#endif

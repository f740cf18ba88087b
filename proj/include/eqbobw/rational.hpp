#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eqbobw {

// Expression templates are disabled so `auto` always yields a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);

/// Largest integer not above q.
Integer floor(const Rational& q);
/// Smallest integer not below q.
Integer ceil(const Rational& q);

bool is_integer(const Rational& q);

/// Reduced "p/q" form. Integers are written with an explicit "/1".
std::string to_fraction_string(const Rational& q);

/// Parses "p/q" or a bare integer "p" (optional leading '-'). Decimals,
/// whitespace and zero denominators are rejected with InputError.
Rational parse_fraction(std::string_view text);

std::vector<Rational> to_rationals(const std::vector<std::int64_t>& values);

}  // namespace eqbobw

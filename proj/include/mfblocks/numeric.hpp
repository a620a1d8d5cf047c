#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace mfblocks {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", integer, or decimal literals ("0.35" -> 7/20) exactly.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

std::string to_string(const Rational& r);

// n = root^2 * squarefree with squarefree >= 1; requires n >= 0.
// Factorization is by trial division; inputs beyond ~19 digits are rejected
// so a nonobvious square factor can never slip through.
std::pair<BigInt, BigInt> squarefree_decompose(const BigInt& n);

BigInt binomial(long n, long k);

BigInt factorial(long n);

} // namespace mfblocks

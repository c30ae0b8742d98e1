#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace quintic {

/// Arbitrary-precision integer used everywhere; there is no fixed-width path.
using Int = mpz_class;

Int pow(const Int& base, unsigned long exponent);

/// base^exponent mod modulus, exponent >= 0, modulus >= 1.
Int powm(const Int& base, const Int& exponent, const Int& modulus);

/// Least non-negative residue of a modulo m (m > 0).
Int mod(const Int& a, const Int& m);

Int gcd(const Int& a, const Int& b);

/// Deterministic trial division. Inputs are desk scale.
bool is_prime(const Int& n);

/// Prime factorization of n >= 1 as (prime, multiplicity) in ascending order.
std::vector<std::pair<Int, unsigned>> factorize(Int n);

/// Smallest prime >= n.
Int next_prime(const Int& n);

std::string to_string(const Int& n);

/// Parses a decimal integer with optional sign; throws std::invalid_argument.
Int parse_int(const std::string& text);

/// Narrowing conversion; throws std::out_of_range if n does not fit.
long to_long(const Int& n);

}  // namespace quintic

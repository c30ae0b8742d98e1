#pragma once

#include <string>

#include "quintic/cyclotomic.hpp"
#include "quintic/residue_field.hpp"
#include "quintic/symbols.hpp"

namespace quintic {

/// Decomposition of a rational prime in Z[zeta_5]; e * f * r = 4.
struct SplittingType {
    int e = 1;  // ramification index
    int f = 1;  // residue degree
    int r = 1;  // number of distinct primes

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// Throws std::invalid_argument for non-prime p.
SplittingType splitting_type(const Int& p);

/// q = pi1 * pi2 (up to a unit) for a prime q = 4 (mod 5).
struct F2Factorization {
    Int q;
    QuadraticInt representation;  // a + b*phi with a^2 + ab - b^2 = q
    PrimeIdealRep first;          // embed(a + b*phi)
    PrimeIdealRep second;         // sigma_2 of the first
    CycInt unit_quotient;         // q / (pi1 * pi2)
};

/// Norm-form search over |a|, |b| <= ceil(sqrt(5q)). Throws
/// std::invalid_argument unless q is a prime congruent to 4 mod 5.
F2Factorization factor_f2_prime(const Int& q);

/// Q(zeta_5, mu^(1/5)).
struct KummerFieldDesc {
    CycInt radicand;
    std::string label;
};

/// Throws std::invalid_argument for mu = 0 or a rational fifth power.
KummerFieldDesc make_kummer_field(const CycInt& mu, std::string label);

enum class KummerCase { Ramified5thPower, SplitsInto5, Inert };

struct KummerSplitting {
    KummerCase kind = KummerCase::Inert;
    SymbolValue symbol;
};

std::string to_string(KummerCase c);

/// Behaviour of the prime pi of Z[zeta_5] in the Kummer extension, read off
/// from {mu / pi}.
KummerSplitting kummer_splitting(const KummerFieldDesc& K, const PrimeIdealRep& pi);

}  // namespace quintic

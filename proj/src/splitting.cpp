#include "quintic/splitting.hpp"

#include <stdexcept>

namespace quintic {

SplittingType splitting_type(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("splitting_type: " + to_string(p) + " is not prime");
    if (p == 5) return SplittingType{4, 1, 1};
    int f = residue_degree(p);
    return SplittingType{1, f, 4 / f};
}

namespace {

Int isqrt_ceil(const Int& n) {
    Int r = sqrt(n);
    if (r * r < n) ++r;
    return r;
}

std::optional<QuadraticInt> positive_representation(const Int& q, const Int& bound) {
    // Smallest a first; among the (at most two) b for that a, the larger.
    for (Int a = 1; a <= bound; ++a) {
        for (Int b = bound; b >= 1; --b) {
            QuadraticInt cand{a, b};
            if (quadratic_norm(cand) == q) return cand;
        }
    }
    return std::nullopt;
}

std::optional<QuadraticInt> any_representation(const Int& q, const Int& bound) {
    static const QuadraticInt phi{0, 1};
    for (Int a = -bound; a <= bound; ++a) {
        for (Int b = -bound; b <= bound; ++b) {
            QuadraticInt cand{a, b};
            Int n = quadratic_norm(cand);
            if (n == q) return cand;
            if (n == -q) return cand * phi;  // phi has norm -1
        }
    }
    return std::nullopt;
}

}  // namespace

F2Factorization factor_f2_prime(const Int& q) {
    if (!is_prime(q) || mod(q, 5) != 4) {
        throw std::invalid_argument("factor_f2_prime: " + to_string(q) +
                                    " is not a prime congruent to 4 mod 5");
    }
    const Int bound = isqrt_ceil(5 * q);
    auto rep = positive_representation(q, bound);
    if (!rep) rep = any_representation(q, bound);
    if (!rep) {
        throw std::logic_error("factor_f2_prime: no representation of " + to_string(q) +
                               " by a^2 + ab - b^2 within the bound");
    }

    F2Factorization out;
    out.q = q;
    out.representation = *rep;
    CycInt pi1 = embed_quadratic(*rep);
    CycInt pi2 = conjugate(pi1, 2);
    out.first = build_residue_field(pi1);
    out.second = build_residue_field(pi2);

    auto quotient = div_exact(CycInt(q), pi1 * pi2);
    if (!quotient || !is_unit(*quotient)) {
        throw std::logic_error("factor_f2_prime: pi1 * pi2 is not an associate of q");
    }
    out.unit_quotient = *quotient;
    if (abs(norm(pi1)) != q * q || abs(norm(pi2)) != q * q) {
        throw std::logic_error("factor_f2_prime: prime norms differ from q^2");
    }
    return out;
}

KummerFieldDesc make_kummer_field(const CycInt& mu, std::string label) {
    if (mu.is_zero()) throw std::invalid_argument("Kummer radicand must be nonzero");
    if (mu.is_rational()) {
        Int m = abs(mu[0]);
        Int r;
        if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), 5) != 0) {
            throw std::invalid_argument("Kummer radicand " + to_string(mu[0]) +
                                        " is a fifth power");
        }
    }
    return KummerFieldDesc{mu, std::move(label)};
}

std::string to_string(KummerCase c) {
    switch (c) {
        case KummerCase::Ramified5thPower: return "Ramified5thPower";
        case KummerCase::SplitsInto5: return "SplitsInto5";
        case KummerCase::Inert: return "Inert";
    }
    return "?";
}

KummerSplitting kummer_splitting(const KummerFieldDesc& K, const PrimeIdealRep& pi) {
    SymbolValue s = quintic_symbol(K.radicand, pi);
    KummerSplitting out;
    out.symbol = s;
    if (s.is_zero()) {
        out.kind = KummerCase::Ramified5thPower;
    } else if (s.exponent == 0) {
        out.kind = KummerCase::SplitsInto5;
    } else {
        out.kind = KummerCase::Inert;
    }
    return out;
}

}  // namespace quintic

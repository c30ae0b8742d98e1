#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "quintic/splitting.hpp"
#include "quintic/symbols.hpp"

using namespace quintic;

namespace {

std::vector<PrimeIdealRep> small_primes() {
    std::vector<PrimeIdealRep> out = {build_residue_field(CycInt(2)), build_residue_field(CycInt(3))};
    for (long q : {19L, 29L}) {
        auto f = factor_f2_prime(q);
        out.push_back(f.first);
        out.push_back(f.second);
    }
    return out;
}

}  // namespace

TEST_CASE("symbol values") {
    CHECK(SymbolValue::root(7) == SymbolValue::root(2));
    CHECK(SymbolValue::root(-1) == SymbolValue::root(4));
    CHECK(SymbolValue::root(0).is_one());
    CHECK(SymbolValue::zero().is_zero());
    CHECK(SymbolValue::root(3) * SymbolValue::root(4) == SymbolValue::root(2));
    CHECK((SymbolValue::zero() * SymbolValue::root(1)).is_zero());
    CHECK(pow(SymbolValue::root(2), 3) == SymbolValue::root(1));
    CHECK(pow(SymbolValue::root(2), 0).is_one());
}

TEST_CASE("symbol examples") {
    PrimeIdealRep three = build_residue_field(CycInt(3));
    CHECK(quintic_symbol(CycInt(19), three) == SymbolValue::root(0));
    PrimeIdealRep two = build_residue_field(CycInt(2));
    for (long p : {3L, 7L, 11L, 13L, 23L, 43L, 101L}) CHECK(quintic_symbol(CycInt(p), two).is_one());

    auto f = factor_f2_prime(19);
    CHECK(quintic_symbol(CycInt(19) * CycInt(3, 1, 0, 2), f.first).is_zero());
    CHECK(brute_force_symbol(CycInt(1), f.first).is_one());
    CHECK(brute_force_symbol(CycInt(2), f.first).is_one());
    CHECK(brute_force_symbol(CycInt(2), f.second).is_one());
}

TEST_CASE("every rational integer is a fifth power residue above q = 4 mod 5") {
    // q - 1 divides (q^2 - 1)/5, and a rational integer lies in F_q^*.
    for (long q : {19L, 29L, 59L}) {
        auto f = factor_f2_prime(q);
        for (long a = 1; a < q; ++a) {
            CHECK(quintic_symbol(CycInt(a), f.first).is_one());
            CHECK(quintic_symbol(CycInt(a), f.second).is_one());
        }
    }
}

TEST_CASE("symbol agrees with the enumerated field") {
    std::mt19937_64 rng(31);
    for (const auto& P : small_primes()) {
        EnumeratedField E(P);
        int nontrivial = 0;
        for (int i = 0; i < 100; ++i) {
            CycInt a = oracle::random_cycint(rng, -50, 50);
            SymbolValue s = quintic_symbol(a, P);
            CHECK(s == E.symbol(a));
            if (!s.is_zero()) CHECK(s.is_one() == E.is_fifth_power(a));
            if (!s.is_zero() && !s.is_one()) ++nontrivial;
        }
        CHECK(nontrivial > 50);
    }
}

TEST_CASE("multiplicativity") {
    std::mt19937_64 rng(32);
    for (const auto& P : small_primes()) {
        for (int i = 0; i < 100; ++i) {
            CycInt a = oracle::random_cycint(rng, -1000, 1000);
            CycInt b = oracle::random_cycint(rng, -1000, 1000);
            SymbolValue sa = quintic_symbol(a, P);
            SymbolValue sb = quintic_symbol(b, P);
            if (sa.is_zero() || sb.is_zero()) continue;
            CHECK(quintic_symbol(a * b, P) == sa * sb);
            CHECK(quintic_symbol(pow(a, 5), P).is_one());
        }
    }
}

TEST_CASE("conjugation permutes the symbol") {
    // {sigma_k(a) / sigma_k(P)} = sigma_k({a/P}) = zeta^(k c).
    auto f = factor_f2_prime(19);
    PrimeIdealRep P2 = build_residue_field(conjugate(f.first.generator, 2));
    std::mt19937_64 rng(33);
    for (int i = 0; i < 50; ++i) {
        CycInt a = oracle::random_cycint(rng, -30, 30);
        SymbolValue s = quintic_symbol(a, f.first);
        if (s.is_zero()) continue;
        CHECK(quintic_symbol(conjugate(a, 2), P2) == pow(s, 2));
    }
    PrimeIdealRep three = build_residue_field(CycInt(3));
    for (int i = 0; i < 50; ++i) {
        CycInt a = oracle::random_cycint(rng, -30, 30);
        SymbolValue s = quintic_symbol(a, three);
        if (s.is_zero()) continue;
        for (int k = 1; k <= 4; ++k) CHECK(quintic_symbol(conjugate(a, k), three) == pow(s, k));
    }
}

TEST_CASE("reciprocity") {
    CHECK(reciprocity_check(CycInt(7), CycInt(3)));
    CHECK(reciprocity_check(CycInt(2), CycInt(3)));
    CHECK_THROWS_AS(reciprocity_check(CycInt(3), CycInt(3)), std::invalid_argument);
    CHECK_THROWS_AS(reciprocity_check(lambda(), CycInt(3)), std::invalid_argument);

    for (long q : {19L, 29L, 59L, 79L, 89L}) {
        auto f = factor_f2_prime(q);
        for (const auto* P : {&f.first, &f.second}) {
            auto s = semiprimary_normalize(P->generator);
            REQUIRE(s.has_value());
            for (long a : {2L, 3L, 7L}) {
                CAPTURE(q);
                CAPTURE(a);
                CHECK(reciprocity_check(*s, CycInt(a)));
            }
        }
    }
}

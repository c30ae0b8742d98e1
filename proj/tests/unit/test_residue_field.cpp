#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "quintic/residue_field.hpp"
#include "quintic/splitting.hpp"

using namespace quintic;

namespace {

// An element of norm p for p = 1 mod 5, found by a small box search.
CycInt degree_one_prime(long p) {
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            for (long c = -6; c <= 6; ++c)
                for (long d = -6; d <= 6; ++d) {
                    CycInt x(a, b, c, d);
                    if (norm(x) == p) return x;
                }
    return CycInt(0);
}

}  // namespace

TEST_CASE("residue degree is the order of q mod 5") {
    CHECK(residue_degree(2) == 4);
    CHECK(residue_degree(3) == 4);
    CHECK(residue_degree(11) == 1);
    CHECK(residue_degree(19) == 2);
    CHECK(residue_degree(29) == 2);
    CHECK_THROWS_AS(residue_degree(5), std::invalid_argument);
}

TEST_CASE("inert prime 3") {
    PrimeIdealRep P = build_residue_field(CycInt(3));
    CHECK(P.characteristic == 3);
    CHECK(P.degree == 4);
    CHECK(P.norm() == 81);
    CHECK(P.field.modulus == std::vector<Int>{1, 1, 1, 1, 1});
    CHECK(project(CycInt(19), P) == field_one(P.field));
    CHECK(pow_in_field(project(CycInt(19), P), 16, P) == field_one(P.field));
}

TEST_CASE("degree-two prime above 19") {
    CycInt pi(4, 0, -3, -3);
    PrimeIdealRep P = build_residue_field(pi);
    CHECK(P.characteristic == 19);
    CHECK(P.degree == 2);
    CHECK(P.norm() == 361);
    REQUIRE(P.field.modulus.size() == 3);
    // t^2 - s t + 1 with s^2 + s - 1 = 0 mod 19
    Int s = mod(-P.field.modulus[1], 19);
    CHECK(P.field.modulus[0] == 1);
    CHECK(P.field.modulus[2] == 1);
    CHECK(mod(s * s + s - 1, 19) == 0);
    CHECK(project(CycInt(19), P).is_zero());
    CHECK(project(pi, P).is_zero());
    // the conjugate prime does not vanish here
    CHECK_FALSE(project(conjugate(pi, 2), P).is_zero());
}

TEST_CASE("degree-one prime") {
    CycInt g = degree_one_prime(11);
    REQUIRE(norm(g) == 11);
    PrimeIdealRep P = build_residue_field(g);
    CHECK(P.degree == 1);
    CHECK(P.norm() == 11);
    CHECK(project(g, P).is_zero());
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(build_residue_field(lambda()), std::invalid_argument);
    CHECK_THROWS_AS(build_residue_field(CycInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(build_residue_field(CycInt::zeta(2)), std::invalid_argument);
    CHECK_THROWS_AS(build_residue_field(CycInt(6)), std::invalid_argument);
    CHECK_THROWS_AS(build_residue_field(CycInt(19)), std::invalid_argument);  // not prime
}

TEST_CASE("Phi_5 factor pattern matches the residue degree for q < 100") {
    for (long q = 2; q < 100; ++q) {
        if (q == 5 || !oracle::small_is_prime(q)) continue;
        auto [f, r] = oracle::phi5_factor_pattern(q);
        CAPTURE(q);
        CHECK(residue_degree(q) == f);
        CHECK(4 / f == r);
    }
}

TEST_CASE("projection is a ring homomorphism") {
    std::vector<PrimeIdealRep> primes = {
        build_residue_field(CycInt(3)),
        build_residue_field(CycInt(2)),
        build_residue_field(CycInt(4, 0, -3, -3)),
        build_residue_field(conjugate(CycInt(4, 0, -3, -3), 2)),
        build_residue_field(factor_f2_prime(29).first.generator),
        build_residue_field(degree_one_prime(31)),
    };
    std::mt19937_64 rng(21);
    for (const auto& P : primes) {
        const auto& F = P.field;
        for (int i = 0; i < 500; ++i) {
            CycInt x = oracle::random_cycint(rng, -1000, 1000);
            CycInt y = oracle::random_cycint(rng, -1000, 1000);
            CHECK(project(x + y, P) == field_add(project(x, P), project(y, P), F));
            CHECK(project(x * y, P) == field_mul(project(x, P), project(y, P), F));
        }
        CHECK(project(CycInt::zeta(1), P) == F.zeta_image);
    }
}

TEST_CASE("zeta image has order exactly five") {
    for (long g : {2L, 3L, 7L}) {
        PrimeIdealRep P = build_residue_field(CycInt(g));
        const auto& F = P.field;
        CHECK_FALSE(field_pow(F.zeta_image, 1, F) == field_one(F));
        CHECK(field_pow(F.zeta_image, 5, F) == field_one(F));
    }
    for (long q : {19L, 29L, 59L}) {
        auto fac = factor_f2_prime(q);
        for (const auto* P : {&fac.first, &fac.second}) {
            const auto& F = P->field;
            CHECK_FALSE(F.zeta_image == field_one(F));
            CHECK(field_pow(F.zeta_image, 5, F) == field_one(F));
        }
    }
}

TEST_CASE("powers in the field") {
    PrimeIdealRep P = build_residue_field(CycInt(4, 0, -3, -3));
    std::mt19937_64 rng(22);
    for (int i = 0; i < 50; ++i) {
        ResidueElem x = project(oracle::random_cycint(rng, -50, 50), P);
        CHECK(pow_in_field(x, 0, P) == field_one(P.field));
        if (!x.is_zero()) CHECK(pow_in_field(x, P.norm() - 1, P) == field_one(P.field));
    }
}

TEST_CASE("field indices enumerate the field") {
    PrimeIdealRep P = build_residue_field(CycInt(3));
    const auto& F = P.field;
    for (long i = 0; i < 81; ++i) {
        ResidueElem e = field_element(i, F);
        CHECK(field_index(e, F) == i);
    }
    CHECK(field_element(0, F) == field_zero(F));
    CHECK(field_from_int(-1, F) == field_element(2, F));
}

#pragma once

#include <array>
#include <optional>
#include <string>

#include "quintic/bigint.hpp"

namespace quintic {

/// Element of Z[zeta_5] on the basis {1, z, z^2, z^3}.
///
/// The relation z^4 = -(1 + z + z^2 + z^3) is applied eagerly, so the four
/// coefficients are unique and equality is coefficient comparison.
class CycInt {
public:
    CycInt() = default;
    CycInt(long n) : c_{Int(n), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    CycInt(const Int& n) : c_{n, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    CycInt(Int c0, Int c1, Int c2, Int c3);

    /// z^k for any integer k.
    static CycInt zeta(long k = 1);

    /// Builds from five coefficients on {1, z, ..., z^4} and reduces.
    static CycInt from_cyclic(std::array<Int, 5> c);

    const Int& operator[](std::size_t i) const { return c_[i]; }
    const std::array<Int, 4>& coeffs() const { return c_; }

    bool is_zero() const;
    /// True when the element lies in Z (c1 = c2 = c3 = 0).
    bool is_rational() const;

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const CycInt& o);

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
    friend CycInt operator-(const CycInt& a);
    friend bool operator==(const CycInt& a, const CycInt& b) { return a.c_ == b.c_; }

private:
    std::array<Int, 4> c_{};
};

CycInt mul(const CycInt& x, const CycInt& y);
CycInt pow(const CycInt& x, unsigned long e);

/// sigma_k : z -> z^k, k in {1,2,3,4}. Throws std::invalid_argument otherwise.
CycInt conjugate(const CycInt& x, int k);

/// Absolute norm over Q: x * sigma_2(x) * sigma_3(x) * sigma_4(x).
Int norm(const CycInt& x);

/// Exact quotient x / y, or nullopt if y does not divide x. Throws on y = 0.
std::optional<CycInt> div_exact(const CycInt& x, const CycInt& y);

bool divides(const CycInt& y, const CycInt& x);
bool is_unit(const CycInt& x);

/// a + b*phi with phi = (1 + sqrt 5) / 2.
struct QuadraticInt {
    Int a;
    Int b;

    friend bool operator==(const QuadraticInt&, const QuadraticInt&) = default;
};

QuadraticInt operator*(const QuadraticInt& x, const QuadraticInt& y);
/// a^2 + ab - b^2
Int quadratic_norm(const QuadraticInt& x);

/// Ring embedding of Z[phi] into Z[zeta_5] via phi = -z^2 - z^3.
CycInt embed_quadratic(const QuadraticInt& x);

/// Inverse of embed_quadratic on its image (c1 = 0, c2 = c3).
std::optional<QuadraticInt> as_quadratic(const CycInt& x);

/// The prime 1 - z above 5.
CycInt lambda();

/// x is congruent to a rational integer modulo (1 - z)^2.
bool is_semiprimary(const CycInt& x);

/// The first associate +-z^a * x (a = 0..4, sign + before -) that is
/// semiprimary. nullopt when 5 | norm(x).
std::optional<CycInt> semiprimary_normalize(const CycInt& x);

/// "c0,c1,c2,c3"
std::string to_string(const CycInt& x);
/// Parses "c0,c1,c2,c3" or a single rational integer.
CycInt parse_cycint(const std::string& text);

}  // namespace quintic

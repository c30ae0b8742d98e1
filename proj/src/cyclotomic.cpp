#include "quintic/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace quintic {

CycInt::CycInt(Int c0, Int c1, Int c2, Int c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

CycInt CycInt::from_cyclic(std::array<Int, 5> c) {
    // z^4 = -1 - z - z^2 - z^3
    return CycInt(c[0] - c[4], c[1] - c[4], c[2] - c[4], c[3] - c[4]);
}

CycInt CycInt::zeta(long k) {
    long r = ((k % 5) + 5) % 5;
    std::array<Int, 5> c{};
    c[static_cast<std::size_t>(r)] = 1;
    return from_cyclic(c);
}

bool CycInt::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool CycInt::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

CycInt& CycInt::operator+=(const CycInt& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
    // Product modulo z^5 - 1, then reduce the z^4 term.
    std::array<Int, 5> acc{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < 4; ++j) {
            acc[(i + j) % 5] += c_[i] * o.c_[j];
        }
    }
    *this = from_cyclic(std::move(acc));
    return *this;
}

CycInt operator-(const CycInt& a) { return CycInt(-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]); }

CycInt mul(const CycInt& x, const CycInt& y) { return x * y; }

CycInt pow(const CycInt& x, unsigned long e) {
    CycInt result(1);
    CycInt base = x;
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

CycInt conjugate(const CycInt& x, int k) {
    if (k < 1 || k > 4) {
        throw std::invalid_argument("conjugate: k must be in {1,2,3,4}, got " + std::to_string(k));
    }
    std::array<Int, 5> c{};
    for (std::size_t i = 0; i < 4; ++i) {
        c[(i * static_cast<std::size_t>(k)) % 5] += x[i];
    }
    return CycInt::from_cyclic(std::move(c));
}

namespace {

CycInt norm_cofactor(const CycInt& x) {
    return conjugate(x, 2) * conjugate(x, 3) * conjugate(x, 4);
}

}  // namespace

Int norm(const CycInt& x) {
    CycInt n = x * norm_cofactor(x);
    if (!n.is_rational()) throw std::logic_error("norm: product of conjugates is not rational");
    return n[0];
}

std::optional<CycInt> div_exact(const CycInt& x, const CycInt& y) {
    if (y.is_zero()) throw std::invalid_argument("div_exact: division by zero");
    CycInt cof = norm_cofactor(y);
    CycInt ny = y * cof;
    const Int& n = ny[0];
    CycInt num = x * cof;
    std::array<Int, 4> q;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!mpz_divisible_p(num[i].get_mpz_t(), n.get_mpz_t())) return std::nullopt;
        mpz_divexact(q[i].get_mpz_t(), num[i].get_mpz_t(), n.get_mpz_t());
    }
    return CycInt(q[0], q[1], q[2], q[3]);
}

bool divides(const CycInt& y, const CycInt& x) { return div_exact(x, y).has_value(); }

bool is_unit(const CycInt& x) {
    Int n = norm(x);
    return n == 1 || n == -1;
}

QuadraticInt operator*(const QuadraticInt& x, const QuadraticInt& y) {
    // phi^2 = phi + 1
    Int bd = x.b * y.b;
    return QuadraticInt{x.a * y.a + bd, x.a * y.b + x.b * y.a + bd};
}

Int quadratic_norm(const QuadraticInt& x) { return x.a * x.a + x.a * x.b - x.b * x.b; }

CycInt embed_quadratic(const QuadraticInt& x) { return CycInt(x.a, 0, -x.b, -x.b); }

std::optional<QuadraticInt> as_quadratic(const CycInt& x) {
    if (x[1] != 0 || x[2] != x[3]) return std::nullopt;
    return QuadraticInt{x[0], -x[2]};
}

CycInt lambda() { return CycInt(1, -1, 0, 0); }

bool is_semiprimary(const CycInt& x) {
    // x = sum c_i z^i is congruent to sum c_i modulo (1 - z).
    Int s = x[0] + x[1] + x[2] + x[3];
    static const CycInt lambda_sq = lambda() * lambda();
    return div_exact(x - CycInt(s), lambda_sq).has_value();
}

std::optional<CycInt> semiprimary_normalize(const CycInt& x) {
    if (mpz_divisible_ui_p(norm(x).get_mpz_t(), 5)) return std::nullopt;
    for (int sign : {1, -1}) {
        for (long a = 0; a < 5; ++a) {
            CycInt candidate = CycInt(sign) * CycInt::zeta(a) * x;
            if (is_semiprimary(candidate)) return candidate;
        }
    }
    return std::nullopt;
}

std::string to_string(const CycInt& x) {
    std::ostringstream os;
    os << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3];
    return os.str();
}

CycInt parse_cycint(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() == 1) return CycInt(parse_int(parts[0]));
    if (parts.size() != 4) {
        throw std::invalid_argument("expected four comma-separated coefficients c0,c1,c2,c3: '" +
                                    text + "'");
    }
    return CycInt(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]),
                  parse_int(parts[3]));
}

}  // namespace quintic

#include "quintic/bigint.hpp"

#include <stdexcept>

namespace quintic {

Int pow(const Int& base, unsigned long exponent) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Int powm(const Int& base, const Int& exponent, const Int& modulus) {
    if (exponent < 0) throw std::invalid_argument("powm: negative exponent");
    if (modulus < 1) throw std::invalid_argument("powm: modulus must be positive");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    for (Int d = 3; d * d <= n; d += 2) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
    }
    return true;
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<Int, unsigned>> out;
    auto strip = [&](const Int& d) {
        unsigned k = 0;
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            n /= d;
            ++k;
        }
        if (k > 0) out.emplace_back(d, k);
    };
    strip(2);
    for (Int d = 3; d * d <= n; d += 2) strip(d);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Int next_prime(const Int& n) {
    Int c = n < 2 ? Int(2) : n;
    while (!is_prime(c)) ++c;
    return c;
}

std::string to_string(const Int& n) { return n.get_str(10); }

Int parse_int(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("not an integer: '" + text + "'");
        }
    }
    Int r(text[0] == '+' ? text.substr(1) : text, 10);
    return r;
}

long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw std::out_of_range("integer does not fit in long: " + to_string(n));
    return n.get_si();
}

}  // namespace quintic

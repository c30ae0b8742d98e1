#include "quintic/residue_field.hpp"

#include <stdexcept>

namespace quintic {

bool ResidueElem::is_zero() const {
    for (const auto& c : coeffs) {
        if (c != 0) return false;
    }
    return true;
}

int residue_degree(const Int& q) {
    Int r = mod(q, 5);
    if (r == 0) throw std::invalid_argument("residue_degree: 5 | q");
    Int acc = r;
    int f = 1;
    while (acc != 1) {
        acc = mod(acc * r, 5);
        ++f;
    }
    return f;
}

namespace {

ResidueElem reduce_poly(std::vector<Int> poly, const ResidueFieldDesc& F) {
    const Int& q = F.characteristic;
    const auto f = static_cast<std::size_t>(F.degree);
    for (std::size_t k = poly.size(); k-- > f;) {
        Int lead = mod(poly[k], q);
        if (lead == 0) continue;
        // modulus is monic: t^f = -(m_0 + ... + m_{f-1} t^{f-1})
        for (std::size_t j = 0; j < f; ++j) {
            poly[k - f + j] -= lead * F.modulus[j];
        }
        poly[k] = 0;
    }
    poly.resize(f);
    for (auto& c : poly) c = mod(c, q);
    return ResidueElem{std::move(poly)};
}

Int inverse_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw std::invalid_argument("inverse_mod: not invertible");
    }
    return r;
}

ResidueFieldDesc make_desc(const Int& q, std::vector<Int> modulus, ResidueElem zeta) {
    ResidueFieldDesc F;
    F.characteristic = q;
    F.degree = static_cast<int>(modulus.size()) - 1;
    F.modulus = std::move(modulus);
    F.zeta_image = std::move(zeta);
    return F;
}

std::vector<Int> golden_roots_mod(const Int& q) {
    // roots of s^2 + s - 1 mod q
    std::vector<Int> roots;
    for (Int s = 0; s < q; ++s) {
        if (mod(s * s + s - 1, q) == 0) roots.push_back(s);
    }
    return roots;
}

std::vector<Int> fifth_roots_of_unity_mod(const Int& q) {
    std::vector<Int> roots;
    for (Int r = 2; r < q; ++r) {
        if (mod(r * r * r * r + r * r * r + r * r + r + 1, q) == 0) roots.push_back(r);
    }
    return roots;
}

PrimeIdealRep with_field(const CycInt& generator, ResidueFieldDesc F) {
    PrimeIdealRep P;
    P.generator = generator;
    P.characteristic = F.characteristic;
    P.degree = F.degree;
    P.field = std::move(F);
    return P;
}

ResidueFieldDesc quadratic_factor_field(const Int& q, const Int& s) {
    return make_desc(q, {Int(1), mod(-s, q), Int(1)}, ResidueElem{{Int(0), Int(1)}});
}

}  // namespace

PrimeIdealRep build_residue_field(const CycInt& generator) {
    Int n = abs(norm(generator));
    if (n == 0) throw std::invalid_argument("build_residue_field: zero generator");
    if (n == 1) throw std::invalid_argument("build_residue_field: generator is a unit");
    auto fac = factorize(n);
    if (fac.size() != 1) {
        throw std::invalid_argument("build_residue_field: norm " + to_string(n) +
                                    " is not a prime power");
    }
    const Int q = fac[0].first;
    const auto k = static_cast<int>(fac[0].second);
    if (q == 5) {
        throw std::invalid_argument("build_residue_field: ramified prime above 5 is not supported");
    }
    const int f = residue_degree(q);
    if (k != f) {
        throw std::invalid_argument("build_residue_field: norm " + to_string(q) + "^" +
                                    std::to_string(k) + " but primes above " + to_string(q) +
                                    " have residue degree " + std::to_string(f) +
                                    "; generator is not prime");
    }

    std::optional<PrimeIdealRep> result;
    if (f == 4) {
        result = with_field(generator, make_desc(q, {1, 1, 1, 1, 1},
                                                 ResidueElem{{Int(0), Int(1), Int(0), Int(0)}}));
    } else if (f == 2) {
        if (auto qa = as_quadratic(generator)) {
            // phi = -a/b mod pi, and z + z^4 = -1 + phi.
            Int s = mod(-1 - qa->a * inverse_mod(mod(qa->b, q), q), q);
            result = with_field(generator, quadratic_factor_field(q, s));
        } else {
            for (const Int& s : golden_roots_mod(q)) {
                auto cand = with_field(generator, quadratic_factor_field(q, s));
                if (project(generator, cand).is_zero()) {
                    result = std::move(cand);
                    break;
                }
            }
        }
    } else {
        for (const Int& r : fifth_roots_of_unity_mod(q)) {
            auto cand = with_field(generator, make_desc(q, {mod(-r, q), Int(1)}, ResidueElem{{r}}));
            if (project(generator, cand).is_zero()) {
                result = std::move(cand);
                break;
            }
        }
    }
    if (!result || !project(generator, *result).is_zero()) {
        throw std::logic_error("build_residue_field: no factor of Phi_5 mod " + to_string(q) +
                               " is killed by the generator");
    }
    return std::move(*result);
}

ResidueElem field_zero(const ResidueFieldDesc& F) {
    return ResidueElem{std::vector<Int>(static_cast<std::size_t>(F.degree), Int(0))};
}

ResidueElem field_one(const ResidueFieldDesc& F) { return field_from_int(1, F); }

ResidueElem field_from_int(const Int& n, const ResidueFieldDesc& F) {
    ResidueElem e = field_zero(F);
    e.coeffs[0] = mod(n, F.characteristic);
    return e;
}

ResidueElem field_add(const ResidueElem& a, const ResidueElem& b, const ResidueFieldDesc& F) {
    ResidueElem r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        r.coeffs[i] = mod(r.coeffs[i] + b.coeffs[i], F.characteristic);
    }
    return r;
}

ResidueElem field_mul(const ResidueElem& a, const ResidueElem& b, const ResidueFieldDesc& F) {
    const auto f = static_cast<std::size_t>(F.degree);
    std::vector<Int> prod(2 * f - 1, Int(0));
    for (std::size_t i = 0; i < f; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < f; ++j) prod[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return reduce_poly(std::move(prod), F);
}

ResidueElem field_pow(const ResidueElem& x, const Int& e, const ResidueFieldDesc& F) {
    if (e < 0) throw std::invalid_argument("field_pow: negative exponent");
    ResidueElem result = field_one(F);
    ResidueElem base = x;
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = field_mul(result, base, F);
        if (i + 1 < bits) base = field_mul(base, base, F);
    }
    return result;
}

ResidueElem project(const CycInt& x, const PrimeIdealRep& P) {
    const ResidueFieldDesc& F = P.field;
    ResidueElem acc = field_zero(F);
    ResidueElem zpow = field_one(F);
    for (std::size_t i = 0; i < 4; ++i) {
        ResidueElem term = field_mul(field_from_int(x[i], F), zpow, F);
        acc = field_add(acc, term, F);
        zpow = field_mul(zpow, F.zeta_image, F);
    }
    return acc;
}

ResidueElem pow_in_field(const ResidueElem& x, const Int& e, const PrimeIdealRep& P) {
    return field_pow(x, e, P.field);
}

Int field_index(const ResidueElem& x, const ResidueFieldDesc& F) {
    Int idx = 0;
    for (std::size_t i = x.coeffs.size(); i-- > 0;) idx = idx * F.characteristic + x.coeffs[i];
    return idx;
}

ResidueElem field_element(Int index, const ResidueFieldDesc& F) {
    ResidueElem e = field_zero(F);
    for (auto& c : e.coeffs) {
        c = mod(index, F.characteristic);
        index /= F.characteristic;
    }
    return e;
}

}  // namespace quintic

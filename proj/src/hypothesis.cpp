#include "quintic/hypothesis.hpp"

#include <stdexcept>

namespace quintic {

namespace {

Int euler_phi(const Int& n) {
    Int phi = n;
    for (const auto& [prime, k] : factorize(n)) {
        (void)k;
        phi = phi / prime * (prime - 1);
    }
    return phi;
}

}  // namespace

Int multiplicative_order(const Int& a, const Int& n) {
    if (n < 1) throw std::invalid_argument("multiplicative_order: modulus must be >= 1");
    if (n == 1) return 1;  // the trivial group
    if (gcd(a, n) != 1) {
        throw std::invalid_argument("multiplicative_order: gcd(" + to_string(a) + ", " +
                                    to_string(n) + ") != 1");
    }
    Int t = euler_phi(n);
    const Int base = mod(a, n);
    for (const auto& [prime, k] : factorize(t)) {
        for (unsigned i = 0; i < k; ++i) {
            Int candidate = t / prime;
            if (powm(base, candidate, n) != 1) break;
            t = candidate;
        }
    }
    return t;
}

ConditionReport check_conditions(const Int& p, const Int& q) {
    ConditionReport r;
    r.p = p;
    r.q = q;
    r.p_prime = is_prime(p);
    r.q_prime = is_prime(q);
    r.distinct_primes = r.p_prime && r.q_prime && p != q;

    r.p_mod_20 = mod(p, 20);
    r.p_mod_20_ok = r.p_mod_20 == 3;
    r.q_mod_5 = mod(q, 5);
    r.q_mod_5_ok = r.q_mod_5 == 4;

    r.required_order = pow(q, 3) * (q - 1);
    if (r.distinct_primes) {
        r.primitive_root_order = multiplicative_order(p, pow(q, 4));
        r.primitive_root_ok = *r.primitive_root_order == r.required_order;
    }

    if (r.q_prime) {
        for (Int w = 0; w < q; ++w) {
            if (powm(w, 5, q) == mod(Int(2), q)) {
                r.quintic_residue_witness = w;
                break;
            }
        }
        r.quintic_residue_ok = r.quintic_residue_witness.has_value();
    }

    r.overall = r.distinct_primes && r.p_mod_20_ok && r.q_mod_5_ok && r.primitive_root_ok &&
                r.quintic_residue_ok;
    return r;
}

std::vector<ConditionReport> enumerate_pairs(const Int& p_max, const Int& q_max) {
    std::vector<ConditionReport> out;
    for (Int p = 2; p <= p_max; ++p) {
        if (mod(p, 20) != 3 || !is_prime(p)) continue;
        for (Int q = 2; q <= q_max; ++q) {
            if (mod(q, 5) != 4 || !is_prime(q)) continue;
            ConditionReport r = check_conditions(p, q);
            if (r.overall) out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace quintic

#pragma once

#include <optional>
#include <vector>

#include "quintic/bigint.hpp"

namespace quintic {

/// Least t >= 1 with a^t = 1 (mod n). Throws std::invalid_argument when
/// gcd(a, n) != 1 or n < 2.
Int multiplicative_order(const Int& a, const Int& n);

/// Evaluation of the hypotheses on (p, q) with witnesses.
///
/// (i)   p, q distinct primes
/// (iii) p generates (Z / q^4)^*, i.e. ord(p mod q^4) = q^3 (q - 1)
/// (iv)  p = 3 (mod 20) and q = 4 (mod 5)
/// (vi)  2 is a fifth-power residue mod q
///
/// (ii) and (v) constrain solutions (x, y), not (p, q); they are applied as
/// filters in the search module.
struct ConditionReport {
    Int p;
    Int q;

    bool p_prime = false;
    bool q_prime = false;
    bool distinct_primes = false;

    Int p_mod_20;
    bool p_mod_20_ok = false;
    Int q_mod_5;
    bool q_mod_5_ok = false;

    Int required_order;                      // q^3 (q - 1)
    std::optional<Int> primitive_root_order;  // absent unless (i) holds
    bool primitive_root_ok = false;

    std::optional<Int> quintic_residue_witness;  // w with w^5 = 2 (mod q)
    bool quintic_residue_ok = false;

    bool overall = false;
};

/// Never throws on bad (p, q); non-primes give a failing report.
ConditionReport check_conditions(const Int& p, const Int& q);

/// Passing pairs with p <= p_max, q <= q_max, ascending in (p, q).
std::vector<ConditionReport> enumerate_pairs(const Int& p_max, const Int& q_max);

}  // namespace quintic

#include "quintic/symbols.hpp"

#include <stdexcept>

namespace quintic {

SymbolValue operator*(const SymbolValue& a, const SymbolValue& b) {
    if (a.is_zero() || b.is_zero()) return SymbolValue::zero();
    return SymbolValue::root(a.exponent + b.exponent);
}

SymbolValue pow(const SymbolValue& a, unsigned e) {
    if (a.is_zero()) return e == 0 ? SymbolValue::root(0) : SymbolValue::zero();
    return SymbolValue::root(static_cast<long>(a.exponent) * e);
}

std::string to_string(const SymbolValue& s) {
    if (s.is_zero()) return "0";
    if (s.exponent == 0) return "1";
    return "zeta^" + std::to_string(s.exponent);
}

namespace {

void require_unramified(const PrimeIdealRep& pi) {
    if (pi.characteristic == 5) {
        throw std::invalid_argument("quintic symbol: ramified prime above 5");
    }
}

}  // namespace

SymbolValue quintic_symbol(const CycInt& alpha, const PrimeIdealRep& pi) {
    require_unramified(pi);
    const ResidueFieldDesc& F = pi.field;
    ResidueElem a = project(alpha, pi);
    if (a.is_zero()) return SymbolValue::zero();
    Int e = (pi.norm() - 1) / 5;
    ResidueElem v = pow_in_field(a, e, pi);
    ResidueElem zc = field_one(F);
    for (int c = 0; c < 5; ++c) {
        if (v == zc) return SymbolValue::root(c);
        zc = field_mul(zc, F.zeta_image, F);
    }
    throw std::logic_error("quintic_symbol: power is not a fifth root of unity");
}

EnumeratedField::EnumeratedField(const PrimeIdealRep& pi) : pi_(pi) {
    require_unramified(pi);
    Int n = pi.norm();
    if (n > Int(static_cast<unsigned long>(kMaxSize))) {
        throw std::invalid_argument("brute force symbol: field of size " + to_string(n) +
                                    " is too large to enumerate");
    }
    size_ = n.get_ui();
    const ResidueFieldDesc& F = pi.field;
    const std::uint64_t order = size_ - 1;

    // Find a generator by walking powers of successive candidates.
    for (std::uint64_t cand = 1; cand < size_; ++cand) {
        ResidueElem g = field_element(Int(static_cast<unsigned long>(cand)), F);
        std::vector<std::uint64_t> table(size_, size_);
        ResidueElem x = field_one(F);
        std::uint64_t k = 0;
        bool full = true;
        ResidueElem g_fifth_class;
        for (; k < order; ++k) {
            std::uint64_t idx = field_index(x, F).get_ui();
            if (table[idx] != size_) {
                full = false;
                break;
            }
            table[idx] = k;
            if (k == order / 5) g_fifth_class = x;
            x = field_mul(x, g, F);
        }
        if (!full) continue;
        log_ = std::move(table);
        ResidueElem zc = field_one(F);
        generator_symbol_ = -1;
        for (int c = 0; c < 5; ++c) {
            if (zc == g_fifth_class) generator_symbol_ = c;
            zc = field_mul(zc, F.zeta_image, F);
        }
        if (generator_symbol_ < 0) {
            throw std::logic_error("brute force symbol: g^((N-1)/5) is not a power of z");
        }
        return;
    }
    throw std::logic_error("brute force symbol: no generator found");
}

std::uint64_t EnumeratedField::log_of(const ResidueElem& x) const {
    return log_[field_index(x, pi_.field).get_ui()];
}

SymbolValue EnumeratedField::symbol(const CycInt& alpha) const {
    ResidueElem a = project(alpha, pi_);
    if (a.is_zero()) return SymbolValue::zero();
    std::uint64_t k = log_of(a);
    return SymbolValue::root(static_cast<long>((k % 5) * static_cast<std::uint64_t>(generator_symbol_)));
}

bool EnumeratedField::is_fifth_power(const CycInt& alpha) const {
    ResidueElem a = project(alpha, pi_);
    if (a.is_zero()) return true;
    return log_of(a) % 5 == 0;
}

SymbolValue brute_force_symbol(const CycInt& alpha, const PrimeIdealRep& pi) {
    return EnumeratedField(pi).symbol(alpha);
}

bool reciprocity_check(const CycInt& a, const CycInt& b) {
    if (!is_semiprimary(a) || !is_semiprimary(b)) {
        throw std::invalid_argument("reciprocity_check: arguments must be semiprimary");
    }
    if (mpz_divisible_ui_p(norm(a).get_mpz_t(), 5) || mpz_divisible_ui_p(norm(b).get_mpz_t(), 5)) {
        throw std::invalid_argument("reciprocity_check: arguments must be coprime to 5");
    }
    PrimeIdealRep pa = build_residue_field(a);
    PrimeIdealRep pb = build_residue_field(b);
    if (project(a, pb).is_zero() || project(b, pa).is_zero()) {
        throw std::invalid_argument("reciprocity_check: arguments are not coprime");
    }
    return quintic_symbol(a, pb) == quintic_symbol(b, pa);
}

}  // namespace quintic

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quintic/cyclotomic.hpp"
#include "quintic/residue_field.hpp"

namespace quintic {

/// Value of the quintic power-residue symbol: 0 or z^exponent.
struct SymbolValue {
    enum class Kind { Zero, Root };

    Kind kind = Kind::Root;
    int exponent = 0;  // in {0,...,4}; 0 when kind == Zero

    static SymbolValue zero() { return {Kind::Zero, 0}; }
    static SymbolValue root(long c) { return {Kind::Root, static_cast<int>(((c % 5) + 5) % 5)}; }

    bool is_zero() const { return kind == Kind::Zero; }
    bool is_one() const { return kind == Kind::Root && exponent == 0; }

    friend bool operator==(const SymbolValue&, const SymbolValue&) = default;
};

SymbolValue operator*(const SymbolValue& a, const SymbolValue& b);
SymbolValue pow(const SymbolValue& a, unsigned e);
std::string to_string(const SymbolValue& s);

/// {alpha / pi}: alpha^((N(pi) - 1) / 5) mod pi, matched against the five
/// powers of the image of z.
SymbolValue quintic_symbol(const CycInt& alpha, const PrimeIdealRep& pi);

/// Discrete-log table of a residue field built by walking the powers of a
/// generator found by exhaustive search. Independent of pow_in_field.
class EnumeratedField {
public:
    static constexpr std::uint64_t kMaxSize = 1'000'000;

    /// Throws std::invalid_argument when q^f exceeds kMaxSize.
    explicit EnumeratedField(const PrimeIdealRep& pi);

    /// Brute-force symbol of alpha.
    SymbolValue symbol(const CycInt& alpha) const;

    /// True when project(alpha) = beta^5 for some beta in the field.
    bool is_fifth_power(const CycInt& alpha) const;

private:
    std::uint64_t log_of(const ResidueElem& x) const;

    PrimeIdealRep pi_;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> log_;  // index -> discrete log; size_ for zero
    int generator_symbol_ = 0;        // c with g^((N-1)/5) = z^c
};

SymbolValue brute_force_symbol(const CycInt& alpha, const PrimeIdealRep& pi);

/// {a / (b)} == {b / (a)} for semiprimary a, b generating distinct prime
/// ideals coprime to 5. Throws std::invalid_argument when preconditions fail.
bool reciprocity_check(const CycInt& a, const CycInt& b);

}  // namespace quintic

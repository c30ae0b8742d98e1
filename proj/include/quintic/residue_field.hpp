#pragma once

#include <vector>

#include "quintic/bigint.hpp"
#include "quintic/cyclotomic.hpp"

namespace quintic {

/// Element of F_q[t]/(m(t)); coefficients low degree first, each in [0, q).
struct ResidueElem {
    std::vector<Int> coeffs;

    bool is_zero() const;
    friend bool operator==(const ResidueElem&, const ResidueElem&) = default;
};

/// F_{q^f} realized as F_q[t]/(modulus), where modulus is a monic factor of
/// Phi_5 mod q and zeta_image is the image of z.
struct ResidueFieldDesc {
    Int characteristic;
    int degree = 0;
    std::vector<Int> modulus;  // monic, size degree + 1, low degree first
    ResidueElem zeta_image;

    Int size() const { return pow(characteristic, static_cast<unsigned long>(degree)); }
};

/// A prime ideal of Z[zeta_5] with its generator and residue field.
struct PrimeIdealRep {
    CycInt generator;
    Int characteristic;
    int degree = 0;
    ResidueFieldDesc field;

    /// Absolute norm of the ideal, q^f.
    Int norm() const { return field.size(); }
};

/// Multiplicative order of q modulo 5 (q coprime to 5): the residue degree.
int residue_degree(const Int& q);

/// Throws std::invalid_argument for the ramified prime, for generators whose
/// norm is not q^f with f the residue degree of q, and for non-prime-power norms.
PrimeIdealRep build_residue_field(const CycInt& generator);

ResidueElem field_zero(const ResidueFieldDesc& F);
ResidueElem field_one(const ResidueFieldDesc& F);
ResidueElem field_from_int(const Int& n, const ResidueFieldDesc& F);
ResidueElem field_add(const ResidueElem& a, const ResidueElem& b, const ResidueFieldDesc& F);
ResidueElem field_mul(const ResidueElem& a, const ResidueElem& b, const ResidueFieldDesc& F);
ResidueElem field_pow(const ResidueElem& x, const Int& e, const ResidueFieldDesc& F);

/// Reduction Z[zeta_5] -> Z[zeta_5]/(pi).
ResidueElem project(const CycInt& x, const PrimeIdealRep& P);

/// Square-and-multiply; e >= 0.
ResidueElem pow_in_field(const ResidueElem& x, const Int& e, const PrimeIdealRep& P);

/// Bijective index of a field element in [0, q^f), for enumeration.
Int field_index(const ResidueElem& x, const ResidueFieldDesc& F);
ResidueElem field_element(Int index, const ResidueFieldDesc& F);

}  // namespace quintic

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quintic/bigint.hpp"
#include "quintic/residue_field.hpp"
#include "quintic/splitting.hpp"

namespace quintic {

enum class AtomFamily { AboveTwo, AboveQ };

std::string to_string(AtomFamily f);

/// A prime ideal of the Kummer ring appearing on the right-hand side of an
/// ideal equation.
struct PrimeAtom {
    std::string name;
    Int norm;  // exact prime power
    AtomFamily family = AtomFamily::AboveQ;
};

/// F_0 * F_1 * ... * F_{n-1} = prod atoms[i]^target[i] with unknown ideals F_m.
struct IdealEquation {
    std::vector<PrimeAtom> atoms;
    std::vector<unsigned> target;
    int factor_count = 5;
};

/// The automorphism v: factor m -> factor m + shift (mod factor_count),
/// acting on atoms by a permutation that preserves family and norm.
struct GaloisOrbitSpec {
    int shift = 1;
};

struct SolverConstraints {
    bool comaximal = true;        // pairwise disjoint support
    bool equal_norm = true;       // every factor has the same absolute norm
    bool galois_orbit = false;    // F_{m+shift} = tau(F_m) for some admissible tau
    bool nonunit_factors = false; // every factor is a proper ideal
};

struct SolverTrace {
    Int total_norm;
    std::optional<Int> required_factor_norm;  // integral fifth root, if any
    std::vector<std::string> obstructions;
    /// Complete assignments reached after norm pruning.
    std::uint64_t assignments_examined = 0;
    /// 0 or 1: the search stops at the first feasible assignment.
    std::uint64_t feasible_assignments = 0;
    /// The feasible assignment, exponents per factor, per atom.
    std::optional<std::vector<std::vector<unsigned>>> witness;
};

struct SolverResult {
    bool infeasible = false;
    SolverTrace trace;
};

/// Exhaustive search over all distributions of the target exponents among
/// the factors, pruned by the common factor norm when equal_norm or
/// galois_orbit is set.
/// Throws std::invalid_argument for malformed equations.
SolverResult ideal_equation_infeasible(const IdealEquation& eq, const GaloisOrbitSpec& orbit,
                                       const SolverConstraints& constraints = {});

/// Prime ideals of the Kummer ring above pi, with their norms and the
/// exponent with which they divide pi.
struct KummerAtom {
    std::string name;
    Int norm;
    unsigned exponent = 1;
};

/// Inert: one atom of norm N(pi)^5. SplitsInto5: five atoms of norm N(pi),
/// named base_name + "1".."5". Ramified5thPower: one atom of norm N(pi) with
/// exponent 5.
std::vector<KummerAtom> kummer_atom_norms(const KummerFieldDesc& K, const PrimeIdealRep& pi,
                                          const KummerSplitting& s, const std::string& base_name);

/// Appends atoms above pi to eq, with target exponent (atom exponent) * power.
void add_atoms(IdealEquation& eq, const std::vector<KummerAtom>& atoms, AtomFamily family,
               unsigned power);

}  // namespace quintic

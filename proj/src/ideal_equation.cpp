#include "quintic/ideal_equation.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace quintic {

std::string to_string(AtomFamily f) {
    return f == AtomFamily::AboveTwo ? "AboveTwo" : "AboveQ";
}

namespace {

using Assignment = std::vector<std::vector<unsigned>>;  // [factor][atom]

struct PrimePower {
    Int prime;
    unsigned exponent;
};

PrimePower as_prime_power(const Int& n, const std::string& name) {
    if (n < 2) throw std::invalid_argument("ideal equation: atom " + name + " has norm < 2");
    auto fac = factorize(n);
    if (fac.size() != 1) {
        throw std::invalid_argument("ideal equation: norm of atom " + name +
                                    " is not a prime power");
    }
    return {fac[0].first, fac[0].second};
}

void validate(const IdealEquation& eq) {
    if (eq.factor_count != 5) {
        throw std::invalid_argument("ideal equation: factor_count must be 5");
    }
    if (eq.atoms.size() != eq.target.size()) {
        throw std::invalid_argument("ideal equation: target does not match the atom list");
    }
    std::set<std::string> names;
    for (std::size_t i = 0; i < eq.atoms.size(); ++i) {
        if (eq.target[i] == 0) {
            throw std::invalid_argument("ideal equation: atom " + eq.atoms[i].name +
                                        " has exponent 0");
        }
        if (!names.insert(eq.atoms[i].name).second) {
            throw std::invalid_argument("ideal equation: duplicate atom " + eq.atoms[i].name);
        }
        (void)as_prime_power(eq.atoms[i].norm, eq.atoms[i].name);
    }
}

class Search {
public:
    Search(const IdealEquation& eq, const GaloisOrbitSpec& orbit, const SolverConstraints& c,
           std::optional<Int> required_norm)
        : eq_(eq), orbit_(orbit), c_(c), n_(static_cast<std::size_t>(eq.factor_count)),
          required_(std::move(required_norm)),
          assign_(n_, std::vector<unsigned>(eq.atoms.size(), 0)), partial_(n_, Int(1)) {}

    void run(SolverTrace& trace) {
        trace_ = &trace;
        // Orbit compatibility forces equal norms too, since tau preserves norms.
        prune_ = c_.equal_norm || c_.galois_orbit;
        // Unequal total exponents rule out equal norms before any search.
        if (prune_ && !required_) return;
        descend(0);
    }

private:
    bool done() const { return trace_->witness.has_value(); }

    // Assigns atom^e to factor m; false if the partial norm can no longer
    // divide the common factor norm.
    bool place(std::size_t atom, std::size_t m, unsigned e) {
        assign_[m][atom] = e;
        if (e == 0) return true;
        partial_[m] *= pow(eq_.atoms[atom].norm, e);
        if (prune_) {
            return mpz_divisible_p(required_->get_mpz_t(), partial_[m].get_mpz_t()) != 0;
        }
        return true;
    }

    void unplace(std::size_t atom, std::size_t m) {
        unsigned e = assign_[m][atom];
        if (e > 0) partial_[m] /= pow(eq_.atoms[atom].norm, e);
        assign_[m][atom] = 0;
    }

    void descend(std::size_t atom) {
        if (done()) return;
        if (atom == eq_.atoms.size()) {
            leaf();
            return;
        }
        if (c_.comaximal) {
            for (std::size_t m = 0; m < n_ && !done(); ++m) {
                if (place(atom, m, eq_.target[atom])) descend(atom + 1);
                unplace(atom, m);
            }
        } else {
            compose(atom, 0, eq_.target[atom]);
        }
    }

    void compose(std::size_t atom, std::size_t m, unsigned remaining) {
        if (done()) return;
        if (m + 1 == n_) {
            if (place(atom, m, remaining)) descend(atom + 1);
            unplace(atom, m);
            return;
        }
        for (unsigned e = 0; e <= remaining && !done(); ++e) {
            if (place(atom, m, e)) compose(atom, m + 1, remaining - e);
            unplace(atom, m);
        }
    }

    void leaf() {
        ++trace_->assignments_examined;
        if (c_.nonunit_factors) {
            for (const auto& f : assign_) {
                bool any = false;
                for (unsigned e : f) any = any || e > 0;
                if (!any) return;
            }
        }
        if (prune_) {
            for (const Int& n : partial_) {
                if (n != *required_) return;
            }
        }
        if (c_.galois_orbit && !orbit_compatible()) return;
        ++trace_->feasible_assignments;
        trace_->witness = assign_;
    }

    // Is there a family- and norm-preserving permutation tau of the atoms with
    // tau^n = id and F_{m+shift}[tau(a)] = F_m[a] for every m and a?
    bool orbit_compatible() {
        const std::size_t k = eq_.atoms.size();
        tau_.assign(k, k);
        used_.assign(k, false);
        return extend_tau(0);
    }

    bool extend_tau(std::size_t a) {
        const std::size_t k = eq_.atoms.size();
        if (a == k) return tau_has_order_dividing_n();
        for (std::size_t b = 0; b < k; ++b) {
            if (used_[b] || eq_.atoms[b].family != eq_.atoms[a].family ||
                eq_.atoms[b].norm != eq_.atoms[a].norm) {
                continue;
            }
            bool ok = true;
            for (std::size_t m = 0; m < n_ && ok; ++m) {
                std::size_t next = (m + static_cast<std::size_t>(orbit_.shift)) % n_;
                ok = assign_[next][b] == assign_[m][a];
            }
            if (!ok) continue;
            tau_[a] = b;
            used_[b] = true;
            if (extend_tau(a + 1)) return true;
            used_[b] = false;
        }
        tau_[a] = k;
        return false;
    }

    bool tau_has_order_dividing_n() const {
        for (std::size_t a = 0; a < tau_.size(); ++a) {
            std::size_t x = a;
            for (std::size_t i = 0; i < n_; ++i) x = tau_[x];
            if (x != a) return false;
        }
        return true;
    }

    const IdealEquation& eq_;
    const GaloisOrbitSpec& orbit_;
    const SolverConstraints& c_;
    std::size_t n_;
    std::optional<Int> required_;
    bool prune_ = false;
    Assignment assign_;
    std::vector<Int> partial_;
    SolverTrace* trace_ = nullptr;
    std::vector<std::size_t> tau_;
    std::vector<bool> used_;
};

void norm_obstructions(const IdealEquation& eq, SolverTrace& trace) {
    const auto n = static_cast<unsigned>(eq.factor_count);
    trace.total_norm = 1;
    std::map<Int, unsigned> total_exp;
    std::map<Int, unsigned> granularity;
    for (std::size_t i = 0; i < eq.atoms.size(); ++i) {
        trace.total_norm *= pow(eq.atoms[i].norm, eq.target[i]);
        PrimePower pp = as_prime_power(eq.atoms[i].norm, eq.atoms[i].name);
        total_exp[pp.prime] += pp.exponent * eq.target[i];
        unsigned& g = granularity[pp.prime];
        g = g == 0 ? pp.exponent : std::gcd(g, pp.exponent);
    }
    Int root;
    if (mpz_root(root.get_mpz_t(), trace.total_norm.get_mpz_t(), n) != 0) {
        trace.required_factor_norm = root;
    }
    for (const auto& [prime, e] : total_exp) {
        const std::string ell = to_string(prime);
        if (e % n != 0) {
            trace.obstructions.push_back("[equal-norm] total " + ell + "-exponent " +
                                         std::to_string(e) + " is not divisible by " +
                                         std::to_string(n) + " factors");
            continue;
        }
        unsigned need = e / n;
        unsigned g = granularity[prime];
        if (need % g != 0) {
            trace.obstructions.push_back(
                "[equal-norm] equal factor norm would need " + ell + "-exponent " +
                std::to_string(need) + " from atoms carrying " + ell +
                "-exponent multiples of " + std::to_string(g));
        }
    }
}

}  // namespace

SolverResult ideal_equation_infeasible(const IdealEquation& eq, const GaloisOrbitSpec& orbit,
                                       const SolverConstraints& constraints) {
    validate(eq);
    if (orbit.shift % eq.factor_count == 0) {
        throw std::invalid_argument("ideal equation: orbit shift must move the factors");
    }
    SolverResult result;
    SolverTrace& trace = result.trace;
    norm_obstructions(eq, trace);
    if (!constraints.equal_norm) {
        std::erase_if(trace.obstructions,
                      [](const std::string& s) { return s.rfind("[equal-norm]", 0) == 0; });
    }
    if (constraints.comaximal && constraints.nonunit_factors &&
        eq.atoms.size() < static_cast<std::size_t>(eq.factor_count)) {
        trace.obstructions.push_back("[comaximal+non-unit] at most " +
                                     std::to_string(eq.atoms.size()) + " atoms available for " +
                                     std::to_string(eq.factor_count) +
                                     " pairwise-comaximal non-unit factors");
    }

    Search(eq, orbit, constraints, trace.required_factor_norm).run(trace);
    result.infeasible = trace.feasible_assignments == 0;
    if (result.infeasible) {
        trace.obstructions.push_back("[exhaustive] none of " +
                                     std::to_string(trace.assignments_examined) +
                                     " complete exponent assignments satisfies the constraints");
    }
    return result;
}

std::vector<KummerAtom> kummer_atom_norms(const KummerFieldDesc& K, const PrimeIdealRep& pi,
                                          const KummerSplitting& s, const std::string& base_name) {
    (void)K;
    const Int n = pi.norm();
    switch (s.kind) {
        case KummerCase::Inert: return {KummerAtom{base_name + "A", pow(n, 5), 1}};
        case KummerCase::Ramified5thPower: return {KummerAtom{base_name + "A", n, 5}};
        case KummerCase::SplitsInto5: {
            std::vector<KummerAtom> atoms;
            for (int k = 1; k <= 5; ++k) {
                atoms.push_back(KummerAtom{base_name + std::to_string(k), n, 1});
            }
            return atoms;
        }
    }
    return {};
}

void add_atoms(IdealEquation& eq, const std::vector<KummerAtom>& atoms, AtomFamily family,
               unsigned power) {
    for (const auto& a : atoms) {
        eq.atoms.push_back(PrimeAtom{a.name, a.norm, family});
        eq.target.push_back(a.exponent * power);
    }
}

}  // namespace quintic

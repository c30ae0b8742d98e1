#include "quintic/serialize.hpp"

namespace quintic::json {

ordered_json big(const Int& n) { return to_string(n); }

ordered_json cycint(const CycInt& x) {
    ordered_json a = ordered_json::array();
    for (const auto& c : x.coeffs()) a.push_back(big(c));
    return a;
}

ordered_json symbol(const SymbolValue& s) {
    ordered_json j;
    j["kind"] = s.is_zero() ? "Zero" : "Root";
    j["exponent"] = s.exponent;
    return j;
}

ordered_json splitting(const SplittingType& t) {
    ordered_json j;
    j["e"] = t.e;
    j["f"] = t.f;
    j["r"] = t.r;
    return j;
}

ordered_json prime_ideal(const PrimeIdealRep& P) {
    ordered_json j;
    j["generator"] = cycint(P.generator);
    j["characteristic"] = big(P.characteristic);
    j["degree"] = P.degree;
    j["norm"] = big(P.norm());
    ordered_json m = ordered_json::array();
    for (const auto& c : P.field.modulus) m.push_back(big(c));
    j["modulus_poly"] = m;
    ordered_json z = ordered_json::array();
    for (const auto& c : P.field.zeta_image.coeffs) z.push_back(big(c));
    j["zeta_image"] = z;
    return j;
}

ordered_json factorization(const F2Factorization& f) {
    ordered_json j;
    j["q"] = big(f.q);
    j["a"] = big(f.representation.a);
    j["b"] = big(f.representation.b);
    j["pi1"] = prime_ideal(f.first);
    j["pi2"] = prime_ideal(f.second);
    j["norm_pi1"] = big(norm(f.first.generator));
    j["norm_pi2"] = big(norm(f.second.generator));
    j["unit_quotient"] = cycint(f.unit_quotient);
    return j;
}

ordered_json kummer(const KummerSplitting& k) {
    ordered_json j;
    j["case"] = to_string(k.kind);
    j["symbol"] = symbol(k.symbol);
    return j;
}

namespace {

template <typename T, typename F>
ordered_json optional_of(const std::optional<T>& v, F&& f) {
    return v ? f(*v) : ordered_json(nullptr);
}

}  // namespace

ordered_json condition_report(const ConditionReport& r) {
    ordered_json j;
    j["p"] = big(r.p);
    j["q"] = big(r.q);
    j["i_distinct_primes"] = {{"p_prime", r.p_prime},
                              {"q_prime", r.q_prime},
                              {"pass", r.distinct_primes}};
    j["iii_primitive_root"] = {
        {"order_p_mod_q4", optional_of(r.primitive_root_order, big)},
        {"required_order", big(r.required_order)},
        {"pass", r.primitive_root_ok}};
    j["iv_residues"] = {{"p_mod_20", big(r.p_mod_20)},
                        {"p_mod_20_pass", r.p_mod_20_ok},
                        {"q_mod_5", big(r.q_mod_5)},
                        {"q_mod_5_pass", r.q_mod_5_ok}};
    j["vi_quintic_residue"] = {{"witness", optional_of(r.quintic_residue_witness, big)},
                               {"pass", r.quintic_residue_ok}};
    j["ii_v_solution_level"] = "enforced by search filters";
    j["overall"] = r.overall;
    return j;
}

ordered_json equation(const IdealEquation& eq) {
    ordered_json atoms = ordered_json::array();
    for (std::size_t i = 0; i < eq.atoms.size(); ++i) {
        ordered_json a;
        a["name"] = eq.atoms[i].name;
        a["norm"] = big(eq.atoms[i].norm);
        a["family"] = to_string(eq.atoms[i].family);
        a["exponent"] = eq.target[i];
        atoms.push_back(a);
    }
    ordered_json j;
    j["factor_count"] = eq.factor_count;
    j["atoms"] = atoms;
    return j;
}

ordered_json solver_result(const SolverResult& r) {
    ordered_json j;
    j["infeasible"] = r.infeasible;
    j["total_norm"] = big(r.trace.total_norm);
    j["required_factor_norm"] = optional_of(r.trace.required_factor_norm, big);
    j["obstructions"] = r.trace.obstructions;
    j["assignments_examined"] = r.trace.assignments_examined;
    j["feasible_assignments"] = r.trace.feasible_assignments;
    j["witness"] = r.trace.witness ? ordered_json(*r.trace.witness) : ordered_json(nullptr);
    return j;
}

ordered_json candidate(const SolutionCandidate& c) {
    ordered_json j;
    j["x"] = big(c.x);
    j["y"] = big(c.y);
    j["trivial"] = c.trivial;
    j["violates_conditions"] = c.violates_conditions;
    return j;
}

ordered_json certificate(const ProofCertificate& c) {
    ordered_json j;
    j["pair"] = {{"p", big(c.p)}, {"q", big(c.q)}};
    j["condition_report"] = condition_report(c.conditions);
    ordered_json steps = ordered_json::array();
    for (const auto& s : c.steps) {
        ordered_json st;
        st["id"] = s.id;
        st["kind"] = to_string(s.kind);
        st["claim"] = s.claim;
        st["inputs"] = s.inputs;
        st["computed"] = s.computed ? *s.computed : ordered_json(nullptr);
        st["status"] = to_string(s.status);
        st["anchor"] = {{"location", s.anchor.location}, {"quote", s.anchor.quote}};
        steps.push_back(st);
    }
    j["steps"] = steps;
    j["verdict"] = to_string(c.verdict);
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace quintic::json

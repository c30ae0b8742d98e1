#include "quintic/verifier.hpp"

#include <utility>

#include "quintic/serialize.hpp"
#include "quintic/splitting.hpp"
#include "quintic/symbols.hpp"

namespace quintic {

std::string to_string(StepKind k) {
    return k == StepKind::Computational ? "Computational" : "PaperSymbolic";
}

std::string to_string(StepStatus s) {
    switch (s) {
        case StepStatus::Pass: return "Pass";
        case StepStatus::Fail: return "Fail";
        case StepStatus::AssumedByPaper: return "AssumedByPaper";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "Verified";
        case Verdict::Refuted: return "Refuted";
        case Verdict::Incomplete: return "Incomplete";
    }
    return "?";
}

const CertificateStep* ProofCertificate::find(const std::string& id) const {
    for (const auto& s : steps) {
        if (s.id == id) return &s;
    }
    return nullptr;
}

namespace {

using json::big;

PrimeIdealRep two_prime() { return build_residue_field(CycInt(2)); }

IdealEquation equation_from(const Int& q, const std::vector<KummerAtom>& two_atoms,
                            const std::vector<KummerAtom>& pi1_atoms,
                            const std::vector<KummerAtom>& pi2_atoms) {
    (void)q;
    IdealEquation eq;
    add_atoms(eq, two_atoms, AtomFamily::AboveTwo, 1);
    add_atoms(eq, pi1_atoms, AtomFamily::AboveQ, 2);
    add_atoms(eq, pi2_atoms, AtomFamily::AboveQ, 2);
    return eq;
}

CertificateStep computational(std::string id, std::string claim, Anchor anchor) {
    CertificateStep s;
    s.id = std::move(id);
    s.kind = StepKind::Computational;
    s.claim = std::move(claim);
    s.anchor = std::move(anchor);
    return s;
}

CertificateStep symbolic(std::string id, std::string claim, Anchor anchor) {
    CertificateStep s;
    s.id = std::move(id);
    s.kind = StepKind::PaperSymbolic;
    s.status = StepStatus::AssumedByPaper;
    s.claim = std::move(claim);
    s.anchor = std::move(anchor);
    return s;
}

void settle(CertificateStep& s, bool ok, ordered_json computed) {
    s.computed = std::move(computed);
    s.status = ok ? StepStatus::Pass : StepStatus::Fail;
}

ordered_json pq_inputs(const Int& p, const Int& q) { return {{"p", big(p)}, {"q", big(q)}}; }

// p | x^2 + q^2 has no solution x when p = 3 (mod 4) and p does not divide q.
CertificateStep rejected_branch(const std::string& id, const Int& p, const Int& q,
                                const std::string& location) {
    auto s = computational(id,
                           "the branch with p | x^2 + q^2 is impossible: -1 is a quadratic "
                           "non-residue mod p = 3 (mod 4) and p does not divide q",
                           {location, "in contradiction with the fact that"});
    s.inputs = pq_inputs(p, q);
    Int p_mod_4 = mod(p, 4);
    Int euler = powm(p - 1, (p - 1) / 2, p);
    bool q_unit = mod(q, p) != 0;
    bool exhaustive_none = true;
    for (Int x = 0; x < p; ++x) {
        if (mod(x * x + q * q, p) == 0) {
            exhaustive_none = false;
            break;
        }
    }
    bool ok = p_mod_4 == 3 && euler == p - 1 && q_unit && exhaustive_none;
    settle(s, ok,
           {{"p_mod_4", big(p_mod_4)},
            {"euler_criterion_minus_one", big(euler)},
            {"q_mod_p_nonzero", q_unit},
            {"no_root_of_x2_plus_q2_mod_p", exhaustive_none}});
    return s;
}

struct PiData {
    F2Factorization fac;
    SymbolValue two[2];
    SymbolValue p[2];
    SymbolValue eight_p[2];
    KummerSplitting kummer_8p[2];
    KummerSplitting kummer_p[2];
};

PiData pi_data(const Int& p, const Int& q) {
    PiData d{factor_f2_prime(q), {}, {}, {}, {}, {}};
    const PrimeIdealRep* pis[2] = {&d.fac.first, &d.fac.second};
    auto k8p = make_kummer_field(CycInt(8 * p), "8p");
    auto kp = make_kummer_field(CycInt(p), "p");
    for (int i = 0; i < 2; ++i) {
        d.two[i] = quintic_symbol(CycInt(2), *pis[i]);
        d.p[i] = quintic_symbol(CycInt(p), *pis[i]);
        d.eight_p[i] = quintic_symbol(CycInt(8 * p), *pis[i]);
        d.kummer_8p[i] = kummer_splitting(k8p, *pis[i]);
        d.kummer_p[i] = kummer_splitting(kp, *pis[i]);
    }
    return d;
}

ordered_json solver_block(const IdealEquation& eq, const IdealEquation& reference,
                          const Int& expected_norm, bool& ok) {
    GaloisOrbitSpec orbit;
    SolverResult main = ideal_equation_infeasible(eq, orbit);
    SolverConstraints no_norm{true, false, false, true};
    SolverConstraints with_orbit{true, false, true, false};
    SolverResult alt_pigeonhole = ideal_equation_infeasible(eq, orbit, no_norm);
    SolverResult alt_orbit = ideal_equation_infeasible(eq, orbit, with_orbit);
    SolverResult ref = ideal_equation_infeasible(reference, orbit);

    bool norm_ok = main.trace.total_norm == expected_norm;
    ok = main.infeasible && !main.trace.obstructions.empty() && norm_ok;

    ordered_json j;
    j["equation"] = json::equation(eq);
    j["expected_total_norm"] = big(expected_norm);
    j["norm_bookkeeping"] = norm_ok;
    j["constraints"] = "comaximal factors (assumed premise) and equal factor norms";
    j["result"] = json::solver_result(main);
    j["alternative_comaximal_nonunit"] = json::solver_result(alt_pigeonhole);
    j["alternative_comaximal_galois_orbit"] = json::solver_result(alt_orbit);
    j["reference_equation"] = json::equation(reference);
    j["reference_result"] = json::solver_result(ref);
    return j;
}

void case_one(ProofCertificate& cert, const PiData& d) {
    const Int& p = cert.p;
    const Int& q = cert.q;
    auto& steps = cert.steps;

    {
        auto s = computational("I.1", "p = 3 (mod 5), so (p) is prime in Z[zeta_5]",
                               {"Theorem 2.3, Case I", "$p$ is a prime element in the ring"});
        s.inputs = {{"p", big(p)}};
        SplittingType t = splitting_type(p);
        Int r = mod(p, 5);
        settle(s, r == 3 && t == SplittingType{1, 4, 1},
               {{"p_mod_5", big(r)}, {"splitting_type", json::splitting(t)}});
        steps.push_back(std::move(s));
    }
    {
        auto s = symbolic("I.2",
                          "x odd: gcd(x^2 - q^2, x^2 + q^2) = 2, and with y = 2 y1 y2 either "
                          "x^2 - q^2 = 16 p y1^5, x^2 + q^2 = 2 y2^5 or x^2 - q^2 = 16 y1^5, "
                          "x^2 + q^2 = 2 p y2^5",
                          {"Theorem 2.3, Case I", "x^{2}-q^{2}=16py^{5}_{1}"});
        s.inputs = pq_inputs(p, q);
        s.computed = ordered_json{{"decidable_subcheck", "I.2a"}};
        steps.push_back(std::move(s));
    }
    {
        auto s = computational("I.2a",
                               "odd squares are 1 mod 8, so for odd x: x^2 - q^2 = 0 (mod 8) "
                               "and x^2 + q^2 = 2 (mod 8)",
                               {"Theorem 2.3, Case I", "x^{2},q^{2}\\equiv1"});
        s.inputs = {{"q", big(q)}};
        bool ok = mod(q, 2) == 1;
        ordered_json sq = ordered_json::array();
        for (int r = 1; r < 8; r += 2) {
            Int x(r);
            sq.push_back(to_long(mod(x * x, 8)));
            ok = ok && mod(x * x, 8) == 1 && mod(x * x - q * q, 8) == 0 &&
                 mod(x * x + q * q, 8) == 2;
        }
        settle(s, ok, {{"odd_residues_squared_mod_8", sq}, {"q_squared_mod_8", big(mod(q * q, 8))}});
        steps.push_back(std::move(s));
    }
    steps.push_back(rejected_branch("I.3", p, q, "Theorem 2.3, Case I"));
    {
        auto s = computational("I.4", "{q / (p)} = 1, by exponentiation in Z[zeta_5]/(p)",
                               {"Theorem 2.3, Case I", "We prove that"});
        s.inputs = pq_inputs(p, q);
        PrimeIdealRep P = build_residue_field(CycInt(p));
        SymbolValue sym = quintic_symbol(CycInt(q), P);
        settle(s, sym.is_one(),
               {{"field_size", big(P.norm())},
                {"exponent", big((P.norm() - 1) / 5)},
                {"symbol", json::symbol(sym)}});
        steps.push_back(std::move(s));
    }
    {
        auto s = computational("I.5",
                               "q = pi1 pi2 (up to a unit) with N(pi1) = N(pi2) = q^2",
                               {"Theorem 2.3, Case I", "N(\\pi_{1})=N(\\pi_{2})=q^{2}"});
        s.inputs = {{"q", big(q)}};
        SplittingType t = splitting_type(q);
        Int q2 = q * q;
        bool ok = t == SplittingType{1, 2, 2} && abs(norm(d.fac.first.generator)) == q2 &&
                  abs(norm(d.fac.second.generator)) == q2 && is_unit(d.fac.unit_quotient);
        settle(s, ok, {{"splitting_type", json::splitting(t)}, {"factorization", json::factorization(d.fac)}});
        steps.push_back(std::move(s));
    }
    {
        auto s = computational("I.6", "{2 / (pi_i)} = 1 for i = 1, 2",
                               {"Theorem 2.3, Case I", "\\alpha^{5}$$\\equiv$$2$ (mod $q$)"});
        s.inputs = pq_inputs(p, q);
        const Int w = cert.conditions.quintic_residue_witness.value_or(Int(0));
        bool witness_ok = cert.conditions.quintic_residue_witness.has_value() &&
                          project(CycInt(pow(w, 5) - 2), d.fac.first).is_zero() &&
                          project(CycInt(pow(w, 5) - 2), d.fac.second).is_zero();
        settle(s, witness_ok && d.two[0].is_one() && d.two[1].is_one(),
               {{"alpha", big(w)},
                {"alpha5_minus_2_in_pi1_and_pi2", witness_ok},
                {"symbol_pi1", json::symbol(d.two[0])},
                {"symbol_pi2", json::symbol(d.two[1])}});
        steps.push_back(std::move(s));
    }
    {
        auto s = computational("I.7",
                               "{8p / (pi_i)} = {2 / (pi_i)}^3 {p / (pi_i)} = {p / (pi_i)}",
                               {"Theorem 2.3, Case I",
                                "\\left\\{\\frac{8p}{\\left(\\pi_{i}\\right)}\\right\\}=\\left\\{\\frac{2}{\\left(\\pi_{i}\\right)}\\right\\}^{3}"});
        s.inputs = pq_inputs(p, q);
        bool ok = true;
        ordered_json per = ordered_json::array();
        for (int i = 0; i < 2; ++i) {
            SymbolValue composed = pow(d.two[i], 3) * d.p[i];
            ok = ok && d.eight_p[i] == composed && d.eight_p[i] == d.p[i];
            per.push_back({{"symbol_8p", json::symbol(d.eight_p[i])},
                           {"symbol_2_cubed_times_symbol_p", json::symbol(composed)},
                           {"symbol_p", json::symbol(d.p[i])}});
        }
        settle(s, ok, {{"pi1", per[0]}, {"pi2", per[1]}});
        steps.push_back(std::move(s));
    }
    {
        auto s = computational(
            "I.8",
            "{p / (pi_i)} != 1 for i = 1, 2; cross-check: q^3 (q - 1) does not divide "
            "(q^2 - 1)/5, i.e. no positive k has q + 1 = 5 q^3 k",
            {"Theorem 2.3, Case I", "q+1=5q^{3}k"});
        s.inputs = pq_inputs(p, q);
        const Int e = (q * q - 1) / 5;
        const Int group = pow(q, 3) * (q - 1);
        const bool divides_group = mod(e, group) == 0;
        const bool k_exists = mod(q + 1, 5 * pow(q, 3)) == 0;
        const bool cross_check = !divides_group && !k_exists && e < group;
        const bool symbols_nontrivial = !d.p[0].is_one() && !d.p[1].is_one() &&
                                        !d.p[0].is_zero() && !d.p[1].is_zero();
        // Reciprocity route: {pi_i* / (p)} for the semiprimary associates.
        PrimeIdealRep P = build_residue_field(CycInt(p));
        ordered_json recip = ordered_json::array();
        for (const PrimeIdealRep* pi : {&d.fac.first, &d.fac.second}) {
            auto sp = semiprimary_normalize(pi->generator);
            recip.push_back(sp ? json::symbol(quintic_symbol(*sp, P)) : ordered_json(nullptr));
        }
        settle(s, symbols_nontrivial && cross_check,
               {{"symbol_p_pi1", json::symbol(d.p[0])},
                {"symbol_p_pi2", json::symbol(d.p[1])},
                {"product_exponent_mod_5", (d.p[0].exponent + d.p[1].exponent) % 5},
                {"symbol_semiprimary_pi_over_p", recip},
                {"exponent_q2_minus_1_over_5", big(e)},
                {"group_order_q3_q_minus_1", big(group)},
                {"group_order_divides_exponent", divides_group},
                {"k_with_q_plus_1_eq_5q3k_exists", k_exists},
                {"p_pow_exponent_mod_q", big(powm(p, e, q))},
                {"q_minus_1_divides_exponent", mod(e, q - 1) == 0}});
        steps.push_back(std::move(s));
    }
    {
        auto s = computational("I.9",
                               "pi1 and pi2 stay prime in the ring of integers of "
                               "Q(zeta_5, (8p)^(1/5))",
                               {"Theorem 1.3 (iii)", "is a prime ideal in the ring A"});
        s.inputs = pq_inputs(p, q);
        settle(s, d.kummer_8p[0].kind == KummerCase::Inert && d.kummer_8p[1].kind == KummerCase::Inert,
               {{"pi1", json::kummer(d.kummer_8p[0])}, {"pi2", json::kummer(d.kummer_8p[1])}});
        steps.push_back(std::move(s));
    }
    {
        auto s = symbolic("I.10p",
                          "the five factors (y2 - z^m y1 (8p)^(1/5)) A are pairwise comaximal",
                          {"Lemma 2.2", "are comaximal ideals of A"});
        s.inputs = pq_inputs(p, q);
        steps.push_back(std::move(s));
    }
    {
        auto s = computational("I.10",
                               "the ideal equation for q^2 = y2^5 - 8p y1^5 over the ring of "
                               "integers of Q(zeta_5, (8p)^(1/5)) has no solution",
                               {"Theorem 2.3, Case I, (3)-(4)", "q^{2}=y^{5}_{2}-8py^{5}_{1}"});
        s.inputs = pq_inputs(p, q);
        ReplayEquations eqs = build_equations(p, q);
        bool ok = false;
        ordered_json block =
            solver_block(eqs.odd_case, reference_odd_equation(q), pow(q, 40), ok);
        settle(s, ok, std::move(block));
        steps.push_back(std::move(s));
    }
}

void case_two(ProofCertificate& cert, const PiData& d) {
    const Int& p = cert.p;
    const Int& q = cert.q;
    auto& steps = cert.steps;

    {
        auto s = symbolic("II.1",
                          "x even: gcd(x^2 - q^2, x^2 + q^2) = 1, and with y = y1 y2 either "
                          "x^2 - q^2 = p y1^5, x^2 + q^2 = y2^5 or x^2 - q^2 = y1^5, "
                          "x^2 + q^2 = p y2^5",
                          {"Theorem 2.3, Case II", "gcd\\left(x^{2}-q^{2},x^{2}+q^{2}\\right)=1"});
        s.inputs = pq_inputs(p, q);
        s.computed = ordered_json{{"decidable_subcheck", "II.1a"}};
        steps.push_back(std::move(s));
    }
    {
        auto s = computational("II.1a",
                               "for even x and odd q both x^2 - q^2 and x^2 + q^2 are odd",
                               {"Theorem 2.3, Case II", "are odd numbers"});
        s.inputs = {{"q", big(q)}};
        bool ok = mod(q, 2) == 1;
        for (int r = 0; r < 4; r += 2) {
            Int x(r);
            ok = ok && mod(x * x - q * q, 2) == 1 && mod(x * x + q * q, 2) == 1;
        }
        settle(s, ok, {{"q_mod_2", big(mod(q, 2))}});
        steps.push_back(std::move(s));
    }
    steps.push_back(rejected_branch("II.2", p, q, "Theorem 2.3, Case II"));
    {
        auto s = computational("II.3",
                               "subtracting the branch equations gives 2 q^2 = y2^5 - p y1^5",
                               {"Theorem 2.3, Case II", "2q^{2}=y^{5}_{2}-py^{5}_{1}"});
        s.inputs = pq_inputs(p, q);
        Int rhs = 2 * q * q;
        bool ok = true;
        for (int x = 0; x <= 8; x += 2) {
            Int X(x);
            ok = ok && (X * X + q * q) - (X * X - q * q) == rhs;
        }
        // Case I counterpart: (2 y2^5) - (16 p y1^5) = 2 q^2 halves to q^2.
        settle(s, ok, {{"two_q_squared", big(rhs)}, {"odd_case_rhs_q_squared", big(q * q)}});
        steps.push_back(std::move(s));
    }
    {
        auto s = computational("II.4", "(2) is prime in Z[zeta_5]",
                               {"Theorem 2.3, Case II", "$2$ is a prime element in the ring"});
        s.inputs = {{"prime", "2"}};
        SplittingType t = splitting_type(2);
        settle(s, t == SplittingType{1, 4, 1}, {{"splitting_type", json::splitting(t)}});
        steps.push_back(std::move(s));
    }
    {
        auto s = computational("II.5",
                               "{p / (2)} = 1, so 2A = P1 P2 P3 P4 P5 in the ring of integers "
                               "of Q(zeta_5, p^(1/5))",
                               {"Theorem 2.3, Case II", "2A=P_{1}P_{2}...P_{5}"});
        s.inputs = {{"p", big(p)}};
        PrimeIdealRep two = two_prime();
        KummerSplitting k = kummer_splitting(make_kummer_field(CycInt(p), "p"), two);
        settle(s, k.symbol.is_one() && k.kind == KummerCase::SplitsInto5,
               {{"p_mod_2", big(mod(p, 2))}, {"kummer", json::kummer(k)}});
        steps.push_back(std::move(s));
    }
    {
        auto s = computational("II.6",
                               "{p / (pi_i)} != 1, so pi1 A and pi2 A are prime in the ring of "
                               "integers of Q(zeta_5, p^(1/5))",
                               {"Theorem 2.3, Case II", "qA=\\pi_{1}A\\cdot\\pi_{2}A"});
        s.inputs = pq_inputs(p, q);
        settle(s, d.kummer_p[0].kind == KummerCase::Inert && d.kummer_p[1].kind == KummerCase::Inert,
               {{"pi1", json::kummer(d.kummer_p[0])}, {"pi2", json::kummer(d.kummer_p[1])}});
        steps.push_back(std::move(s));
    }
    {
        auto s = symbolic("II.7",
                          "the automorphism v with v(z) = z, v(p^(1/5)) = z p^(1/5) maps "
                          "factor m to factor m + 1 and permutes prime ideals",
                          {"Theorem 2.3, Case II; Proposition 1.4", "v\\left(\\xi\\right)=\\xi"});
        s.inputs = {{"p", big(p)}};
        s.computed = ordered_json{{"factor_shift", 1}, {"order", 5}};
        steps.push_back(std::move(s));
    }
    {
        auto s = symbolic("II.8p",
                          "the five factors (y2 - z^m y1 p^(1/5)) A are pairwise comaximal",
                          {"Lemma 2.1", "are comaximal ideals of A"});
        s.inputs = pq_inputs(p, q);
        steps.push_back(std::move(s));
    }
    {
        auto s = computational("II.8",
                               "the ideal equation for 2 q^2 = y2^5 - p y1^5 over the ring of "
                               "integers of Q(zeta_5, p^(1/5)) has no solution",
                               {"Theorem 2.3, Case II, (6)", "the equality (6) is impossible"});
        s.inputs = pq_inputs(p, q);
        ReplayEquations eqs = build_equations(p, q);
        bool ok = false;
        ordered_json block = solver_block(eqs.even_case, reference_even_equation(q),
                                          pow(Int(2), 20) * pow(q, 40), ok);
        settle(s, ok, std::move(block));
        steps.push_back(std::move(s));
    }
}

}  // namespace

ReplayEquations build_equations(const Int& p, const Int& q) {
    F2Factorization fac = factor_f2_prime(q);
    auto k8p = make_kummer_field(CycInt(8 * p), "8p");
    auto kp = make_kummer_field(CycInt(p), "p");
    PrimeIdealRep two = two_prime();

    auto atoms = [](const KummerFieldDesc& K, const PrimeIdealRep& pi, const std::string& base) {
        return kummer_atom_norms(K, pi, kummer_splitting(K, pi), base);
    };

    ReplayEquations out;
    out.odd_case = equation_from(q, {}, atoms(k8p, fac.first, "pi1"), atoms(k8p, fac.second, "pi2"));
    out.even_case = equation_from(q, atoms(kp, two, "P"), atoms(kp, fac.first, "pi1"),
                                  atoms(kp, fac.second, "pi2"));
    return out;
}

IdealEquation reference_odd_equation(const Int& q) {
    const Int n = pow(q, 10);
    return equation_from(q, {}, {KummerAtom{"pi1A", n, 1}}, {KummerAtom{"pi2A", n, 1}});
}

IdealEquation reference_even_equation(const Int& q) {
    std::vector<KummerAtom> twos;
    for (int k = 1; k <= 5; ++k) twos.push_back(KummerAtom{"P" + std::to_string(k), Int(16), 1});
    const Int n = pow(q, 10);
    return equation_from(q, twos, {KummerAtom{"pi1A", n, 1}}, {KummerAtom{"pi2A", n, 1}});
}

ProofCertificate verify_theorem(const Int& p, const Int& q) {
    ProofCertificate cert;
    cert.p = p;
    cert.q = q;
    cert.conditions = check_conditions(p, q);
    if (!cert.conditions.overall) {
        cert.verdict = Verdict::Incomplete;
        return cert;
    }
    PiData d = pi_data(p, q);
    case_one(cert, d);
    case_two(cert, d);

    bool all_pass = true;
    for (const auto& s : cert.steps) {
        if (s.kind == StepKind::Computational && s.status != StepStatus::Pass) all_pass = false;
    }
    cert.verdict = all_pass ? Verdict::Verified : Verdict::Refuted;
    return cert;
}

}  // namespace quintic

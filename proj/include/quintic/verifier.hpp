#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quintic/hypothesis.hpp"
#include "quintic/ideal_equation.hpp"

namespace quintic {

using ordered_json = nlohmann::ordered_json;

enum class StepKind { Computational, PaperSymbolic };
enum class StepStatus { Pass, Fail, AssumedByPaper };
enum class Verdict { Verified, Refuted, Incomplete };

std::string to_string(StepKind k);
std::string to_string(StepStatus s);
std::string to_string(Verdict v);

/// Location in the source argument plus a short verbatim quote.
struct Anchor {
    std::string location;
    std::string quote;
};

struct CertificateStep {
    std::string id;
    StepKind kind = StepKind::Computational;
    std::string claim;
    ordered_json inputs = ordered_json::object();
    std::optional<ordered_json> computed;
    StepStatus status = StepStatus::Pass;
    Anchor anchor;
};

struct ProofCertificate {
    Int p;
    Int q;
    ConditionReport conditions;
    std::vector<CertificateStep> steps;
    Verdict verdict = Verdict::Incomplete;

    const CertificateStep* find(const std::string& id) const;
};

/// Replays the nonexistence argument for x^4 - q^4 = p y^5 on a concrete
/// pair. Incomplete if the hypotheses fail; Refuted if any computational step
/// fails; Verified otherwise.
ProofCertificate verify_theorem(const Int& p, const Int& q);

/// The two right-hand sides as ideal equations, built from the splitting
/// data actually computed for (p, q).
struct ReplayEquations {
    IdealEquation odd_case;   // q^2 over the radicand 8p
    IdealEquation even_case;  // 2 q^2 over the radicand p
};
ReplayEquations build_equations(const Int& p, const Int& q);

/// The equations with the atom structure asserted in the source argument:
/// pi_i inert in the Kummer ring, (2) split into five primes.
IdealEquation reference_odd_equation(const Int& q);
IdealEquation reference_even_equation(const Int& q);

}  // namespace quintic

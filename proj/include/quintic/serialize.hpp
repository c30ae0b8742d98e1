#pragma once

#include <string>

#include <json.hpp>

#include "quintic/hypothesis.hpp"
#include "quintic/ideal_equation.hpp"
#include "quintic/search.hpp"
#include "quintic/splitting.hpp"
#include "quintic/verifier.hpp"

// Canonical JSON forms. Arbitrary-precision integers are decimal strings;
// machine integers (e, f, r, exponents, counts) are JSON numbers. Field order
// is fixed, so equal values serialize to identical bytes.
namespace quintic::json {

using nlohmann::ordered_json;

ordered_json big(const Int& n);
ordered_json cycint(const CycInt& x);
ordered_json symbol(const SymbolValue& s);
ordered_json splitting(const SplittingType& t);
ordered_json prime_ideal(const PrimeIdealRep& P);
ordered_json factorization(const F2Factorization& f);
ordered_json kummer(const KummerSplitting& k);
ordered_json condition_report(const ConditionReport& r);
ordered_json equation(const IdealEquation& eq);
ordered_json solver_result(const SolverResult& r);
ordered_json candidate(const SolutionCandidate& c);
ordered_json certificate(const ProofCertificate& c);

/// Two-space indented dump followed by a newline.
std::string dump(const ordered_json& j);

}  // namespace quintic::json

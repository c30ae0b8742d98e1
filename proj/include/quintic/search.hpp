#pragma once

#include <string>
#include <vector>

#include "quintic/bigint.hpp"

namespace quintic {

/// A pair (x, y) with x^4 - q^4 = p * y^5.
struct SolutionCandidate {
    Int x;
    Int y;
    bool trivial = false;                      // y = 0
    std::vector<std::string> violates_conditions;  // subset of {"ii", "v"}

    friend bool operator==(const SolutionCandidate&, const SolutionCandidate&) = default;
};

/// floor(n^(1/k)); n >= 0, k >= 1.
Int integer_nth_root(const Int& n, unsigned long k);

struct SolutionCheck {
    bool holds = false;
    SolutionCandidate candidate;
};

/// Exact test of x^4 - q^4 = p y^5, annotated with triviality and the
/// solution-level conditions (ii) p does not divide y and (v) gcd(x, y) = 1.
SolutionCheck check_solution(const Int& p, const Int& q, const Int& x, const Int& y);

/// Every solution with |y| <= y_bound, ordered by y ascending, then x
/// descending. Work is split over y-chunks on worker threads.
std::vector<SolutionCandidate> find_solutions(const Int& p, const Int& q, const Int& y_bound,
                                              unsigned threads = 0);

}  // namespace quintic

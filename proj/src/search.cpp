#include "quintic/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace quintic {

Int integer_nth_root(const Int& n, unsigned long k) {
    if (n < 0) throw std::invalid_argument("integer_nth_root: negative argument");
    if (k == 0) throw std::invalid_argument("integer_nth_root: k must be >= 1");
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

namespace {

SolutionCandidate annotate(const Int& p, const Int& x, const Int& y) {
    SolutionCandidate c{x, y, y == 0, {}};
    if (p != 0 && mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t())) c.violates_conditions.push_back("ii");
    if (gcd(x, y) != 1) c.violates_conditions.push_back("v");
    return c;
}

void scan(const Int& p, const Int& q4, Int y, const Int& y_end,
          std::vector<SolutionCandidate>& out) {
    const Int& q4ref = q4;
    for (; y <= y_end; ++y) {
        Int n = p * pow(y, 5) + q4ref;
        if (n < 0) continue;
        Int r = integer_nth_root(n, 4);
        if (pow(r, 4) != n) continue;
        out.push_back(annotate(p, r, y));
        if (r != 0) out.push_back(annotate(p, -r, y));
    }
}

}  // namespace

SolutionCheck check_solution(const Int& p, const Int& q, const Int& x, const Int& y) {
    SolutionCheck out;
    out.holds = pow(x, 4) - pow(q, 4) == p * pow(y, 5);
    out.candidate = annotate(p, x, y);
    return out;
}

std::vector<SolutionCandidate> find_solutions(const Int& p, const Int& q, const Int& y_bound,
                                              unsigned threads) {
    if (y_bound < 0) throw std::invalid_argument("find_solutions: y_bound must be >= 0");
    const Int q4 = pow(q, 4);
    Int y_start = -y_bound;
    // p y^5 + q^4 < 0 for every y below the first y where it turns non-negative
    // (p > 0), so the scan can start there.
    if (p > 0) {
        Int lo = integer_nth_root(q4 / p + 1, 5);
        if (-lo - 1 > y_start) y_start = -lo - 1;
    }
    const Int span = y_bound - y_start + 1;
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    const unsigned long chunks = span < Int(4096) ? 1UL : std::min<unsigned long>(threads, 64UL);

    std::vector<std::vector<SolutionCandidate>> partial(chunks);
    std::vector<std::thread> workers;
    const Int step = span / chunks + 1;
    for (unsigned long i = 0; i < chunks; ++i) {
        Int from = y_start + step * i;
        Int to = std::min<Int>(from + step - 1, y_bound);
        if (from > to) continue;
        if (chunks == 1) {
            scan(p, q4, from, to, partial[i]);
        } else {
            workers.emplace_back([&, from, to, i] { scan(p, q4, from, to, partial[i]); });
        }
    }
    for (auto& w : workers) w.join();

    std::vector<SolutionCandidate> out;
    for (auto& part : partial) {
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

}  // namespace quintic

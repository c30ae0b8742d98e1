#include "quintic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "quintic/hypothesis.hpp"
#include "quintic/search.hpp"
#include "quintic/serialize.hpp"
#include "quintic/splitting.hpp"
#include "quintic/symbols.hpp"
#include "quintic/verifier.hpp"

namespace quintic::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    ordered_json result;
    int exit_code = kExitOk;
    std::optional<std::string> csv;  // replaces the envelope in csv mode
};

ordered_json envelope(const std::string& command, const ordered_json& inputs,
                      const ordered_json& result, const std::string& status,
                      const std::string& error) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = result;
    j["status"] = status;
    if (status == "error") j["error_message"] = error;
    return j;
}

// --- text rendering -------------------------------------------------------

std::string scalar_text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

bool is_flat_record(const ordered_json& v) {
    if (!v.is_object()) return false;
    return std::all_of(v.begin(), v.end(), [](const ordered_json& x) {
        return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(),
                                                                [](const ordered_json& y) { return y.is_primitive(); }));
    });
}

std::string cell_text(const ordered_json& v) {
    if (!v.is_array()) return scalar_text(v);
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + scalar_text(x);
    return s.empty() ? "-" : s;
}

void render_table(const ordered_json& rows, std::ostream& os) {
    std::vector<std::string> cols;
    for (const auto& [k, v] : rows.front().items()) cols.push_back(k);
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            width[i] = std::max(width[i], cell_text(r.value(cols[i], ordered_json())).size());
        }
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << std::left << std::setw(static_cast<int>(width[i]) + 2) << cells[i];
        }
        os << '\n';
    };
    line(cols);
    for (const auto& r : rows) {
        std::vector<std::string> cells;
        for (const auto& c : cols) cells.push_back(cell_text(r.value(c, ordered_json())));
        line(cells);
    }
}

void flatten(const ordered_json& v, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows,
             std::vector<std::pair<std::string, ordered_json>>& tables) {
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) flatten(x, path.empty() ? k : path + "." + k, rows, tables);
    } else if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), is_flat_record)) {
        tables.emplace_back(path, v);
    } else if (v.is_array() && std::any_of(v.begin(), v.end(),
                                           [](const ordered_json& x) { return x.is_structured(); })) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            flatten(v[i], path + "[" + std::to_string(i) + "]", rows, tables);
        }
    } else {
        rows.emplace_back(path, cell_text(v));
    }
}

std::string render_text(const ordered_json& env) {
    std::ostringstream os;
    std::vector<std::pair<std::string, std::string>> rows;
    std::vector<std::pair<std::string, ordered_json>> tables;
    ordered_json head = env;
    head.erase("result");
    flatten(head, "", rows, tables);
    flatten(env["result"], "result", rows, tables);
    std::size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.first.size());
    for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(w) + 2) << k << v << '\n';
    for (const auto& [name, t] : tables) {
        os << '\n' << name << ":\n";
        render_table(t, os);
    }
    return os.str();
}

// --- argument helpers -----------------------------------------------------

Int int_arg(const std::string& name, const std::string& text) {
    try {
        return parse_int(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(name + ": expected an integer, got '" + text + "'");
    }
}

CycInt cycint_arg(const std::string& name, const std::string& text) {
    try {
        return parse_cycint(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(name + ": " + e.what());
    }
}

// "N" (or "c0,c1,c2,c3") names the prime generated by that element;
// "Q:1" / "Q:2" names pi1 / pi2 of a prime Q = 4 (mod 5).
PrimeIdealRep prime_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return build_residue_field(cycint_arg("--over", text));
    Int q = int_arg("--over", text.substr(0, colon));
    std::string idx = text.substr(colon + 1);
    if (idx != "1" && idx != "2") throw UsageError("--over: index must be 1 or 2 in '" + text + "'");
    F2Factorization f = factor_f2_prime(q);
    return idx == "1" ? f.first : f.second;
}

// --- commands -------------------------------------------------------------

Outcome cmd_pairs(const Int& p_max, const Int& q_max, bool csv) {
    if (p_max < 2 || q_max < 2) throw UsageError("pairs: bounds must be >= 2");
    auto reports = enumerate_pairs(p_max, q_max);
    Outcome o;
    ordered_json rows = ordered_json::array();
    std::ostringstream c;
    c << "p,q,order_p_mod_q4,passes\n";
    for (const auto& r : reports) {
        std::string order = r.primitive_root_order ? to_string(*r.primitive_root_order) : "";
        rows.push_back({{"p", to_string(r.p)},
                        {"q", to_string(r.q)},
                        {"order_p_mod_q4", order},
                        {"passes", r.overall}});
        c << r.p << ',' << r.q << ',' << order << ',' << (r.overall ? "true" : "false") << '\n';
    }
    o.result = {{"count", reports.size()}, {"pairs", rows}};
    if (csv) o.csv = c.str();
    return o;
}

Outcome cmd_check(const Int& p, const Int& q) {
    ConditionReport r = check_conditions(p, q);
    Outcome o;
    o.result = json::condition_report(r);
    o.result["redundancy"] = {
        {"q_mod_5_is_4_implies_vi", r.q_mod_5_ok ? ordered_json(r.quintic_residue_ok) : ordered_json(nullptr)}};
    return o;
}

Outcome cmd_split(const Int& p) {
    Outcome o;
    o.result = json::splitting(splitting_type(p));
    return o;
}

Outcome cmd_factor(const Int& q) {
    Outcome o;
    o.result = json::factorization(factor_f2_prime(q));
    return o;
}

Outcome cmd_symbol(const CycInt& alpha, const std::string& over) {
    PrimeIdealRep P = prime_spec(over);
    Outcome o;
    o.result = {{"prime", json::prime_ideal(P)}, {"symbol", json::symbol(quintic_symbol(alpha, P))}};
    return o;
}

Outcome cmd_kummer(const CycInt& mu, const std::string& over) {
    PrimeIdealRep P = prime_spec(over);
    KummerFieldDesc K = make_kummer_field(mu, to_string(mu));
    Outcome o;
    o.result = {{"prime", json::prime_ideal(P)}, {"splitting", json::kummer(kummer_splitting(K, P))}};
    return o;
}

Outcome cmd_verify(const Int& p, const Int& q) {
    ProofCertificate cert = verify_theorem(p, q);
    Outcome o;
    o.result = json::certificate(cert);
    o.exit_code = cert.verdict == Verdict::Verified ? kExitOk : kExitFailure;
    return o;
}

Outcome cmd_search(const Int& p, const Int& q, const Int& y_bound) {
    if (y_bound < 0) throw UsageError("search: --y-bound must be >= 0");
    auto cands = find_solutions(p, q, y_bound);
    ordered_json list = ordered_json::array();
    std::size_t nontrivial = 0;
    for (const auto& c : cands) {
        list.push_back(json::candidate(c));
        if (!c.trivial) ++nontrivial;
    }
    Outcome o;
    o.result = {{"candidates", list}, {"nontrivial_count", nontrivial}};
    return o;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic in Z[zeta_5] and replay of the nonexistence argument for "
                 "x^4 - q^4 = p y^5"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string format = "json";
    std::string p_str, q_str, p_max_str, q_max_str, y_bound_str, prime_str, alpha_str, mu_str,
        over_str, out_file;

    auto add_format = [&](CLI::App* sub, bool allow_csv) {
        std::vector<std::string> allowed{"json", "text"};
        if (allow_csv) allowed.push_back("csv");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed));
    };

    auto* pairs = app.add_subcommand("pairs", "Enumerate pairs (p, q) satisfying the hypotheses");
    pairs->add_option("--p-max", p_max_str)->required();
    pairs->add_option("--q-max", q_max_str)->required();
    add_format(pairs, true);

    auto* check = app.add_subcommand("check", "Evaluate the hypotheses on (p, q)");
    check->add_option("--p", p_str)->required();
    check->add_option("--q", q_str)->required();
    add_format(check, false);

    auto* split = app.add_subcommand("split", "Splitting type of a rational prime in Z[zeta_5]");
    split->add_option("P", prime_str)->required();
    add_format(split, false);

    auto* factor = app.add_subcommand("factor", "Factor a prime q = 4 (mod 5) as pi1 pi2");
    factor->add_option("Q", prime_str)->required();
    add_format(factor, false);

    auto* symbol = app.add_subcommand("symbol", "Quintic power-residue symbol {alpha / pi}");
    symbol->add_option("--alpha", alpha_str, "c0,c1,c2,c3")->required();
    symbol->add_option("--over", over_str, "rational prime, c0,c1,c2,c3, or Q:index")->required();
    add_format(symbol, false);

    auto* kummer = app.add_subcommand("kummer", "Behaviour of pi in Q(zeta_5, mu^(1/5))");
    kummer->add_option("--mu", mu_str, "c0,c1,c2,c3")->required();
    kummer->add_option("--over", over_str, "rational prime, c0,c1,c2,c3, or Q:index")->required();
    add_format(kummer, false);

    auto* verify = app.add_subcommand("verify", "Replay the proof for (p, q) and emit a certificate");
    verify->add_option("--p", p_str)->required();
    verify->add_option("--q", q_str)->required();
    verify->add_option("--out", out_file, "Also write the json envelope to FILE");
    add_format(verify, false);

    auto* search = app.add_subcommand("search", "Exhaustive search for solutions with |y| <= bound");
    search->add_option("--p", p_str)->required();
    search->add_option("--q", q_str)->required();
    search->add_option("--y-bound", y_bound_str)->required();
    add_format(search, false);

    if (!args.empty() && args.front().rfind('-', 0) != 0 && !app.get_subcommand_no_throw(args.front())) {
        const std::string msg = "unknown subcommand: " + args.front();
        err << msg << '\n';
        out << json::dump(envelope(args.front(), ordered_json::object(), nullptr, "error", msg));
        return kExitUsage;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        out << json::dump(envelope(args.empty() ? "" : args.front(), ordered_json::object(),
                                   nullptr, "error", e.what()));
        return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    ordered_json inputs = ordered_json::object();
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->get_name() == "--help" || opt->count() == 0) continue;
        std::string name = opt->get_name();
        name.erase(0, name.find_first_not_of('-'));
        inputs[name] = opt->as<std::string>();
    }

    Outcome outcome;
    try {
        if (command == "pairs") {
            outcome = cmd_pairs(int_arg("--p-max", p_max_str), int_arg("--q-max", q_max_str),
                                format == "csv");
        } else if (command == "check") {
            outcome = cmd_check(int_arg("--p", p_str), int_arg("--q", q_str));
        } else if (command == "split") {
            outcome = cmd_split(int_arg("P", prime_str));
        } else if (command == "factor") {
            outcome = cmd_factor(int_arg("Q", prime_str));
        } else if (command == "symbol") {
            outcome = cmd_symbol(cycint_arg("--alpha", alpha_str), over_str);
        } else if (command == "kummer") {
            outcome = cmd_kummer(cycint_arg("--mu", mu_str), over_str);
        } else if (command == "verify") {
            outcome = cmd_verify(int_arg("--p", p_str), int_arg("--q", q_str));
        } else {
            outcome = cmd_search(int_arg("--p", p_str), int_arg("--q", q_str),
                                 int_arg("--y-bound", y_bound_str));
        }
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        out << json::dump(envelope(command, inputs, nullptr, "error", e.what()));
        return kExitUsage;
    } catch (const std::exception& e) {
        ordered_json env = envelope(command, inputs, nullptr, "error", e.what());
        out << (format == "text" ? render_text(env) : json::dump(env));
        return kExitFailure;
    }

    ordered_json env = envelope(command, inputs, outcome.result, "ok", "");
    const std::string json_text = json::dump(env);
    if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) {
            err << "cannot open " << out_file << " for writing\n";
            return kExitFailure;
        }
        f << json_text;
    }
    if (outcome.csv) {
        out << *outcome.csv;
    } else if (format == "text") {
        out << render_text(env);
    } else {
        out << json_text;
    }
    return outcome.exit_code;
}

}  // namespace quintic::cli

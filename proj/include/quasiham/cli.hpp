#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quasiham/audit.hpp"
#include "quasiham/equivalence.hpp"
#include "quasiham/error.hpp"
#include "quasiham/finvec.hpp"
#include "quasiham/hamming.hpp"
#include "quasiham/reconstruct.hpp"
#include "quasiham/spec_file.hpp"

namespace quasiham::cli {

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{"audit",          "columns",           "syndrome",        "decode",
                                                "verify-perfect", "generators",        "reconstruct-check", "membership-reduce",
                                                "choice-iso",     "basis-iso",         "support-witness", "distinguish",
                                                "nonassoc-witness", "right-linearity", "conjugate-check"};
    return names;
}

struct RunConfig {
    std::string command;
    std::string algebra = "f2";
    std::size_t m = 2;
    std::optional<std::size_t> m2;  // distinguish: larger row count, default m + 1
    std::optional<std::string> pivots;
    std::optional<std::string> mode;
    std::uint64_t seed = 1;
    std::uint64_t budget = std::uint64_t{1} << 20;
    std::optional<std::size_t> trials;
    std::optional<std::string> in;
    std::size_t jobs = 1;
};

enum ExitCode : int { verdict_holds = 0, counterexample = 1, usage = 2 };

struct RunResult {
    int exit_code = usage;
    std::string report;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_parameter("cannot read input file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

inline void require_mode(const std::string& mode, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (mode == a) return;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw invalid_parameter("mode '" + mode + "' not accepted here; use one of: " + list);
}

template <Quasifield A>
HammingCode<A> make_code(const A& alg, const RunConfig& cfg, const LoadedAlgebra& loaded, std::size_t m) {
    std::optional<std::vector<std::string>> literals = loaded.pivots;
    if (cfg.pivots) literals = split_list(*cfg.pivots);
    if (!literals) return HammingCode<A>(alg, m);
    std::vector<scalar_t<A>> pivots;
    for (const auto& l : *literals) pivots.push_back(alg.parse(l));
    return HammingCode<A>(alg, m, std::move(pivots));
}

template <Quasifield A>
std::vector<Column<scalar_t<A>>> parse_column_list(const A& alg, const std::string& text) {
    std::vector<Column<scalar_t<A>>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_column(alg, line));
    }
    return out;
}

struct Body {
    int exit_code = verdict_holds;
    std::string mode;
    std::string text;
};

template <Quasifield A>
Body dispatch(const A& alg, const RunConfig& cfg, const LoadedAlgebra& loaded) {
    const std::string& cmd = cfg.command;
    const bool finite = alg.is_finite();
    Body body;
    std::ostringstream os;
    auto input_vector = [&]() {
        if (!cfg.in) throw invalid_parameter(cmd + " needs --in <vector file>");
        return parse_finvec(alg, read_file(*cfg.in));
    };

    if (cmd == "audit") {
        body.mode = cfg.mode.value_or(finite ? "exhaustive" : "sampled");
        require_mode(body.mode, {"exhaustive", "sampled"});
        const auto report = axiom_audit(alg, body.mode == "exhaustive" ? AuditMode::exhaustive : AuditMode::sampled,
                                        cfg.trials.value_or(10000), cfg.seed, cfg.jobs);
        os << format_audit(alg, report);
        for (Law law : {Law::left_distributive, Law::right_distributive, Law::left_solvable, Law::right_solvable})
            if (!report.laws[static_cast<std::size_t>(law)].holds) body.exit_code = counterexample;
        os << "quasifield: " << (body.exit_code == verdict_holds ? "yes" : "no") << "\n";
        body.text = os.str();
        return body;
    }

    const auto code = make_code(alg, cfg, loaded, cfg.m);
    body.mode = cfg.mode.value_or("exhaustive");

    if (cmd == "columns") {
        const auto cols = enumerate_columns(code);
        os << "count: " << cols.size() << "\n";
        for (const auto& c : cols) os << format_column(alg, c) << "\n";
    } else if (cmd == "syndrome") {
        const auto z = syndrome(code, input_vector());
        os << "syndrome: " << format_dense(alg, z) << "\n";
        os << "codeword: " << (is_zero_vector(alg, z) ? "true" : "false") << "\n";
    } else if (cmd == "decode") {
        const auto y = input_vector();
        const auto c = decode(code, y);
        os << "distance: " << hamming_distance(alg, y, c) << "\n";
        os << "codeword:\n" << format_finvec(alg, c);
        if (!contains(code, c)) body.exit_code = counterexample;
    } else if (cmd == "verify-perfect") {
        require_mode(body.mode, {"exhaustive", "structural"});
        const auto r = verify_perfect(code, body.mode == "exhaustive" ? PerfectMode::exhaustive : PerfectMode::structural, cfg.budget,
                                      cfg.trials.value_or(10000), cfg.seed);
        os << r.to_text();
        os << "verdict: " << (r.passed() ? "perfect" : "not perfect") << "\n";
        if (!r.passed()) body.exit_code = counterexample;
    } else if (cmd == "generators") {
        std::vector<FinVec<scalar_t<A>>> gens;
        if constexpr (FiniteQuasifield<A>) {
            gens = weight3_generators(code);
        } else {
            body.mode = "subset";
            Rng rng(cfg.seed);
            auto cols = identity_columns(code);
            while (cols.size() < code.rows() + 3) {
                auto c = random_column(code, rng);
                if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(std::move(c));
            }
            gens = weight3_generators(code, cols, alg.probe_elements());
        }
        std::size_t bad = 0;
        for (const auto& g : gens) {
            os << format_inline(alg, g) << "\n";
            if (g.size() != 3 || !contains(code, g)) ++bad;
        }
        os << "count: " << gens.size() << "\n";
        if (bad) body.exit_code = counterexample;
    } else if (cmd == "reconstruct-check") {
        require_mode(body.mode, {"exhaustive", "sampled"});
        const auto r = module_axiom_check(code, body.mode == "exhaustive" ? CheckMode::exhaustive : CheckMode::sampled,
                                          cfg.trials.value_or(1000), cfg.seed);
        os << r.to_text();
        if (!r.passed()) body.exit_code = counterexample;
    } else if (cmd == "membership-reduce") {
        const auto x = input_vector();
        const bool by_reduction = membership_by_reduction(code, x), direct = contains(code, x);
        os << "membership_by_reduction: " << (by_reduction ? "true" : "false") << "\n";
        os << "contains: " << (direct ? "true" : "false") << "\n";
        if (by_reduction != direct) body.exit_code = counterexample;
    } else if (cmd == "choice-iso") {
        const auto cert = choice_isomorphism_check(code, cfg.trials.value_or(100), cfg.seed, cfg.budget);
        body.mode = cert.mode;
        os << cert.to_text();
        if (!cert.verdict) body.exit_code = counterexample;
    } else if (cmd == "basis-iso") {
        const auto cert = basis_change_check(code, cfg.trials.value_or(20), 6, cfg.seed, cfg.budget);
        body.mode = cert.mode;
        os << cert.to_text();
        if (!cert.verdict) body.exit_code = counterexample;
    } else if (cmd == "support-witness") {
        const auto cols = cfg.in ? parse_column_list(alg, read_file(*cfg.in)) : identity_columns(code);
        const auto w = support_witness(code, cols, cfg.budget);
        os << "columns: " << cols.size() << "\n";
        if (w) os << "witness:\n" << format_finvec(alg, *w);
        else os << "witness: none\n";
    } else if (cmd == "distinguish") {
        const std::size_t m2 = cfg.m2.value_or(cfg.m + 1);
        const auto big = make_code(alg, cfg, loaded, m2);
        const auto cert = distinguish_invariant(code, big, cfg.trials.value_or(100), cfg.seed);
        body.mode = cert.mode;
        os << cert.to_text();
        if (!cert.verdict) body.exit_code = counterexample;
    } else if (cmd == "nonassoc-witness") {
        const auto cert = nonassoc_witness(code).second;
        body.mode = cert.mode;
        os << cert.to_text();
        if (!cert.verdict) body.exit_code = counterexample;
    } else if (cmd == "right-linearity") {
        const auto cert = right_linearity_witness(code, cfg.trials.value_or(1000), cfg.seed).second;
        body.mode = cert.mode;
        os << cert.to_text();
        if (!cert.verdict) body.exit_code = counterexample;
    } else if (cmd == "conjugate-check") {
        const auto cert = conjugate_code_check(code, cfg.trials.value_or(1000), cfg.seed);
        body.mode = cert.mode;
        os << cert.to_text();
        if (!cert.verdict) body.exit_code = counterexample;
    } else {
        throw invalid_parameter("unknown command '" + cmd + "'");
    }
    body.text = os.str();
    return body;
}

}  // namespace detail

/// Runs one command. The report starts with a fixed header echoing the inputs
/// and contains nothing time- or machine-dependent.
inline RunResult run(const RunConfig& cfg) {
    RunResult result;
    std::ostringstream os;
    os << "command: " << cfg.command << "\n";
    try {
        bool known = false;
        for (const auto& c : commands()) known = known || c == cfg.command;
        if (!known) throw invalid_parameter("unknown command '" + cfg.command + "'");
        const LoadedAlgebra loaded = parse_algebra_spec(cfg.algebra);
        const auto body = std::visit([&](const auto& alg) { return detail::dispatch(alg, cfg, loaded); }, loaded.algebra);
        std::visit([&](const auto& alg) { os << "algebra: " << alg.name() << "\n"; }, loaded.algebra);
        os << "digest: " << loaded.digest << "\n";
        os << "m: " << cfg.m << "\n";
        os << "mode: " << body.mode << "\n";
        os << "seed: " << cfg.seed << "\n";
        os << "budget: " << cfg.budget << "\n";
        os << "---\n" << body.text;
        os << "exit: " << body.exit_code << "\n";
        result.exit_code = body.exit_code;
    } catch (const inconsistency_error& e) {
        os << "inconsistency: " << e.what() << "\n";
        os << "exit: " << counterexample << "\n";
        result.exit_code = counterexample;
    } catch (const error& e) {
        os << "error: " << e.what() << "\n";
        os << "exit: " << usage << "\n";
        result.exit_code = usage;
    }
    result.report = os.str();
    return result;
}

}  // namespace quasiham::cli

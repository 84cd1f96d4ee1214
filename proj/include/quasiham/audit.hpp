#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "quasiham/concepts.hpp"
#include "quasiham/error.hpp"
#include "quasiham/random.hpp"

namespace quasiham {

enum class Law : std::size_t {
    left_distributive,
    right_distributive,
    left_solvable,
    right_solvable,
    associative,
    commutative,
    left_unit,
    right_unit,
    two_sided_unit,
    left_alternative,
    right_alternative,
};
inline constexpr std::size_t law_count = 11;

inline const char* law_name(Law law) {
    static constexpr std::array<const char*, law_count> names{
        "left_distributive", "right_distributive", "left_solvable", "right_solvable", "associative", "commutative",
        "left_unit", "right_unit", "two_sided_unit", "left_alternative", "right_alternative"};
    return names[static_cast<std::size_t>(law)];
}

enum class AuditMode { exhaustive, sampled };

template <class V>
struct LawResult {
    bool holds = true;
    /// Elements that violate the law when re-evaluated; empty when it holds.
    std::vector<V> witness;
};

template <class V>
struct AxiomReport {
    AuditMode mode = AuditMode::exhaustive;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::array<LawResult<V>, law_count> laws{};

    const LawResult<V>& operator[](Law law) const { return laws[static_cast<std::size_t>(law)]; }
    LawResult<V>& operator[](Law law) { return laws[static_cast<std::size_t>(law)]; }
    bool holds(Law law) const { return (*this)[law].holds; }
};

/// Re-evaluates a recorded witness; true when it still violates its law.
/// Unit witnesses are (candidate, x) pairs with the candidate failing on x.
template <Quasifield A>
bool witness_refails(const A& alg, Law law, const std::vector<scalar_t<A>>& w) {
    auto eq = [](const auto& x, const auto& y) { return x == y; };
    switch (law) {
        case Law::left_distributive:
            return !eq(alg.mul(w[0], alg.add(w[1], w[2])), alg.add(alg.mul(w[0], w[1]), alg.mul(w[0], w[2])));
        case Law::right_distributive:
            return !eq(alg.mul(alg.add(w[0], w[1]), w[2]), alg.add(alg.mul(w[0], w[2]), alg.mul(w[1], w[2])));
        case Law::associative:
            return !eq(alg.mul(alg.mul(w[0], w[1]), w[2]), alg.mul(w[0], alg.mul(w[1], w[2])));
        case Law::commutative:
            return !eq(alg.mul(w[0], w[1]), alg.mul(w[1], w[0]));
        case Law::left_alternative:
            return !eq(alg.mul(w[0], alg.mul(w[0], w[1])), alg.mul(alg.mul(w[0], w[0]), w[1]));
        case Law::right_alternative:
            return !eq(alg.mul(alg.mul(w[0], w[1]), w[1]), alg.mul(w[0], alg.mul(w[1], w[1])));
        case Law::left_solvable:
            // (a, c): the solver's x has a x != c; (a, x1, x2): a x1 = a x2 with x1 != x2
            if (w.size() == 2) return !alg.is_zero(w[0]) && !eq(alg.mul(w[0], alg.solve_left(w[0], w[1])), w[1]);
            return !alg.is_zero(w[0]) && w[1] != w[2] && eq(alg.mul(w[0], w[1]), alg.mul(w[0], w[2]));
        case Law::right_solvable:
            if (w.size() == 2) return !alg.is_zero(w[0]) && !eq(alg.mul(alg.solve_right(w[0], w[1]), w[0]), w[1]);
            return !alg.is_zero(w[0]) && w[1] != w[2] && eq(alg.mul(w[1], w[0]), alg.mul(w[2], w[0]));
        case Law::left_unit:
            return !eq(alg.mul(w[0], w[1]), w[1]);
        case Law::right_unit:
            return !eq(alg.mul(w[1], w[0]), w[1]);
        case Law::two_sided_unit:
            return !eq(alg.mul(w[0], w[1]), w[1]) || !eq(alg.mul(w[1], w[0]), w[1]);
    }
    return false;
}

namespace detail {

template <class V>
struct AuditScan {
    std::array<std::optional<std::vector<V>>, law_count> first{};
    void note(Law law, std::vector<V> w) {
        auto& slot = first[static_cast<std::size_t>(law)];
        if (!slot) slot = std::move(w);
    }
    bool has(Law law) const { return first[static_cast<std::size_t>(law)].has_value(); }
};

/// Scans all pairs/triples whose first element lies in elems[lo, hi).
template <Quasifield A>
AuditScan<scalar_t<A>> scan_block(const A& alg, const std::vector<scalar_t<A>>& elems, std::size_t lo, std::size_t hi) {
    AuditScan<scalar_t<A>> s;
    for (std::size_t i = lo; i < hi; ++i) {
        const auto& a = elems[i];
        for (const auto& b : elems) {
            const auto ab = alg.mul(a, b);
            if (!s.has(Law::commutative) && ab != alg.mul(b, a)) s.note(Law::commutative, {a, b});
            if (!s.has(Law::left_alternative) && alg.mul(a, ab) != alg.mul(alg.mul(a, a), b)) s.note(Law::left_alternative, {a, b});
            if (!s.has(Law::right_alternative) && alg.mul(ab, b) != alg.mul(a, alg.mul(b, b))) s.note(Law::right_alternative, {a, b});
            for (const auto& c : elems) {
                if (!s.has(Law::associative) && alg.mul(ab, c) != alg.mul(a, alg.mul(b, c))) s.note(Law::associative, {a, b, c});
                if (!s.has(Law::left_distributive) && alg.mul(a, alg.add(b, c)) != alg.add(ab, alg.mul(a, c)))
                    s.note(Law::left_distributive, {a, b, c});
                if (!s.has(Law::right_distributive) && alg.mul(alg.add(a, b), c) != alg.add(alg.mul(a, c), alg.mul(b, c)))
                    s.note(Law::right_distributive, {a, b, c});
            }
        }
        if (alg.is_zero(a)) continue;
        // x -> a x and x -> x a must be injective (hence bijective on a finite set)
        for (std::size_t x = 0; x < elems.size(); ++x)
            for (std::size_t y = x + 1; y < elems.size(); ++y) {
                if (!s.has(Law::left_solvable) && alg.mul(a, elems[x]) == alg.mul(a, elems[y]))
                    s.note(Law::left_solvable, {a, elems[x], elems[y]});
                if (!s.has(Law::right_solvable) && alg.mul(elems[x], a) == alg.mul(elems[y], a))
                    s.note(Law::right_solvable, {a, elems[x], elems[y]});
            }
    }
    return s;
}

/// Units: for each law, either an element that is a unit or, for the first
/// candidate in scan order, an x it fails on.
template <Quasifield A>
void audit_units(const A& alg, const std::vector<scalar_t<A>>& elems, AxiomReport<scalar_t<A>>& report) {
    using V = scalar_t<A>;
    auto first_failure = [&](auto&& fails) -> std::optional<V> {
        for (const auto& x : elems)
            if (fails(x)) return x;
        return std::nullopt;
    };
    std::optional<V> left, right, both;
    std::vector<V> left_w, right_w, both_w;
    for (const auto& e : elems) {
        if (alg.is_zero(e)) continue;
        const auto lf = first_failure([&](const V& x) { return alg.mul(e, x) != x; });
        const auto rf = first_failure([&](const V& x) { return alg.mul(x, e) != x; });
        if (!lf && !left) left = e;
        if (!rf && !right) right = e;
        if (!lf && !rf && !both) both = e;
        if (lf && left_w.empty()) left_w = {e, *lf};
        if (rf && right_w.empty()) right_w = {e, *rf};
        if ((lf || rf) && both_w.empty()) both_w = {e, lf ? *lf : *rf};
    }
    // Prefer witnesses at the right unit when one exists: "1 x != x" reads naturally.
    if (right && !left) {
        const auto lf = first_failure([&](const V& x) { return alg.mul(*right, x) != x; });
        left_w = {*right, *lf};
        both_w = left_w;
    }
    report[Law::left_unit] = left ? LawResult<V>{true, {}} : LawResult<V>{false, left_w};
    report[Law::right_unit] = right ? LawResult<V>{true, {}} : LawResult<V>{false, right_w};
    report[Law::two_sided_unit] = both ? LawResult<V>{true, {}} : LawResult<V>{false, both_w};
}

}  // namespace detail

/// Checks every audited law.
///
/// Exhaustive mode (finite algebras only) decides each law by a full scan;
/// `jobs` workers split the scan by first operand and the earliest witness in
/// scan order is kept, so output is independent of `jobs`. Sampled mode tries
/// `trials` random operands from `seed`: negative flags are decisive, positive
/// ones mean no counterexample was found.
template <Quasifield A>
AxiomReport<scalar_t<A>> axiom_audit(const A& alg, AuditMode mode, std::size_t trials = 10000, std::uint64_t seed = 1,
                                     unsigned jobs = 1) {
    using V = scalar_t<A>;
    AxiomReport<V> report;
    report.mode = mode;
    if (mode == AuditMode::exhaustive) {
        if constexpr (FiniteQuasifield<A>) {
            const auto elems = alg.elements();
            jobs = std::max(1u, jobs);
            const std::size_t n = elems.size();
            std::vector<detail::AuditScan<V>> parts(jobs);
            std::vector<std::thread> workers;
            const std::size_t chunk = (n + jobs - 1) / jobs;
            for (unsigned j = 0; j < jobs; ++j) {
                const std::size_t lo = std::min(n, j * chunk), hi = std::min(n, lo + chunk);
                if (jobs == 1) parts[j] = detail::scan_block(alg, elems, lo, hi);
                else workers.emplace_back([&, j, lo, hi] { parts[j] = detail::scan_block(alg, elems, lo, hi); });
            }
            for (auto& w : workers) w.join();
            for (std::size_t law = 0; law < law_count; ++law)
                for (const auto& part : parts)
                    if (part.first[law]) {
                        report.laws[law] = {false, *part.first[law]};
                        break;
                    }
            detail::audit_units(alg, elems, report);
            report.trials = n;
            return report;
        } else {
            throw unsupported_error("exhaustive audit needs a finite algebra; " + alg.name() + " is infinite");
        }
    }

    report.trials = trials;
    report.seed = seed;
    Rng rng(seed);
    auto fail = [&](Law law, std::vector<V> w) {
        auto& r = report[law];
        if (r.holds) r = {false, std::move(w)};
    };
    const auto probes = alg.probe_elements();
    // Probe elements first (basis units for the normed algebras), then random triples.
    for (const auto& a : probes)
        for (const auto& b : probes) {
            if (alg.mul(a, b) != alg.mul(b, a)) fail(Law::commutative, {a, b});
            for (const auto& c : probes)
                if (alg.mul(alg.mul(a, b), c) != alg.mul(a, alg.mul(b, c))) fail(Law::associative, {a, b, c});
        }
    for (std::size_t t = 0; t < trials; ++t) {
        const V a = alg.random_element(rng), b = alg.random_element(rng), c = alg.random_element(rng);
        const V ab = alg.mul(a, b);
        if (alg.mul(a, alg.add(b, c)) != alg.add(ab, alg.mul(a, c))) fail(Law::left_distributive, {a, b, c});
        if (alg.mul(alg.add(a, b), c) != alg.add(alg.mul(a, c), alg.mul(b, c))) fail(Law::right_distributive, {a, b, c});
        if (alg.mul(ab, c) != alg.mul(a, alg.mul(b, c))) fail(Law::associative, {a, b, c});
        if (ab != alg.mul(b, a)) fail(Law::commutative, {a, b});
        if (alg.mul(a, ab) != alg.mul(alg.mul(a, a), b)) fail(Law::left_alternative, {a, b});
        if (alg.mul(ab, b) != alg.mul(a, alg.mul(b, b))) fail(Law::right_alternative, {a, b});
        if (!alg.is_zero(a)) {
            // The solver must invert multiplication; a mismatch shows non-unique or absent solutions.
            if (alg.mul(a, alg.solve_left(a, c)) != c) fail(Law::left_solvable, {a, c});
            if (alg.mul(alg.solve_right(a, c), a) != c) fail(Law::right_solvable, {a, c});
        }
    }
    const auto lu = alg.left_unit(), ru = alg.right_unit();
    const V cand = ru ? *ru : (lu ? *lu : probes.front());
    Rng unit_rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (std::size_t t = 0; t < trials; ++t) {
        const V x = alg.random_element(unit_rng);
        if (!lu || alg.mul(*lu, x) != x) fail(Law::left_unit, {lu ? *lu : cand, x});
        if (!ru || alg.mul(x, *ru) != x) fail(Law::right_unit, {ru ? *ru : cand, x});
    }
    if (!report.holds(Law::left_unit) || !report.holds(Law::right_unit)) {
        const auto& w = !report.holds(Law::left_unit) ? report[Law::left_unit].witness : report[Law::right_unit].witness;
        report[Law::two_sided_unit] = {false, w};
    }
    return report;
}

template <Quasifield A>
std::string format_audit(const A& alg, const AxiomReport<scalar_t<A>>& report) {
    std::ostringstream os;
    if (report.mode == AuditMode::exhaustive) {
        os << "mode: exhaustive\n";
        os << "elements: " << report.trials << "\n";
    } else {
        os << "mode: sampled\n";
        os << "trials: " << report.trials << "\n";
        os << "seed: " << report.seed << "\n";
    }
    for (std::size_t i = 0; i < law_count; ++i) {
        const auto law = static_cast<Law>(i);
        const auto& r = report[law];
        os << law_name(law) << ": ";
        if (r.holds) {
            os << (report.mode == AuditMode::exhaustive ? "holds" : "no counterexample");
        } else {
            os << "fails witness=(";
            for (std::size_t k = 0; k < r.witness.size(); ++k) os << (k ? ", " : "") << alg.format(r.witness[k]);
            os << ")";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace quasiham

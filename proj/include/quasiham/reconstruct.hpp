#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quasiham/concepts.hpp"
#include "quasiham/error.hpp"
#include "quasiham/finvec.hpp"
#include "quasiham/hamming.hpp"
#include "quasiham/random.hpp"

namespace quasiham {

/// Nonzero element (alpha, i) of the reconstructed module.
template <class V>
struct Pair {
    V scalar;
    Column<V> column;
    friend bool operator==(const Pair&, const Pair&) = default;
};

/// nullopt is the zero element, shared by every (0, i).
template <class V>
using PairElement = std::optional<Pair<V>>;

/// The only access to the code that reconstruction needs.
template <class V>
using Decoder = std::function<FinVec<V>(const FinVec<V>&)>;

template <Quasifield A>
Decoder<scalar_t<A>> decoder_for(const HammingCode<A>& code) {
    return [code](const FinVec<scalar_t<A>>& y) { return decode(code, y); };
}

template <Quasifield A>
PairElement<scalar_t<A>> make_pair_element(const A& alg, const scalar_t<A>& alpha, const Column<scalar_t<A>>& column) {
    if (alg.is_zero(alpha)) return std::nullopt;
    return Pair<scalar_t<A>>{alpha, column};
}

template <Quasifield A>
std::string format_pair(const A& alg, const PairElement<scalar_t<A>>& u) {
    if (!u) return "0";
    return "(" + alg.format(u->scalar) + ", " + format_column(alg, u->column) + ")";
}

/// (alpha,i) + (beta,j) = (-gamma,k) where alpha e_i + beta e_j + gamma e_k is
/// the codeword the decoder returns for alpha e_i + beta e_j.
template <Quasifield A>
PairElement<scalar_t<A>> pair_add(const A& alg, const Decoder<scalar_t<A>>& decoder, const PairElement<scalar_t<A>>& u,
                                  const PairElement<scalar_t<A>>& v) {
    if (!u) return v;
    if (!v) return u;
    if (u->column == v->column) return make_pair_element(alg, alg.add(u->scalar, v->scalar), u->column);
    FinVec<scalar_t<A>> x;
    x.set(alg, u->column, u->scalar);
    x.set(alg, v->column, v->scalar);
    const auto c = decoder(x);
    if (c.size() != 3 || c.get(alg, u->column) != u->scalar || c.get(alg, v->column) != v->scalar)
        throw inconsistency_error("decoding " + format_pair(alg, u) + " + " + format_pair(alg, v) +
                                  " did not add a single new coordinate; the code is not perfect");
    for (const auto& [col, val] : c)
        if (col != u->column && col != v->column) return Pair<scalar_t<A>>{alg.neg(val), col};
    throw inconsistency_error("unreachable: weight-3 codeword without a third coordinate");
}

template <Quasifield A>
PairElement<scalar_t<A>> pair_add(const HammingCode<A>& code, const PairElement<scalar_t<A>>& u, const PairElement<scalar_t<A>>& v) {
    return pair_add(code.algebra(), decoder_for(code), u, v);
}

/// alpha (beta, i) = (alpha beta, i).
template <Quasifield A>
PairElement<scalar_t<A>> pair_scalar_mul(const A& alg, const scalar_t<A>& alpha, const PairElement<scalar_t<A>>& u) {
    if (!u) return std::nullopt;
    return make_pair_element(alg, alg.mul(alpha, u->scalar), u->column);
}

template <Quasifield A>
PairElement<scalar_t<A>> pair_scalar_mul(const HammingCode<A>& code, const scalar_t<A>& alpha, const PairElement<scalar_t<A>>& u) {
    return pair_scalar_mul(code.algebra(), alpha, u);
}

// ---- module axioms ---------------------------------------------------------

enum class CheckMode { exhaustive, sampled };

struct AxiomCheck {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string witness;  // first failure
};

struct ModuleAxiomReport {
    std::string mode;
    std::string notice;
    std::size_t m = 0;
    std::optional<std::uint64_t> elements;  // |L| when enumerated
    std::optional<std::uint64_t> seed;
    std::vector<AxiomCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (c.failures) return false;
        return true;
    }
    std::uint64_t failures() const {
        std::uint64_t n = 0;
        for (const auto& c : checks) n += c.failures;
        return n;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "mode: " << mode << "\n";
        if (!notice.empty()) os << "notice: " << notice << "\n";
        os << "m: " << m << "\n";
        if (elements) os << "elements: " << *elements << "\n";
        if (seed) os << "seed: " << *seed << "\n";
        for (const auto& c : checks) {
            os << c.name << ": checked=" << c.checked << " failures=" << c.failures;
            if (!c.witness.empty()) os << " witness=" << c.witness;
            os << "\n";
        }
        os << "verdict: " << (passed() ? "pass" : "fail") << "\n";
        return os.str();
    }
};

namespace detail {

template <Quasifield A>
class AxiomSweep {
public:
    using V = scalar_t<A>;
    using P = PairElement<V>;

    AxiomSweep(const A& alg, Decoder<V> decoder) : alg_(alg), decoder_(std::move(decoder)) {
        checks_ = {{"commutativity"}, {"associativity"}, {"scalar_distributivity"}, {"vector_distributivity"}, {"no_zero_divisors"}};
        has_left_unit_ = alg_.left_unit().has_value();
        if (has_left_unit_) checks_.push_back({"left_unit"});
        if (alg_.is_associative()) checks_.push_back({"compatibility"});
    }

    P add(const P& u, const P& v) const { return pair_add(alg_, decoder_, u, v); }
    P mul(const V& a, const P& u) const { return pair_scalar_mul(alg_, a, u); }

    void pair_laws(const P& u, const P& v) {
        record(0, add(u, v) == add(v, u), [&] { return format_pair(alg_, u) + ", " + format_pair(alg_, v); });
    }
    void triple_law(const P& u, const P& v, const P& w) {
        record(1, add(add(u, v), w) == add(u, add(v, w)),
               [&] { return format_pair(alg_, u) + ", " + format_pair(alg_, v) + ", " + format_pair(alg_, w); });
    }
    // (a+b)u = au + bu; (ab)u = a(bu)
    void scalar_pair_laws(const V& a, const V& b, const P& u) {
        record(2, mul(alg_.add(a, b), u) == add(mul(a, u), mul(b, u)),
               [&] { return alg_.format(a) + ", " + alg_.format(b) + ", " + format_pair(alg_, u); });
        if (alg_.is_associative())
            record(checks_.size() - 1, mul(alg_.mul(a, b), u) == mul(a, mul(b, u)),
                   [&] { return alg_.format(a) + ", " + alg_.format(b) + ", " + format_pair(alg_, u); });
    }
    // a(u+v) = au + av
    void scalar_vector_law(const V& a, const P& u, const P& v) {
        record(3, mul(a, add(u, v)) == add(mul(a, u), mul(a, v)),
               [&] { return alg_.format(a) + ", " + format_pair(alg_, u) + ", " + format_pair(alg_, v); });
    }
    // au = 0 only for a = 0 or u = 0; 1u = u
    void single_laws(const V& a, const P& u) {
        record(4, mul(a, u).has_value() || alg_.is_zero(a) || !u.has_value(),
               [&] { return alg_.format(a) + ", " + format_pair(alg_, u); });
        if (has_left_unit_) record(5, mul(*alg_.left_unit(), u) == u, [&] { return format_pair(alg_, u); });
    }

    std::vector<AxiomCheck> take() { return std::move(checks_); }

private:
    template <class W>
    void record(std::size_t index, bool ok, W&& witness) {
        auto& c = checks_[index];
        ++c.checked;
        if (!ok && c.failures++ == 0) c.witness = "(" + witness() + ")";
    }

    const A& alg_;
    Decoder<V> decoder_;
    std::vector<AxiomCheck> checks_;
    bool has_left_unit_ = false;
};

}  // namespace detail

/// Verifies that the pair operations make L into a left module. Exhaustive
/// mode walks every element triple of L (finite algebras, |L|^3 within the
/// budget); sampled mode draws `trials` random triples whose coordinates are
/// taken from a three-column pool so that the coincident-coordinate cases occur.
template <Quasifield A>
ModuleAxiomReport module_axiom_check(const HammingCode<A>& code, CheckMode mode, std::size_t trials = 1000, std::uint64_t seed = 1,
                                     std::uint64_t budget = std::uint64_t{1} << 24) {
    using V = scalar_t<A>;
    using P = PairElement<V>;
    const auto& alg = code.algebra();
    detail::AxiomSweep<A> sweep(alg, decoder_for(code));
    ModuleAxiomReport report;
    report.m = code.rows();

    if constexpr (FiniteQuasifield<A>) {
        if (mode == CheckMode::exhaustive) {
            const auto cols = enumerate_columns(code);
            const auto scalars = alg.elements();
            std::vector<P> elems{std::nullopt};
            for (const auto& c : cols)
                for (const auto& s : alg.probe_elements()) elems.push_back(Pair<V>{s, c});
            const std::uint64_t size = elems.size();
            if (size * size * size <= budget) {
                report.mode = "exhaustive";
                report.elements = size;
                for (const auto& u : elems)
                    for (const auto& v : elems) {
                        sweep.pair_laws(u, v);
                        for (const auto& w : elems) sweep.triple_law(u, v, w);
                        for (const auto& a : scalars) sweep.scalar_vector_law(a, u, v);
                    }
                for (const auto& u : elems)
                    for (const auto& a : scalars) {
                        sweep.single_laws(a, u);
                        for (const auto& b : scalars) sweep.scalar_pair_laws(a, b, u);
                    }
                report.checks = sweep.take();
                return report;
            }
            report.notice = "|L|^3 exceeds budget " + std::to_string(budget) + "; sampled check used";
        }
    } else {
        if (mode == CheckMode::exhaustive) report.notice = "infinite algebra; sampled check used";
    }

    report.mode = "sampled";
    report.seed = seed;
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Column<V>> pool;
        while (pool.size() < 3) {
            auto c = random_column(code, rng);
            if (std::find(pool.begin(), pool.end(), c) == pool.end()) pool.push_back(std::move(c));
        }
        auto element = [&]() -> P {
            if (coin(rng, 1, 8)) return std::nullopt;
            return Pair<V>{alg.random_nonzero(rng), pool[uniform_index(rng, pool.size())]};
        };
        const P u = element(), v = element(), w = element();
        const V a = alg.random_element(rng), b = alg.random_element(rng);
        sweep.pair_laws(u, v);
        sweep.triple_law(u, v, w);
        sweep.scalar_vector_law(a, u, v);
        sweep.single_laws(a, u);
        sweep.scalar_pair_laws(a, b, u);
    }
    report.checks = sweep.take();
    return report;
}

/// Membership via the reconstructed module: while the support has two or more
/// coordinates, take the two smallest, (alpha,i) and (beta,j), and subtract the
/// weight-3 codeword alpha e_i + beta e_j + gamma e_k, where
/// (alpha,i) + (beta,j) = (-gamma,k). Each step shrinks the support.
template <Quasifield A>
bool membership_by_reduction(const A& alg, const Decoder<scalar_t<A>>& decoder, FinVec<scalar_t<A>> x) {
    using V = scalar_t<A>;
    while (x.size() >= 2) {
        auto it = x.begin();
        const Pair<V> u{it->second, it->first};
        ++it;
        const Pair<V> v{it->second, it->first};
        const auto sum = pair_add(alg, decoder, PairElement<V>(u), PairElement<V>(v));
        FinVec<V> c;
        c.set(alg, u.column, u.scalar);
        c.set(alg, v.column, v.scalar);
        c.set(alg, sum->column, alg.neg(sum->scalar));
        const auto before = x.size();
        x = vec_sub(alg, x, c);
        if (x.size() >= before) throw inconsistency_error("reduction step did not shrink the support");
    }
    return x.empty();
}

template <Quasifield A>
bool membership_by_reduction(const HammingCode<A>& code, const FinVec<scalar_t<A>>& x) {
    detail::require_canonical_keys(code, x);
    return membership_by_reduction(code.algebra(), decoder_for(code), x);
}

}  // namespace quasiham

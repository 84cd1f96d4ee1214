#pragma once

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "quasiham/concepts.hpp"
#include "quasiham/error.hpp"

namespace quasiham {

/// Dense vector of the coefficient module L = F^m (syndromes, columns before
/// normalisation).
template <class V>
using DenseVec = std::vector<V>;

/// A length-m vector used as a coordinate label of the code space. Ordered
/// lexicographically by the scalar order.
template <class V>
struct Column {
    std::vector<V> entries;

    std::size_t size() const { return entries.size(); }
    const V& operator[](std::size_t i) const { return entries[i]; }
    friend bool operator==(const Column&, const Column&) = default;
    friend auto operator<=>(const Column&, const Column&) = default;
};

/// Finitely supported vector: a map from columns to nonzero scalars. Writes of
/// zero erase the coordinate, so the stored support is always exact.
template <class V>
class FinVec {
public:
    using map_type = std::map<Column<V>, V>;

    FinVec() = default;

    const map_type& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Ambient row count, 0 for the zero vector.
    std::size_t rows() const { return entries_.empty() ? 0 : entries_.begin()->first.size(); }

    template <Quasifield A>
    void set(const A& alg, const Column<V>& col, const V& value) {
        if (!entries_.empty() && col.size() != rows())
            throw domain_error("column of length " + std::to_string(col.size()) + " in a vector over " + std::to_string(rows()) + " rows");
        if (alg.is_zero(value)) entries_.erase(col);
        else entries_[col] = value;
    }

    template <Quasifield A>
    V get(const A& alg, const Column<V>& col) const {
        auto it = entries_.find(col);
        return it == entries_.end() ? alg.zero() : it->second;
    }

    bool contains_column(const Column<V>& col) const { return entries_.count(col) != 0; }

    std::vector<Column<V>> support() const {
        std::vector<Column<V>> out;
        for (const auto& [c, _] : entries_) out.push_back(c);
        return out;
    }

    friend bool operator==(const FinVec&, const FinVec&) = default;
    friend auto operator<=>(const FinVec& a, const FinVec& b) { return a.entries_ <=> b.entries_; }

private:
    map_type entries_;
};

template <Quasifield A>
FinVec<scalar_t<A>> unit_vector(const A& alg, const Column<scalar_t<A>>& col, const scalar_t<A>& value) {
    FinVec<scalar_t<A>> v;
    v.set(alg, col, value);
    return v;
}

namespace detail {

template <class V>
void require_same_ambient(const FinVec<V>& x, const FinVec<V>& y) {
    if (!x.empty() && !y.empty() && x.rows() != y.rows())
        throw domain_error("vectors over " + std::to_string(x.rows()) + " and " + std::to_string(y.rows()) + " rows");
}

}  // namespace detail

template <Quasifield A>
FinVec<scalar_t<A>> vec_add(const A& alg, const FinVec<scalar_t<A>>& x, const FinVec<scalar_t<A>>& y) {
    detail::require_same_ambient(x, y);
    FinVec<scalar_t<A>> out = x;
    for (const auto& [c, v] : y) out.set(alg, c, alg.add(out.get(alg, c), v));
    return out;
}

template <Quasifield A>
FinVec<scalar_t<A>> vec_neg(const A& alg, const FinVec<scalar_t<A>>& x) {
    FinVec<scalar_t<A>> out;
    for (const auto& [c, v] : x) out.set(alg, c, alg.neg(v));
    return out;
}

template <Quasifield A>
FinVec<scalar_t<A>> vec_sub(const A& alg, const FinVec<scalar_t<A>>& x, const FinVec<scalar_t<A>>& y) {
    return vec_add(alg, x, vec_neg(alg, y));
}

/// alpha * x, coordinatewise on the left.
template <Quasifield A>
FinVec<scalar_t<A>> scalar_mul_left(const A& alg, const scalar_t<A>& alpha, const FinVec<scalar_t<A>>& x) {
    FinVec<scalar_t<A>> out;
    for (const auto& [c, v] : x) out.set(alg, c, alg.mul(alpha, v));
    return out;
}

/// x * alpha, coordinatewise on the right.
template <Quasifield A>
FinVec<scalar_t<A>> scalar_mul_right(const A& alg, const FinVec<scalar_t<A>>& x, const scalar_t<A>& alpha) {
    FinVec<scalar_t<A>> out;
    for (const auto& [c, v] : x) out.set(alg, c, alg.mul(v, alpha));
    return out;
}

template <class V>
std::size_t hamming_norm(const FinVec<V>& x) {
    return x.size();
}

/// Size of the support of x - y, counted without materialising the difference.
template <Quasifield A>
std::size_t hamming_distance(const A& alg, const FinVec<scalar_t<A>>& x, const FinVec<scalar_t<A>>& y) {
    detail::require_same_ambient(x, y);
    std::size_t d = 0;
    auto ix = x.begin(), iy = y.begin();
    while (ix != x.end() || iy != y.end()) {
        if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
            ++d;
            ++ix;
        } else if (ix == x.end() || iy->first < ix->first) {
            ++d;
            ++iy;
        } else {
            if (ix->second != iy->second) ++d;
            ++ix;
            ++iy;
        }
    }
    (void)alg;
    return d;
}

// ---- text format -----------------------------------------------------------

template <Quasifield A>
std::string format_column(const A& alg, const Column<scalar_t<A>>& col) {
    std::string out = "(";
    for (std::size_t i = 0; i < col.size(); ++i) {
        if (i) out += ", ";
        out += alg.format(col[i]);
    }
    return out + ")";
}

template <Quasifield A>
Column<scalar_t<A>> parse_column(const A& alg, std::string_view text) {
    std::string s(text);
    const auto open = s.find('('), close = s.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw parse_error("column must be parenthesised: '" + s + "'");
    Column<scalar_t<A>> col;
    std::string body = s.substr(open + 1, close - open - 1);
    std::size_t start = 0;
    while (true) {
        const auto comma = body.find(',', start);
        col.entries.push_back(alg.parse(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return col;
}

/// One `<column> := <scalar>` line per support entry, in column order.
template <Quasifield A>
std::string format_finvec(const A& alg, const FinVec<scalar_t<A>>& x) {
    std::ostringstream os;
    for (const auto& [c, v] : x) os << format_column(alg, c) << " := " << alg.format(v) << "\n";
    return os.str();
}

/// Inverse of format_finvec; blank lines and `#` comments are skipped and
/// repeated columns are summed.
template <Quasifield A>
FinVec<scalar_t<A>> parse_finvec(const A& alg, std::string_view text) {
    FinVec<scalar_t<A>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto sep = line.find(":=");
        if (sep == std::string::npos) throw parse_error("line " + std::to_string(lineno) + ": expected '<column> := <scalar>'");
        try {
            const auto col = parse_column(alg, line.substr(0, sep));
            const auto val = alg.parse(line.substr(sep + 2));
            out.set(alg, col, alg.add(out.get(alg, col), val));
        } catch (const error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace quasiham

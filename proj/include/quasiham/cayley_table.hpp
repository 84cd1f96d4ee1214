#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quasiham/error.hpp"
#include "quasiham/prime_field.hpp"
#include "quasiham/random.hpp"

namespace quasiham {

struct TableElement {
    std::uint32_t index = 0;
    friend auto operator<=>(const TableElement&, const TableElement&) = default;
};

using IndexTable = std::vector<std::vector<std::uint32_t>>;

/// A finite quasifield given by its addition and multiplication tables.
///
/// Construction enforces: addition is an abelian group, zero absorbs under
/// multiplication, and every row and column of the multiplication table
/// restricted to nonzero elements is a permutation of the nonzero elements.
/// Distributivity is not enforced here; the axiom audit reports it.
class CayleyTable {
public:
    using value_type = TableElement;

    CayleyTable(IndexTable add, IndexTable mul, std::vector<std::string> names = {}, std::string label = "cayley-table")
        : add_(std::move(add)), mul_(std::move(mul)), names_(std::move(names)), label_(std::move(label)) {
        n_ = static_cast<std::uint32_t>(add_.size());
        validate_shape();
        validate_addition();
        validate_multiplication();
        build_solvers();
        classify();
        for (std::uint32_t i = 0; i < names_.size(); ++i) {
            if (!by_name_.emplace(names_[i], i).second) throw invalid_parameter("duplicate element name '" + names_[i] + "'");
        }
    }

    std::string name() const { return label_; }
    const IndexTable& add_table() const { return add_; }
    const IndexTable& mul_table() const { return mul_; }
    const std::vector<std::string>& names() const { return names_; }

    TableElement zero() const { return {zero_}; }
    bool is_zero(const TableElement& x) const { check(x); return x.index == zero_; }
    TableElement add(const TableElement& a, const TableElement& b) const { check(a); check(b); return {add_[a.index][b.index]}; }
    TableElement neg(const TableElement& a) const { check(a); return {neg_[a.index]}; }
    TableElement sub(const TableElement& a, const TableElement& b) const { return add(a, neg(b)); }
    TableElement mul(const TableElement& a, const TableElement& b) const { check(a); check(b); return {mul_[a.index][b.index]}; }

    /// The unique x with a x = c (row scan, precomputed).
    TableElement solve_left(const TableElement& a, const TableElement& c) const {
        if (is_zero(a)) throw domain_error("solve_left with zero coefficient");
        check(c);
        return {left_solve_[a.index][c.index]};
    }
    /// The unique x with x b = c (column scan, precomputed).
    TableElement solve_right(const TableElement& b, const TableElement& c) const {
        if (is_zero(b)) throw domain_error("solve_right with zero coefficient");
        check(c);
        return {right_solve_[b.index][c.index]};
    }

    std::optional<TableElement> right_unit() const { return right_unit_; }
    std::optional<TableElement> left_unit() const { return left_unit_; }
    bool is_associative() const { return associative_; }
    bool is_commutative() const { return commutative_; }
    bool is_finite() const { return true; }
    std::size_t order() const { return n_; }

    std::vector<TableElement> elements() const {
        std::vector<TableElement> out;
        out.push_back({zero_});
        for (std::uint32_t i = 0; i < n_; ++i)
            if (i != zero_) out.push_back({i});
        return out;
    }
    std::vector<TableElement> probe_elements() const {
        auto all = elements();
        all.erase(all.begin());
        return all;
    }
    TableElement random_element(Rng& rng) const { return {static_cast<std::uint32_t>(uniform_index(rng, n_))}; }
    TableElement random_nonzero(Rng& rng) const {
        auto nz = probe_elements();
        return nz[uniform_index(rng, nz.size())];
    }

    std::string format(const TableElement& x) const {
        check(x);
        return names_.empty() ? std::to_string(x.index) : names_[x.index];
    }
    TableElement parse(std::string_view text) const {
        std::string s;
        for (char ch : text)
            if (ch != ' ') s.push_back(ch);
        if (auto it = by_name_.find(s); it != by_name_.end()) return {it->second};
        if (!s.empty() && s[0] == '#') s.erase(0, 1);
        const long long idx = parse_integer(s);
        if (idx < 0 || idx >= n_) throw parse_error("'" + std::string(text) + "' is not an element of " + label_);
        return {static_cast<std::uint32_t>(idx)};
    }

    friend bool operator==(const CayleyTable& a, const CayleyTable& b) { return a.add_ == b.add_ && a.mul_ == b.mul_; }

private:
    void check(const TableElement& x) const {
        if (x.index >= n_) throw domain_error("index " + std::to_string(x.index) + " is not an element of " + label_);
    }

    void validate_shape() const {
        if (n_ < 2) throw invalid_parameter("cayley table needs at least 2 elements");
        auto check_table = [&](const IndexTable& t, const char* what) {
            if (t.size() != n_) throw invalid_parameter(std::string(what) + " table has " + std::to_string(t.size()) + " rows, expected " + std::to_string(n_));
            for (std::uint32_t r = 0; r < n_; ++r) {
                if (t[r].size() != n_) throw invalid_parameter(std::string(what) + " table row " + std::to_string(r) + " has wrong length");
                for (auto v : t[r])
                    if (v >= n_) throw invalid_parameter(std::string(what) + " table row " + std::to_string(r) + " has out-of-range entry " + std::to_string(v));
            }
        };
        check_table(add_, "add");
        check_table(mul_, "mul");
        if (!names_.empty() && names_.size() != n_) throw invalid_parameter("element name list has wrong length");
    }

    void validate_addition() {
        std::optional<std::uint32_t> zero;
        for (std::uint32_t e = 0; e < n_ && !zero; ++e) {
            bool ok = true;
            for (std::uint32_t x = 0; x < n_ && ok; ++x) ok = add_[e][x] == x;
            if (ok) zero = e;
        }
        if (!zero) throw invalid_parameter("addition table has no neutral element");
        zero_ = *zero;
        for (std::uint32_t a = 0; a < n_; ++a)
            for (std::uint32_t b = 0; b < n_; ++b)
                if (add_[a][b] != add_[b][a])
                    throw invalid_parameter("addition is not commutative: " + std::to_string(a) + "+" + std::to_string(b));
        for (std::uint32_t a = 0; a < n_; ++a)
            for (std::uint32_t b = 0; b < n_; ++b)
                for (std::uint32_t c = 0; c < n_; ++c)
                    if (add_[add_[a][b]][c] != add_[a][add_[b][c]])
                        throw invalid_parameter("addition is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        neg_.assign(n_, n_);
        for (std::uint32_t a = 0; a < n_; ++a) {
            for (std::uint32_t b = 0; b < n_; ++b)
                if (add_[a][b] == zero_) neg_[a] = b;
            if (neg_[a] == n_) throw invalid_parameter("element " + std::to_string(a) + " has no additive inverse");
        }
    }

    void validate_multiplication() const {
        for (std::uint32_t x = 0; x < n_; ++x)
            if (mul_[x][zero_] != zero_ || mul_[zero_][x] != zero_)
                throw invalid_parameter("zero does not absorb element " + std::to_string(x));
        for (std::uint32_t a = 0; a < n_; ++a) {
            if (a == zero_) continue;
            std::vector<bool> row_seen(n_, false), col_seen(n_, false);
            for (std::uint32_t x = 0; x < n_; ++x) {
                if (x == zero_) continue;
                const auto r = mul_[a][x], c = mul_[x][a];
                if (r == zero_ || row_seen[r]) throw invalid_parameter("multiplication row " + std::to_string(a) + " is not a permutation of the nonzero elements");
                if (c == zero_ || col_seen[c]) throw invalid_parameter("multiplication column " + std::to_string(a) + " is not a permutation of the nonzero elements");
                row_seen[r] = col_seen[c] = true;
            }
        }
    }

    void build_solvers() {
        left_solve_.assign(n_, std::vector<std::uint32_t>(n_, zero_));
        right_solve_.assign(n_, std::vector<std::uint32_t>(n_, zero_));
        for (std::uint32_t a = 0; a < n_; ++a) {
            if (a == zero_) continue;
            for (std::uint32_t x = 0; x < n_; ++x) {
                left_solve_[a][mul_[a][x]] = x;
                right_solve_[a][mul_[x][a]] = x;
            }
        }
    }

    void classify() {
        associative_ = commutative_ = true;
        for (std::uint32_t a = 0; a < n_ && (associative_ || commutative_); ++a)
            for (std::uint32_t b = 0; b < n_; ++b) {
                if (mul_[a][b] != mul_[b][a]) commutative_ = false;
                for (std::uint32_t c = 0; c < n_ && associative_; ++c)
                    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) associative_ = false;
            }
        for (std::uint32_t e = 0; e < n_; ++e) {
            if (e == zero_) continue;
            bool right = true, left = true;
            for (std::uint32_t x = 0; x < n_; ++x) {
                right = right && mul_[x][e] == x;
                left = left && mul_[e][x] == x;
            }
            if (right && !right_unit_) right_unit_ = TableElement{e};
            if (left && !left_unit_) left_unit_ = TableElement{e};
        }
    }

    IndexTable add_, mul_;
    std::vector<std::string> names_;
    std::string label_;
    std::uint32_t n_ = 0;
    std::uint32_t zero_ = 0;
    std::vector<std::uint32_t> neg_;
    IndexTable left_solve_, right_solve_;
    std::optional<TableElement> right_unit_, left_unit_;
    bool associative_ = true, commutative_ = true;
    std::map<std::string, std::uint32_t> by_name_;
};

}  // namespace quasiham

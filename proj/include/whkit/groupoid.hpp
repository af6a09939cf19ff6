#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whkit/scalar.hpp"

namespace whkit {

/// A finite groupoid: units, arrows, partial composition, inverse.
/// comp(p,q) is defined exactly when src(p) = tgt(q), i.e. p*q means
/// "apply q, then p" (function-composition order). Units and arrows are
/// string identifiers kept in lexicographic order so every downstream
/// basis is reproducible.
class Groupoid {
public:
    using Index = std::size_t;

    Groupoid(std::vector<std::string> units, std::vector<std::string> arrows,
             std::map<std::string, std::string> src, std::map<std::string, std::string> tgt,
             std::map<std::pair<std::string, std::string>, std::string> comp,
             std::map<std::string, std::string> inv)
        : units_(std::move(units)), arrows_(std::move(arrows)) {
        std::sort(units_.begin(), units_.end());
        std::sort(arrows_.begin(), arrows_.end());
        units_.erase(std::unique(units_.begin(), units_.end()), units_.end());
        arrows_.erase(std::unique(arrows_.begin(), arrows_.end()), arrows_.end());
        for (Index k = 0; k < units_.size(); ++k) unit_index_[units_[k]] = k;
        for (Index k = 0; k < arrows_.size(); ++k) arrow_index_[arrows_[k]] = k;

        src_.assign(arrows_.size(), 0);
        tgt_.assign(arrows_.size(), 0);
        for (Index p = 0; p < arrows_.size(); ++p) {
            src_[p] = unit_of(src, arrows_[p], "src");
            tgt_[p] = unit_of(tgt, arrows_[p], "tgt");
        }
        inv_.assign(arrows_.size(), 0);
        for (Index p = 0; p < arrows_.size(); ++p) {
            auto it = inv.find(arrows_[p]);
            if (it == inv.end()) throw error("groupoid: missing inverse for arrow " + arrows_[p]);
            inv_[p] = arrow(it->second);
        }
        comp_.assign(arrows_.size() * arrows_.size(), NONE);
        for (const auto& [pq, r] : comp) {
            Index p = arrow(pq.first), q = arrow(pq.second);
            if (src_[p] != tgt_[q])
                throw error("groupoid: composition declared for non-composable pair (" + pq.first +
                            ", " + pq.second + ")");
            comp_[p * arrows_.size() + q] = arrow(r);
        }

        // locate the identity arrow at each unit
        unit_arrow_.assign(units_.size(), NONE);
        for (Index p = 0; p < arrows_.size(); ++p) {
            if (src_[p] != tgt_[p]) continue;
            if (compose(p, p) != p) continue;
            bool identity = true;
            for (Index q = 0; q < arrows_.size() && identity; ++q) {
                if (tgt_[q] == src_[p] && compose(p, q) != q) identity = false;
                if (src_[q] == src_[p] && compose(q, p) != q) identity = false;
            }
            if (identity) unit_arrow_[src_[p]] = p;
        }
        for (Index u = 0; u < units_.size(); ++u)
            if (unit_arrow_[u] == NONE)
                throw error("groupoid: no identity arrow at unit " + units_[u]);

        validate();
    }

    static constexpr Index NONE = static_cast<Index>(-1);

    std::size_t unit_count() const { return units_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::vector<std::string>& units() const { return units_; }
    const std::vector<std::string>& arrows() const { return arrows_; }
    const std::string& arrow_name(Index p) const { return arrows_[p]; }
    const std::string& unit_name(Index u) const { return units_[u]; }

    Index arrow(const std::string& id) const {
        auto it = arrow_index_.find(id);
        if (it == arrow_index_.end()) throw error("groupoid: unknown arrow " + id);
        return it->second;
    }
    Index unit(const std::string& id) const {
        auto it = unit_index_.find(id);
        if (it == unit_index_.end()) throw error("groupoid: unknown unit " + id);
        return it->second;
    }

    Index src(Index p) const { return src_[p]; }
    Index tgt(Index p) const { return tgt_[p]; }
    Index inv(Index p) const { return inv_[p]; }
    Index unit_arrow(Index u) const { return unit_arrow_[u]; }
    bool composable(Index p, Index q) const { return src_[p] == tgt_[q]; }

    /// comp(p,q), or NONE when src(p) != tgt(q).
    Index compose(Index p, Index q) const {
        if (!composable(p, q)) return NONE;
        Index r = comp_[p * arrows_.size() + q];
        if (r == NONE)
            throw error("groupoid: composition undefined for composable pair (" + arrows_[p] +
                        ", " + arrows_[q] + ")");
        return r;
    }

private:
    Index unit_of(const std::map<std::string, std::string>& m, const std::string& a,
                  const char* what) const {
        auto it = m.find(a);
        if (it == m.end()) throw error(std::string("groupoid: missing ") + what + " for " + a);
        return unit(it->second);
    }

    /// Exhaustive axiom scan; O(|arrows|^3) on the associativity part,
    /// which is fine at the scales this library targets.
    void validate() const {
        const std::size_t n = arrows_.size();
        for (Index p = 0; p < n; ++p)
            for (Index q = 0; q < n; ++q) {
                if (!composable(p, q)) continue;
                Index r = compose(p, q);
                if (src_[r] != src_[q] || tgt_[r] != tgt_[p])
                    throw error("groupoid: source/target of composite (" + arrows_[p] + ", " +
                                arrows_[q] + ") are inconsistent");
            }
        for (Index p = 0; p < n; ++p)
            for (Index q = 0; q < n; ++q)
                for (Index r = 0; r < n; ++r) {
                    if (!composable(q, r) || !composable(p, q)) continue;
                    Index left = compose(compose(p, q), r);
                    Index right = compose(p, compose(q, r));
                    if (left != right)
                        throw error("groupoid: associativity fails on (" + arrows_[p] + ", " +
                                    arrows_[q] + ", " + arrows_[r] + ")");
                }
        for (Index p = 0; p < n; ++p) {
            if (compose(p, unit_arrow_[src_[p]]) != p || compose(unit_arrow_[tgt_[p]], p) != p)
                throw error("groupoid: identity law fails at arrow " + arrows_[p]);
            if (inv_[inv_[p]] != p)
                throw error("groupoid: inverse is not an involution at " + arrows_[p]);
            if (src_[inv_[p]] != tgt_[p] || tgt_[inv_[p]] != src_[p])
                throw error("groupoid: inverse of " + arrows_[p] + " has wrong endpoints");
            if (compose(p, inv_[p]) != unit_arrow_[tgt_[p]] ||
                compose(inv_[p], p) != unit_arrow_[src_[p]])
                throw error("groupoid: inverse law fails at arrow " + arrows_[p]);
        }
    }

    std::vector<std::string> units_, arrows_;
    std::map<std::string, Index> unit_index_, arrow_index_;
    std::vector<Index> src_, tgt_, inv_, unit_arrow_;
    std::vector<Index> comp_;
};

/// Pair groupoid on {1..n}: arrows (i,j) with src=j, tgt=i and
/// (i,j)*(j,k) = (i,k).
inline Groupoid pair_groupoid(std::size_t n) {
    if (n < 1) throw error("pair_groupoid: n must be >= 1");
    std::vector<std::string> units, arrows;
    std::map<std::string, std::string> src, tgt, inv;
    std::map<std::pair<std::string, std::string>, std::string> comp;
    auto uname = [](std::size_t i) { return std::to_string(i); };
    auto aname = [&](std::size_t i, std::size_t j) {
        return "(" + uname(i) + "," + uname(j) + ")";
    };
    for (std::size_t i = 1; i <= n; ++i) units.push_back(uname(i));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            std::string a = aname(i, j);
            arrows.push_back(a);
            tgt[a] = uname(i);
            src[a] = uname(j);
            inv[a] = aname(j, i);
        }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) comp[{aname(i, j), aname(j, k)}] = aname(i, k);
    return Groupoid(units, arrows, src, tgt, comp, inv);
}

/// One-object groupoid from a finite group given by its Cayley table:
/// table[i][j] is the index of element i*j. Rejects non-group tables.
inline Groupoid group_groupoid(const std::vector<std::string>& elements,
                               const std::vector<std::vector<std::size_t>>& table,
                               const std::string& unit_name = "*") {
    const std::size_t n = elements.size();
    if (n == 0 || table.size() != n) throw error("group_groupoid: bad table shape");
    for (const auto& row : table) {
        if (row.size() != n) throw error("group_groupoid: bad table shape");
        for (auto v : row)
            if (v >= n) throw error("group_groupoid: table entry out of range");
    }
    // identity
    std::optional<std::size_t> id;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t k = 0; k < n; ++k)
            if (table[e][k] != k || table[k][e] != k) ok = false;
        if (ok) id = e;
    }
    if (!id) throw error("group_groupoid: table has no identity");
    // associativity and inverses
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw error("group_groupoid: table is not associative");
    std::vector<std::size_t> invof(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (table[i][j] == *id && table[j][i] == *id) invof[i] = j;
        if (invof[i] == n) throw error("group_groupoid: element without inverse");
    }

    std::vector<std::string> units{unit_name};
    std::vector<std::string> arrows = elements;
    std::map<std::string, std::string> src, tgt, inv;
    std::map<std::pair<std::string, std::string>, std::string> comp;
    for (std::size_t i = 0; i < n; ++i) {
        src[elements[i]] = unit_name;
        tgt[elements[i]] = unit_name;
        inv[elements[i]] = elements[invof[i]];
        for (std::size_t j = 0; j < n; ++j) comp[{elements[i], elements[j]}] = elements[table[i][j]];
    }
    return Groupoid(units, arrows, src, tgt, comp, inv);
}

inline Groupoid cyclic_group_groupoid(std::size_t m) {
    if (m < 1) throw error("cyclic_group_groupoid: order must be >= 1");
    std::vector<std::string> elems;
    std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
    for (std::size_t k = 0; k < m; ++k) elems.push_back("g" + std::to_string(k));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) table[i][j] = (i + j) % m;
    return group_groupoid(elems, table);
}

inline Groupoid trivial_groupoid() { return pair_groupoid(1); }

/// Disjoint union; labels from the two operands are prefixed so they
/// cannot collide.
inline Groupoid disjoint_union(const Groupoid& g1, const Groupoid& g2) {
    std::vector<std::string> units, arrows;
    std::map<std::string, std::string> src, tgt, inv;
    std::map<std::pair<std::string, std::string>, std::string> comp;
    auto absorb = [&](const Groupoid& g, const std::string& prefix) {
        auto u = [&](Groupoid::Index k) { return prefix + g.unit_name(k); };
        auto a = [&](Groupoid::Index k) { return prefix + g.arrow_name(k); };
        for (std::size_t k = 0; k < g.unit_count(); ++k) units.push_back(u(k));
        for (std::size_t p = 0; p < g.arrow_count(); ++p) {
            arrows.push_back(a(p));
            src[a(p)] = u(g.src(p));
            tgt[a(p)] = u(g.tgt(p));
            inv[a(p)] = a(g.inv(p));
            for (std::size_t q = 0; q < g.arrow_count(); ++q)
                if (g.composable(p, q)) comp[{a(p), a(q)}] = a(g.compose(p, q));
        }
    };
    absorb(g1, "a:");
    absorb(g2, "b:");
    return Groupoid(units, arrows, src, tgt, comp, inv);
}

/// Direct product: componentwise structure.
inline Groupoid product(const Groupoid& g1, const Groupoid& g2) {
    std::vector<std::string> units, arrows;
    std::map<std::string, std::string> src, tgt, inv;
    std::map<std::pair<std::string, std::string>, std::string> comp;
    auto u = [&](Groupoid::Index x, Groupoid::Index y) {
        return "(" + g1.unit_name(x) + "," + g2.unit_name(y) + ")";
    };
    auto a = [&](Groupoid::Index p, Groupoid::Index q) {
        return "(" + g1.arrow_name(p) + "," + g2.arrow_name(q) + ")";
    };
    for (std::size_t x = 0; x < g1.unit_count(); ++x)
        for (std::size_t y = 0; y < g2.unit_count(); ++y) units.push_back(u(x, y));
    for (std::size_t p = 0; p < g1.arrow_count(); ++p)
        for (std::size_t q = 0; q < g2.arrow_count(); ++q) {
            std::string id = a(p, q);
            arrows.push_back(id);
            src[id] = u(g1.src(p), g2.src(q));
            tgt[id] = u(g1.tgt(p), g2.tgt(q));
            inv[id] = a(g1.inv(p), g2.inv(q));
        }
    for (std::size_t p = 0; p < g1.arrow_count(); ++p)
        for (std::size_t q = 0; q < g2.arrow_count(); ++q)
            for (std::size_t p2 = 0; p2 < g1.arrow_count(); ++p2)
                for (std::size_t q2 = 0; q2 < g2.arrow_count(); ++q2)
                    if (g1.composable(p, p2) && g2.composable(q, q2))
                        comp[{a(p, q), a(p2, q2)}] = a(g1.compose(p, p2), g2.compose(q, q2));
    return Groupoid(units, arrows, src, tgt, comp, inv);
}

}  // namespace whkit

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whkit/weak_hopf.hpp"

namespace whkit {

enum class Side { left, right };

enum class SpaceKind { left_cointegral, right_cointegral, left_integral, right_integral };

/// Basis of a solution subspace (cointegrals, integrals, annihilators).
struct SolutionSpace {
    SpaceKind kind;
    std::vector<Vector> basis;
    std::size_t dim() const { return basis.size(); }
    bool contains(const Vector& v) const { return span_contains(basis, v); }
};

// ---- cointegrals ---------------------------------------------------------

/// Left: {h : a h = eps_t(a) h for all a}. Right: {k : k a = k eps_s(a)}.
inline SolutionSpace cointegral_space(const WeakHopf& w, Side side) {
    const std::size_t n = w.dim();
    std::vector<Vector> rows;
    for (std::size_t a = 0; a < n; ++a) {
        Vector ea = w.basis_element(a);
        Matrix diff = side == Side::left
                          ? w.algebra().left_mult(ea) - w.algebra().left_mult(w.eps_t(ea))
                          : w.algebra().right_mult(ea) - w.algebra().right_mult(w.eps_s(ea));
        for (std::size_t r = 0; r < n; ++r) rows.push_back(diff.row(r));
    }
    return SolutionSpace{
        side == Side::left ? SpaceKind::left_cointegral : SpaceKind::right_cointegral,
        kernel_basis(Matrix::from_rows(rows))};
}

inline bool is_left_cointegral(const WeakHopf& w, const Vector& h) {
    for (std::size_t a = 0; a < w.dim(); ++a) {
        Vector ea = w.basis_element(a);
        if (w.algebra().product(ea, h) != w.algebra().product(w.eps_t(ea), h)) return false;
    }
    return true;
}

inline bool is_right_cointegral(const WeakHopf& w, const Vector& k) {
    for (std::size_t a = 0; a < w.dim(); ++a) {
        Vector ea = w.basis_element(a);
        if (w.algebra().product(k, ea) != w.algebra().product(k, w.eps_s(ea))) return false;
    }
    return true;
}

/// The six equivalent characterizations of a left cointegral, each
/// evaluated over the whole basis. For any input they must agree
/// (all true or all false).
struct EquivalenceReport {
    std::array<bool, 6> statements{};
    bool all_agree() const {
        for (bool b : statements)
            if (b != statements[0]) return false;
        return true;
    }
    bool all_true() const {
        return all_agree() && statements[0];
    }
};

inline EquivalenceReport check_equivalences(const WeakHopf& w, const Vector& h) {
    const std::size_t n = w.dim();
    const Algebra& alg = w.algebra();
    EquivalenceReport rep;
    rep.statements.fill(true);
    Vector dh = w.coproduct(h);
    Vector sh = w.antipode(h);
    for (std::size_t a = 0; a < n; ++a) {
        Vector ea = w.basis_element(a);
        Vector sa = w.antipode(ea);
        Vector da = w.coproduct(ea);
        if (alg.product(ea, h) != alg.product(w.eps_t(ea), h)) rep.statements[0] = false;
        if (w.leg2_lmul(dh, ea) != w.leg1_lmul(dh, sa)) rep.statements[1] = false;
        if (alg.product(sh, ea) != alg.product(sh, w.eps_s(ea))) rep.statements[2] = false;
        if (w.leg1_rmul(da, h) != w.tensor_product(w.E(), kron(h, ea))) rep.statements[3] = false;
        if (w.leg2_rmul(da, h) != w.tensor_product(w.E(), kron(ea, h))) rep.statements[4] = false;
        if (alg.product(sa, h) != alg.product(w.eps_s(ea), h)) rep.statements[5] = false;
    }
    return rep;
}

/// For a left cointegral h: y h = S(y) h on A_s, and A_s h = A_t h as
/// subspaces. The right-sided analogue k x = k S(x) on A_t is also
/// exposed for right cointegrals.
inline bool corollary_ys(const WeakHopf& w, const Vector& h) {
    if (is_zero(h) || !is_left_cointegral(w, h))
        throw error("corollary_ys: input is not a nonzero left cointegral");
    const Algebra& alg = w.algebra();
    for (const auto& y : w.As_basis())
        if (alg.product(y, h) != alg.product(w.antipode(y), h)) return false;
    std::vector<Vector> as_h, at_h;
    for (const auto& y : w.As_basis()) as_h.push_back(alg.product(y, h));
    for (const auto& x : w.At_basis()) at_h.push_back(alg.product(x, h));
    return spans_equal(as_h, at_h);
}

inline bool right_corollary_xs(const WeakHopf& w, const Vector& k) {
    if (is_zero(k) || !is_right_cointegral(w, k))
        throw error("right_corollary_xs: input is not a nonzero right cointegral");
    const Algebra& alg = w.algebra();
    for (const auto& x : w.At_basis())
        if (alg.product(k, x) != alg.product(k, w.antipode(x))) return false;
    return true;
}

/// gamma(h) = sum h(1) S(eps_s(h(2))) as a matrix on A (it is linear).
inline Matrix gamma_matrix(const WeakHopf& w) {
    const std::size_t n = w.dim();
    return w.map_matrix([&](const Vector& a) {
        Vector da = w.coproduct(a);
        Vector out(n, Scalar::zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& c = da[i * n + j];
                if (c.is_zero()) continue;
                Vector term = w.algebra().product(w.basis_element(i),
                                                  w.antipode(w.eps_s(w.basis_element(j))));
                add_scaled(out, c, term);
            }
        return out;
    });
}

/// gamma applied to a left cointegral; the result is checked to be a
/// left cointegral again.
inline Vector gamma(const WeakHopf& w, const Vector& h) {
    if (!is_left_cointegral(w, h)) throw error("gamma: input is not a left cointegral");
    Vector g = gamma_matrix(w).apply(h);
    if (!is_left_cointegral(w, g))
        throw error("gamma: image failed the cointegral condition (internal inconsistency)");
    return g;
}

// ---- legs, discreteness, faithfulness ------------------------------------

struct Legs {
    std::vector<Vector> left, right;
};

/// Legs of Delta(V) for a set V of elements: the left leg collects the
/// first-leg components of Delta(h)(1 (x) a), the right leg the
/// second-leg components of (a (x) 1)Delta(h).
inline Legs legs_of_set(const WeakHopf& w, const std::vector<Vector>& set) {
    const std::size_t n = w.dim();
    SpanBuilder left, right;
    for (const auto& h : set) {
        Vector dh = w.coproduct(h);
        for (std::size_t a = 0; a < n; ++a) {
            Vector l = w.leg2_rmul(dh, w.basis_element(a));
            Vector r = w.leg1_lmul(dh, w.basis_element(a));
            for (std::size_t j = 0; j < n; ++j) {
                Vector lcol(n), rrow(n);
                for (std::size_t i = 0; i < n; ++i) {
                    lcol[i] = l[i * n + j];
                    rrow[i] = r[j * n + i];
                }
                left.insert(lcol);
                right.insert(rrow);
            }
        }
    }
    return Legs{left.basis(), right.basis()};
}

inline Legs legs_of_cointegrals(const WeakHopf& w) {
    return legs_of_set(w, cointegral_space(w, Side::left).basis);
}

/// Annihilator-style faithfulness criteria for the cointegral space:
/// right leg full iff no nonzero y in A_s kills H from the right,
/// left leg full iff no nonzero x in A_t does.
struct FaithfulCriteria {
    bool right_leg_full = false, left_leg_full = false;
    bool as_annihilator_trivial = false, at_annihilator_trivial = false;
};

inline FaithfulCriteria faithful_criteria(const WeakHopf& w) {
    const std::size_t n = w.dim();
    auto H = cointegral_space(w, Side::left).basis;
    Legs legs = legs_of_set(w, H);
    FaithfulCriteria out;
    out.left_leg_full = legs.left.size() == n;
    out.right_leg_full = legs.right.size() == n;

    auto trivial = [&](const std::vector<Vector>& base) {
        if (base.empty()) return true;
        std::vector<Vector> rows;
        Matrix bm = Matrix::from_columns(base);
        for (const auto& h : H) {
            Matrix m = w.algebra().left_mult(h) * bm;  // coords in base -> h * y
            for (std::size_t r = 0; r < n; ++r) rows.push_back(m.row(r));
        }
        if (rows.empty()) return base.empty();
        return kernel_basis(Matrix::from_rows(rows)).empty();
    };
    out.as_annihilator_trivial = trivial(w.As_basis());
    out.at_annihilator_trivial = trivial(w.At_basis());
    return out;
}

inline bool is_discrete(const WeakHopf& w) {
    auto c = faithful_criteria(w);
    return c.left_leg_full && c.right_leg_full;
}

/// F1(f) = (id (x) f)Delta(h) as a matrix on functional coefficients.
inline Matrix f1_matrix(const WeakHopf& w, const Vector& h) {
    const std::size_t n = w.dim();
    Vector dh = w.coproduct(h);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dh[i * n + j];
    return m;
}

/// F2(f) = (f (x) id)Delta(h).
inline Matrix f2_matrix(const WeakHopf& w, const Vector& h) {
    return f1_matrix(w, h).transpose();
}

inline bool is_faithful_cointegral(const WeakHopf& w, const Vector& h) {
    const std::size_t n = w.dim();
    return rank(f1_matrix(w, h)) == n && rank(f2_matrix(w, h)) == n;
}

/// Injectivity of f (x) h -> (f (x) id)Delta(h) on the balanced tensor
/// product A' (x)_{A_s} H: the kernel of the assembled map must equal the
/// span of the balancing relations f(. S(y)) (x) h - f (x) h S(y).
inline bool balanced_injectivity_check(const WeakHopf& w) {
    const std::size_t n = w.dim();
    auto H = cointegral_space(w, Side::left).basis;
    const std::size_t m = H.size();
    if (m == 0) return true;
    Matrix hmat = Matrix::from_columns(H);

    // map A' (x) H -> A, column (i,k) = (e^i (x) id)Delta(h_k)
    Matrix big(n, n * m);
    for (std::size_t k = 0; k < m; ++k) {
        Matrix f2 = f2_matrix(w, H[k]);
        for (std::size_t i = 0; i < n; ++i) {
            Vector col = f2.column(i);
            for (std::size_t r = 0; r < n; ++r) big(r, i * m + k) = col[r];
        }
    }

    std::vector<Vector> relations;
    for (const auto& y : w.As_basis()) {
        Matrix rsy = w.algebra().right_mult(w.antipode(y));
        Matrix rsy_t = rsy.transpose();
        for (std::size_t k = 0; k < m; ++k) {
            Vector hsy = rsy.apply(H[k]);
            auto coords = solve(hmat, hsy);
            if (!coords)
                throw error("balanced injectivity: h S(y) left the cointegral space");
            for (std::size_t i = 0; i < n; ++i) {
                Vector rel(n * m, Scalar::zero());
                Vector omega_sy = rsy_t.column(i);  // coefficients of e^i(. S(y))
                for (std::size_t ii = 0; ii < n; ++ii) rel[ii * m + k] += omega_sy[ii];
                for (std::size_t kk = 0; kk < m; ++kk) rel[i * m + kk] -= (*coords)[kk];
                relations.push_back(std::move(rel));
            }
        }
    }
    return spans_equal(kernel_basis(big), relations);
}

// ---- integrals ------------------------------------------------------------

namespace detail {

/// Rows spanning the annihilator of span(base) inside A'.
inline std::vector<Vector> annihilator_rows(const std::vector<Vector>& base, std::size_t n) {
    if (base.empty()) {
        std::vector<Vector> rows;
        for (std::size_t k = 0; k < n; ++k) rows.push_back(unit_vector(n, k));
        return rows;
    }
    return kernel_basis(Matrix::from_columns(base).transpose());
}

}  // namespace detail

/// Left: {phi : (id (x) phi)Delta(a) in A_t for all a}. Right uses A_s.
inline SolutionSpace integral_space(const WeakHopf& w, Side side) {
    const std::size_t n = w.dim();
    auto q = detail::annihilator_rows(side == Side::left ? w.At_basis() : w.As_basis(), n);
    std::vector<Vector> rows;
    for (std::size_t a = 0; a < n; ++a) {
        Matrix da = w.delta_as_matrix(w.basis_element(a));
        Matrix m = side == Side::left ? da : da.transpose();
        // condition: q . (m phi) = 0  ->  row = q^T m
        for (const auto& qv : q) {
            Vector row(n, Scalar::zero());
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    if (!qv[i].is_zero() && !m(i, j).is_zero()) row[j] += qv[i] * m(i, j);
            rows.push_back(std::move(row));
        }
    }
    std::vector<Vector> basis;
    if (rows.empty()) {
        for (std::size_t k = 0; k < n; ++k) basis.push_back(unit_vector(n, k));
    } else {
        basis = kernel_basis(Matrix::from_rows(rows));
    }
    return SolutionSpace{side == Side::left ? SpaceKind::left_integral : SpaceKind::right_integral,
                         std::move(basis)};
}

inline bool is_left_integral(const WeakHopf& w, const Functional& phi) {
    for (std::size_t a = 0; a < w.dim(); ++a) {
        Vector v = w.leg2_contract(phi, w.coproduct(w.basis_element(a)));
        if (!span_contains(w.At_basis(), v)) return false;
    }
    return true;
}

inline bool is_right_integral(const WeakHopf& w, const Functional& psi) {
    for (std::size_t a = 0; a < w.dim(); ++a) {
        Vector v = w.leg1_contract(psi, w.coproduct(w.basis_element(a)));
        if (!span_contains(w.As_basis(), v)) return false;
    }
    return true;
}

/// On a discrete algebra, phi is a left integral iff (id (x) phi)Delta(h)
/// lands in A_t for every cointegral h. Returns (direct, via-h).
inline std::pair<bool, bool> integral_char_via_cointegrals(const WeakHopf& w,
                                                           const Functional& phi) {
    bool direct = is_left_integral(w, phi);
    bool via = true;
    for (const auto& h : cointegral_space(w, Side::left).basis) {
        Vector v = w.leg2_contract(phi, w.coproduct(h));
        if (!span_contains(w.At_basis(), v)) via = false;
    }
    return {direct, via};
}

/// Faithfulness of a set of functionals: left faithful iff
/// {x : phi(x a) = 0 for all phi in the set and all a} = 0; right
/// faithful with phi(a x).
inline std::pair<bool, bool> integral_set_faithfulness(const WeakHopf& w,
                                                       const std::vector<Functional>& set) {
    const std::size_t n = w.dim();
    if (set.empty()) return {false, false};
    std::vector<Vector> left_rows, right_rows;
    for (const auto& phi : set)
        for (std::size_t a = 0; a < n; ++a) {
            left_rows.push_back(w.algebra().right_mult(w.basis_element(a)).transpose().apply(phi));
            right_rows.push_back(w.algebra().left_mult(w.basis_element(a)).transpose().apply(phi));
        }
    bool left = kernel_basis(Matrix::from_rows(left_rows)).empty();
    bool right = kernel_basis(Matrix::from_rows(right_rows)).empty();
    return {left, right};
}

// ---- uniqueness and the single-faithful-cointegral apparatus --------------

inline Report uniqueness_props(const WeakHopf& w) {
    Report rep;
    rep.title = "cointegral uniqueness properties";
    const char* ref = "cointegral-uniqueness";
    auto H = cointegral_space(w, Side::left).basis;
    Legs legs = legs_of_set(w, H);
    bool pre = legs.right.size() == w.dim();
    rep.add("right leg of Delta(H) is all of A (precondition)", ref, pre);
    if (!pre) return rep;

    std::vector<Vector> h_at, h_as;
    for (const auto& h : H) {
        for (const auto& x : w.At_basis()) h_at.push_back(w.algebra().product(h, x));
        for (const auto& y : w.As_basis()) h_as.push_back(w.algebra().product(h, y));
    }
    bool mem_t = true, mem_s = true;
    for (const auto& hp : H) {
        if (!span_contains(h_at, hp)) mem_t = false;
        if (!span_contains(h_as, hp)) mem_s = false;
    }
    rep.add("every cointegral lies in H A_t", ref, mem_t);
    rep.add("every cointegral lies in H A_s", ref, mem_s);

    Matrix gm = gamma_matrix(w);
    bool identity_ok = true;
    for (const auto& h : H)
        for (const auto& hp : H) {
            Vector lhs = w.leg1_lmul(w.coproduct(h), hp);
            Vector rhs = w.tensor_product(kron(gm.apply(h), w.antipode_inv(hp)), w.E());
            if (lhs != rhs) identity_ok = false;
        }
    rep.add("(h'(x)1)Delta(h) = (gamma(h)(x)S^-1(h'))E", ref, identity_ok);
    return rep;
}

/// Everything solved from a single faithful cointegral h:
/// ha = h gamma_t(a) = h gamma_s(a), the anti-isomorphisms between the
/// base algebras, the twisted antipodes, the elements E_t, E_s and the
/// distinguished functional with S(h) = (id (x) delta)Delta(h).
struct SingleCointegralMaps {
    Matrix gamma_t, gamma_s;    // A -> A_t, A -> A_s
    Matrix s1_prime, s2_prime;  // A -> A
    Vector e_t, e_s;            // elements of A (x) A
    Functional delta_f;
    Report checks;
};

inline SingleCointegralMaps single_h_maps(const WeakHopf& w, const Vector& h) {
    const std::size_t n = w.dim();
    const Algebra& alg = w.algebra();
    if (!is_left_cointegral(w, h)) throw error("single_h_maps: h is not a left cointegral");
    if (!is_faithful_cointegral(w, h)) throw error("single_h_maps: h is not faithful");

    Matrix lh = alg.left_mult(h);
    auto solve_into = [&](const std::vector<Vector>& base, const char* what) {
        Matrix bm = Matrix::from_columns(base);
        Matrix m = lh * bm;
        if (!kernel_basis(m).empty())
            throw error(std::string("single_h_maps: ") + what + " is underdetermined");
        Matrix out(n, n);
        for (std::size_t a = 0; a < n; ++a) {
            auto x = solve(m, lh.apply(w.basis_element(a)));
            if (!x) throw error(std::string("single_h_maps: ") + what + " system inconsistent");
            Vector img = bm.apply(*x);
            for (std::size_t i = 0; i < n; ++i) out(i, a) = img[i];
        }
        return out;
    };

    SingleCointegralMaps maps;
    maps.checks.title = "single faithful cointegral maps";
    const char* ref = "single-cointegral-maps";
    maps.gamma_t = solve_into(w.At_basis(), "gamma_t");
    maps.gamma_s = solve_into(w.As_basis(), "gamma_s");

    // S'_2(a) = sum gamma_s(a(1)) S(a(2)),  S'_1(a) = sum gamma_t(a(2)) S^-1(a(1))
    maps.s2_prime = w.map_matrix([&](const Vector& a) {
        Vector da = w.coproduct(a);
        Vector out(n, Scalar::zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& c = da[i * n + j];
                if (c.is_zero()) continue;
                add_scaled(out, c,
                           alg.product(maps.gamma_s.apply(w.basis_element(i)),
                                       w.antipode(w.basis_element(j))));
            }
        return out;
    });
    maps.s1_prime = w.map_matrix([&](const Vector& a) {
        Vector da = w.coproduct(a);
        Vector out(n, Scalar::zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& c = da[i * n + j];
                if (c.is_zero()) continue;
                add_scaled(out, c,
                           alg.product(maps.gamma_t.apply(w.basis_element(j)),
                                       w.antipode_inv(w.basis_element(i))));
            }
        return out;
    });

    maps.e_t = w.apply_leg2(maps.gamma_t, w.E());
    maps.e_s = w.apply_leg1(maps.gamma_s, w.E());

    // delta: S(h) = (id (x) delta)Delta(h), unique since F1 is bijective
    {
        auto d = solve(f1_matrix(w, h), w.antipode(h));
        if (!d) throw error("single_h_maps: no functional with S(h) = (id (x) delta)Delta(h)");
        maps.delta_f = *d;
    }

    // verifications
    {
        bool gt_mod = true, gs_mod = true;
        for (std::size_t a = 0; a < n; ++a) {
            for (const auto& x : w.At_basis())
                if (maps.gamma_t.apply(alg.product(w.basis_element(a), x)) !=
                    alg.product(maps.gamma_t.apply(w.basis_element(a)), x))
                    gt_mod = false;
            for (const auto& y : w.As_basis())
                if (maps.gamma_s.apply(alg.product(w.basis_element(a), y)) !=
                    alg.product(maps.gamma_s.apply(w.basis_element(a)), y))
                    gs_mod = false;
        }
        maps.checks.add("gamma_t(a x) = gamma_t(a) x", ref, gt_mod);
        maps.checks.add("gamma_s(a y) = gamma_s(a) y", ref, gs_mod);

        bool s1_anti = true;
        for (const auto& y : w.As_basis())
            for (const auto& yp : w.As_basis())
                if (maps.gamma_t.apply(alg.product(y, yp)) !=
                    alg.product(maps.gamma_t.apply(yp), maps.gamma_t.apply(y)))
                    s1_anti = false;
        maps.checks.add("S1(y y') = S1(y') S1(y) on A_s", ref, s1_anti);
        bool s2_anti = true;
        for (const auto& x : w.At_basis())
            for (const auto& xp : w.At_basis())
                if (maps.gamma_s.apply(alg.product(x, xp)) !=
                    alg.product(maps.gamma_s.apply(xp), maps.gamma_s.apply(x)))
                    s2_anti = false;
        maps.checks.add("S2(x x') = S2(x') S2(x) on A_t", ref, s2_anti);

        bool s1_law = true, s2_law = true;
        Vector dh = w.coproduct(h);
        for (const auto& y : w.As_basis())
            if (w.leg2_rmul(dh, y) != w.leg1_rmul(dh, maps.gamma_t.apply(y))) s1_law = false;
        for (const auto& x : w.At_basis())
            if (w.leg1_rmul(dh, x) != w.leg2_rmul(dh, maps.gamma_s.apply(x))) s2_law = false;
        maps.checks.add("Delta(h)(1(x)y) = Delta(h)(S1(y)(x)1)", ref, s1_law);
        maps.checks.add("Delta(h)(x(x)1) = Delta(h)(1(x)S2(x))", ref, s2_law);

        // h S'_2(a) = sum (h gamma_s(a(1))) S(a(2)) = sum (h a(1)) S(a(2)) = h eps_t(a)
        bool hs1 = true, hs2 = true;
        for (std::size_t a = 0; a < n; ++a) {
            Vector ea = w.basis_element(a);
            if (alg.product(h, maps.s1_prime.apply(ea)) != alg.product(h, w.eps_s_prime(ea)))
                hs1 = false;
            if (alg.product(h, maps.s2_prime.apply(ea)) != alg.product(h, w.eps_t(ea)))
                hs2 = false;
        }
        maps.checks.add("h S'_1(a) = h eps'_s(a)", ref, hs1);
        maps.checks.add("h S'_2(a) = h eps_t(a)", ref, hs2);
    }
    return maps;
}

/// The eight identities tying a faithful cointegral to the canonical
/// idempotent and the twisted antipodes. The third identity is stated in
/// its left-multiplied form Delta(a)(h (x) 1) = E(h (x) a), consistent
/// with the cointegral equivalences; the report entry carries a note.
inline Report check_collection(const WeakHopf& w, const Vector& h,
                               const SingleCointegralMaps& maps) {
    Report rep;
    rep.title = "collection of cointegral identities";
    const char* ref = "collection-formulas";
    const std::size_t n = w.dim();
    Vector dh = w.coproduct(h);
    bool f1 = true, f2 = true, f3 = true, f4 = true, f5 = true, f6 = true, f7 = true, f8 = true;
    bool res57 = true;
    for (std::size_t ai = 0; ai < n; ++ai) {
        Vector a = w.basis_element(ai);
        Vector da = w.coproduct(a);
        Vector sa = w.antipode(a);
        if (w.leg2_rmul(da, h) != w.tensor_product(w.E(), kron(a, h))) f1 = false;
        if (w.leg2_lmul(da, h) != w.tensor_product(kron(a, h), maps.e_t)) f2 = false;
        if (w.leg1_rmul(da, h) != w.tensor_product(w.E(), kron(h, a))) f3 = false;
        if (w.leg1_lmul(da, h) != w.tensor_product(kron(h, a), maps.e_s)) f4 = false;
        Vector r5 = w.leg2_lmul(dh, a) - w.leg1_lmul(dh, sa);
        if (!is_zero(r5)) f5 = false;
        if (w.leg2_rmul(dh, a) != w.leg1_rmul(dh, maps.s1_prime.apply(a))) f6 = false;
        Vector r7 = w.leg1_lmul(dh, a) - w.leg2_lmul(dh, w.antipode_inv(a));
        if (!is_zero(r7)) f7 = false;
        if (w.leg1_rmul(dh, a) != w.leg2_rmul(dh, maps.s2_prime.apply(a))) f8 = false;
        // identities (5) and (7) are the same formula: residual_7(a) = -residual_5(S^-1 a)
        Vector sia = w.antipode_inv(a);
        Vector r5s = w.leg2_lmul(dh, sia) - w.leg1_lmul(dh, w.antipode(sia));
        for (auto& x : r5s) x = -x;
        if (r7 != r5s) res57 = false;
    }
    rep.add("(1) Delta(a)(1(x)h) = E(a(x)h)", ref, f1);
    rep.add("(2) (1(x)h)Delta(a) = (a(x)h)E_t", ref, f2);
    rep.add("(3) Delta(a)(h(x)1) = E(h(x)a)", ref, f3,
            "stated with swapped tensor factors in some sources; verified in the "
            "left-multiplied form matching equivalence (4)");
    rep.add("(4) (h(x)1)Delta(a) = (h(x)a)E_s", ref, f4);
    rep.add("(5) (1(x)a)Delta(h) = (S(a)(x)1)Delta(h)", ref, f5);
    rep.add("(6) Delta(h)(1(x)a) = Delta(h)(S'_1(a)(x)1)", ref, f6);
    rep.add("(7) (a(x)1)Delta(h) = (1(x)S^-1(a))Delta(h)", ref, f7);
    rep.add("(8) Delta(h)(a(x)1) = Delta(h)(1(x)S'_2(a))", ref, f8);
    rep.add("(5) and (7) have identical residuals", ref, res57);
    return rep;
}

/// phi_h and psi_h with (id (x) phi_h)Delta(h) = 1 and
/// (psi_h (x) id)Delta(h) = 1; both are integrals and reproduce the
/// counit via phi_h(a h) = eps(a) = psi_h(h a).
struct CanonicalIntegrals {
    Functional phi_h, psi_h;
    Report checks;
};

inline CanonicalIntegrals existence_of_integrals(const WeakHopf& w, const Vector& h) {
    if (!is_faithful_cointegral(w, h))
        throw error("existence_of_integrals: h is not a faithful cointegral");
    if (!w.algebra().unit()) throw error("existence_of_integrals: algebra has no unit");
    const Vector& one = *w.algebra().unit();
    CanonicalIntegrals out;
    out.checks.title = "existence of integrals";
    const char* ref = "integral-existence";
    auto phi = solve(f1_matrix(w, h), one);
    auto psi = solve(f2_matrix(w, h), one);
    if (!phi || !psi) throw error("existence_of_integrals: defining systems inconsistent");
    out.phi_h = *phi;
    out.psi_h = *psi;
    out.checks.add("(id(x)phi_h)Delta(h) = 1", ref,
                   f1_matrix(w, h).apply(out.phi_h) == one);
    out.checks.add("(psi_h(x)id)Delta(h) = 1", ref,
                   f2_matrix(w, h).apply(out.psi_h) == one);
    out.checks.add("phi_h is a left integral", ref, is_left_integral(w, out.phi_h));
    out.checks.add("psi_h is a right integral", ref, is_right_integral(w, out.psi_h));
    bool counit_ok = true;
    for (std::size_t a = 0; a < w.dim(); ++a) {
        Vector ea = w.basis_element(a);
        Scalar eps_a = w.counit_of(ea);
        if (dot(out.phi_h, w.algebra().product(ea, h)) != eps_a) counit_ok = false;
        if (dot(out.psi_h, w.algebra().product(h, ea)) != eps_a) counit_ok = false;
    }
    out.checks.add("phi_h(a h) = eps(a) = psi_h(h a)", ref, counit_ok);
    return out;
}

/// Faithfulness of the left-integral space, cross-checked against the
/// injectivity of S'_1 (and of S'_2 for the right-integral space).
inline Report integral_faithfulness_report(const WeakHopf& w, const SingleCointegralMaps& maps) {
    Report rep;
    rep.title = "integral space faithfulness";
    const char* ref = "integral-faithfulness";
    auto intl = integral_space(w, Side::left);
    auto [l_faithful, r_faithful] = integral_set_faithfulness(w, intl.basis);
    rep.add("left integral space is right faithful", ref, r_faithful);
    bool s1p_injective = rank(maps.s1_prime) == w.dim();
    rep.add("left-faithful iff S'_1 injective", ref, l_faithful == s1p_injective,
            l_faithful == s1p_injective
                ? ""
                : (l_faithful ? "space faithful, S'_1 rank deficient"
                              : "space not faithful, S'_1 injective"));
    auto intr = integral_space(w, Side::right);
    auto [lr, rr] = integral_set_faithfulness(w, intr.basis);
    rep.add("right integral space is right faithful", ref, rr);
    bool s2p_injective = rank(maps.s2_prime) == w.dim();
    rep.add("right space left-faithful iff S'_2 injective", ref, lr == s2p_injective);
    return rep;
}

// ---- classification --------------------------------------------------------

struct Classification {
    bool compact = false;
    bool discrete = false;
    std::string note;
};

/// compact: unital with a faithful set of integrals. discrete: the left
/// cointegral space is faithful. When both hold the algebra is a finite
/// dimensional weak Hopf algebra (trivially confirmed at this scale).
inline Classification classify(const WeakHopf& w) {
    Classification c;
    bool unital = w.algebra().unit().has_value() && w.algebra().unit_is_identity();
    if (unital) {
        auto intl = integral_space(w, Side::left);
        if (intl.dim() > 0) {
            auto [lf, rf] = integral_set_faithfulness(w, intl.basis);
            c.compact = lf && rf;
        }
    }
    c.discrete = is_discrete(w);
    if (c.compact && c.discrete)
        c.note = "compact and discrete together force finite dimension; holds by construction";
    else if (c.compact)
        c.note = "compact type (unital algebraic quantum groupoid)";
    else if (c.discrete)
        c.note = "discrete type (faithful set of cointegrals)";
    else
        c.note = "neither compact nor discrete";
    return c;
}

}  // namespace whkit

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "whkit/integrals.hpp"
#include "whkit/rng.hpp"
#include "whkit/weak_hopf.hpp"

namespace whkit {

/// A weak Hopf algebra together with its finite-dimensional dual on the
/// dual basis; the pairing matrix is canonical (identity in coordinates).
struct DualPair {
    WeakHopf dual;
    Matrix pairing;
    Report checks;
};

namespace detail {

inline WeakHopf build_dual(const WeakHopf& w) {
    const std::size_t n = w.dim();
    if (!w.algebra().unit() || !w.algebra().unit_is_identity())
        throw error("dual: construction requires a unital algebra");
    std::vector<std::string> basis;
    basis.reserve(n);
    for (std::size_t k = 0; k < n; ++k) basis.push_back("^" + w.algebra().basis()[k]);
    // convolution product: (w1 w2)(a) = (w1 (x) w2)(Delta(a))
    std::vector<Vector> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector prod(n);
            for (std::size_t k = 0; k < n; ++k) prod[k] = w.delta_matrix()(i * n + j, k);
            table[i * n + j] = std::move(prod);
        }
    Algebra dual_alg(std::move(basis), std::move(table), w.counit());

    // dual coproduct adjoint to the product
    Matrix delta(n * n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                delta(i * n + j, k) = w.algebra().basis_product(i, j)[k];
    Functional counit = *w.algebra().unit();  // evaluation at 1
    Matrix antipode = w.antipode_matrix().transpose();
    Vector e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e[i * n + j] = w.counit_of(w.algebra().basis_product(i, j));
    return WeakHopf(std::move(dual_alg), std::move(delta), std::move(counit),
                    std::move(antipode), std::move(e));
}

}  // namespace detail

/// Builds the dual and verifies the pairing adjointness identities and
/// the dual axioms. When verify_input is set, the input axioms and the
/// faithful-integral-set precondition are enforced first.
inline DualPair dual_weak_hopf(const WeakHopf& w, bool verify_input = true) {
    const std::size_t n = w.dim();
    if (verify_input) {
        Report axioms = verify_axioms(w);
        if (!axioms.all_pass()) {
            const CheckResult* f = axioms.first_failure();
            throw error("dual: input fails axiom check '" + (f ? f->name : "") + "'");
        }
        auto intl = integral_space(w, Side::left);
        auto [lf, rf] = integral_set_faithfulness(w, intl.basis);
        if (!(lf && rf)) throw error("dual: input has no faithful set of integrals");
    }
    DualPair out{detail::build_dual(w), Matrix::identity(n), Report{}};
    out.checks.title = "duality";
    const char* ref = "dual-construction";

    out.checks.add("pairing non-degenerate", ref, rank(out.pairing) == n);
    {
        bool prod_adj = true, cop_adj = true;
        for (std::size_t i = 0; i < n && (prod_adj || cop_adj); ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vector& dp = out.dual.algebra().basis_product(i, j);
                for (std::size_t a = 0; a < n; ++a) {
                    if (dp[a] != w.delta_matrix()(i * n + j, a)) prod_adj = false;
                    if (out.dual.delta_matrix()(i * n + j, a) !=
                        w.algebra().basis_product(i, j)[a])
                        cop_adj = false;
                }
            }
        out.checks.add("dual product adjoint to coproduct", ref, prod_adj);
        out.checks.add("dual coproduct adjoint to product", ref, cop_adj);
    }
    {
        bool s_adj = true;
        for (std::size_t a = 0; a < n && s_adj; ++a)
            for (std::size_t k = 0; k < n; ++k) {
                // <S(e_a), e^k> = <e_a, S^(e^k)>
                Scalar lhs = w.antipode(w.basis_element(a))[k];
                Scalar rhs = out.dual.antipode(unit_vector(n, k))[a];
                if (lhs != rhs) s_adj = false;
            }
        out.checks.add("dual antipode adjoint to antipode", ref, s_adj);
        out.checks.add("dual unit is the counit", ref,
                       out.dual.algebra().unit() && *out.dual.algebra().unit() == w.counit() &&
                           out.dual.algebra().unit_is_identity());
        out.checks.add("dual counit is evaluation at the unit", ref,
                       out.dual.counit() == *w.algebra().unit());
    }
    {
        Report dual_axioms = verify_axioms(out.dual);
        out.checks.add("dual passes the axiom suite", ref, dual_axioms.all_pass(),
                       dual_axioms.all_pass() ? "" : dual_axioms.first_failure()->name);
    }
    return out;
}

/// Structural equality under the canonical basis correspondence
/// (labels are ignored; multiplication table, unit, coproduct, counit,
/// antipode and E must match entrywise).
inline bool same_structure(const WeakHopf& a, const WeakHopf& b) {
    if (a.dim() != b.dim()) return false;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.algebra().basis_product(i, j) != b.algebra().basis_product(i, j)) return false;
    if (a.algebra().unit().has_value() != b.algebra().unit().has_value()) return false;
    if (a.algebra().unit() && *a.algebra().unit() != *b.algebra().unit()) return false;
    return a.delta_matrix() == b.delta_matrix() && a.counit() == b.counit() &&
           a.antipode_matrix() == b.antipode_matrix() && a.E() == b.E();
}

/// Double dual via the canonical evaluation map: in coordinates the
/// bidual bundle must equal the original exactly.
inline bool double_dual_is_identity(const WeakHopf& w) {
    DualPair d1 = dual_weak_hopf(w, false);
    DualPair d2 = dual_weak_hopf(d1.dual, false);
    return same_structure(w, d2.dual);
}

/// A cointegral of A, read through the pairing, is a left integral on
/// the dual.
inline Functional transfer_cointegral(const WeakHopf& w, const WeakHopf& dual, const Vector& h) {
    if (is_zero(h) || !is_left_cointegral(w, h))
        throw error("transfer_cointegral: input is not a nonzero left cointegral");
    Functional image = h;  // canonical pairing is the identity in coordinates
    if (!is_left_integral(dual, image))
        throw error("transfer_cointegral: image is not a left integral on the dual");
    return image;
}

/// compact type => the dual is discrete: the integral set embeds in the
/// dual as a set of cointegrals whose coproduct legs span everything.
inline Report compact_implies_dual_discrete(const WeakHopf& w, const WeakHopf& dual) {
    Report rep;
    rep.title = "compact implies dual discrete";
    const char* ref = "compact-discrete-duality";
    Classification c = classify(w);
    rep.add("input is compact (precondition)", ref, c.compact);
    if (!c.compact) return rep;

    auto intl = integral_space(w, Side::left);
    bool all_coint = true;
    for (const auto& phi : intl.basis)
        if (!is_left_cointegral(dual, phi)) all_coint = false;
    rep.add("integrals embed as cointegrals of the dual", ref, all_coint);

    Legs legs = legs_of_set(dual, intl.basis);
    rep.add("left leg of the embedded integral set spans the dual", ref,
            legs.left.size() == w.dim());
    rep.add("right leg of the embedded integral set spans the dual", ref,
            legs.right.size() == w.dim());
    return rep;
}

/// single faithful cointegral => the dual is compact: eps is phi_h(. h),
/// lies in the span {phi(. a)}, and is the unit of the dual.
inline Report single_faithful_implies_dual_compact(const WeakHopf& w, const WeakHopf& dual,
                                                   const Vector& h,
                                                   std::uint64_t seed = kDefaultSeed) {
    Report rep;
    rep.title = "single faithful cointegral implies dual compact";
    const char* ref = "compact-discrete-duality";
    const std::size_t n = w.dim();
    rep.add("h is a faithful cointegral (precondition)", ref,
            is_left_cointegral(w, h) && is_faithful_cointegral(w, h));
    auto intl = integral_space(w, Side::left);
    auto [lf, rf] = integral_set_faithfulness(w, intl.basis);
    rep.add("left integral space is faithful (precondition)", ref, lf && rf);
    if (!rep.all_pass()) return rep;

    CanonicalIntegrals ci = existence_of_integrals(w, h);
    Functional eps_via_h = w.algebra().right_mult(h).transpose().apply(ci.phi_h);
    rep.add("eps = phi_h(. h)", ref, eps_via_h == w.counit());

    std::vector<Vector> hat_a;  // phi(. a) over the integral basis
    for (const auto& phi : intl.basis)
        for (std::size_t a = 0; a < n; ++a)
            hat_a.push_back(w.algebra().right_mult(w.basis_element(a)).transpose().apply(phi));
    rep.add("eps lies in {phi(. a)}", ref, span_contains(hat_a, w.counit()));

    bool unital = true;
    for (std::size_t k = 0; k < n; ++k) {
        Vector ek = unit_vector(n, k);
        if (dual.algebra().product(w.counit(), ek) != ek ||
            dual.algebra().product(ek, w.counit()) != ek)
            unital = false;
    }
    rep.add("dual is unital with unit eps", ref, unital);

    // locate a faithful integral phi and the element y in A_s with
    // phi_h(a) = phi(a y)
    {
        auto faithful = [&](const Functional& phi) {
            Matrix b(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    b(i, j) = dot(phi, w.algebra().basis_product(i, j));
            return rank(b) == n;
        };
        Functional phi(n, Scalar::zero());
        bool found = false;
        {
            Functional cand(n, Scalar::zero());
            for (const auto& p : intl.basis) cand = cand + p;
            if (faithful(cand)) {
                phi = cand;
                found = true;
            }
        }
        Rng rng(seed);
        for (int tries = 0; !found && tries < 64; ++tries) {
            Functional cand(n, Scalar::zero());
            for (const auto& p : intl.basis) add_scaled(cand, Scalar(rng.range(-3, 3)), p);
            if (!is_zero(cand) && faithful(cand)) {
                phi = cand;
                found = true;
            }
        }
        rep.add("a faithful integral exists in the integral space", ref, found);
        if (found) {
            Matrix as_mat = Matrix::from_columns(w.As_basis());
            std::vector<Vector> rows;
            Vector rhs;
            for (std::size_t a = 0; a < n; ++a) {
                // phi(e_a * As_mat c) = phi_h(e_a)
                Vector row = (w.algebra().left_mult(w.basis_element(a)) * as_mat)
                                 .transpose()
                                 .apply(phi);
                rows.push_back(row);
                rhs.push_back(ci.phi_h[a]);
            }
            auto c = solve(Matrix::from_rows(rows), rhs);
            bool ok = false;
            if (c) {
                Vector y = as_mat.apply(*c);
                ok = true;
                for (std::size_t a = 0; a < n; ++a) {
                    Vector ay = w.algebra().product(w.basis_element(a), y);
                    if (dot(phi, ay) != ci.phi_h[a]) ok = false;
                }
            }
            rep.add("phi_h(a) = phi(a y) for some y in A_s", ref, ok);
        }
    }
    return rep;
}

}  // namespace whkit

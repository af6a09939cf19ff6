#pragma once

#include <string>
#include <vector>

#include "whkit/groupoid.hpp"
#include "whkit/weak_hopf.hpp"

namespace whkit {

/// K(G): functions on the arrows with pointwise product. Basis {d_p},
/// coproduct Delta(d_r) = sum_{pq=r} d_p (x) d_q, counit = sum over unit
/// arrows, antipode d_p -> d_{p^-1}, E(p,q) = 1 iff pq is defined.
inline WeakHopf function_algebra(const Groupoid& g) {
    const std::size_t n = g.arrow_count();
    std::vector<std::string> basis;
    basis.reserve(n);
    for (std::size_t p = 0; p < n; ++p) basis.push_back("d_" + g.arrow_name(p));
    std::vector<Vector> table(n * n, zero_vector(n));
    for (std::size_t p = 0; p < n; ++p) table[p * n + p][p] = Scalar::one();
    Vector one(n, Scalar::one());
    Algebra alg(std::move(basis), std::move(table), one);

    Matrix delta(n * n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (!g.composable(p, q)) continue;
            delta(p * n + q, g.compose(p, q)) = Scalar::one();
        }
    Functional counit = zero_vector(n);
    for (std::size_t u = 0; u < g.unit_count(); ++u)
        counit[g.unit_arrow(u)] = Scalar::one();
    Matrix antipode(n, n);
    for (std::size_t p = 0; p < n; ++p) antipode(g.inv(p), p) = Scalar::one();
    Vector e(n * n, Scalar::zero());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (g.composable(p, q)) e[p * n + q] = Scalar::one();
    return WeakHopf(std::move(alg), std::move(delta), std::move(counit), std::move(antipode),
                    std::move(e));
}

/// CG: the convolution groupoid algebra. Basis {l_p} with
/// l_p l_q = l_{pq} when defined (0 otherwise), Delta(l_p) = l_p (x) l_p,
/// eps(l_p) = 1, S(l_p) = l_{p^-1}, unit = sum of unit arrows.
inline WeakHopf groupoid_algebra(const Groupoid& g) {
    const std::size_t n = g.arrow_count();
    std::vector<std::string> basis;
    basis.reserve(n);
    for (std::size_t p = 0; p < n; ++p) basis.push_back("l_" + g.arrow_name(p));
    std::vector<Vector> table(n * n, zero_vector(n));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (g.composable(p, q)) table[p * n + q][g.compose(p, q)] = Scalar::one();
    Vector one(n, Scalar::zero());
    for (std::size_t u = 0; u < g.unit_count(); ++u) one[g.unit_arrow(u)] = Scalar::one();
    Algebra alg(std::move(basis), std::move(table), one);

    Matrix delta(n * n, n);
    for (std::size_t p = 0; p < n; ++p) delta(p * n + p, p) = Scalar::one();
    Functional counit(n, Scalar::one());
    Matrix antipode(n, n);
    for (std::size_t p = 0; p < n; ++p) antipode(g.inv(p), p) = Scalar::one();
    Vector e(n * n, Scalar::zero());
    for (std::size_t u = 0; u < g.unit_count(); ++u) {
        std::size_t p = g.unit_arrow(u);
        e[p * n + p] = Scalar::one();
    }
    return WeakHopf(std::move(alg), std::move(delta), std::move(counit), std::move(antipode),
                    std::move(e));
}

/// Indicator of the unit arrows in K(G); the canonical faithful
/// idempotent cointegral there.
inline Vector unit_indicator(const Groupoid& g) {
    Vector v(g.arrow_count(), Scalar::zero());
    for (std::size_t u = 0; u < g.unit_count(); ++u) v[g.unit_arrow(u)] = Scalar::one();
    return v;
}

/// Sum of all arrows in CG; the canonical faithful cointegral there.
inline Vector all_arrows_sum(const Groupoid& g) {
    return Vector(g.arrow_count(), Scalar::one());
}

}  // namespace whkit

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whkit/linalg.hpp"

namespace whkit {

/// Coefficient vector of an algebra element in the basis of its parent.
using Element = Vector;
/// Coefficient vector of a linear functional; f(x) = dot(f, x).
using Functional = Vector;

/// A finite-dimensional algebra given by its multiplication table
/// table[i*n+j] = e_i * e_j (a coefficient vector). The unit, when present,
/// is stored explicitly.
class Algebra {
public:
    Algebra(std::vector<std::string> basis, std::vector<Vector> table,
            std::optional<Vector> unit = std::nullopt)
        : basis_(std::move(basis)), table_(std::move(table)), unit_(std::move(unit)) {
        const std::size_t n = basis_.size();
        if (table_.size() != n * n) throw error("algebra: multiplication table has wrong size");
        for (const auto& v : table_)
            if (v.size() != n) throw error("algebra: table entry has wrong length");
        if (unit_ && unit_->size() != n) throw error("algebra: unit vector has wrong length");
    }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::optional<Vector>& unit() const { return unit_; }

    const Vector& basis_product(std::size_t i, std::size_t j) const {
        return table_[i * dim() + j];
    }

    Vector product(const Vector& x, const Vector& y) const {
        Vector out(dim(), Scalar::zero());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (y[j].is_zero()) continue;
                Scalar c = x[i] * y[j];
                const Vector& e = basis_product(i, j);
                for (std::size_t k = 0; k < dim(); ++k)
                    if (!e[k].is_zero()) out[k] += c * e[k];
            }
        }
        return out;
    }

    /// Matrix of x -> a*x.
    Matrix left_mult(const Vector& a) const {
        Matrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            Vector col = product(a, unit_vector(dim(), j));
            for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
        }
        return m;
    }

    /// Matrix of x -> x*a.
    Matrix right_mult(const Vector& a) const {
        Matrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            Vector col = product(unit_vector(dim(), j), a);
            for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
        }
        return m;
    }

    bool is_associative(std::string* witness = nullptr) const {
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j)
                for (std::size_t k = 0; k < dim(); ++k) {
                    Vector lhs = product(basis_product(i, j), unit_vector(dim(), k));
                    Vector rhs = product(unit_vector(dim(), i), basis_product(j, k));
                    if (lhs != rhs) {
                        if (witness)
                            *witness = "(" + basis_[i] + "," + basis_[j] + "," + basis_[k] + ")";
                        return false;
                    }
                }
        return true;
    }

    /// Non-degenerate product: aA = 0 => a = 0 and Aa = 0 => a = 0.
    bool is_nondegenerate() const {
        std::vector<Vector> left_rows, right_rows;
        for (std::size_t j = 0; j < dim(); ++j) {
            Matrix r = right_mult(unit_vector(dim(), j));  // a -> a e_j
            Matrix l = left_mult(unit_vector(dim(), j));   // a -> e_j a
            for (std::size_t i = 0; i < dim(); ++i) {
                left_rows.push_back(r.row(i));
                right_rows.push_back(l.row(i));
            }
        }
        return kernel_basis(Matrix::from_rows(left_rows)).empty() &&
               kernel_basis(Matrix::from_rows(right_rows)).empty();
    }

    /// Idempotent algebra: span{e_i e_j} = A.
    bool is_idempotent() const {
        std::vector<Vector> prods;
        prods.reserve(dim() * dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) prods.push_back(basis_product(i, j));
        return span_dim(prods) == dim();
    }

    bool unit_is_identity() const {
        if (!unit_) return false;
        for (std::size_t i = 0; i < dim(); ++i) {
            Vector e = unit_vector(dim(), i);
            if (product(*unit_, e) != e || product(e, *unit_) != e) return false;
        }
        return true;
    }

    /// Searches for a two-sided identity (unique when it exists) and
    /// stores it. Returns true when found.
    bool deduce_unit() {
        if (unit_) return true;
        std::vector<Vector> rows;
        Vector rhs;
        for (std::size_t j = 0; j < dim(); ++j) {
            Matrix r = right_mult(unit_vector(dim(), j));  // u -> u e_j
            Matrix l = left_mult(unit_vector(dim(), j));
            Vector ej = unit_vector(dim(), j);
            for (std::size_t i = 0; i < dim(); ++i) {
                rows.push_back(r.row(i));
                rhs.push_back(ej[i]);
                rows.push_back(l.row(i));
                rhs.push_back(ej[i]);
            }
        }
        auto u = solve(Matrix::from_rows(rows), rhs);
        if (!u) return false;
        unit_ = *u;
        return true;
    }

    bool commutative() const {
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = i + 1; j < dim(); ++j)
                if (basis_product(i, j) != basis_product(j, i)) return false;
        return true;
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.basis_ == b.basis_ && a.table_ == b.table_ && a.unit_ == b.unit_;
    }

private:
    std::vector<std::string> basis_;
    std::vector<Vector> table_;
    std::optional<Vector> unit_;
};

/// Tensor product algebra with basis e_i (x) f_j in row-major order.
inline Algebra tensor(const Algebra& a, const Algebra& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    std::vector<std::string> basis;
    basis.reserve(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            basis.push_back(a.basis()[i] + "(x)" + b.basis()[j]);
    std::vector<Vector> table(na * nb * na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    table[(i * nb + j) * (na * nb) + (k * nb + l)] =
                        kron(a.basis_product(i, k), b.basis_product(j, l));
    std::optional<Vector> unit;
    if (a.unit() && b.unit()) unit = kron(*a.unit(), *b.unit());
    return Algebra(std::move(basis), std::move(table), std::move(unit));
}

/// Product of two vectors living in A (x) B, computed from the factor
/// tables without materializing the tensor algebra.
inline Vector tensor_product_vec(const Algebra& a, const Algebra& b, const Vector& x,
                                 const Vector& y) {
    const std::size_t na = a.dim(), nb = b.dim();
    Vector out(na * nb, Scalar::zero());
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            const Scalar& xc = x[i * nb + j];
            if (xc.is_zero()) continue;
            for (std::size_t k = 0; k < na; ++k) {
                const Vector& pa = a.basis_product(i, k);
                if (is_zero(pa)) continue;
                for (std::size_t l = 0; l < nb; ++l) {
                    const Scalar& yc = y[k * nb + l];
                    if (yc.is_zero()) continue;
                    const Vector& pb = b.basis_product(j, l);
                    Scalar c = xc * yc;
                    for (std::size_t s = 0; s < na; ++s) {
                        if (pa[s].is_zero()) continue;
                        Scalar cs = c * pa[s];
                        for (std::size_t t = 0; t < nb; ++t)
                            if (!pb[t].is_zero()) out[s * nb + t] += cs * pb[t];
                    }
                }
            }
        }
    return out;
}

/// A two-sided multiplier m represented by its action matrices
/// L: b -> m*b and R: a -> a*m.
struct MultiplierPair {
    Matrix L, R;
};

/// Checks L(ab) = L(a)b, R(ab) = aR(b) and a L(b) = R(a) b on all basis
/// pairs.
inline bool multiplier_compatible(const Algebra& alg, const MultiplierPair& m) {
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Vector ei = unit_vector(n, i);
        Vector Lei = m.L.apply(ei), Rei = m.R.apply(ei);
        for (std::size_t j = 0; j < n; ++j) {
            Vector ej = unit_vector(n, j);
            const Vector& eij = alg.basis_product(i, j);
            if (m.L.apply(eij) != alg.product(Lei, ej)) return false;
            if (m.R.apply(eij) != alg.product(ei, m.R.apply(ej))) return false;
            if (alg.product(ei, m.L.apply(ej)) != alg.product(Rei, ej)) return false;
        }
    }
    return true;
}

/// Basis of the multiplier algebra M(A), solved as the space of
/// compatible (L,R) pairs. Unknown layout: the 2n^2 entries of L then R.
inline std::vector<MultiplierPair> multiplier_algebra_basis(const Algebra& alg) {
    if (!alg.is_nondegenerate()) throw error("multiplier algebra: product is degenerate");
    if (!alg.is_idempotent()) throw error("multiplier algebra: algebra is not idempotent");
    const std::size_t n = alg.dim();
    const std::size_t nn = n * n;
    std::vector<Vector> rows;
    auto L_entry = [&](std::size_t r, std::size_t c) { return r * n + c; };
    auto R_entry = [&](std::size_t r, std::size_t c) { return nn + r * n + c; };

    // L(e_i e_j) = L(e_i) e_j  and  R(e_i e_j) = e_i R(e_j)  and
    // e_i L(e_j) = R(e_i) e_j, expanded entrywise as linear equations.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector& eij = alg.basis_product(i, j);
            Matrix rm_j = alg.right_mult(unit_vector(n, j));  // x -> x e_j
            Matrix lm_i = alg.left_mult(unit_vector(n, i));   // x -> e_i x
            for (std::size_t out = 0; out < n; ++out) {
                // sum_k L[out][k] eij_k - sum_s (rm_j L)[out][i-th col] = 0:
                // L(eij)_out = (L e_i multiplied by e_j)_out
                Vector row(2 * nn, Scalar::zero());
                for (std::size_t k = 0; k < n; ++k) row[L_entry(out, k)] += eij[k];
                // (L e_i) = column i of L; then right-multiply by e_j
                for (std::size_t s = 0; s < n; ++s) row[L_entry(s, i)] -= rm_j(out, s);
                rows.push_back(row);

                Vector row2(2 * nn, Scalar::zero());
                for (std::size_t k = 0; k < n; ++k) row2[R_entry(out, k)] += eij[k];
                for (std::size_t s = 0; s < n; ++s) row2[R_entry(s, j)] -= lm_i(out, s);
                rows.push_back(row2);

                Vector row3(2 * nn, Scalar::zero());
                for (std::size_t s = 0; s < n; ++s) row3[L_entry(s, j)] += lm_i(out, s);
                for (std::size_t s = 0; s < n; ++s) row3[R_entry(s, i)] -= rm_j(out, s);
                rows.push_back(row3);
            }
        }
    auto sols = kernel_basis(Matrix::from_rows(rows));
    std::vector<MultiplierPair> out;
    for (const auto& v : sols) {
        MultiplierPair m{Matrix(n, n), Matrix(n, n)};
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                m.L(r, c) = v[L_entry(r, c)];
                m.R(r, c) = v[R_entry(r, c)];
            }
        out.push_back(std::move(m));
    }
    return out;
}

/// Canonical embedding a -> (L_a, R_a) of A into M(A).
inline MultiplierPair embed_multiplier(const Algebra& alg, const Vector& a) {
    return MultiplierPair{alg.left_mult(a), alg.right_mult(a)};
}

}  // namespace whkit

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "whkit/scalar.hpp"

namespace whkit {

using Vector = std::vector<Scalar>;

inline bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar::zero()); }

inline Vector unit_vector(std::size_t n, std::size_t k) {
    Vector v(n, Scalar::zero());
    v[k] = Scalar::one();
    return v;
}

inline Vector& add_scaled(Vector& v, const Scalar& c, const Vector& w) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * w[k];
    return v;
}

inline Vector operator+(Vector a, const Vector& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

inline Vector operator-(Vector a, const Vector& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

inline Vector operator*(const Scalar& c, Vector v) {
    for (auto& x : v) x *= c;
    return v;
}

inline Scalar dot(const Vector& a, const Vector& b) {
    Scalar s;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
    return s;
}

/// Tensor-product coordinates, row-major: (i,j) -> i*dim(b)+j.
inline Vector kron(const Vector& a, const Vector& b) {
    Vector v(a.size() * b.size(), Scalar::zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) v[i * b.size() + j] = a[i] * b[j];
    }
    return v;
}

/// Dense matrix of Scalars. Row-major storage; all results exact.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar::one();
        return m;
    }

    static Matrix from_columns(const std::vector<Vector>& cols) {
        if (cols.empty()) return Matrix();
        Matrix m(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        return m;
    }

    static Matrix from_rows(const std::vector<Vector>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vector column(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Vector row(std::size_t i) const {
        Vector v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    std::vector<Vector> columns() const {
        std::vector<Vector> cs;
        cs.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) cs.push_back(column(j));
        return cs;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vector apply(const Vector& v) const {
        Vector out(rows_, Scalar::zero());
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const Scalar& m = (*this)(i, j);
                if (!m.is_zero()) out[i] += m * v[j];
            }
        }
        return out;
    }

    Matrix operator*(const Matrix& o) const {
        Matrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& m = (*this)(i, k);
                if (m.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (!o(k, j).is_zero()) out(i, j) += m * o(k, j);
            }
        return out;
    }

    Matrix operator+(const Matrix& o) const {
        Matrix out = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] += o.a_[k];
        return out;
    }

    Matrix operator-(const Matrix& o) const {
        Matrix out = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] -= o.a_[k];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Stacks rows: [this; o].
    Matrix vstack(const Matrix& o) const {
        Matrix out(rows_ + o.rows_, cols_);
        out.a_ = a_;
        out.a_.insert(out.a_.end(), o.a_.begin(), o.a_.end());
        return out;
    }

    /// Joins columns: [this | o].
    Matrix hstack(const Matrix& o) const {
        Matrix out(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) out(i, cols_ + j) = o(i, j);
        }
        return out;
    }

    static Matrix kronecker(const Matrix& a, const Matrix& b) {
        Matrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                if (a(i, j).is_zero()) continue;
                for (std::size_t p = 0; p < b.rows_; ++p)
                    for (std::size_t q = 0; q < b.cols_; ++q)
                        if (!b(p, q).is_zero())
                            out(i * b.rows_ + p, j * b.cols_ + q) = a(i, j) * b(p, q);
            }
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

namespace detail {

/// In-place reduced row echelon form. Returns pivot column indices.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(const Matrix& m) {
    Matrix t = m;
    return detail::rref(t).size();
}

/// Basis of {v : Mv = 0}. Empty iff M injective.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
    Matrix t = m;
    auto pivots = detail::rref(t);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t freec = 0; freec < m.cols(); ++freec) {
        if (is_pivot[freec]) continue;
        Vector v(m.cols(), Scalar::zero());
        v[freec] = Scalar::one();
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -t(k, freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with Mx = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    Matrix aug = m.hstack(Matrix::from_columns({b}));
    auto pivots = detail::rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols(), Scalar::zero());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
    return x;
}

/// Column-space basis: the pivot columns of M.
inline std::vector<Vector> image_basis(const Matrix& m) {
    Matrix t = m;
    auto pivots = detail::rref(t);
    std::vector<Vector> basis;
    basis.reserve(pivots.size());
    for (auto c : pivots) basis.push_back(m.column(c));
    return basis;
}

inline std::size_t span_dim(const std::vector<Vector>& vs) {
    if (vs.empty()) return 0;
    return rank(Matrix::from_columns(vs));
}

inline bool span_contains(const std::vector<Vector>& basis, const Vector& v) {
    if (is_zero(v)) return true;
    if (basis.empty()) return false;
    Matrix m = Matrix::from_columns(basis);
    return solve(m, v).has_value();
}

inline bool spans_equal(const std::vector<Vector>& a, const std::vector<Vector>& b) {
    std::size_t da = span_dim(a), db = span_dim(b);
    if (da != db) return false;
    if (da == 0) return true;
    std::vector<Vector> joined = a;
    joined.insert(joined.end(), b.begin(), b.end());
    return span_dim(joined) == da;
}

/// Incremental independent-set collector used when harvesting spanning
/// families from large generating sets.
class SpanBuilder {
public:
    bool insert(const Vector& v) {
        if (is_zero(v)) return false;
        std::vector<Vector> trial = basis_;
        trial.push_back(v);
        if (span_dim(trial) > basis_.size()) {
            basis_.push_back(v);
            return true;
        }
        return false;
    }
    const std::vector<Vector>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

private:
    std::vector<Vector> basis_;
};

}  // namespace whkit

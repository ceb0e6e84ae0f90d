#pragma once

#include "dy/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace dy {

/// Dense row-major matrix over an exact field. All algorithms here are exact;
/// there are no tolerance parameters anywhere.
template <Field F>
class Matrix {
  public:
    using Elem = typename F::Elem;

    Matrix() : field_(), rows_(0), cols_(0) {}
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

    static Matrix identity(F field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::vector<Elem>& data() { return data_; }
    const std::vector<Elem>& data() const { return data_; }

    bool is_zero() const {
        for (const auto& e : data_)
            if (!field_.is_zero(e)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            if (!a.field_.eq(a.data_[i], b.data_[i])) return false;
        return true;
    }

  private:
    F field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

template <Field F>
Matrix<F> operator+(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix shape mismatch in +");
    Matrix<F> r = a;
    const F& k = a.field();
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] = k.add(r.data()[i], b.data()[i]);
    return r;
}

template <Field F>
Matrix<F> operator-(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix shape mismatch in -");
    Matrix<F> r = a;
    const F& k = a.field();
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] = k.sub(r.data()[i], b.data()[i]);
    return r;
}

template <Field F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows()) throw Error("matrix shape mismatch in *");
    const F& k = a.field();
    Matrix<F> r(k, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const auto& ail = a.at(i, l);
            if (k.is_zero(ail)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) = k.add(r.at(i, j), k.mul(ail, b.at(l, j)));
        }
    return r;
}

template <Field F>
Matrix<F> scale(const Matrix<F>& a, const typename F::Elem& c) {
    Matrix<F> r = a;
    const F& k = a.field();
    for (auto& e : r.data()) e = k.mul(e, c);
    return r;
}

template <Field F>
Matrix<F> transpose(const Matrix<F>& a) {
    Matrix<F> r(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
    return r;
}

/// Kronecker product: (a⊗b)[i*rows(b)+k, j*cols(b)+l] = a[i,j]*b[k,l].
template <Field F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
    const F& k = a.field();
    Matrix<F> r(k, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& aij = a.at(i, j);
            if (k.is_zero(aij)) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    r.at(i * b.rows() + p, j * b.cols() + q) = k.mul(aij, b.at(p, q));
        }
    return r;
}

template <Field F>
struct RrefResult {
    Matrix<F> matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with the deterministic leftmost-pivot,
/// first-nonzero-row strategy.
template <Field F>
RrefResult<F> rref(Matrix<F> m) {
    const F& k = m.field();
    RrefResult<F> out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && k.is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        const auto inv_p = k.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = k.mul(m.at(row, j), inv_p);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || k.is_zero(m.at(i, col))) continue;
            const auto factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = k.sub(m.at(i, j), k.mul(factor, m.at(row, j)));
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = out.pivots.size();
    out.matrix = std::move(m);
    return out;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).rank;
}

/// Columns form the canonical free-variable basis of the null space
/// {v : m v = 0}; also returns the free column positions, at which the basis
/// restricts to the identity pattern (so coordinates in this basis can be read
/// off a vector directly).
template <Field F>
std::pair<Matrix<F>, std::vector<std::size_t>> kernel_basis_with_info(const Matrix<F>& m) {
    const F& k = m.field();
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<F> basis(k, m.cols(), free_cols.size());
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
        std::size_t fc = free_cols[idx];
        basis.at(fc, idx) = k.one();
        for (std::size_t prow = 0; prow < r.rank; ++prow)
            basis.at(r.pivots[prow], idx) = k.neg(r.matrix.at(prow, fc));
    }
    return {std::move(basis), std::move(free_cols)};
}

template <Field F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
    return kernel_basis_with_info(m).first;
}

/// Solves a x = b; the witness has all free variables set to zero.
template <Field F>
std::optional<std::vector<typename F::Elem>> solve(const Matrix<F>& a,
                                                   const std::vector<typename F::Elem>& b) {
    if (a.rows() != b.size()) throw Error("solve: rhs length does not match row count");
    const F& k = a.field();
    Matrix<F> aug(k, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
    std::vector<typename F::Elem> x(a.cols(), k.zero());
    for (std::size_t prow = 0; prow < r.rank; ++prow) x[r.pivots[prow]] = r.matrix.at(prow, a.cols());
    return x;
}

/// Row vector times matrix; rows are the natural carrier for functionals.
template <Field F>
std::vector<typename F::Elem> row_times_matrix(const F& k,
                                               const std::vector<typename F::Elem>& row,
                                               const Matrix<F>& m) {
    if (row.size() != m.rows()) throw Error("row/matrix shape mismatch");
    std::vector<typename F::Elem> out(m.cols(), k.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (k.is_zero(row[i])) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] = k.add(out[j], k.mul(row[i], m.at(i, j)));
    }
    return out;
}

template <Field F>
std::vector<typename F::Elem> matrix_times_col(const F& k, const Matrix<F>& m,
                                               const std::vector<typename F::Elem>& col) {
    if (col.size() != m.cols()) throw Error("matrix/col shape mismatch");
    std::vector<typename F::Elem> out(m.rows(), k.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!k.is_zero(m.at(i, j))) out[i] = k.add(out[i], k.mul(m.at(i, j), col[j]));
    return out;
}

/// (u ⊗ v)[i*len(v)+j] = u[i]*v[j], matching the kron index convention.
template <Field F>
std::vector<typename F::Elem> kron_row(const F& k, const std::vector<typename F::Elem>& u,
                                       const std::vector<typename F::Elem>& v) {
    std::vector<typename F::Elem> out(u.size() * v.size(), k.zero());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (k.is_zero(u[i])) continue;
        for (std::size_t j = 0; j < v.size(); ++j) out[i * v.size() + j] = k.mul(u[i], v[j]);
    }
    return out;
}

}  // namespace dy

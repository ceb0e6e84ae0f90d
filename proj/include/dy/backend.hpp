#pragma once

#include "dy/field.hpp"
#include "dy/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dy {

/// Element of C^n in backend coordinates, with its degree tag.
template <Field F>
struct Cochain {
    int degree = 0;
    std::vector<typename F::Elem> coords;
};

template <Field F>
Cochain<F> zero_cochain(const F& k, int degree, std::size_t dim) {
    return Cochain<F>{degree, std::vector<typename F::Elem>(dim, k.zero())};
}

template <Field F>
bool cochain_is_zero(const F& k, const Cochain<F>& c) {
    for (const auto& e : c.coords)
        if (!k.is_zero(e)) return false;
    return true;
}

template <Field F>
bool cochain_eq(const F& k, const Cochain<F>& a, const Cochain<F>& b) {
    if (a.degree != b.degree || a.coords.size() != b.coords.size()) return false;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        if (!k.eq(a.coords[i], b.coords[i])) return false;
    return true;
}

template <Field F>
Cochain<F> cochain_add(const F& k, const Cochain<F>& a, const Cochain<F>& b) {
    if (a.degree != b.degree || a.coords.size() != b.coords.size())
        throw Error("cochain degree/shape mismatch in add");
    Cochain<F> r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = k.add(r.coords[i], b.coords[i]);
    return r;
}

template <Field F>
Cochain<F> cochain_sub(const F& k, const Cochain<F>& a, const Cochain<F>& b) {
    if (a.degree != b.degree || a.coords.size() != b.coords.size())
        throw Error("cochain degree/shape mismatch in sub");
    Cochain<F> r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = k.sub(r.coords[i], b.coords[i]);
    return r;
}

template <Field F>
Cochain<F> cochain_scale(const F& k, const Cochain<F>& a, const typename F::Elem& c) {
    Cochain<F> r = a;
    for (auto& e : r.coords) e = k.mul(e, c);
    return r;
}

/// Kernel of the equivariance condition in block-diagonal form: the full
/// canonical basis is kron(identity_blocks, block). The condition rows are
/// identical across tuples, so block counts can be large while the stored
/// block stays small.
template <Field F>
struct EquivariantKernel {
    Matrix<F> block;
    std::vector<std::size_t> free_rows;  // rows of a block carrying the identity pattern
    std::size_t blocks = 1;

    std::size_t rows() const { return block.rows() * blocks; }
    std::size_t cols() const { return block.cols() * blocks; }

    Matrix<F> expand() const {
        Matrix<F> out(block.field(), rows(), cols());
        for (std::size_t b = 0; b < blocks; ++b)
            for (std::size_t r = 0; r < block.rows(); ++r)
                for (std::size_t c = 0; c < block.cols(); ++c)
                    out.at(b * block.rows() + r, b * block.cols() + c) = block.at(r, c);
        return out;
    }

    /// Writes basis column `col` into an ambient coordinate vector.
    void write_column(std::size_t col, std::vector<typename F::Elem>& out) const {
        const std::size_t b = col / block.cols(), c = col % block.cols();
        for (auto& e : out) e = block.field().zero();
        for (std::size_t r = 0; r < block.rows(); ++r) out[b * block.rows() + r] = block.at(r, c);
    }
};

/// Contract every complex realization satisfies: cochain dimensions, the
/// differential, both cup products, the comp operations, the equivariance
/// condition matrix, and the distinguished elements pi (degree 2) and
/// eps (degree 0). All operations are pure and exact; bilinear operations are
/// bilinear in their cochain arguments and keep exact degree bookkeeping.
template <Field F>
class ComplexBackend {
  public:
    virtual ~ComplexBackend() = default;

    virtual const F& field() const = 0;
    virtual std::string name() const = 0;

    virtual std::size_t cochain_dim(int n) const = 0;
    virtual Cochain<F> delta(const Cochain<F>& f) const = 0;
    virtual Cochain<F> cup(const Cochain<F>& f, const Cochain<F>& g) const = 0;
    virtual Cochain<F> sqcup(const Cochain<F>& f, const Cochain<F>& g) const = 0;
    /// f ⋄_i g; returns the zero cochain whenever i < 0 or i > deg(f) - 1.
    virtual Cochain<F> diamond_i(const Cochain<F>& f, const Cochain<F>& g, long i) const = 0;
    /// Matrix whose kernel, in cochain coordinates, is the equivariant
    /// subspace of C^n.
    virtual Matrix<F> equivariance_matrix(int n) const = 0;
    virtual Cochain<F> eps() const = 0;
    virtual Cochain<F> pi() const = 0;

    /// Membership test for the equivariant subspace; equivalent to multiplying
    /// by equivariance_matrix, which realizations may shortcut.
    virtual bool is_equivariant(const Cochain<F>& f) const {
        auto m = equivariance_matrix(f.degree);
        auto v = matrix_times_col(field(), m, f.coords);
        for (const auto& e : v)
            if (!field().is_zero(e)) return false;
        return true;
    }

    /// Canonical (free-variable) kernel basis of equivariance_matrix(n) in
    /// block form; realizations may shortcut as long as the expansion equals
    /// the canonical dense basis.
    virtual EquivariantKernel<F> equivariance_kernel(int n) const {
        auto [basis, free_rows] = kernel_basis_with_info(equivariance_matrix(n));
        return EquivariantKernel<F>{std::move(basis), std::move(free_rows), 1};
    }

    virtual int degree_cap() const = 0;
    virtual std::size_t dim_cap() const = 0;

  protected:
    void guard_dim(std::size_t dim) const {
        if (dim > dim_cap())
            throw Error("cochain dimension " + std::to_string(dim) +
                        " exceeds the memory guard (" + std::to_string(dim_cap()) + ")");
    }
};

/// Mixed-radix indexer for tuples in G^n, lexicographic with the first
/// component most significant.
struct TupleIndexer {
    std::size_t base = 1;
    int length = 0;

    std::size_t count() const {
        std::size_t c = 1;
        for (int i = 0; i < length; ++i) c *= base;
        return c;
    }
    void decode(std::size_t rank, std::vector<std::size_t>& out) const {
        out.assign(length, 0);
        for (int i = length - 1; i >= 0; --i) {
            out[i] = rank % base;
            rank /= base;
        }
    }
    std::size_t encode(const std::vector<std::size_t>& tuple) const {
        std::size_t r = 0;
        for (int i = 0; i < length; ++i) r = r * base + tuple[i];
        return r;
    }
};

}  // namespace dy

#pragma once

#include "dy/backend.hpp"
#include "dy/field.hpp"
#include "dy/group.hpp"
#include "dy/matrix.hpp"
#include "dy/report.hpp"
#include "dy/witness.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dy {

/// Finite-dimensional Hopf algebra by structure constants. Maps are matrices
/// with columns indexed by source basis; tensor indices follow the kron
/// convention (first factor most significant).
template <Field F>
struct HopfData {
    F field;
    std::size_t dim = 0;
    Matrix<F> mult;                      // dim × dim², columns μ(e_i⊗e_j)
    std::vector<typename F::Elem> unit;  // coordinates of 1
    Matrix<F> comul;                     // dim² × dim
    Matrix<F> counit;                    // 1 × dim
    Matrix<F> antipode;                  // dim × dim

    void check_shapes() const {
        if (dim == 0) throw Error("Hopf algebra must be nonzero");
        if (mult.rows() != dim || mult.cols() != dim * dim)
            throw Error("multiplication structure-constant shape mismatch");
        if (unit.size() != dim) throw Error("unit vector shape mismatch");
        if (comul.rows() != dim * dim || comul.cols() != dim)
            throw Error("comultiplication shape mismatch");
        if (counit.rows() != 1 || counit.cols() != dim) throw Error("counit shape mismatch");
        if (antipode.rows() != dim || antipode.cols() != dim) throw Error("antipode shape mismatch");
    }

    Matrix<F> unit_matrix() const {
        Matrix<F> m(field, dim, 1);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, 0) = unit[i];
        return m;
    }
};

/// Coefficient datum: module action, comodule coaction, and a coalgebra
/// structure on U. The half-braiding is derived from the coaction alone,
/// ρ(X)(u⊗x) = Σ (u₍₋₁₎·x) ⊗ u₍₀₎; the action participates in the
/// Yetter-Drinfeld compatibility check.
template <Field F>
struct YDCoalgebra {
    std::size_t dim_u = 0;
    Matrix<F> action;    // dim_u × (dim_h·dim_u)
    Matrix<F> coaction;  // (dim_h·dim_u) × dim_u
    Matrix<F> comul_u;   // dim_u² × dim_u
    Matrix<F> counit_u;  // 1 × dim_u

    void check_shapes(std::size_t dim_h) const {
        if (dim_u == 0) throw Error("coefficient must be nonzero");
        if (action.rows() != dim_u || action.cols() != dim_h * dim_u)
            throw Error("action shape mismatch");
        if (coaction.rows() != dim_h * dim_u || coaction.cols() != dim_u)
            throw Error("coaction shape mismatch");
        if (comul_u.rows() != dim_u * dim_u || comul_u.cols() != dim_u)
            throw Error("coefficient comultiplication shape mismatch");
        if (counit_u.rows() != 1 || counit_u.cols() != dim_u)
            throw Error("coefficient counit shape mismatch");
    }
};

// ---- presets ---------------------------------------------------------------

template <Field F>
HopfData<F> group_algebra(const F& k, const FiniteGroup& grp) {
    HopfData<F> h;
    h.field = k;
    h.dim = grp.order;
    h.mult = Matrix<F>(k, h.dim, h.dim * h.dim);
    for (std::size_t i = 0; i < h.dim; ++i)
        for (std::size_t j = 0; j < h.dim; ++j) h.mult.at(grp.mul(i, j), i * h.dim + j) = k.one();
    h.unit.assign(h.dim, k.zero());
    h.unit[grp.identity] = k.one();
    h.comul = Matrix<F>(k, h.dim * h.dim, h.dim);
    for (std::size_t j = 0; j < h.dim; ++j) h.comul.at(j * h.dim + j, j) = k.one();
    h.counit = Matrix<F>(k, 1, h.dim);
    for (std::size_t j = 0; j < h.dim; ++j) h.counit.at(0, j) = k.one();
    h.antipode = Matrix<F>(k, h.dim, h.dim);
    for (std::size_t j = 0; j < h.dim; ++j) h.antipode.at(grp.inv(j), j) = k.one();
    return h;
}

template <Field F>
HopfData<F> dual_group_algebra(const F& k, const FiniteGroup& grp) {
    HopfData<F> h;
    h.field = k;
    h.dim = grp.order;
    h.mult = Matrix<F>(k, h.dim, h.dim * h.dim);
    for (std::size_t i = 0; i < h.dim; ++i) h.mult.at(i, i * h.dim + i) = k.one();
    h.unit.assign(h.dim, k.one());
    h.comul = Matrix<F>(k, h.dim * h.dim, h.dim);
    for (std::size_t a = 0; a < h.dim; ++a)
        for (std::size_t b = 0; b < h.dim; ++b) h.comul.at(a * h.dim + b, grp.mul(a, b)) = k.one();
    h.counit = Matrix<F>(k, 1, h.dim);
    h.counit.at(0, grp.identity) = k.one();
    h.antipode = Matrix<F>(k, h.dim, h.dim);
    for (std::size_t j = 0; j < h.dim; ++j) h.antipode.at(grp.inv(j), j) = k.one();
    return h;
}

/// The 4-dimensional Hopf algebra on basis {1, g, x, gx} with g² = 1, x² = 0,
/// xg = −gx, Δg = g⊗g, Δx = x⊗1 + g⊗x, S(g) = g, S(x) = −gx. Needs char ≠ 2.
template <Field F>
HopfData<F> sweedler_algebra(const F& k) {
    if (k.characteristic() == 2) throw Error("the 4-dimensional preset needs characteristic != 2");
    HopfData<F> h;
    h.field = k;
    h.dim = 4;
    const auto one = k.one(), neg = k.neg(k.one());
    h.mult = Matrix<F>(k, 4, 16);
    auto set = [&](std::size_t i, std::size_t j, std::size_t out, typename F::Elem coeff) {
        h.mult.at(out, i * 4 + j) = coeff;
    };
    // basis: 0 ↦ 1, 1 ↦ g, 2 ↦ x, 3 ↦ gx
    set(0, 0, 0, one); set(0, 1, 1, one); set(0, 2, 2, one); set(0, 3, 3, one);
    set(1, 0, 1, one); set(1, 1, 0, one); set(1, 2, 3, one); set(1, 3, 2, one);
    set(2, 0, 2, one); set(2, 1, 3, neg);  // x·g = −gx
    set(3, 0, 3, one); set(3, 1, 2, neg);  // gx·g = −x
    // x·x = x·gx = gx·x = gx·gx = 0
    h.unit = {one, k.zero(), k.zero(), k.zero()};
    h.comul = Matrix<F>(k, 16, 4);
    h.comul.at(0 * 4 + 0, 0) = one;                          // Δ1 = 1⊗1
    h.comul.at(1 * 4 + 1, 1) = one;                          // Δg = g⊗g
    h.comul.at(2 * 4 + 0, 2) = one; h.comul.at(1 * 4 + 2, 2) = one;  // Δx = x⊗1 + g⊗x
    h.comul.at(3 * 4 + 1, 3) = one; h.comul.at(0 * 4 + 3, 3) = one;  // Δgx = gx⊗g + 1⊗gx
    h.counit = Matrix<F>(k, 1, 4);
    h.counit.at(0, 0) = one;
    h.counit.at(0, 1) = one;
    h.antipode = Matrix<F>(k, 4, 4);
    h.antipode.at(0, 0) = one;
    h.antipode.at(1, 1) = one;
    h.antipode.at(3, 2) = neg;  // S(x) = −gx
    h.antipode.at(2, 3) = one;  // S(gx) = x
    return h;
}

/// U = k: action through the counit, coaction u ↦ 1⊗u.
template <Field F>
YDCoalgebra<F> trivial_yd(const F& k, const HopfData<F>& h) {
    YDCoalgebra<F> u;
    u.dim_u = 1;
    u.action = h.counit;  // 1 × dim_h
    u.coaction = h.unit_matrix();
    Matrix<F> one(k, 1, 1);
    one.at(0, 0) = k.one();
    u.comul_u = one;
    u.counit_u = one;
    return u;
}

// ---- validation ------------------------------------------------------------

/// Exhaustive basis-element verification of all Hopf algebra axioms.
template <Field F>
CheckReport validate_hopf(const HopfData<F>& h) {
    h.check_shapes();
    const F& k = h.field;
    const std::size_t d = h.dim;
    Matrix<F> id = Matrix<F>::identity(k, d);
    Matrix<F> eta = h.unit_matrix();
    CheckReport rep;
    rep.suite = "hopf-algebra";

    detail::report_matrix_identity(rep, k, "algebra/associativity", h.mult * kron(h.mult, id),
                                   h.mult * kron(id, h.mult));
    detail::report_matrix_identity(rep, k, "algebra/unit-left", h.mult * kron(eta, id), id);
    detail::report_matrix_identity(rep, k, "algebra/unit-right", h.mult * kron(id, eta), id);
    detail::report_matrix_identity(rep, k, "coalgebra/coassociativity", kron(h.comul, id) * h.comul,
                                   kron(id, h.comul) * h.comul);
    detail::report_matrix_identity(rep, k, "coalgebra/counit-left", kron(h.counit, id) * h.comul, id);
    detail::report_matrix_identity(rep, k, "coalgebra/counit-right", kron(id, h.counit) * h.comul, id);
    {
        Matrix<F> mid = kron(kron(id, detail::tensor_flip(k, d, d)), id);
        detail::report_matrix_identity(rep, k, "bialgebra/comul-multiplicative", h.comul * h.mult,
                                       kron(h.mult, h.mult) * mid * kron(h.comul, h.comul));
        detail::report_matrix_identity(rep, k, "bialgebra/comul-unital", h.comul * eta, kron(eta, eta));
        detail::report_matrix_identity(rep, k, "bialgebra/counit-multiplicative", h.counit * h.mult,
                                       kron(h.counit, h.counit));
        Matrix<F> one(k, 1, 1);
        one.at(0, 0) = k.one();
        detail::report_matrix_identity(rep, k, "bialgebra/counit-unital", h.counit * eta, one);
    }
    {
        Matrix<F> target = eta * h.counit;
        detail::report_matrix_identity(rep, k, "antipode/left", h.mult * kron(h.antipode, id) * h.comul,
                                       target);
        detail::report_matrix_identity(rep, k, "antipode/right", h.mult * kron(id, h.antipode) * h.comul,
                                       target);
    }
    return rep;
}

/// Coefficient validation: module/comodule axioms, invertibility and the
/// hexagon for the derived half-braiding on the regular representation,
/// Yetter-Drinfeld compatibility, and compatibility of the coefficient
/// comultiplication/counit with the half-braiding (also at the regular
/// representation, which suffices by naturality).
template <Field F>
CheckReport validate_yd_coalgebra(const HopfData<F>& h, const YDCoalgebra<F>& u) {
    h.check_shapes();
    u.check_shapes(h.dim);
    const F& k = h.field;
    const std::size_t dh = h.dim, du = u.dim_u;
    Matrix<F> idh = Matrix<F>::identity(k, dh);
    Matrix<F> idu = Matrix<F>::identity(k, du);
    CheckReport rep;
    rep.suite = "yd-coalgebra";

    detail::report_matrix_identity(rep, k, "action/associativity", u.action * kron(h.mult, idu),
                                   u.action * kron(idh, u.action));
    detail::report_matrix_identity(rep, k, "action/unital", u.action * kron(h.unit_matrix(), idu), idu);
    detail::report_matrix_identity(rep, k, "coaction/counital", kron(h.counit, idu) * u.coaction, idu);

    // ρ(H): U⊗H → H⊗U, u⊗h ↦ Σ u₍₋₁₎h ⊗ u₍₀₎
    Matrix<F> rho1 = kron(h.mult, idu) *
                     kron(idh, detail::tensor_flip(k, du, dh)) *
                     kron(u.coaction, idh);
    {
        // hexagon at X = Y = H: single-step braiding at the 2-fold regular
        // module (diagonal action through Δ) equals the two-step composite
        auto id_of = [&k](std::size_t n) { return Matrix<F>::identity(k, n); };
        Matrix<F> rho2_direct =
            kron(idh, kron(h.mult, idu)) *                                     // → c₁a ⊗ c₂b ⊗ u₀
            kron(h.mult, id_of(dh * dh * du)) *                                // → c₁a ⊗ c₂ ⊗ b ⊗ u₀
            kron(idh, kron(detail::tensor_flip(k, dh, dh), id_of(dh * du))) *  // → c₁ ⊗ a ⊗ c₂ ⊗ b ⊗ u₀
            kron(id_of(dh * dh), detail::tensor_flip(k, du, dh * dh)) *        // → c₁ ⊗ c₂ ⊗ a ⊗ b ⊗ u₀
            kron(h.comul, id_of(du * dh * dh)) *                               // → c₁ ⊗ c₂ ⊗ u₀ ⊗ a ⊗ b
            kron(u.coaction, id_of(dh * dh));                                  // → u₋₁ ⊗ u₀ ⊗ a ⊗ b
        Matrix<F> rho2_steps = kron(idh, rho1) * kron(rho1, idh);
        detail::report_matrix_identity(rep, k, "braiding/hexagon", rho2_direct, rho2_steps);
    }
    if (rank(rho1) == dh * du) rep.add_pass("braiding/invertible");
    else rep.add_fail("braiding/invertible", Json{{"rank", rank(rho1)}, {"needed", dh * du}});

    {
        // Yetter-Drinfeld compatibility, antipode-free form, on H⊗U:
        // Σ (h₍₁₎·u)₍₋₁₎ h₍₂₎ ⊗ (h₍₁₎·u)₍₀₎ = Σ h₍₁₎ u₍₋₁₎ ⊗ h₍₂₎·u₍₀₎
        Matrix<F> lhs = kron(h.mult, idu) *                        // a h₂ ⊗ u₀
                        kron(idh, detail::tensor_flip(k, du, dh)) *  // (a, h₂, u₀)
                        kron(u.coaction, idh) *                      // (a = u'₋₁, u₀ = u'₀, h₂)
                        kron(u.action, idh) *                        // (u' = h₁·u, h₂)
                        kron(idh, detail::tensor_flip(k, dh, du)) *  // (h₁, u, h₂)
                        kron(h.comul, idu);                          // (h₁, h₂, u)
        Matrix<F> rhs = kron(h.mult, u.action) *
                        kron(idh, kron(detail::tensor_flip(k, dh, dh), idu)) *
                        kron(h.comul, u.coaction);
        detail::report_matrix_identity(rep, k, "yetter-drinfeld/compatibility", lhs, rhs);
    }

    // coefficient comultiplication and counit are coalgebra structure on U
    detail::report_matrix_identity(rep, k, "coefficient/coassociativity",
                                   kron(u.comul_u, idu) * u.comul_u,
                                   kron(idu, u.comul_u) * u.comul_u);
    detail::report_matrix_identity(rep, k, "coefficient/counit-left",
                                   kron(u.counit_u, idu) * u.comul_u, idu);
    detail::report_matrix_identity(rep, k, "coefficient/counit-right",
                                   kron(idu, u.counit_u) * u.comul_u, idu);

    // ... and morphisms in the center: compatibility with the half-braiding
    detail::report_matrix_identity(rep, k, "center/comul-compatible",
                                   kron(idh, u.comul_u) * rho1,
                                   kron(rho1, idu) * kron(idu, rho1) * kron(u.comul_u, idh));
    detail::report_matrix_identity(rep, k, "center/counit-compatible",
                                   kron(idh, u.counit_u) * rho1, kron(u.counit_u, idh));
    return rep;
}

// ---- tensor-state evaluation machinery ---------------------------------------

/// Flat vector with an explicit factor-dimension list; operators apply to
/// contiguous factor ranges. This is how the morphism chains are evaluated.
template <Field F>
struct TensorState {
    const F* k = nullptr;
    std::vector<std::size_t> dims;
    std::vector<typename F::Elem> data;

    std::size_t total() const {
        std::size_t t = 1;
        for (auto d : dims) t *= d;
        return t;
    }

    /// Applies op (rows = product of out_dims, cols = product of dims[a..b))
    /// to factors [a, b), replacing them by out_dims.
    void apply(std::size_t a, std::size_t b, const Matrix<F>& op,
               const std::vector<std::size_t>& out_dims) {
        std::size_t pre = 1, mid = 1, post = 1;
        for (std::size_t i = 0; i < a; ++i) pre *= dims[i];
        for (std::size_t i = a; i < b; ++i) mid *= dims[i];
        for (std::size_t i = b; i < dims.size(); ++i) post *= dims[i];
        std::size_t out = 1;
        for (auto d : out_dims) out *= d;
        if (op.rows() != out || op.cols() != mid) throw Error("tensor-state operator shape mismatch");
        std::vector<typename F::Elem> next(pre * out * post, k->zero());
        for (std::size_t m = 0; m < mid; ++m) {
            for (std::size_t o = 0; o < out; ++o) {
                const auto& coeff = op.at(o, m);
                if (k->is_zero(coeff)) continue;
                for (std::size_t p = 0; p < pre; ++p) {
                    const std::size_t src_base = (p * mid + m) * post;
                    const std::size_t dst_base = (p * out + o) * post;
                    for (std::size_t q = 0; q < post; ++q)
                        next[dst_base + q] =
                            k->add(next[dst_base + q], k->mul(coeff, data[src_base + q]));
                }
            }
        }
        data = std::move(next);
        std::vector<std::size_t> nd(dims.begin(), dims.begin() + a);
        nd.insert(nd.end(), out_dims.begin(), out_dims.end());
        nd.insert(nd.end(), dims.begin() + b, dims.end());
        dims = std::move(nd);
    }

    void swap_adjacent(std::size_t i) {
        std::size_t pre = 1, post = 1;
        for (std::size_t t = 0; t < i; ++t) pre *= dims[t];
        for (std::size_t t = i + 2; t < dims.size(); ++t) post *= dims[t];
        const std::size_t da = dims[i], db = dims[i + 1];
        std::vector<typename F::Elem> next(data.size(), k->zero());
        for (std::size_t p = 0; p < pre; ++p)
            for (std::size_t x = 0; x < da; ++x)
                for (std::size_t y = 0; y < db; ++y) {
                    const std::size_t src = ((p * da + x) * db + y) * post;
                    const std::size_t dst = ((p * db + y) * da + x) * post;
                    for (std::size_t q = 0; q < post; ++q) next[dst + q] = data[src + q];
                }
        data = std::move(next);
        std::swap(dims[i], dims[i + 1]);
    }

    void move_factor(std::size_t from, std::size_t to) {
        while (from > to) {
            swap_adjacent(from - 1);
            --from;
        }
        while (from < to) {
            swap_adjacent(from);
            ++from;
        }
    }
};

// ---- the backend -----------------------------------------------------------

/// Complex realization for the forgetful functor out of the module category of
/// a finite-dimensional Hopf algebra. Natural transformations are pinned down
/// by their value at tuples of the regular representation on u⊗1⊗…⊗1, so a
/// degree-n cochain is a linear map U → H^⊗n (stored H-multi-index major,
/// U index minor). Operations are not hard-coded formulas: every one is
/// evaluated by literally composing its defining morphism chain in the
/// tensor-state machinery above.
template <Field F>
class HopfBackend final : public ComplexBackend<F> {
  public:
    HopfBackend(HopfData<F> h, YDCoalgebra<F> u, int degree_cap = 3,
                std::size_t dim_cap = 200000)
        : h_(std::move(h)), u_(std::move(u)), degree_cap_(degree_cap), dim_cap_(dim_cap) {
        h_.check_shapes();
        u_.check_shapes(h_.dim);
        const F& k = h_.field;
        Matrix<F> idh = Matrix<F>::identity(k, h_.dim);
        Matrix<F> idu = Matrix<F>::identity(k, u_.dim_u);
        rho1_ = kron(h_.mult, idu) * kron(idh, detail::tensor_flip(k, u_.dim_u, h_.dim)) *
                kron(u_.coaction, idh);
        deltas_.push_back(h_.counit);  // H → k
        deltas_.push_back(idh);        // H → H
    }

    const F& field() const override { return h_.field; }
    std::string name() const override { return "hopf"; }
    const HopfData<F>& hopf() const { return h_; }
    const YDCoalgebra<F>& coefficient() const { return u_; }

    int degree_cap() const override { return degree_cap_; }
    std::size_t dim_cap() const override { return dim_cap_; }

    std::size_t cochain_dim(int n) const override {
        if (n < 0) throw Error("negative degree");
        std::size_t d = u_.dim_u;
        for (int i = 0; i < n; ++i) {
            d *= h_.dim;
            this->guard_dim(d);
        }
        return d;
    }

    Cochain<F> delta(const Cochain<F>& f) const override {
        const F& k = h_.field;
        const int n = f.degree;
        check_shape(f);
        const int N = n + 1;
        Cochain<F> out = zero_cochain(k, N, cochain_dim(N));
        for (std::size_t j = 0; j < u_.dim_u; ++j) {
            std::vector<typename F::Elem> acc(pow_dim(N), k.zero());
            {  // (F(X₀) ⊗ f) ∘ (ρ(X₀) ⊗ …)
                TensorState<F> st = initial_state(j, N);
                apply_rho(st, 0);
                apply_component(st, 1, f, std::vector<std::size_t>(n, 1));
                accumulate(acc, st, +1);
            }
            for (int i = 1; i <= n; ++i) {  // merge slots i-1, i
                TensorState<F> st = initial_state(j, N);
                std::vector<std::size_t> shape(n, 1);
                shape[i - 1] = 2;
                apply_component(st, 0, f, shape);
                accumulate(acc, st, (i % 2 == 1) ? -1 : +1);
            }
            {  // f ⊗ F(X_n)
                TensorState<F> st = initial_state(j, N);
                apply_component(st, 0, f, std::vector<std::size_t>(n, 1));
                accumulate(acc, st, ((n + 1) % 2 == 1) ? -1 : +1);
            }
            for (std::size_t r = 0; r < acc.size(); ++r) out.coords[r * u_.dim_u + j] = acc[r];
        }
        return out;
    }

    Cochain<F> cup(const Cochain<F>& f, const Cochain<F>& g) const override {
        const F& k = h_.field;
        const int m = f.degree, n = g.degree;
        check_shape(f);
        check_shape(g);
        const int N = m + n;
        Cochain<F> out = zero_cochain(k, N, cochain_dim(N));
        for (std::size_t j = 0; j < u_.dim_u; ++j) {
            TensorState<F> st = initial_state(j, N);
            st.apply(0, 1, u_.comul_u, {u_.dim_u, u_.dim_u});
            for (int s = 0; s < m; ++s) apply_rho(st, 1 + s);
            apply_component(st, 0, f, std::vector<std::size_t>(m, 1));
            apply_component(st, m, g, std::vector<std::size_t>(n, 1));
            write_column(out, st, j);
        }
        return out;
    }

    Cochain<F> sqcup(const Cochain<F>& f, const Cochain<F>& g) const override {
        const F& k = h_.field;
        const int m = f.degree, n = g.degree;
        check_shape(f);
        check_shape(g);
        const int N = m + n;
        Cochain<F> out = zero_cochain(k, N, cochain_dim(N));
        for (std::size_t j = 0; j < u_.dim_u; ++j) {
            TensorState<F> st = initial_state(j, N);
            st.apply(0, 1, u_.comul_u, {u_.dim_u, u_.dim_u});
            apply_component(st, 1, f, std::vector<std::size_t>(m, 1));
            for (int s = 0; s < m; ++s) apply_rho(st, s);
            apply_component(st, m, g, std::vector<std::size_t>(n, 1));
            write_column(out, st, j);
        }
        return out;
    }

    Cochain<F> diamond_i(const Cochain<F>& f, const Cochain<F>& g, long i) const override {
        const F& k = h_.field;
        const int m = f.degree, n = g.degree;
        check_shape(f);
        check_shape(g);
        // the vanishing convention also covers the empty degree m+n-1 < 0
        const int N = m + n - 1 >= 0 ? m + n - 1 : 0;
        Cochain<F> out = zero_cochain(k, N, cochain_dim(N));
        if (i < 0 || i >= m || m + n - 1 < 0) return out;
        for (std::size_t j = 0; j < u_.dim_u; ++j) {
            TensorState<F> st = initial_state(j, N);
            st.apply(0, 1, u_.comul_u, {u_.dim_u, u_.dim_u});
            for (long s = 0; s < i; ++s) apply_rho(st, 1 + s);
            apply_component(st, i + 1, g, std::vector<std::size_t>(n, 1));
            std::vector<std::size_t> shape;
            shape.assign(static_cast<std::size_t>(i), 1);
            shape.push_back(static_cast<std::size_t>(n));
            shape.insert(shape.end(), static_cast<std::size_t>(m - 1 - i), 1);
            apply_component(st, 0, f, shape);
            write_column(out, st, j);
        }
        return out;
    }

    /// Difference of the two equivariance composites, assembled column by
    /// column over basis cochains; the kernel is the equivariant subspace.
    Matrix<F> equivariance_matrix(int n) const override {
        const F& k = h_.field;
        const std::size_t cols = cochain_dim(n);
        const std::size_t block = pow_dim(n) * u_.dim_u;  // H^n ⊗ U output
        Matrix<F> cond(k, block * u_.dim_u, cols);
        for (std::size_t c = 0; c < cols; ++c) {
            Cochain<F> e = zero_cochain(k, n, cols);
            e.coords[c] = k.one();
            for (std::size_t j = 0; j < u_.dim_u; ++j) {
                auto lhs = equivariance_side(e, j, /*left=*/true);
                auto rhs = equivariance_side(e, j, /*left=*/false);
                for (std::size_t r = 0; r < block; ++r)
                    cond.at(r * u_.dim_u + j, c) = k.sub(lhs[r], rhs[r]);
            }
        }
        return cond;
    }

    Cochain<F> eps() const override {
        Cochain<F> out = zero_cochain(h_.field, 0, cochain_dim(0));
        for (std::size_t j = 0; j < u_.dim_u; ++j) out.coords[j] = u_.counit_u.at(0, j);
        return out;
    }

    Cochain<F> pi() const override {
        const F& k = h_.field;
        Cochain<F> out = zero_cochain(k, 2, cochain_dim(2));
        for (std::size_t a = 0; a < h_.dim; ++a)
            for (std::size_t b = 0; b < h_.dim; ++b) {
                auto coeff = k.mul(h_.unit[a], h_.unit[b]);
                if (k.is_zero(coeff)) continue;
                for (std::size_t j = 0; j < u_.dim_u; ++j)
                    out.coords[(a * h_.dim + b) * u_.dim_u + j] =
                        k.mul(coeff, u_.counit_u.at(0, j));
            }
        return out;
    }

    /// (f ⊗ U)∘λ_R (left) or ρ(X⃗)∘(U ⊗ f)∘λ_L (right) on basis vector j,
    /// as a vector in H^n ⊗ U.
    std::vector<typename F::Elem> equivariance_side(const Cochain<F>& f, std::size_t j,
                                                    bool left) const {
        const int n = f.degree;
        TensorState<F> st = initial_state(j, n);
        st.apply(0, 1, u_.comul_u, {u_.dim_u, u_.dim_u});
        if (left) {
            for (int s = 0; s < n; ++s) apply_rho(st, 1 + s);
            apply_component(st, 0, f, std::vector<std::size_t>(n, 1));
        } else {
            apply_component(st, 1, f, std::vector<std::size_t>(n, 1));
            for (int s = 0; s < n; ++s) apply_rho(st, s);
        }
        return st.data;
    }

  private:
    void check_shape(const Cochain<F>& f) const {
        if (f.coords.size() != cochain_dim(f.degree))
            throw Error("cochain shape mismatch at degree " + std::to_string(f.degree));
    }

    std::size_t pow_dim(int n) const {
        std::size_t d = 1;
        for (int i = 0; i < n; ++i) d *= h_.dim;
        return d;
    }

    /// u_j ⊗ 1 ⊗ … ⊗ 1 with N single-H slots.
    TensorState<F> initial_state(std::size_t j, int slots) const {
        TensorState<F> st;
        st.k = &h_.field;
        st.dims.assign(1, u_.dim_u);
        st.dims.insert(st.dims.end(), static_cast<std::size_t>(slots), h_.dim);
        st.data.assign(st.total(), h_.field.zero());
        // embed u_j ⊗ 1^slots, expanding the unit coordinates factor by factor
        std::vector<typename F::Elem> cur(1, h_.field.one());
        std::size_t cur_len = 1;
        for (int s = 0; s < slots; ++s) {
            std::vector<typename F::Elem> nxt(cur_len * h_.dim, h_.field.zero());
            for (std::size_t a = 0; a < cur_len; ++a)
                for (std::size_t b = 0; b < h_.dim; ++b)
                    nxt[a * h_.dim + b] = h_.field.mul(cur[a], h_.unit[b]);
            cur = std::move(nxt);
            cur_len *= h_.dim;
        }
        for (std::size_t r = 0; r < cur_len; ++r) st.data[j * cur_len + r] = cur[r];
        return st;
    }

    /// Braids the U factor at position p past the single-H factor at p+1.
    void apply_rho(TensorState<F>& st, std::size_t p) const {
        st.apply(p, p + 2, rho1_, {h_.dim, u_.dim_u});
    }

    const Matrix<F>& delta_power(std::size_t kfold) const {
        while (deltas_.size() <= kfold) {
            const F& k = h_.field;
            deltas_.push_back(kron(deltas_.back(), Matrix<F>::identity(k, h_.dim)) * h_.comul);
        }
        return deltas_[kfold];
    }

    /// Applies the component of f at the slot shape `shape` (sizes of the
    /// merged regular slots, entries ≥ 0) to the U factor at position p and
    /// the Σshape single-H factors following it.
    void apply_component(TensorState<F>& st, std::size_t p, const Cochain<F>& f,
                         const std::vector<std::size_t>& shape) const {
        const F& k = h_.field;
        const int n = f.degree;
        if (static_cast<int>(shape.size()) != n) throw Error("component shape arity mismatch");
        std::size_t kk = 0;
        for (auto s : shape) kk += s;
        // φ: U → H^⊗n from the stored coordinates
        Matrix<F> phi(k, pow_dim(n), u_.dim_u);
        for (std::size_t r = 0; r < phi.rows(); ++r)
            for (std::size_t j = 0; j < u_.dim_u; ++j) phi.at(r, j) = f.coords[r * u_.dim_u + j];
        st.apply(p, p + 1, phi, std::vector<std::size_t>(n, h_.dim));
        // coproduct / counit each output slot to its merged size
        std::size_t q = p;
        for (int j = 0; j < n; ++j) {
            const std::size_t s = shape[static_cast<std::size_t>(j)];
            if (s == 1) {
                ++q;
                continue;
            }
            st.apply(q, q + 1, delta_power(s), std::vector<std::size_t>(s, h_.dim));
            q += s;
        }
        // multiply the fresh factors pairwise into the module elements
        for (std::size_t t = 0; t < kk; ++t) {
            st.move_factor(p + kk, p + t + 1);
            st.apply(p + t, p + t + 2, h_.mult, {h_.dim});
        }
    }

    void accumulate(std::vector<typename F::Elem>& acc, const TensorState<F>& st, int sign) const {
        const F& k = h_.field;
        if (acc.size() != st.data.size()) throw Error("accumulator shape mismatch");
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] = sign > 0 ? k.add(acc[i], st.data[i]) : k.sub(acc[i], st.data[i]);
    }

    void write_column(Cochain<F>& out, const TensorState<F>& st, std::size_t j) const {
        for (std::size_t r = 0; r < st.data.size(); ++r)
            out.coords[r * u_.dim_u + j] = st.data[r];
    }

    HopfData<F> h_;
    YDCoalgebra<F> u_;
    Matrix<F> rho1_;
    mutable std::vector<Matrix<F>> deltas_;
    int degree_cap_;
    std::size_t dim_cap_;
};

}  // namespace dy

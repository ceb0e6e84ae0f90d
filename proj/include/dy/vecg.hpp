#pragma once

#include "dy/backend.hpp"
#include "dy/field.hpp"
#include "dy/group.hpp"
#include "dy/matrix.hpp"
#include "dy/report.hpp"
#include "dy/witness.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace dy {

/// Coalgebra object in the center of G-graded vector spaces: a graded space
/// U = ⊕_g U_g, a grading-compatible left G-action π with π(x): U_g → U_{xgx⁻¹},
/// a grade-preserving comultiplication and a counit, both compatible with the
/// half-braiding. The half-braiding at the simple object of grade x acts on U
/// as π(x)⁻¹ (forced by the grading of U ⊗ k_x → k_x ⊗ U).
///
/// Cached reduced data lives on W := U_e, through which every cochain factors.
template <Field F>
struct CenterCoalgebra {
    F field;
    FiniteGroup grp;
    std::vector<std::size_t> grade_dims;
    std::vector<std::size_t> grade_offset;  // size order+1 prefix sums
    std::vector<std::size_t> grade_of;      // basis index -> group element
    std::size_t dim_u = 0;
    std::vector<Matrix<F>> action;  // per group element x: matrix of π(x)
    Matrix<F> comul;                // (dim_u²) × dim_u, columns are Δ(e_j)
    Matrix<F> counit;               // 1 × dim_u

    // reduced cache
    std::size_t w = 0;
    std::size_t w_off = 0;
    std::vector<Matrix<F>> braid_w;  // per element g: W-block of π(g)⁻¹
    Matrix<F> delta_ee;              // (w²) × w, (e,e)-block of Δ restricted to W
    std::vector<typename F::Elem> counit_w;

    void build_cache() {
        const F& k = field;
        const std::size_t n = grp.order;
        if (grade_dims.size() != n) throw Error("grade_dims length must equal the group order");
        grade_offset.assign(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i) grade_offset[i + 1] = grade_offset[i] + grade_dims[i];
        dim_u = grade_offset[n];
        if (dim_u == 0) throw Error("coefficient must be nonzero");
        grade_of.assign(dim_u, 0);
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t j = grade_offset[g]; j < grade_offset[g + 1]; ++j) grade_of[j] = g;
        if (action.size() != n) throw Error("need one action matrix per group element");
        for (const auto& m : action)
            if (m.rows() != dim_u || m.cols() != dim_u) throw Error("action matrix shape mismatch");
        if (comul.rows() != dim_u * dim_u || comul.cols() != dim_u)
            throw Error("comultiplication matrix shape mismatch");
        if (counit.rows() != 1 || counit.cols() != dim_u) throw Error("counit shape mismatch");

        w = grade_dims[grp.identity];
        w_off = grade_offset[grp.identity];
        braid_w.clear();
        for (std::size_t g = 0; g < n; ++g) {
            const Matrix<F>& pinv = action[grp.inv(g)];
            Matrix<F> blk(k, w, w);
            for (std::size_t i = 0; i < w; ++i)
                for (std::size_t j = 0; j < w; ++j) blk.at(i, j) = pinv.at(w_off + i, w_off + j);
            braid_w.push_back(std::move(blk));
        }
        delta_ee = Matrix<F>(k, w * w, w);
        for (std::size_t j = 0; j < w; ++j)
            for (std::size_t a = 0; a < w; ++a)
                for (std::size_t b = 0; b < w; ++b)
                    delta_ee.at(a * w + b, j) =
                        comul.at((w_off + a) * dim_u + (w_off + b), w_off + j);
        counit_w.clear();
        for (std::size_t j = 0; j < w; ++j) counit_w.push_back(counit.at(0, w_off + j));
    }
};

// ---- presets ---------------------------------------------------------------

/// U = k in grade e; the unit object of the center.
template <Field F>
CenterCoalgebra<F> unit_coefficient(const F& k, FiniteGroup grp) {
    CenterCoalgebra<F> c;
    c.field = k;
    c.grp = std::move(grp);
    c.grade_dims.assign(c.grp.order, 0);
    c.grade_dims[c.grp.identity] = 1;
    Matrix<F> one(k, 1, 1);
    one.at(0, 0) = k.one();
    c.action.assign(c.grp.order, one);
    c.comul = one;
    c.counit = one;
    c.build_cache();
    return c;
}

/// W = span of a conjugation-stable subset S ⊆ G in grade e, with δ(s) = s⊗s,
/// ε(s) = 1 and π(x) permuting S by conjugation.
template <Field F>
CenterCoalgebra<F> grouplike_coefficient(const F& k, FiniteGroup grp,
                                         const std::vector<std::size_t>& support) {
    if (support.empty()) throw Error("group-like support must be nonempty");
    std::vector<long> pos(grp.order, -1);
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i] >= grp.order) throw Error("support element out of range");
        if (pos[support[i]] >= 0) throw Error("duplicate support element");
        pos[support[i]] = static_cast<long>(i);
    }
    for (std::size_t x = 0; x < grp.order; ++x)
        for (std::size_t s : support)
            if (pos[grp.conjugate(s, x)] < 0)
                throw Error("support is not closed under conjugation: conjugating '" +
                            grp.names[s] + "' by '" + grp.names[x] + "' leaves the support");

    CenterCoalgebra<F> c;
    c.field = k;
    c.grp = std::move(grp);
    const std::size_t m = support.size();
    c.grade_dims.assign(c.grp.order, 0);
    c.grade_dims[c.grp.identity] = m;
    for (std::size_t x = 0; x < c.grp.order; ++x) {
        Matrix<F> p(k, m, m);
        for (std::size_t j = 0; j < m; ++j)
            p.at(static_cast<std::size_t>(pos[c.grp.conjugate(support[j], x)]), j) = k.one();
        c.action.push_back(std::move(p));
    }
    c.comul = Matrix<F>(k, m * m, m);
    for (std::size_t j = 0; j < m; ++j) c.comul.at(j * m + j, j) = k.one();
    c.counit = Matrix<F>(k, 1, m);
    for (std::size_t j = 0; j < m; ++j) c.counit.at(0, j) = k.one();
    c.build_cache();
    return c;
}

/// The 3-dimensional upper-triangular matrix coalgebra span{t11, t12, t22}
/// with δ(t12) = t11⊗t12 + t12⊗t22, in grade e with trivial action. Smallest
/// standard non-cocommutative counital coalgebra; its equivariant subcomplex
/// is a proper subcomplex.
template <Field F>
CenterCoalgebra<F> triangular_coefficient(const F& k, FiniteGroup grp) {
    CenterCoalgebra<F> c;
    c.field = k;
    c.grp = std::move(grp);
    c.grade_dims.assign(c.grp.order, 0);
    c.grade_dims[c.grp.identity] = 3;
    c.action.assign(c.grp.order, Matrix<F>::identity(k, 3));
    c.comul = Matrix<F>(k, 9, 3);
    c.comul.at(0, 0) = k.one();              // t11 ↦ t11⊗t11
    c.comul.at(0 * 3 + 1, 1) = k.one();      // t12 ↦ t11⊗t12 + t12⊗t22
    c.comul.at(1 * 3 + 2, 1) = k.one();
    c.comul.at(2 * 3 + 2, 2) = k.one();      // t22 ↦ t22⊗t22
    c.counit = Matrix<F>(k, 1, 3);
    c.counit.at(0, 0) = k.one();
    c.counit.at(0, 2) = k.one();
    c.build_cache();
    return c;
}

// ---- validation ------------------------------------------------------------

/// Checks every axiom of a center-coalgebra datum, reporting each as pass/fail
/// with a witness (group element / basis vector) on failure. Shape mismatches
/// are structural and throw before any axiom runs (from build_cache).
template <Field F>
CheckReport validate_center_coalgebra(const CenterCoalgebra<F>& c) {
    const F& k = c.field;
    const FiniteGroup& G = c.grp;
    const std::size_t du = c.dim_u;
    CheckReport rep;
    rep.suite = "center-coalgebra";

    {  // grading of the action
        bool ok = true;
        for (std::size_t x = 0; x < G.order && ok; ++x)
            for (std::size_t j = 0; j < du && ok; ++j) {
                std::size_t target = G.conjugate(c.grade_of[j], x);
                for (std::size_t i = 0; i < du; ++i)
                    if (!k.is_zero(c.action[x].at(i, j)) && c.grade_of[i] != target) {
                        rep.add_fail("action/grading",
                                     Json{{"element", G.names[x]},
                                          {"basis", j},
                                          {"bad_row", i},
                                          {"expected_grade", G.names[target]},
                                          {"found_grade", G.names[c.grade_of[i]]}});
                        ok = false;
                        break;
                    }
            }
        if (ok) rep.add_pass("action/grading");
    }
    {  // π(e) = id and homomorphism property (the hexagon in graded form)
        if (c.action[G.identity] == Matrix<F>::identity(k, du)) rep.add_pass("action/identity");
        else rep.add_fail("action/identity", Json{{"element", G.names[G.identity]}});
        bool ok = true;
        for (std::size_t x = 0; x < G.order && ok; ++x)
            for (std::size_t y = 0; y < G.order && ok; ++y)
                if (!(c.action[x] * c.action[y] == c.action[G.mul(x, y)])) {
                    rep.add_fail("action/homomorphism",
                                 Json{{"x", G.names[x]}, {"y", G.names[y]}});
                    ok = false;
                }
        if (ok) rep.add_pass("action/homomorphism");
    }
    {  // invertibility
        bool ok = true;
        for (std::size_t x = 0; x < G.order && ok; ++x)
            if (!(c.action[x] * c.action[G.inv(x)] == Matrix<F>::identity(k, du))) {
                rep.add_fail("action/invertibility", Json{{"element", G.names[x]}});
                ok = false;
            }
        if (ok) rep.add_pass("action/invertibility");
    }
    {  // grading of Δ: Δ(U_g) ⊆ ⊕_{ab=g} U_a ⊗ U_b
        bool ok = true;
        for (std::size_t j = 0; j < du && ok; ++j)
            for (std::size_t a = 0; a < du && ok; ++a)
                for (std::size_t b = 0; b < du; ++b)
                    if (!k.is_zero(c.comul.at(a * du + b, j)) &&
                        G.mul(c.grade_of[a], c.grade_of[b]) != c.grade_of[j]) {
                        rep.add_fail("comul/grading", Json{{"basis", j},
                                                           {"component_a", a},
                                                           {"component_b", b}});
                        ok = false;
                        break;
                    }
        if (ok) rep.add_pass("comul/grading");
    }
    {  // coassociativity
        Matrix<F> id = Matrix<F>::identity(k, du);
        Matrix<F> lhs = kron(c.comul, id) * c.comul;
        Matrix<F> rhs = kron(id, c.comul) * c.comul;
        if (lhs == rhs) rep.add_pass("comul/coassociativity");
        else {
            std::size_t j = 0;
            for (; j < du; ++j) {
                bool diff = false;
                for (std::size_t i = 0; i < lhs.rows(); ++i)
                    if (!k.eq(lhs.at(i, j), rhs.at(i, j))) { diff = true; break; }
                if (diff) break;
            }
            rep.add_fail("comul/coassociativity",
                         Json{{"basis", j},
                              {"lhs", detail::col_json(k, lhs, j)},
                              {"rhs", detail::col_json(k, rhs, j)}});
        }
    }
    {  // counit laws and counit grading
        Matrix<F> id = Matrix<F>::identity(k, du);
        Matrix<F> left = kron(c.counit, id) * c.comul;
        Matrix<F> right = kron(id, c.counit) * c.comul;
        if (left == id) rep.add_pass("counit/left");
        else rep.add_fail("counit/left", Json{{"matrix", "(eps⊗id)∘Δ ≠ id"}});
        if (right == id) rep.add_pass("counit/right");
        else rep.add_fail("counit/right", Json{{"matrix", "(id⊗eps)∘Δ ≠ id"}});
        bool graded = true;
        for (std::size_t j = 0; j < du; ++j)
            if (!k.is_zero(c.counit.at(0, j)) && c.grade_of[j] != G.identity) {
                rep.add_fail("counit/grading", Json{{"basis", j}, {"grade", G.names[c.grade_of[j]]}});
                graded = false;
                break;
            }
        if (graded) rep.add_pass("counit/grading");
    }
    {  // Δ and ε are morphisms in the center: (π(x)⊗π(x))Δ = Δπ(x), ε∘π(x) = ε
        bool ok = true;
        for (std::size_t x = 0; x < G.order && ok; ++x)
            if (!(kron(c.action[x], c.action[x]) * c.comul == c.comul * c.action[x])) {
                rep.add_fail("center/comul-compatible", Json{{"element", G.names[x]}});
                ok = false;
            }
        if (ok) rep.add_pass("center/comul-compatible");
        ok = true;
        for (std::size_t x = 0; x < G.order && ok; ++x)
            if (!(c.counit * c.action[x] == c.counit)) {
                rep.add_fail("center/counit-compatible", Json{{"element", G.names[x]}});
                ok = false;
            }
        if (ok) rep.add_pass("center/counit-compatible");
    }
    return rep;
}

// ---- diagram-evaluator representation ---------------------------------------

/// Full component matrices of a natural transformation at every simple tuple:
/// row t is the functional U → k at tuple t (grading forces support on U_e).
template <Field F>
struct DiagramNat {
    int degree = 0;
    Matrix<F> rows;  // (#tuples) × dim_u
};

// ---- the backend -----------------------------------------------------------

/// Realization of the coefficient complex over G-graded vector spaces with the
/// identity functor. Cochains in degree n are functions G^n → W* stored
/// tuple-major (lexicographic tuples, W coordinates contiguous).
///
/// Every operation exists twice: a reduced fast path on the grade-e component
/// and a diagram evaluator that literally composes the defining morphism
/// chains with full matrices on U; the two are cross-checked in the tests.
template <Field F>
class VecGBackend final : public ComplexBackend<F> {
  public:
    explicit VecGBackend(CenterCoalgebra<F> coalgebra, int degree_cap = 4,
                         std::size_t dim_cap = 200000)
        : c_(std::move(coalgebra)), degree_cap_(degree_cap), dim_cap_(dim_cap) {
        braid_full_.clear();
        for (std::size_t g = 0; g < c_.grp.order; ++g)
            braid_full_.push_back(c_.action[c_.grp.inv(g)]);
    }

    const F& field() const override { return c_.field; }
    std::string name() const override { return "vec_g"; }
    const CenterCoalgebra<F>& coalgebra() const { return c_; }
    const FiniteGroup& group() const { return c_.grp; }
    std::size_t w_dim() const { return c_.w; }

    int degree_cap() const override { return degree_cap_; }
    std::size_t dim_cap() const override { return dim_cap_; }

    std::size_t cochain_dim(int n) const override {
        if (n < 0) throw Error("negative degree");
        std::size_t d = c_.w;
        for (int i = 0; i < n; ++i) {
            d *= c_.grp.order;
            this->guard_dim(d);
        }
        return d;
    }

    TupleIndexer tuples(int n) const { return TupleIndexer{c_.grp.order, n}; }

    // -- fast path ------------------------------------------------------------

    Cochain<F> delta(const Cochain<F>& f) const override {
        const F& k = c_.field;
        const int n = f.degree;
        check_shape(f);
        Cochain<F> out = zero_cochain(k, n + 1, cochain_dim(n + 1));
        TupleIndexer ti = tuples(n + 1);
        std::vector<std::size_t> t;
        std::vector<std::size_t> sub(n >= 0 ? n : 0);
        const std::size_t w = c_.w;
        for (std::size_t r = 0; r < ti.count(); ++r) {
            ti.decode(r, t);
            auto* dst = &out.coords[r * w];
            // f(x_1..x_n) ∘ braid(x_0)
            sub.assign(t.begin() + 1, t.end());
            auto row = row_at(f, sub);
            auto moved = row_times_matrix(k, row, c_.braid_w[t[0]]);
            for (std::size_t s = 0; s < w; ++s) dst[s] = k.add(dst[s], moved[s]);
            // alternating merges
            for (int i = 1; i <= n; ++i) {
                sub.assign(t.begin(), t.end());
                sub[i - 1] = c_.grp.mul(t[i - 1], t[i]);
                sub.erase(sub.begin() + i);
                auto mrow = row_at(f, sub);
                if (i % 2 == 1)
                    for (std::size_t s = 0; s < w; ++s) dst[s] = k.sub(dst[s], mrow[s]);
                else
                    for (std::size_t s = 0; s < w; ++s) dst[s] = k.add(dst[s], mrow[s]);
            }
            // (-1)^{n+1} f(x_0..x_{n-1})
            sub.assign(t.begin(), t.end() - 1);
            auto lrow = row_at(f, sub);
            if ((n + 1) % 2 == 1)
                for (std::size_t s = 0; s < w; ++s) dst[s] = k.sub(dst[s], lrow[s]);
            else
                for (std::size_t s = 0; s < w; ++s) dst[s] = k.add(dst[s], lrow[s]);
        }
        return out;
    }

    Cochain<F> cup(const Cochain<F>& f, const Cochain<F>& g) const override {
        return cup_like(f, g, /*sq=*/false);
    }
    Cochain<F> sqcup(const Cochain<F>& f, const Cochain<F>& g) const override {
        return cup_like(f, g, /*sq=*/true);
    }

    Cochain<F> diamond_i(const Cochain<F>& f, const Cochain<F>& g, long i) const override {
        const F& k = c_.field;
        const int m = f.degree, n = g.degree;
        check_shape(f);
        check_shape(g);
        // the vanishing convention also covers the empty degree m+n-1 < 0
        const int deg = m + n - 1 >= 0 ? m + n - 1 : 0;
        Cochain<F> out = zero_cochain(k, deg, cochain_dim(deg));
        if (i < 0 || i >= m || m + n - 1 < 0) return out;
        TupleIndexer ti = tuples(deg);
        std::vector<std::size_t> t, ftup, gtup;
        const std::size_t w = c_.w;
        for (std::size_t r = 0; r < ti.count(); ++r) {
            ti.decode(r, t);
            gtup.assign(t.begin() + i, t.begin() + i + n);
            std::size_t merged = c_.grp.product(gtup.begin(), gtup.end());
            ftup.clear();
            ftup.insert(ftup.end(), t.begin(), t.begin() + i);
            ftup.push_back(merged);
            ftup.insert(ftup.end(), t.begin() + i + n, t.end());
            auto frow = row_at(f, ftup);
            if (row_is_zero(frow)) continue;
            auto grow0 = row_at(g, gtup);
            if (row_is_zero(grow0)) continue;
            std::size_t prefix = c_.grp.product(t.begin(), t.begin() + i);
            auto grow = row_times_matrix(k, grow0, c_.braid_w[prefix]);
            auto pair = kron_row(k, frow, grow);
            auto res = row_times_matrix(k, pair, c_.delta_ee);
            for (std::size_t s = 0; s < w; ++s) out.coords[r * w + s] = res[s];
        }
        return out;
    }

    /// Rows encode, for each tuple and each graded basis vector u of U, the
    /// condition  Σ f(x⃗)(u₍₁₎)·braid(x̄)u₍₂₎ = Σ f(x⃗)(u₍₂₎)·braid(x̄)u₍₁₎
    /// with x̄ the tuple product; the kernel is the equivariant subspace.
    Matrix<F> equivariance_matrix(int n) const override {
        const F& k = c_.field;
        const std::size_t du = c_.dim_u, w = c_.w;
        TupleIndexer ti = tuples(n);
        const std::size_t nt = ti.count();
        this->guard_dim(nt * w);
        const auto& d_mats = d_matrices();
        Matrix<F> cond(k, nt * du * du, nt * w);
        std::vector<std::size_t> t;
        for (std::size_t r = 0; r < nt; ++r) {
            ti.decode(r, t);
            std::size_t bar = c_.grp.product(t.begin(), t.end());
            for (std::size_t j = 0; j < du; ++j) {
                Matrix<F> rows = braid_full_[bar] * d_mats[j];  // du × w
                for (std::size_t out_r = 0; out_r < du; ++out_r)
                    for (std::size_t s = 0; s < w; ++s)
                        cond.at((r * du + j) * du + out_r, r * w + s) = rows.at(out_r, s);
            }
        }
        return cond;
    }

    /// Tuple-wise membership test: the braid factor in the condition is
    /// invertible, so f is equivariant iff every row functional f(x⃗) kills the
    /// tuple-independent condition matrix.
    bool is_equivariant(const Cochain<F>& f) const override {
        const F& k = c_.field;
        check_shape(f);
        const Matrix<F>& cond = functional_condition();
        const std::size_t w = c_.w;
        TupleIndexer ti = tuples(f.degree);
        for (std::size_t r = 0; r < ti.count(); ++r)
            for (std::size_t row = 0; row < cond.rows(); ++row) {
                auto acc = k.zero();
                for (std::size_t s = 0; s < w; ++s)
                    acc = k.add(acc, k.mul(cond.at(row, s), f.coords[r * w + s]));
                if (!k.is_zero(acc)) return false;
            }
        return true;
    }

    /// The equivariance matrix is block-diagonal over tuples with row spaces
    /// independent of the tuple, so its canonical kernel basis is the
    /// tuple-indicator expansion of the per-functional kernel.
    EquivariantKernel<F> equivariance_kernel(int n) const override {
        auto [small, small_free] = kernel_basis_with_info(functional_condition());
        const std::size_t nt = tuples(n).count();
        this->guard_dim(nt * c_.w);
        return EquivariantKernel<F>{std::move(small), std::move(small_free), nt};
    }

    Cochain<F> eps() const override { return Cochain<F>{0, c_.counit_w}; }

    Cochain<F> pi() const override {
        const F& k = c_.field;
        Cochain<F> out = zero_cochain(k, 2, cochain_dim(2));
        const std::size_t w = c_.w;
        for (std::size_t r = 0; r < tuples(2).count(); ++r)
            for (std::size_t s = 0; s < w; ++s) out.coords[r * w + s] = c_.counit_w[s];
        return out;
    }

    // -- diagram evaluator ------------------------------------------------------
    // Literal composition of the defining morphism chains with full matrices on
    // U; never uses the reduced W-formulas or the action-product shortcut.

    DiagramNat<F> to_diagram(const Cochain<F>& f) const {
        const F& k = c_.field;
        check_shape(f);
        TupleIndexer ti = tuples(f.degree);
        DiagramNat<F> d{f.degree, Matrix<F>(k, ti.count(), c_.dim_u)};
        for (std::size_t r = 0; r < ti.count(); ++r)
            for (std::size_t s = 0; s < c_.w; ++s)
                d.rows.at(r, c_.w_off + s) = f.coords[r * c_.w + s];
        return d;
    }

    /// Fails if any component is supported off the grade-e block.
    Cochain<F> from_diagram(const DiagramNat<F>& d) const {
        const F& k = c_.field;
        Cochain<F> f = zero_cochain(k, d.degree, cochain_dim(d.degree));
        for (std::size_t r = 0; r < d.rows.rows(); ++r)
            for (std::size_t j = 0; j < c_.dim_u; ++j) {
                if (c_.grade_of[j] == c_.grp.identity)
                    f.coords[r * c_.w + (j - c_.w_off)] = d.rows.at(r, j);
                else if (!k.is_zero(d.rows.at(r, j)))
                    throw Error("diagram component supported off the grade-e block");
            }
        return f;
    }

    DiagramNat<F> eval_delta(const DiagramNat<F>& f) const {
        const F& k = c_.field;
        const int n = f.degree;
        const std::size_t du = c_.dim_u;
        TupleIndexer ti = tuples(n + 1), tin = tuples(n);
        DiagramNat<F> out{n + 1, Matrix<F>(k, ti.count(), du)};
        std::vector<std::size_t> t, sub;
        for (std::size_t r = 0; r < ti.count(); ++r) {
            ti.decode(r, t);
            std::vector<typename F::Elem> acc(du, k.zero());
            sub.assign(t.begin() + 1, t.end());
            auto row = full_row(f, tin, sub);
            auto moved = row_times_matrix(k, row, braid_full_[t[0]]);
            for (std::size_t s = 0; s < du; ++s) acc[s] = k.add(acc[s], moved[s]);
            for (int i = 1; i <= n; ++i) {
                sub.assign(t.begin(), t.end());
                sub[i - 1] = c_.grp.mul(t[i - 1], t[i]);
                sub.erase(sub.begin() + i);
                auto mrow = full_row(f, tin, sub);
                for (std::size_t s = 0; s < du; ++s)
                    acc[s] = (i % 2 == 1) ? k.sub(acc[s], mrow[s]) : k.add(acc[s], mrow[s]);
            }
            sub.assign(t.begin(), t.end() - 1);
            auto lrow = full_row(f, tin, sub);
            for (std::size_t s = 0; s < du; ++s)
                acc[s] = ((n + 1) % 2 == 1) ? k.sub(acc[s], lrow[s]) : k.add(acc[s], lrow[s]);
            for (std::size_t s = 0; s < du; ++s) out.rows.at(r, s) = acc[s];
        }
        return out;
    }

    DiagramNat<F> eval_cup(const DiagramNat<F>& f, const DiagramNat<F>& g) const {
        return eval_cup_like(f, g, false);
    }
    DiagramNat<F> eval_sqcup(const DiagramNat<F>& f, const DiagramNat<F>& g) const {
        return eval_cup_like(f, g, true);
    }

    DiagramNat<F> eval_diamond_i(const DiagramNat<F>& f, const DiagramNat<F>& g, long i) const {
        const F& k = c_.field;
        const int m = f.degree, n = g.degree;
        const int deg = m + n - 1 >= 0 ? m + n - 1 : 0;
        const std::size_t du = c_.dim_u;
        TupleIndexer ti = tuples(deg), tif = tuples(m), tig = tuples(n);
        DiagramNat<F> out{deg, Matrix<F>(k, ti.count(), du)};
        if (i < 0 || i >= m || m + n - 1 < 0) return out;
        std::vector<std::size_t> t, ftup, gtup;
        for (std::size_t r = 0; r < ti.count(); ++r) {
            ti.decode(r, t);
            gtup.assign(t.begin() + i, t.begin() + i + n);
            std::size_t merged = c_.grp.product(gtup.begin(), gtup.end());
            ftup.clear();
            ftup.insert(ftup.end(), t.begin(), t.begin() + i);
            ftup.push_back(merged);
            ftup.insert(ftup.end(), t.begin() + i + n, t.end());
            auto frow = full_row(f, tif, ftup);
            if (row_is_zero(frow)) continue;
            auto grow0 = full_row(g, tig, gtup);
            if (row_is_zero(grow0)) continue;
            Matrix<F> braid = braid_chain(t.begin(), t.begin() + i);
            auto grow = row_times_matrix(k, grow0, braid);
            auto pair = kron_row(k, frow, grow);
            auto res = row_times_matrix(k, pair, c_.comul);
            for (std::size_t s = 0; s < du; ++s) out.rows.at(r, s) = res[s];
        }
        return out;
    }

    /// Δ ⊗ (tuple factors), as a map U → U⊗U.
    Matrix<F> eval_lambda_L(int, std::size_t) const { return c_.comul; }

    /// (U ⊗ iterated braiding) ∘ (Δ ⊗ ...), as a map U → U⊗U.
    Matrix<F> eval_lambda_R(int n, std::size_t tuple_rank) const {
        const F& k = c_.field;
        TupleIndexer ti = tuples(n);
        std::vector<std::size_t> t;
        ti.decode(tuple_rank, t);
        Matrix<F> braid = braid_chain(t.begin(), t.end());
        return kron(Matrix<F>::identity(k, c_.dim_u), braid) * c_.comul;
    }

    /// (f ⊗ U) ∘ λ_R as a map U → U.
    Matrix<F> eval_equivariance_lhs(const DiagramNat<F>& f, std::size_t tuple_rank) const {
        const F& k = c_.field;
        const std::size_t du = c_.dim_u;
        Matrix<F> lamr = eval_lambda_R(f.degree, tuple_rank);
        Matrix<F> out(k, du, du);
        for (std::size_t jcol = 0; jcol < du; ++jcol)
            for (std::size_t a = 0; a < du; ++a) {
                const auto& fa = f.rows.at(tuple_rank, a);
                if (k.is_zero(fa)) continue;
                for (std::size_t r2 = 0; r2 < du; ++r2)
                    out.at(r2, jcol) = k.add(out.at(r2, jcol), k.mul(fa, lamr.at(a * du + r2, jcol)));
            }
        return out;
    }

    /// braiding(x⃗) ∘ (U ⊗ f) ∘ λ_L as a map U → U.
    Matrix<F> eval_equivariance_rhs(const DiagramNat<F>& f, std::size_t tuple_rank) const {
        const F& k = c_.field;
        const std::size_t du = c_.dim_u;
        TupleIndexer ti = tuples(f.degree);
        std::vector<std::size_t> t;
        ti.decode(tuple_rank, t);
        Matrix<F> mid(k, du, du);  // u ↦ Σ f(u₍₂₎) u₍₁₎
        for (std::size_t jcol = 0; jcol < du; ++jcol)
            for (std::size_t a = 0; a < du; ++a)
                for (std::size_t b = 0; b < du; ++b) {
                    const auto& fb = f.rows.at(tuple_rank, b);
                    if (k.is_zero(fb)) continue;
                    mid.at(a, jcol) =
                        k.add(mid.at(a, jcol), k.mul(fb, c_.comul.at(a * du + b, jcol)));
                }
        return braid_chain(t.begin(), t.end()) * mid;
    }

    /// String-dispatched evaluator for cochain-valued expressions.
    DiagramNat<F> diagram_evaluate(const std::string& op, const std::vector<DiagramNat<F>>& args,
                                   long i = 0) const {
        if (op == "delta" && args.size() == 1) return eval_delta(args[0]);
        if (op == "cup" && args.size() == 2) return eval_cup(args[0], args[1]);
        if (op == "sqcup" && args.size() == 2) return eval_sqcup(args[0], args[1]);
        if (op == "diamond_i" && args.size() == 2) return eval_diamond_i(args[0], args[1], i);
        throw Error("malformed diagram expression '" + op + "' with " +
                    std::to_string(args.size()) + " operand(s)");
    }

  private:
    void check_shape(const Cochain<F>& f) const {
        if (f.coords.size() != cochain_dim(f.degree))
            throw Error("cochain coordinate length does not match W dimension at degree " +
                        std::to_string(f.degree));
    }

    /// D[j][out,s]: coefficient of basis vector `out` in
    /// Σ (w_s-part of u₍₁₎)·u₍₂₎ − Σ (w_s-part of u₍₂₎)·u₍₁₎ for u = e_j.
    const std::vector<Matrix<F>>& d_matrices() const {
        if (d_mats_.empty()) {
            const F& k = c_.field;
            const std::size_t du = c_.dim_u;
            d_mats_.assign(du, Matrix<F>(k, du, c_.w));
            for (std::size_t j = 0; j < du; ++j)
                for (std::size_t a = 0; a < du; ++a)
                    for (std::size_t b = 0; b < du; ++b) {
                        const auto& coeff = c_.comul.at(a * du + b, j);
                        if (k.is_zero(coeff)) continue;
                        if (c_.grade_of[a] == c_.grp.identity)
                            d_mats_[j].at(b, a - c_.w_off) =
                                k.add(d_mats_[j].at(b, a - c_.w_off), coeff);
                        if (c_.grade_of[b] == c_.grp.identity)
                            d_mats_[j].at(a, b - c_.w_off) =
                                k.sub(d_mats_[j].at(a, b - c_.w_off), coeff);
                    }
        }
        return d_mats_;
    }

    /// Stacked tuple-independent condition rows, (du·du) × w.
    const Matrix<F>& functional_condition() const {
        if (cond_small_.rows() == 0 && cond_small_.cols() == 0) {
            const F& k = c_.field;
            const std::size_t du = c_.dim_u;
            const auto& d = d_matrices();
            cond_small_ = Matrix<F>(k, du * du, c_.w);
            for (std::size_t j = 0; j < du; ++j)
                for (std::size_t r = 0; r < du; ++r)
                    for (std::size_t s = 0; s < c_.w; ++s)
                        cond_small_.at(j * du + r, s) = d[j].at(r, s);
        }
        return cond_small_;
    }

    const typename F::Elem* row_ptr(const Cochain<F>& f, std::size_t rank) const {
        return &f.coords[rank * c_.w];
    }
    bool row_is_zero(const std::vector<typename F::Elem>& row) const {
        for (const auto& e : row)
            if (!c_.field.is_zero(e)) return false;
        return true;
    }
    std::vector<typename F::Elem> row_at(const Cochain<F>& f,
                                         const std::vector<std::size_t>& tuple) const {
        TupleIndexer ti = tuples(f.degree);
        const auto* p = row_ptr(f, ti.encode(tuple));
        return std::vector<typename F::Elem>(p, p + c_.w);
    }
    std::vector<typename F::Elem> full_row(const DiagramNat<F>& f, const TupleIndexer& ti,
                                           const std::vector<std::size_t>& tuple) const {
        std::size_t r = ti.encode(tuple);
        std::vector<typename F::Elem> row(c_.dim_u);
        for (std::size_t j = 0; j < c_.dim_u; ++j) row[j] = f.rows.at(r, j);
        return row;
    }

    /// Stepwise composite of the half-braiding across a tuple prefix.
    template <class It>
    Matrix<F> braid_chain(It begin, It end) const {
        Matrix<F> m = Matrix<F>::identity(c_.field, c_.dim_u);
        for (It it = begin; it != end; ++it) m = braid_full_[*it] * m;
        return m;
    }

    Cochain<F> cup_like(const Cochain<F>& f, const Cochain<F>& g, bool sq) const {
        const F& k = c_.field;
        const int m = f.degree, n = g.degree;
        check_shape(f);
        check_shape(g);
        Cochain<F> out = zero_cochain(k, m + n, cochain_dim(m + n));
        TupleIndexer ti = tuples(m + n);
        std::vector<std::size_t> t, ftup, gtup;
        const std::size_t w = c_.w;
        for (std::size_t r = 0; r < ti.count(); ++r) {
            ti.decode(r, t);
            ftup.assign(t.begin(), t.begin() + m);
            gtup.assign(t.begin() + m, t.end());
            auto frow = row_at(f, ftup);
            if (row_is_zero(frow)) continue;
            auto grow0 = row_at(g, gtup);
            if (row_is_zero(grow0)) continue;
            std::size_t bar = c_.grp.product(ftup.begin(), ftup.end());
            auto grow = row_times_matrix(k, grow0, c_.braid_w[bar]);
            auto pair = sq ? kron_row(k, grow, frow) : kron_row(k, frow, grow);
            auto res = row_times_matrix(k, pair, c_.delta_ee);
            for (std::size_t s = 0; s < w; ++s) out.coords[r * w + s] = res[s];
        }
        return out;
    }

    DiagramNat<F> eval_cup_like(const DiagramNat<F>& f, const DiagramNat<F>& g, bool sq) const {
        const F& k = c_.field;
        const int m = f.degree, n = g.degree;
        const std::size_t du = c_.dim_u;
        TupleIndexer ti = tuples(m + n), tif = tuples(m), tig = tuples(n);
        DiagramNat<F> out{m + n, Matrix<F>(k, ti.count(), du)};
        std::vector<std::size_t> t, ftup, gtup;
        for (std::size_t r = 0; r < ti.count(); ++r) {
            ti.decode(r, t);
            ftup.assign(t.begin(), t.begin() + m);
            gtup.assign(t.begin() + m, t.end());
            auto frow = full_row(f, tif, ftup);
            if (row_is_zero(frow)) continue;
            auto grow0 = full_row(g, tig, gtup);
            if (row_is_zero(grow0)) continue;
            Matrix<F> braid = braid_chain(ftup.begin(), ftup.end());
            auto grow = row_times_matrix(k, grow0, braid);
            auto pair = sq ? kron_row(k, grow, frow) : kron_row(k, frow, grow);
            auto res = row_times_matrix(k, pair, c_.comul);
            for (std::size_t s = 0; s < du; ++s) out.rows.at(r, s) = res[s];
        }
        return out;
    }

    CenterCoalgebra<F> c_;
    std::vector<Matrix<F>> braid_full_;  // per element g: full matrix of π(g)⁻¹
    int degree_cap_;
    std::size_t dim_cap_;
    mutable std::vector<Matrix<F>> d_mats_;
    mutable Matrix<F> cond_small_;
};

}  // namespace dy

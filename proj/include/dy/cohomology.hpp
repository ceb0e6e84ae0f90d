#pragma once

#include "dy/backend.hpp"
#include "dy/comp.hpp"
#include "dy/field.hpp"
#include "dy/group.hpp"
#include "dy/matrix.hpp"
#include "dy/report.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dy {

template <Field F>
std::vector<typename F::Elem> column_of(const Matrix<F>& m, std::size_t col) {
    std::vector<typename F::Elem> v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m.at(r, col);
    return v;
}

/// Matrix of the differential C^n → C^{n+1}, assembled column by column by
/// applying it to basis cochains.
template <Field F>
Matrix<F> delta_matrix(const ComplexBackend<F>& b, int n) {
    const F& k = b.field();
    const std::size_t dn = b.cochain_dim(n), dn1 = b.cochain_dim(n + 1);
    Matrix<F> m(k, dn1, dn);
    for (std::size_t c = 0; c < dn; ++c) {
        Cochain<F> e = zero_cochain(k, n, dn);
        e.coords[c] = k.one();
        auto img = b.delta(e);
        for (std::size_t r = 0; r < dn1; ++r) m.at(r, c) = img.coords[r];
    }
    return m;
}

/// Caches differential matrices, optionally restricted to the equivariant
/// subcomplex (where coordinates live in the canonical kernel bases and the
/// restriction verifies closure exactly — a violation is an internal fault,
/// never silently projected away).
template <Field F>
class ComplexSlices {
  public:
    ComplexSlices(const ComplexBackend<F>& b, bool equivariant)
        : b_(&b), equi_(equivariant ? new EquivariantSpace<F>(b) : nullptr) {}

    const ComplexBackend<F>& backend() const { return *b_; }
    bool equivariant() const { return equi_ != nullptr; }

    std::size_t dim(int n) const {
        if (n < 0) return 0;
        return equi_ ? equi_->dim(n) : b_->cochain_dim(n);
    }

    const Matrix<F>& delta(int n) const {
        auto it = deltas_.find(n);
        if (it != deltas_.end()) return it->second;
        Matrix<F> m;
        if (!equi_) {
            m = delta_matrix(*b_, n);
        } else {
            const F& k = b_->field();
            m = Matrix<F>(k, dim(n + 1), dim(n));
            for (std::size_t c = 0; c < dim(n); ++c) {
                auto f = equi_->basis_cochain(n, c);
                auto coords = equi_->coordinates(b_->delta(f));  // throws on closure violation
                for (std::size_t r = 0; r < coords.size(); ++r) m.at(r, c) = coords[r];
            }
        }
        return deltas_.emplace(n, std::move(m)).first->second;
    }

    /// Cochain (ambient coordinates) -> coordinate vector of this complex.
    std::vector<typename F::Elem> coords_of(const Cochain<F>& f) const {
        if (!equi_) return f.coords;
        return equi_->coordinates(f);
    }

    Cochain<F> from_coords(int degree, const std::vector<typename F::Elem>& coords) const {
        if (!equi_) return Cochain<F>{degree, coords};
        return equi_->from_coords(degree, coords);
    }

    EquivariantSpace<F>* space() const { return equi_.get(); }

  private:
    const ComplexBackend<F>* b_;
    std::unique_ptr<EquivariantSpace<F>> equi_;
    mutable std::map<int, Matrix<F>> deltas_;
};

template <Field F>
class ComplexSlices;
template <Field F>
Cochain<F> project_to_cocycle(const ComplexSlices<F>& cx, const Cochain<F>& f);

/// Cocycles, coboundaries, and the canonical representative complement in one
/// degree. All bases are columns in the coordinates of the chosen complex.
template <Field F>
struct CohomologySlice {
    int degree = 0;
    std::size_t betti = 0;
    Matrix<F> cocycle_basis;
    Matrix<F> coboundary_basis;
    Matrix<F> representative_basis;
};

template <Field F>
CohomologySlice<F> cohomology(const ComplexSlices<F>& cx, int n) {
    const F& k = cx.backend().field();
    if (n > cx.backend().degree_cap()) throw Error("degree exceeds the configured cap");
    CohomologySlice<F> slice;
    slice.degree = n;
    slice.cocycle_basis = kernel_basis(cx.delta(n));

    if (n == 0) {
        slice.coboundary_basis = Matrix<F>(k, cx.dim(0), 0);
    } else {
        const Matrix<F>& dprev = cx.delta(n - 1);
        auto r = rref(dprev);
        slice.coboundary_basis = Matrix<F>(k, cx.dim(n), r.pivots.size());
        for (std::size_t idx = 0; idx < r.pivots.size(); ++idx)
            for (std::size_t row = 0; row < dprev.rows(); ++row)
                slice.coboundary_basis.at(row, idx) = dprev.at(row, r.pivots[idx]);
    }

    // representatives: cocycle columns whose pivots extend the coboundary space
    const std::size_t nb = slice.coboundary_basis.cols(), nz = slice.cocycle_basis.cols();
    Matrix<F> joint(k, cx.dim(n), nb + nz);
    for (std::size_t rr = 0; rr < cx.dim(n); ++rr) {
        for (std::size_t c = 0; c < nb; ++c) joint.at(rr, c) = slice.coboundary_basis.at(rr, c);
        for (std::size_t c = 0; c < nz; ++c) joint.at(rr, nb + c) = slice.cocycle_basis.at(rr, c);
    }
    auto jr = rref(std::move(joint));
    std::vector<std::size_t> rep_cols;
    for (auto p : jr.pivots)
        if (p >= nb) rep_cols.push_back(p - nb);
    slice.representative_basis = Matrix<F>(k, cx.dim(n), rep_cols.size());
    for (std::size_t idx = 0; idx < rep_cols.size(); ++idx)
        for (std::size_t row = 0; row < cx.dim(n); ++row)
            slice.representative_basis.at(row, idx) = slice.cocycle_basis.at(row, rep_cols[idx]);

    if (nz < nb) throw Error("internal: coboundaries exceed cocycles (differential broken)");
    slice.betti = nz - nb;
    if (slice.betti != rep_cols.size())
        throw Error("internal: representative count disagrees with betti number");
    return slice;
}

template <Field F>
std::vector<std::size_t> betti_table(const ComplexSlices<F>& cx, int n_max) {
    std::vector<std::size_t> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(cohomology(cx, n).betti);
    return out;
}

/// Answers membership of f in the image of the differential, with a witness
/// preimage when one exists (free variables of the solve fixed to zero).
template <Field F>
std::optional<Cochain<F>> is_coboundary(const ComplexSlices<F>& cx, const Cochain<F>& f) {
    const F& k = cx.backend().field();
    const int n = f.degree;
    auto target = cx.coords_of(f);
    if (n == 0) {
        for (const auto& e : target)
            if (!k.is_zero(e)) return std::nullopt;
        return Cochain<F>{-1, {}};  // the zero map out of the empty complex
    }
    auto x = solve(cx.delta(n - 1), target);
    if (!x) return std::nullopt;
    return cx.from_coords(n - 1, *x);
}

// ---- independent oracle ------------------------------------------------------

/// Betti numbers of group cohomology with trivial coefficients via the bar
/// resolution, assembled directly from the simplicial formula. Shares nothing
/// with the complex realizations beyond exact linear algebra.
template <Field F>
std::vector<std::size_t> group_cohomology_oracle(const FiniteGroup& g, const F& k, int n_max) {
    auto dim_of = [&](int n) {
        std::size_t d = 1;
        for (int i = 0; i < n; ++i) d *= g.order;
        return d;
    };
    auto bar_delta = [&](int n) {
        TupleIndexer ti{g.order, n + 1};
        TupleIndexer tin{g.order, n};
        Matrix<F> m(k, dim_of(n + 1), dim_of(n));
        std::vector<std::size_t> t, sub;
        for (std::size_t r = 0; r < ti.count(); ++r) {
            ti.decode(r, t);
            sub.assign(t.begin() + 1, t.end());
            m.at(r, tin.encode(sub)) = k.add(m.at(r, tin.encode(sub)), k.one());
            for (int i = 1; i <= n; ++i) {
                sub.assign(t.begin(), t.end());
                sub[i - 1] = g.mul(t[i - 1], t[i]);
                sub.erase(sub.begin() + i);
                auto& cell = m.at(r, tin.encode(sub));
                cell = (i % 2 == 1) ? k.sub(cell, k.one()) : k.add(cell, k.one());
            }
            sub.assign(t.begin(), t.end() - 1);
            auto& cell = m.at(r, tin.encode(sub));
            cell = ((n + 1) % 2 == 1) ? k.sub(cell, k.one()) : k.add(cell, k.one());
        }
        return m;
    };
    std::vector<std::size_t> betti;
    std::size_t prev_rank = 0;
    for (int n = 0; n <= n_max; ++n) {
        auto d = bar_delta(n);
        std::size_t z = dim_of(n) - rank(d);
        betti.push_back(z - prev_rank);
        prev_rank = rank(d);
    }
    return betti;
}

// ---- cohomology-level checks ---------------------------------------------------

/// f̄∪ḡ = (−1)^{mn} ḡ⊔f̄ on cohomology: every representative pair must differ
/// by a coboundary, witnessed by a linear solve. With `use_cup_for_second` the
/// equivariant-only statement f̄∪ḡ = (−1)^{mn} ḡ∪f̄ is checked instead.
/// `flip_sign` exists for mutation testing.
template <Field F>
CheckReport check_graded_commutativity(const ComplexSlices<F>& cx, int m, int n,
                                       bool use_cup_for_second = false, bool flip_sign = false) {
    const auto& b = cx.backend();
    const F& k = b.field();
    CheckReport rep;
    rep.suite = use_cup_for_second ? "graded-commutativity/cup" : "graded-commutativity";
    if (use_cup_for_second && !cx.equivariant())
        throw Error("cup-only graded commutativity is asserted on the equivariant subcomplex only");
    auto sm = cohomology(cx, m);
    auto sn = cohomology(cx, n);
    long long exponent = static_cast<long long>(m) * n + (flip_sign ? 1 : 0);
    for (std::size_t a = 0; a < sm.betti; ++a)
        for (std::size_t c = 0; c < sn.betti; ++c) {
            Cochain<F> f = cx.from_coords(m, column_of(sm.representative_basis, a));
            Cochain<F> g = cx.from_coords(n, column_of(sn.representative_basis, c));
            auto second = use_cup_for_second ? b.cup(g, f) : b.sqcup(g, f);
            auto t = cochain_sub(k, b.cup(f, g), cochain_scale(k, second, sign_pow(k, exponent)));
            auto witness = is_coboundary(cx, t);
            std::string label = "pair/(" + std::to_string(m) + "," + std::to_string(n) + ")/reps(" +
                                std::to_string(a) + "," + std::to_string(c) + ")";
            if (witness)
                rep.add_pass(label);
            else
                rep.add_fail(label, Json{{"m", m},
                                         {"n", n},
                                         {"rep_f", a},
                                         {"rep_g", c},
                                         {"difference", detail::cochain_json(k, t)}});
        }
    if (sm.betti == 0 || sn.betti == 0)
        rep.add_pass("pair/(" + std::to_string(m) + "," + std::to_string(n) + ")/vacuous");
    return rep;
}

/// The equivariant-subcomplex cohomology carries a graded-commutative product
/// and a bracket making it a Gerstenhaber algebra:
///   (i)  ∪ graded-commutative modulo coboundaries,
///   (ii) the bracket descends ([cocycle, coboundary] is a coboundary),
///   (iii) graded Jacobi exactly at cochain level,
///   (iv) Leibniz modulo coboundaries.
/// The restriction flag must be set; the statement is not asserted on the full
/// complex.
template <Field F>
CheckReport check_gerstenhaber_equivariant(const ComplexBackend<F>& b, int degree_budget,
                                           int samples, std::uint64_t seed,
                                           bool restrict_equivariant = true) {
    if (!restrict_equivariant)
        throw Error("the Gerstenhaber checks are asserted on the equivariant subcomplex only");
    const F& k = b.field();
    CheckReport rep;
    rep.suite = "gerstenhaber";
    ComplexSlices<F> cx(b, /*equivariant=*/true);
    CochainSampler<F> sampler(k, seed);
    EquivariantSpace<F>& equi = *cx.space();

    // (i) cup graded-commutative modulo coboundaries
    for (int m = 1; m <= degree_budget; ++m)
        for (int n = m; m + n <= degree_budget + 1 && n <= b.degree_cap(); ++n) {
            if (m + n > b.degree_cap()) continue;
            auto sub = check_graded_commutativity(cx, m, n, /*use_cup_for_second=*/true);
            for (auto& e : sub.entries) e.identity = "cup-commutative/" + e.identity;
            rep.merge(sub);
        }

    // (ii) bracket well-defined on cohomology
    for (int m = 1; m <= degree_budget; ++m)
        for (int n = 1; m + n - 1 <= b.degree_cap() && n <= degree_budget; ++n) {
            auto sm = cohomology(cx, m);
            for (int s = 0; s < samples; ++s) {
                auto g = equi.sample(sampler, n - 1, 71, static_cast<std::uint64_t>(s));
                auto cob = b.delta(g);
                for (std::size_t a = 0; a < sm.betti; ++a) {
                    Cochain<F> f = cx.from_coords(m, column_of(sm.representative_basis, a));
                    auto t = bracket(b, f, cob);
                    bool ok = static_cast<bool>(is_coboundary(cx, t));
                    std::string label = "bracket-descends/(" + std::to_string(m) + "," +
                                        std::to_string(n) + ")/rep" + std::to_string(a) + "/s" +
                                        std::to_string(s);
                    if (ok)
                        rep.add_pass(label);
                    else
                        rep.add_fail(label, Json{{"m", m},
                                                 {"n", n},
                                                 {"seed", seed},
                                                 {"g", detail::cochain_json(k, g)},
                                                 {"bracket", detail::cochain_json(k, t)}});
                }
            }
        }

    // (iii) graded Jacobi, exact at cochain level
    rep.merge(check_jacobi_equivariant(b, std::min(degree_budget, b.degree_cap()), samples, seed,
                                       degree_budget + 2));

    // (iv) Leibniz modulo coboundaries: [f, g∪h] − [f,g]∪h − (−1)^{(m−1)n} g∪[f,h]
    for (int m = 1; m <= degree_budget; ++m)
        for (int n = 0; n <= degree_budget; ++n)
            for (int p = 0; p <= degree_budget; ++p) {
                if (m + n + p - 1 > b.degree_cap() || m + n + p - 1 < 1) continue;
                for (int s = 0; s < samples; ++s) {
                    auto f = equi.sample(sampler, m, 81, static_cast<std::uint64_t>(s));
                    auto g = equi.sample(sampler, n, 82, static_cast<std::uint64_t>(s));
                    auto h = equi.sample(sampler, p, 83, static_cast<std::uint64_t>(s));
                    // Leibniz is asserted on cohomology: use cocycle samples
                    f = project_to_cocycle(cx, f);
                    g = project_to_cocycle(cx, g);
                    h = project_to_cocycle(cx, h);
                    auto lhs = bracket(b, f, b.cup(g, h));
                    auto rhs = cochain_add(
                        k, b.cup(bracket(b, f, g), h),
                        cochain_scale(k, b.cup(g, bracket(b, f, h)),
                                      sign_pow(k, static_cast<long long>(m - 1) * n)));
                    auto t = cochain_sub(k, lhs, rhs);
                    bool ok = static_cast<bool>(is_coboundary(cx, t));
                    std::string label =
                        "leibniz/" + detail::deg_tag({m, n, p}) + "/s" + std::to_string(s);
                    if (ok)
                        rep.add_pass(label);
                    else
                        rep.add_fail(label, Json{{"degrees", {m, n, p}},
                                                 {"seed", seed},
                                                 {"f", detail::cochain_json(k, f)},
                                                 {"g", detail::cochain_json(k, g)},
                                                 {"h", detail::cochain_json(k, h)},
                                                 {"difference", detail::cochain_json(k, t)}});
                }
            }
    return rep;
}

/// Deterministic projection of an equivariant cochain onto the cocycles of its
/// degree (kernel-basis coordinates at the free positions of the kernel).
template <Field F>
Cochain<F> project_to_cocycle(const ComplexSlices<F>& cx, const Cochain<F>& f) {
    const F& k = cx.backend().field();
    auto coords = cx.coords_of(f);
    // superpose onto the cocycle basis using its free coordinates
    auto [zbasis, zfree] = kernel_basis_with_info(cx.delta(f.degree));
    std::vector<typename F::Elem> zc(zbasis.cols(), k.zero());
    for (std::size_t c = 0; c < zbasis.cols(); ++c) zc[c] = coords[zfree[c]];
    std::vector<typename F::Elem> out(coords.size(), k.zero());
    for (std::size_t c = 0; c < zbasis.cols(); ++c) {
        if (k.is_zero(zc[c])) continue;
        for (std::size_t r = 0; r < zbasis.rows(); ++r)
            out[r] = k.add(out[r], k.mul(zc[c], zbasis.at(r, c)));
    }
    return cx.from_coords(f.degree, out);
}

}  // namespace dy

#pragma once

#include "dy/backend.hpp"
#include "dy/field.hpp"
#include "dy/matrix.hpp"
#include "dy/report.hpp"
#include "dy/witness.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace dy {

/// Deterministic sampler. Coordinates are drawn uniformly from {-2,…,2} over
/// the rationals and uniformly over F_p; the generator state is derived only
/// from the recorded seed, so every failure is replayable.
template <Field F>
class CochainSampler {
  public:
    CochainSampler(const F& k, std::uint64_t seed) : k_(&k), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Independent stream per (purpose, degree, sample index).
    std::mt19937_64 stream(std::uint64_t purpose, std::uint64_t degree,
                           std::uint64_t sample) const {
        std::uint64_t x = seed_;
        for (std::uint64_t v : {purpose, degree, sample}) {
            x ^= v + 0x9e3779b97f4a7c15ull + (x << 6) + (x >> 2);
            x *= 0xbf58476d1ce4e5b9ull;
            x ^= x >> 31;
        }
        return std::mt19937_64(x);
    }

    typename F::Elem draw(std::mt19937_64& rng) const {
        if (k_->characteristic() == 0)
            return k_->from_long(static_cast<long long>(rng() % 5) - 2);
        return k_->from_long(static_cast<long long>(rng() % static_cast<std::uint64_t>(k_->characteristic())));
    }

    Cochain<F> cochain(const ComplexBackend<F>& b, int degree, std::uint64_t purpose,
                       std::uint64_t sample) const {
        auto rng = stream(purpose, static_cast<std::uint64_t>(degree), sample);
        Cochain<F> c = zero_cochain(*k_, degree, b.cochain_dim(degree));
        for (auto& e : c.coords) e = draw(rng);
        return c;
    }

  private:
    const F* k_;
    std::uint64_t seed_;
};

/// Cache of equivariant kernel bases per degree, with sampling restricted to
/// the subspace.
template <Field F>
class EquivariantSpace {
  public:
    explicit EquivariantSpace(const ComplexBackend<F>& b) : b_(&b) {}

    const EquivariantKernel<F>& basis(int n) const {
        auto it = cache_.find(n);
        if (it == cache_.end()) it = cache_.emplace(n, b_->equivariance_kernel(n)).first;
        return it->second;
    }

    std::size_t dim(int n) const { return basis(n).cols(); }

    Cochain<F> sample(const CochainSampler<F>& sampler, int degree, std::uint64_t purpose,
                      std::uint64_t sample_idx) const {
        const F& k = b_->field();
        const EquivariantKernel<F>& ker = basis(degree);
        auto rng = sampler.stream(purpose, static_cast<std::uint64_t>(degree), sample_idx);
        Cochain<F> c = zero_cochain(k, degree, b_->cochain_dim(degree));
        const std::size_t br = ker.block.rows(), bc = ker.block.cols();
        for (std::size_t b = 0; b < ker.blocks; ++b)
            for (std::size_t col = 0; col < bc; ++col) {
                auto coeff = sampler.draw(rng);
                if (k.is_zero(coeff)) continue;
                for (std::size_t r = 0; r < br; ++r)
                    c.coords[b * br + r] =
                        k.add(c.coords[b * br + r], k.mul(coeff, ker.block.at(r, col)));
            }
        return c;
    }

    /// Coordinates of an equivariant cochain in the canonical kernel basis.
    /// Throws if the cochain is not in the subspace.
    std::vector<typename F::Elem> coordinates(const Cochain<F>& f) const {
        const F& k = b_->field();
        const EquivariantKernel<F>& ker = basis(f.degree);
        const std::size_t br = ker.block.rows(), bc = ker.block.cols();
        std::vector<typename F::Elem> coords(ker.cols(), k.zero());
        for (std::size_t b = 0; b < ker.blocks; ++b) {
            for (std::size_t col = 0; col < bc; ++col)
                coords[b * bc + col] = f.coords[b * br + ker.free_rows[col]];
            for (std::size_t r = 0; r < br; ++r) {
                auto reconstructed = k.zero();
                for (std::size_t col = 0; col < bc; ++col)
                    reconstructed =
                        k.add(reconstructed, k.mul(coords[b * bc + col], ker.block.at(r, col)));
                if (!k.eq(reconstructed, f.coords[b * br + r]))
                    throw Error("cochain is not in the equivariant subspace (closure violation)");
            }
        }
        return coords;
    }

    Cochain<F> from_coords(int degree, const std::vector<typename F::Elem>& coords) const {
        const F& k = b_->field();
        const EquivariantKernel<F>& ker = basis(degree);
        const std::size_t br = ker.block.rows(), bc = ker.block.cols();
        Cochain<F> f = zero_cochain(k, degree, b_->cochain_dim(degree));
        for (std::size_t b = 0; b < ker.blocks; ++b)
            for (std::size_t col = 0; col < bc; ++col) {
                const auto& coeff = coords[b * bc + col];
                if (k.is_zero(coeff)) continue;
                for (std::size_t r = 0; r < br; ++r)
                    f.coords[b * br + r] =
                        k.add(f.coords[b * br + r], k.mul(coeff, ker.block.at(r, col)));
            }
        return f;
    }

    Cochain<F> basis_cochain(int degree, std::size_t col) const {
        Cochain<F> f = zero_cochain(b_->field(), degree, b_->cochain_dim(degree));
        basis(degree).write_column(col, f.coords);
        return f;
    }

    const ComplexBackend<F>& backend() const { return *b_; }

  private:
    const ComplexBackend<F>* b_;
    mutable std::map<int, EquivariantKernel<F>> cache_;
};

template <Field F>
typename F::Elem sign_pow(const F& k, long long exponent) {
    long long e = exponent % 2;
    return e == 0 ? k.one() : k.neg(k.one());
}

/// f ⋄ g = Σ_{i=0}^{m-1} (-1)^{i(n-1)} f ⋄_i g
template <Field F>
Cochain<F> diamond(const ComplexBackend<F>& b, const Cochain<F>& f, const Cochain<F>& g) {
    const F& k = b.field();
    const int m = f.degree, n = g.degree;
    Cochain<F> acc = zero_cochain(k, m + n - 1 >= 0 ? m + n - 1 : 0,
                                  b.cochain_dim(m + n - 1 >= 0 ? m + n - 1 : 0));
    for (int i = 0; i < m; ++i) {
        auto term = b.diamond_i(f, g, i);
        auto s = sign_pow(k, static_cast<long long>(i) * (n - 1));
        acc = cochain_add(k, acc, cochain_scale(k, term, s));
    }
    return acc;
}

/// [f,g] = f ⋄ g − (-1)^{(m-1)(n-1)} g ⋄ f
template <Field F>
Cochain<F> bracket(const ComplexBackend<F>& b, const Cochain<F>& f, const Cochain<F>& g) {
    const F& k = b.field();
    auto lhs = diamond(b, f, g);
    auto rhs = cochain_scale(
        k, diamond(b, g, f),
        sign_pow(k, static_cast<long long>(f.degree - 1) * (g.degree - 1)));
    return cochain_sub(k, lhs, rhs);
}

namespace detail {

template <Field F>
Json cochain_json(const F& k, const Cochain<F>& c) {
    Json a = Json::array();
    for (const auto& e : c.coords) a.push_back(k.str(e));
    return Json{{"degree", c.degree}, {"coords", a}};
}

template <Field F>
struct IdentityChecker {
    const ComplexBackend<F>& b;
    CheckReport& rep;
    std::uint64_t seed;

    void expect_equal(const std::string& label, const Cochain<F>& lhs, const Cochain<F>& rhs,
                      Json operands) {
        if (cochain_eq(b.field(), lhs, rhs)) {
            rep.add_pass(label);
            return;
        }
        operands["seed"] = seed;
        operands["lhs"] = cochain_json(b.field(), lhs);
        operands["rhs"] = cochain_json(b.field(), rhs);
        rep.add_fail(label, std::move(operands));
    }
    void expect_zero(const std::string& label, const Cochain<F>& v, Json operands) {
        if (cochain_is_zero(b.field(), v)) {
            rep.add_pass(label);
            return;
        }
        operands["seed"] = seed;
        operands["value"] = cochain_json(b.field(), v);
        rep.add_fail(label, std::move(operands));
    }
    void expect(const std::string& label, bool ok, Json operands) {
        if (ok) {
            rep.add_pass(label);
            return;
        }
        operands["seed"] = seed;
        rep.add_fail(label, std::move(operands));
    }
};

inline std::string deg_tag(std::initializer_list<int> degrees) {
    std::string s = "(";
    bool first = true;
    for (int d : degrees) {
        if (!first) s += ",";
        s += std::to_string(d);
        first = false;
    }
    return s + ")";
}

}  // namespace detail

/// δ∘δ = 0, exhaustively on basis cochains for every degree whose square
/// stays within the degree budget.
template <Field F>
CheckReport check_complex(const ComplexBackend<F>& b, int max_degree) {
    const F& k = b.field();
    CheckReport rep;
    rep.suite = "complex";
    for (int n = 0; n + 1 <= max_degree; ++n) {
        bool ok = true;
        std::size_t bad = 0;
        const std::size_t d = b.cochain_dim(n);
        for (std::size_t i = 0; i < d && ok; ++i) {
            Cochain<F> e = zero_cochain(k, n, d);
            e.coords[i] = k.one();
            if (!cochain_is_zero(k, b.delta(b.delta(e)))) {
                ok = false;
                bad = i;
            }
        }
        if (ok)
            rep.add_pass("delta-squared/(" + std::to_string(n) + ")");
        else
            rep.add_fail("delta-squared/(" + std::to_string(n) + ")",
                         Json{{"degree", n}, {"basis_cochain", bad}});
    }
    return rep;
}

/// Weak comp algebra axioms. Axiom (3) runs in weak mode (g or h the
/// distinguished degree-2 element) on the full complex; with `full_mode` the
/// sampling is restricted to the equivariant subcomplex and (3) is checked for
/// arbitrary arguments.
template <Field F>
CheckReport check_weak_comp(const ComplexBackend<F>& b, int max_total_degree, int samples,
                            std::uint64_t seed, bool full_mode = false) {
    const F& k = b.field();
    CheckReport rep;
    rep.suite = full_mode ? "weak-comp/full" : "weak-comp";
    CochainSampler<F> sampler(k, seed);
    EquivariantSpace<F> equi(b);
    detail::IdentityChecker<F> chk{b, rep, seed};
    const auto pi = b.pi();

    auto sample_at = [&](int degree, std::uint64_t purpose, int s) {
        return full_mode ? equi.sample(sampler, degree, purpose, static_cast<std::uint64_t>(s))
                         : sampler.cochain(b, degree, purpose, static_cast<std::uint64_t>(s));
    };

    // axiom (4), once
    chk.expect_equal("axiom4/pi⋄0pi=pi⋄1pi", b.diamond_i(pi, pi, 0), b.diamond_i(pi, pi, 1),
                     Json::object());

    for (int m = 0; m <= max_total_degree; ++m)
        for (int n = 0; m + n <= max_total_degree; ++n) {
            // axiom (1): vanishing beyond the first argument's degree
            for (int s = 0; s < samples; ++s) {
                auto f = sample_at(m, 11, s);
                auto g = sample_at(n, 12, s);
                std::string tag = "axiom1/" + detail::deg_tag({m, n}) + "/s" + std::to_string(s);
                bool ok = cochain_is_zero(k, b.diamond_i(f, g, m)) &&
                          cochain_is_zero(k, b.diamond_i(f, g, m + 1)) &&
                          cochain_is_zero(k, b.diamond_i(f, g, -1));
                chk.expect(tag, ok, Json{{"degrees", {m, n}}});
            }
            for (int p = 0; m + n + p <= max_total_degree; ++p) {
                for (int s = 0; s < samples; ++s) {
                    auto f = sample_at(m, 1, s);
                    auto g = sample_at(n, 2, s);
                    auto h = sample_at(p, 3, s);
                    // axiom (2): nested composition, i ≤ j < n+i
                    for (int i = 0; i < m; ++i)
                        for (int j = i; j < n + i; ++j) {
                            auto lhs = b.diamond_i(b.diamond_i(f, g, i), h, j);
                            auto rhs = b.diamond_i(f, b.diamond_i(g, h, j - i), i);
                            chk.expect_equal("axiom2/" + detail::deg_tag({m, n, p}) + "/i" +
                                                 std::to_string(i) + "j" + std::to_string(j) +
                                                 "/s" + std::to_string(s),
                                             lhs, rhs,
                                             Json{{"degrees", {m, n, p}},
                                                  {"i", i},
                                                  {"j", j},
                                                  {"f", detail::cochain_json(k, f)},
                                                  {"g", detail::cochain_json(k, g)},
                                                  {"h", detail::cochain_json(k, h)}});
                        }
                    // axiom (3) with arbitrary arguments, disjoint composition
                    if (full_mode)
                        for (int i = 1; i < m; ++i)
                            for (int j = 0; j < i; ++j) {
                                auto lhs = b.diamond_i(b.diamond_i(f, g, i), h, j);
                                auto rhs = b.diamond_i(b.diamond_i(f, h, j), g, i + p - 1);
                                chk.expect_equal("axiom3-full/" + detail::deg_tag({m, n, p}) +
                                                     "/i" + std::to_string(i) + "j" +
                                                     std::to_string(j) + "/s" + std::to_string(s),
                                                 lhs, rhs,
                                                 Json{{"degrees", {m, n, p}},
                                                      {"i", i},
                                                      {"j", j},
                                                      {"f", detail::cochain_json(k, f)},
                                                      {"g", detail::cochain_json(k, g)},
                                                      {"h", detail::cochain_json(k, h)}});
                            }
                }
            }
        }

    // axiom (3) in weak mode: one argument is the distinguished degree-2
    // element, which counts toward the degree budget
    if (!full_mode)
        for (int m = 0; m + 2 <= max_total_degree; ++m)
            for (int d = 0; m + d + 2 <= max_total_degree; ++d)
                for (int s = 0; s < samples; ++s) {
                    auto f = sample_at(m, 13, s);
                    auto other = sample_at(d, 14, s);
                    for (int i = 1; i < m; ++i)
                        for (int j = 0; j < i; ++j) {
                            {  // h = π, triple (m, d, 2)
                                auto lhs = b.diamond_i(b.diamond_i(f, other, i), pi, j);
                                auto rhs = b.diamond_i(b.diamond_i(f, pi, j), other, i + 1);
                                chk.expect_equal("axiom3-weak-h/" + detail::deg_tag({m, d}) + "/i" +
                                                     std::to_string(i) + "j" + std::to_string(j) +
                                                     "/s" + std::to_string(s),
                                                 lhs, rhs,
                                                 Json{{"degrees", {m, d, 2}},
                                                      {"i", i},
                                                      {"j", j},
                                                      {"f", detail::cochain_json(k, f)},
                                                      {"g", detail::cochain_json(k, other)}});
                            }
                            {  // g = π, triple (m, 2, d)
                                auto lhs = b.diamond_i(b.diamond_i(f, pi, i), other, j);
                                auto rhs = b.diamond_i(b.diamond_i(f, other, j), pi, i + d - 1);
                                chk.expect_equal("axiom3-weak-g/" + detail::deg_tag({m, d}) + "/i" +
                                                     std::to_string(i) + "j" + std::to_string(j) +
                                                     "/s" + std::to_string(s),
                                                 lhs, rhs,
                                                 Json{{"degrees", {m, 2, d}},
                                                      {"i", i},
                                                      {"j", j},
                                                      {"f", detail::cochain_json(k, f)},
                                                      {"h", detail::cochain_json(k, other)}});
                            }
                        }
                }
    return rep;
}

/// The differential is a degree-one derivation for both products.
template <Field F>
CheckReport check_derivation(const ComplexBackend<F>& b, int max_pair_degree, int samples,
                             std::uint64_t seed) {
    const F& k = b.field();
    CheckReport rep;
    rep.suite = "cup-derivation";
    CochainSampler<F> sampler(k, seed);
    detail::IdentityChecker<F> chk{b, rep, seed};
    for (int m = 0; m <= max_pair_degree; ++m)
        for (int n = 0; m + n <= max_pair_degree; ++n)
            for (int s = 0; s < samples; ++s) {
                auto f = sampler.cochain(b, m, 21, static_cast<std::uint64_t>(s));
                auto g = sampler.cochain(b, n, 22, static_cast<std::uint64_t>(s));
                auto sign = sign_pow(k, m);
                auto ops = Json{{"degrees", {m, n}},
                                {"f", detail::cochain_json(k, f)},
                                {"g", detail::cochain_json(k, g)}};
                chk.expect_equal(
                    "derivation-cup/" + detail::deg_tag({m, n}) + "/s" + std::to_string(s),
                    b.delta(b.cup(f, g)),
                    cochain_add(k, b.cup(b.delta(f), g), cochain_scale(k, b.cup(f, b.delta(g)), sign)),
                    ops);
                chk.expect_equal(
                    "derivation-sqcup/" + detail::deg_tag({m, n}) + "/s" + std::to_string(s),
                    b.delta(b.sqcup(f, g)),
                    cochain_add(k, b.sqcup(b.delta(f), g),
                                cochain_scale(k, b.sqcup(f, b.delta(g)), sign)),
                    ops);
            }
    return rep;
}

/// Both products and the differential are recovered from the comp operations:
/// f∪g = (π⋄₀f)⋄_m g, f⊔g = (π⋄₁g)⋄₀f,
/// δf = (-1)^{m-1} π⋄₀f − Σ_{i=1..m} (-1)^{i-1} f⋄_{i-1}π + π⋄₁f.
template <Field F>
CheckReport check_recovery(const ComplexBackend<F>& b, int max_pair_degree, int samples,
                           std::uint64_t seed) {
    const F& k = b.field();
    CheckReport rep;
    rep.suite = "recovery";
    CochainSampler<F> sampler(k, seed);
    detail::IdentityChecker<F> chk{b, rep, seed};
    const auto pi = b.pi();
    for (int m = 0; m <= max_pair_degree; ++m) {
        for (int n = 0; m + n <= max_pair_degree; ++n)
            for (int s = 0; s < samples; ++s) {
                auto f = sampler.cochain(b, m, 31, static_cast<std::uint64_t>(s));
                auto g = sampler.cochain(b, n, 32, static_cast<std::uint64_t>(s));
                auto ops = Json{{"degrees", {m, n}},
                                {"f", detail::cochain_json(k, f)},
                                {"g", detail::cochain_json(k, g)}};
                chk.expect_equal("recovery-cup/" + detail::deg_tag({m, n}) + "/s" + std::to_string(s),
                                 b.cup(f, g), b.diamond_i(b.diamond_i(pi, f, 0), g, m), ops);
                chk.expect_equal(
                    "recovery-sqcup/" + detail::deg_tag({m, n}) + "/s" + std::to_string(s),
                    b.sqcup(f, g), b.diamond_i(b.diamond_i(pi, g, 1), f, 0), ops);
            }
        for (int s = 0; s < samples; ++s) {
            auto f = sampler.cochain(b, m, 33, static_cast<std::uint64_t>(s));
            auto acc = cochain_scale(k, b.diamond_i(pi, f, 0), sign_pow(k, m - 1));
            for (int i = 1; i <= m; ++i)
                acc = cochain_add(
                    k, acc,
                    cochain_scale(k, b.diamond_i(f, pi, i - 1), k.neg(sign_pow(k, i - 1))));
            acc = cochain_add(k, acc, b.diamond_i(pi, f, 1));
            chk.expect_equal("recovery-delta/(" + std::to_string(m) + ")/s" + std::to_string(s),
                             b.delta(f), acc,
                             Json{{"degrees", {m}}, {"f", detail::cochain_json(k, f)}});
        }
    }
    return rep;
}

/// Associativity of both products and two-sided unitality of the degree-zero
/// counit element.
template <Field F>
CheckReport check_dga(const ComplexBackend<F>& b, int max_total_degree, int samples,
                      std::uint64_t seed) {
    const F& k = b.field();
    CheckReport rep;
    rep.suite = "dga";
    CochainSampler<F> sampler(k, seed);
    detail::IdentityChecker<F> chk{b, rep, seed};
    const auto eps = b.eps();
    for (int m = 0; m <= max_total_degree; ++m) {
        for (int s = 0; s < samples; ++s) {
            auto f = sampler.cochain(b, m, 41, static_cast<std::uint64_t>(s));
            auto ops = Json{{"degrees", {m}}, {"f", detail::cochain_json(k, f)}};
            chk.expect_equal("unit-cup-left/(" + std::to_string(m) + ")/s" + std::to_string(s),
                             b.cup(eps, f), f, ops);
            chk.expect_equal("unit-cup-right/(" + std::to_string(m) + ")/s" + std::to_string(s),
                             b.cup(f, eps), f, ops);
            chk.expect_equal("unit-sqcup-left/(" + std::to_string(m) + ")/s" + std::to_string(s),
                             b.sqcup(eps, f), f, ops);
            chk.expect_equal("unit-sqcup-right/(" + std::to_string(m) + ")/s" + std::to_string(s),
                             b.sqcup(f, eps), f, ops);
        }
        for (int n = 0; m + n <= max_total_degree; ++n)
            for (int p = 0; m + n + p <= max_total_degree; ++p)
                for (int s = 0; s < samples; ++s) {
                    auto f = sampler.cochain(b, m, 42, static_cast<std::uint64_t>(s));
                    auto g = sampler.cochain(b, n, 43, static_cast<std::uint64_t>(s));
                    auto h = sampler.cochain(b, p, 44, static_cast<std::uint64_t>(s));
                    auto ops = Json{{"degrees", {m, n, p}},
                                    {"f", detail::cochain_json(k, f)},
                                    {"g", detail::cochain_json(k, g)},
                                    {"h", detail::cochain_json(k, h)}};
                    chk.expect_equal(
                        "assoc-cup/" + detail::deg_tag({m, n, p}) + "/s" + std::to_string(s),
                        b.cup(b.cup(f, g), h), b.cup(f, b.cup(g, h)), ops);
                    chk.expect_equal(
                        "assoc-sqcup/" + detail::deg_tag({m, n, p}) + "/s" + std::to_string(s),
                        b.sqcup(b.sqcup(f, g), h), b.sqcup(f, b.sqcup(g, h)), ops);
                }
    }
    return rep;
}

/// The equivariant subspaces form a subcomplex closed under the comp
/// operations, with the distinguished degree-2 element inside.
template <Field F>
CheckReport check_equivariant_closure(const ComplexBackend<F>& b, int max_degree, int samples,
                                      std::uint64_t seed) {
    const F& k = b.field();
    CheckReport rep;
    rep.suite = "equivariant/closure";
    CochainSampler<F> sampler(k, seed);
    EquivariantSpace<F> equi(b);
    detail::IdentityChecker<F> chk{b, rep, seed};

    chk.expect("pi-equivariant", b.is_equivariant(b.pi()), Json::object());
    chk.expect("eps-equivariant", b.is_equivariant(b.eps()), Json::object());

    for (int n = 0; n <= max_degree; ++n) {
        bool ok = true;
        std::size_t bad = 0;
        for (std::size_t col = 0; col < equi.dim(n) && ok; ++col) {
            if (!b.is_equivariant(b.delta(equi.basis_cochain(n, col)))) {
                ok = false;
                bad = col;
            }
        }
        chk.expect("delta-closure/(" + std::to_string(n) + ")", ok,
                   Json{{"degree", n}, {"basis_column", bad}});
    }
    for (int m = 0; m <= max_degree; ++m)
        for (int n = 0; m + n - 1 <= max_degree && n <= max_degree; ++n)
            for (int s = 0; s < samples; ++s) {
                auto f = equi.sample(sampler, m, 51, static_cast<std::uint64_t>(s));
                auto g = equi.sample(sampler, n, 52, static_cast<std::uint64_t>(s));
                bool ok = true;
                long bad = -1;
                for (int i = 0; i < m && ok; ++i)
                    if (!b.is_equivariant(b.diamond_i(f, g, i))) {
                        ok = false;
                        bad = i;
                    }
                chk.expect("diamond-closure/" + detail::deg_tag({m, n}) + "/s" + std::to_string(s),
                           ok,
                           Json{{"degrees", {m, n}},
                                {"i", bad},
                                {"f", detail::cochain_json(k, f)},
                                {"g", detail::cochain_json(k, g)}});
            }
    return rep;
}

/// Graded antisymmetry and the graded Jacobi identity for the bracket, exact
/// at cochain level, on the equivariant subcomplex.
template <Field F>
CheckReport check_jacobi_equivariant(const ComplexBackend<F>& b, int max_degree, int samples,
                                     std::uint64_t seed, int max_total_degree = 0) {
    const F& k = b.field();
    CheckReport rep;
    rep.suite = "equivariant/jacobi";
    CochainSampler<F> sampler(k, seed);
    EquivariantSpace<F> equi(b);
    detail::IdentityChecker<F> chk{b, rep, seed};
    if (max_total_degree == 0) max_total_degree = 3 * max_degree;
    for (int m = 0; m <= max_degree; ++m)
        for (int n = 0; n <= max_degree; ++n) {
            for (int s = 0; s < samples; ++s) {
                auto f = equi.sample(sampler, m, 61, static_cast<std::uint64_t>(s));
                auto g = equi.sample(sampler, n, 62, static_cast<std::uint64_t>(s));
                auto anti = cochain_add(
                    k, bracket(b, f, g),
                    cochain_scale(k, bracket(b, g, f), sign_pow(k, (m - 1) * (n - 1))));
                chk.expect_zero("antisymmetry/" + detail::deg_tag({m, n}) + "/s" + std::to_string(s),
                                anti,
                                Json{{"degrees", {m, n}},
                                     {"f", detail::cochain_json(k, f)},
                                     {"g", detail::cochain_json(k, g)}});
            }
            for (int p = 0; p <= max_degree; ++p) {
                if (m + n + p > max_total_degree || m + n + p < 2) continue;
                const int target = m + n + p - 2;
                for (int s = 0; s < samples; ++s) {
                    auto f = equi.sample(sampler, m, 63, static_cast<std::uint64_t>(s));
                    auto g = equi.sample(sampler, n, 64, static_cast<std::uint64_t>(s));
                    auto h = equi.sample(sampler, p, 65, static_cast<std::uint64_t>(s));
                    // a term with an inner bracket in negative degree vanishes
                    auto term = [&](const Cochain<F>& a, const Cochain<F>& bb, const Cochain<F>& cc,
                                    int da, int dc) {
                        if (bb.degree + cc.degree < 1)
                            return zero_cochain(k, target, b.cochain_dim(target));
                        return cochain_scale(k, bracket(b, a, bracket(b, bb, cc)),
                                             sign_pow(k, (da - 1) * (dc - 1)));
                    };
                    auto jac = cochain_add(k, term(f, g, h, m, p),
                                           cochain_add(k, term(g, h, f, n, m), term(h, f, g, p, n)));
                    chk.expect_zero(
                        "jacobi/" + detail::deg_tag({m, n, p}) + "/s" + std::to_string(s), jac,
                        Json{{"degrees", {m, n, p}},
                             {"f", detail::cochain_json(k, f)},
                             {"g", detail::cochain_json(k, g)},
                             {"h", detail::cochain_json(k, h)}});
                }
            }
        }
    return rep;
}

}  // namespace dy

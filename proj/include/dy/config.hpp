#pragma once

#include "dy/field.hpp"
#include "dy/group.hpp"
#include "dy/hopf.hpp"
#include "dy/report.hpp"
#include "dy/vecg.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace dy {

/// Configuration problem with a pointer to the offending field; maps to
/// exit code 2 at the command line.
struct ConfigError : Error {
    ConfigError(std::string pointer, const std::string& message)
        : Error(message + " (at " + pointer + ")"), where(std::move(pointer)) {}
    std::string where;
};

struct FieldSpec {
    bool rationals = true;
    std::uint64_t p = 0;

    std::string name() const { return rationals ? "Q" : "F" + std::to_string(p); }
};

FieldSpec parse_field(const Json& j, const std::string& path);
FieldSpec parse_field_name(const std::string& name);
FiniteGroup parse_group(const Json& j, const std::string& path);

struct JobConfig {
    Json raw;
    FieldSpec field;
    std::string backend;  // "vec_g" | "hopf"
    int max_degree = 0;
    std::uint64_t seed = 1;
    int samples = 10;
    std::size_t memory_cap = 200000;
};

JobConfig parse_job_config(const Json& j);

// ---- exact scalars and matrices from JSON -----------------------------------

template <Field F>
typename F::Elem scalar_of(const F& k, const Json& j, const std::string& path) {
    if (j.is_number_integer()) return k.from_long(j.get<long long>());
    if (j.is_string()) {
        try {
            return k.parse(j.get<std::string>());
        } catch (const Error& e) {
            throw ConfigError(path, e.what());
        }
    }
    throw ConfigError(path, "scalars must be integers or strings like \"3\" or \"-1/2\"");
}

template <Field F>
Matrix<F> matrix_of(const F& k, const Json& j, std::size_t rows, std::size_t cols,
                    const std::string& path) {
    if (!j.is_array() || j.size() != rows)
        throw ConfigError(path, "expected a matrix with " + std::to_string(rows) + " rows");
    Matrix<F> m(k, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || row.size() != cols)
            throw ConfigError(path + "/" + std::to_string(r),
                              "expected a row of length " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = scalar_of(k, row[c], path + "/" + std::to_string(r) + "/" + std::to_string(c));
    }
    return m;
}

template <Field F>
std::vector<typename F::Elem> vector_of(const F& k, const Json& j, std::size_t len,
                                        const std::string& path) {
    if (!j.is_array() || j.size() != len)
        throw ConfigError(path, "expected a vector of length " + std::to_string(len));
    std::vector<typename F::Elem> v;
    for (std::size_t i = 0; i < len; ++i)
        v.push_back(scalar_of(k, j[i], path + "/" + std::to_string(i)));
    return v;
}

// ---- coefficient / Hopf descriptors ------------------------------------------

template <Field F>
CenterCoalgebra<F> parse_center_coalgebra(const F& k, const Json& j, const FiniteGroup& grp,
                                          const std::string& path) {
    if (!j.is_object()) throw ConfigError(path, "coefficient must be an object");
    if (j.contains("preset")) {
        const std::string preset = j.at("preset").get<std::string>();
        if (preset == "unit") return unit_coefficient(k, grp);
        if (preset == "triangular") return triangular_coefficient(k, grp);
        if (preset == "grouplike") {
            if (!j.contains("support")) throw ConfigError(path, "grouplike preset needs a support list");
            std::vector<std::size_t> support;
            const Json& s = j.at("support");
            for (std::size_t i = 0; i < s.size(); ++i) {
                const Json& e = s[i];
                if (e.is_number_unsigned() || e.is_number_integer()) {
                    support.push_back(e.get<std::size_t>());
                } else if (e.is_string()) {
                    auto name = e.get<std::string>();
                    auto it = std::find(grp.names.begin(), grp.names.end(), name);
                    if (it == grp.names.end())
                        throw ConfigError(path + "/support/" + std::to_string(i),
                                          "unknown group element '" + name + "'");
                    support.push_back(static_cast<std::size_t>(it - grp.names.begin()));
                } else {
                    throw ConfigError(path + "/support/" + std::to_string(i),
                                      "support entries are element indices or labels");
                }
            }
            try {
                return grouplike_coefficient(k, grp, support);
            } catch (const Error& e) {
                throw ConfigError(path + "/support", e.what());
            }
        }
        throw ConfigError(path + "/preset", "unknown coefficient preset '" + preset + "'");
    }
    // explicit matrices
    for (const char* key : {"grade_dims", "action", "comul", "counit"})
        if (!j.contains(key)) throw ConfigError(path, std::string("missing field '") + key + "'");
    CenterCoalgebra<F> c;
    c.field = k;
    c.grp = grp;
    const Json& gd = j.at("grade_dims");
    if (!gd.is_array() || gd.size() != grp.order)
        throw ConfigError(path + "/grade_dims", "need one dimension per group element");
    std::size_t dim = 0;
    for (std::size_t i = 0; i < gd.size(); ++i) {
        c.grade_dims.push_back(gd[i].get<std::size_t>());
        dim += c.grade_dims.back();
    }
    const Json& act = j.at("action");
    if (!act.is_array() || act.size() != grp.order)
        throw ConfigError(path + "/action", "need one matrix per group element");
    for (std::size_t x = 0; x < grp.order; ++x)
        c.action.push_back(matrix_of(k, act[x], dim, dim, path + "/action/" + std::to_string(x)));
    c.comul = matrix_of(k, j.at("comul"), dim * dim, dim, path + "/comul");
    c.counit = Matrix<F>(k, 1, dim);
    auto counit_vec = vector_of(k, j.at("counit"), dim, path + "/counit");
    for (std::size_t i = 0; i < dim; ++i) c.counit.at(0, i) = counit_vec[i];
    try {
        c.build_cache();
    } catch (const Error& e) {
        throw ConfigError(path, e.what());
    }
    return c;
}

template <Field F>
HopfData<F> parse_hopf(const F& k, const Json& j, const std::string& path) {
    if (!j.is_object()) throw ConfigError(path, "hopf descriptor must be an object");
    if (j.contains("preset")) {
        const std::string preset = j.at("preset").get<std::string>();
        if (preset == "sweedler") {
            try {
                return sweedler_algebra(k);
            } catch (const Error& e) {
                throw ConfigError(path + "/preset", e.what());
            }
        }
        if (preset == "group_algebra" || preset == "dual_group_algebra") {
            if (!j.contains("group")) throw ConfigError(path, preset + " preset needs a group");
            auto grp = parse_group(j.at("group"), path + "/group");
            return preset == "group_algebra" ? group_algebra(k, grp) : dual_group_algebra(k, grp);
        }
        throw ConfigError(path + "/preset", "unknown hopf preset '" + preset + "'");
    }
    for (const char* key : {"dim", "mult", "unit", "comul", "counit", "antipode"})
        if (!j.contains(key)) throw ConfigError(path, std::string("missing field '") + key + "'");
    HopfData<F> h;
    h.field = k;
    h.dim = j.at("dim").get<std::size_t>();
    h.mult = matrix_of(k, j.at("mult"), h.dim, h.dim * h.dim, path + "/mult");
    h.unit = vector_of(k, j.at("unit"), h.dim, path + "/unit");
    h.comul = matrix_of(k, j.at("comul"), h.dim * h.dim, h.dim, path + "/comul");
    auto counit_vec = vector_of(k, j.at("counit"), h.dim, path + "/counit");
    h.counit = Matrix<F>(k, 1, h.dim);
    for (std::size_t i = 0; i < h.dim; ++i) h.counit.at(0, i) = counit_vec[i];
    h.antipode = matrix_of(k, j.at("antipode"), h.dim, h.dim, path + "/antipode");
    try {
        h.check_shapes();
    } catch (const Error& e) {
        throw ConfigError(path, e.what());
    }
    return h;
}

template <Field F>
YDCoalgebra<F> parse_yd(const F& k, const Json& j, const HopfData<F>& h, const std::string& path) {
    if (!j.is_object()) throw ConfigError(path, "coefficient descriptor must be an object");
    if (j.contains("preset")) {
        const std::string preset = j.at("preset").get<std::string>();
        if (preset == "trivial") return trivial_yd(k, h);
        throw ConfigError(path + "/preset", "unknown coefficient preset '" + preset + "'");
    }
    for (const char* key : {"dim", "action", "coaction", "comul", "counit"})
        if (!j.contains(key)) throw ConfigError(path, std::string("missing field '") + key + "'");
    YDCoalgebra<F> u;
    u.dim_u = j.at("dim").get<std::size_t>();
    u.action = matrix_of(k, j.at("action"), u.dim_u, h.dim * u.dim_u, path + "/action");
    u.coaction = matrix_of(k, j.at("coaction"), h.dim * u.dim_u, u.dim_u, path + "/coaction");
    u.comul_u = matrix_of(k, j.at("comul"), u.dim_u * u.dim_u, u.dim_u, path + "/comul");
    auto counit_vec = vector_of(k, j.at("counit"), u.dim_u, path + "/counit");
    u.counit_u = Matrix<F>(k, 1, u.dim_u);
    for (std::size_t i = 0; i < u.dim_u; ++i) u.counit_u.at(0, i) = counit_vec[i];
    try {
        u.check_shapes(h.dim);
    } catch (const Error& e) {
        throw ConfigError(path, e.what());
    }
    return u;
}

}  // namespace dy

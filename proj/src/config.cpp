#include "dy/config.hpp"

#include <algorithm>

namespace dy {

FieldSpec parse_field(const Json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError(path, "field must be an object with a 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rationals") return FieldSpec{true, 0};
    if (kind == "prime_field") {
        if (!j.contains("p")) throw ConfigError(path, "prime_field needs 'p'");
        std::uint64_t p = j.at("p").get<std::uint64_t>();
        if (p < 2 || p >= (1ull << 31) || !PrimeField::is_prime(p))
            throw ConfigError(path + "/p", "p must be a prime in [2, 2^31)");
        return FieldSpec{false, p};
    }
    throw ConfigError(path + "/kind", "field kind must be 'rationals' or 'prime_field'");
}

FieldSpec parse_field_name(const std::string& name) {
    if (name == "Q" || name == "rationals") return FieldSpec{true, 0};
    if (name.size() > 1 && (name[0] == 'F' || name[0] == 'f')) {
        try {
            std::uint64_t p = std::stoull(name.substr(1));
            if (p >= 2 && p < (1ull << 31) && PrimeField::is_prime(p)) return FieldSpec{false, p};
        } catch (...) {
        }
    }
    throw ConfigError("--field", "field must be 'Q' or 'F<p>' for a prime p");
}

FiniteGroup parse_group(const Json& j, const std::string& path) {
    if (!j.is_object()) throw ConfigError(path, "group must be an object");
    try {
        if (j.contains("preset")) {
            const std::string preset = j.at("preset").get<std::string>();
            if (preset == "cyclic") return cyclic_group(j.at("n").get<std::size_t>());
            if (preset == "dihedral") return dihedral_group(j.at("n").get<std::size_t>());
            if (preset == "symmetric3") return symmetric3();
            if (preset == "klein_four") return klein_four();
            if (preset == "product") {
                const Json& factors = j.at("factors");
                if (!factors.is_array() || factors.size() < 2)
                    throw ConfigError(path + "/factors", "product needs at least two factors");
                FiniteGroup g = parse_group(factors[0], path + "/factors/0");
                for (std::size_t i = 1; i < factors.size(); ++i)
                    g = direct_product(g, parse_group(factors[i], path + "/factors/" + std::to_string(i)));
                return g;
            }
            throw ConfigError(path + "/preset", "unknown group preset '" + preset + "'");
        }
        if (j.contains("elements") && j.contains("table")) {
            std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
            const Json& tj = j.at("table");
            if (!tj.is_array() || tj.size() != names.size())
                throw ConfigError(path + "/table", "table must be square with one row per label");
            std::vector<std::size_t> table;
            for (std::size_t r = 0; r < tj.size(); ++r) {
                if (!tj[r].is_array() || tj[r].size() != names.size())
                    throw ConfigError(path + "/table/" + std::to_string(r),
                                      "table row has wrong length");
                for (const auto& cell : tj[r]) table.push_back(cell.get<std::size_t>());
            }
            return make_group(std::move(names), std::move(table));
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(path, e.what());
    } catch (const Json::exception& e) {
        throw ConfigError(path, e.what());
    }
    throw ConfigError(path, "group needs either a 'preset' or 'elements'+'table'");
}

JobConfig parse_job_config(const Json& j) {
    if (!j.is_object()) throw ConfigError("/", "configuration must be a JSON object");
    JobConfig cfg;
    cfg.raw = j;
    if (!j.contains("field")) throw ConfigError("/field", "missing");
    cfg.field = parse_field(j.at("field"), "/field");
    if (!j.contains("backend")) throw ConfigError("/backend", "missing");
    cfg.backend = j.at("backend").get<std::string>();
    if (cfg.backend != "vec_g" && cfg.backend != "hopf")
        throw ConfigError("/backend", "backend must be 'vec_g' or 'hopf'");
    if (cfg.backend == "vec_g") {
        if (!j.contains("group")) throw ConfigError("/group", "vec_g jobs need a group");
        if (!j.contains("coefficient")) throw ConfigError("/coefficient", "vec_g jobs need a coefficient");
    } else {
        if (!j.contains("hopf")) throw ConfigError("/hopf", "hopf jobs need a hopf descriptor");
        if (!j.contains("yd_coefficient"))
            throw ConfigError("/yd_coefficient", "hopf jobs need a coefficient descriptor");
    }
    cfg.max_degree = cfg.backend == "vec_g" ? 4 : 3;
    try {
        if (j.contains("max_degree")) cfg.max_degree = j.at("max_degree").get<int>();
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
        if (j.contains("memory_cap")) cfg.memory_cap = j.at("memory_cap").get<std::size_t>();
    } catch (const Json::exception& e) {
        throw ConfigError("/", e.what());
    }
    if (cfg.max_degree < 0) throw ConfigError("/max_degree", "must be nonnegative");
    if (cfg.samples <= 0) throw ConfigError("/samples", "must be positive");
    if (cfg.memory_cap == 0) throw ConfigError("/memory_cap", "must be positive");
    return cfg;
}

}  // namespace dy

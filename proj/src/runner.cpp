#include "dy/runner.hpp"

#include "dy/cohomology.hpp"
#include "dy/comp.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <memory>
#include <sstream>

namespace dy {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

struct SuiteTimer {
    std::string name;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~SuiteTimer() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << "  [suite " << name << "] " << ms << " ms\n";
    }
};

template <Field F>
struct Job {
    F field;
    JobConfig cfg;
    std::unique_ptr<ComplexBackend<F>> backend;
    std::vector<CheckReport> validation;
};

template <Field F>
Job<F> build_job(const F& k, const JobConfig& cfg) {
    Job<F> job{k, cfg, nullptr, {}};
    if (cfg.backend == "vec_g") {
        auto grp = parse_group(cfg.raw.at("group"), "/group");
        auto coeff = parse_center_coalgebra(k, cfg.raw.at("coefficient"), grp, "/coefficient");
        job.validation.push_back(validate_center_coalgebra(coeff));
        job.backend = std::make_unique<VecGBackend<F>>(std::move(coeff), cfg.max_degree,
                                                       cfg.memory_cap);
    } else {
        auto h = parse_hopf(k, cfg.raw.at("hopf"), "/hopf");
        auto u = parse_yd(k, cfg.raw.at("yd_coefficient"), h, "/yd_coefficient");
        job.validation.push_back(validate_hopf(h));
        job.validation.push_back(validate_yd_coalgebra(h, u));
        job.backend = std::make_unique<HopfBackend<F>>(std::move(h), std::move(u), cfg.max_degree,
                                                       cfg.memory_cap);
    }
    return job;
}

template <Field F>
CheckReport run_suite(const Job<F>& job, const std::string& suite, std::uint64_t seed,
                      int samples) {
    const ComplexBackend<F>& b = *job.backend;
    const int cap = job.cfg.max_degree;
    SuiteTimer timer{suite};
    if (suite == "complex") return check_complex(b, cap);
    if (suite == "cup-derivation") return check_derivation(b, std::min(cap, 4), samples, seed);
    if (suite == "weak-comp") {
        auto rep = check_weak_comp(b, std::min(2 * cap, 6), samples, seed, /*full_mode=*/false);
        auto full = check_weak_comp(b, std::min(2 * cap, 6), samples, seed, /*full_mode=*/true);
        rep.suite = "weak-comp";
        for (auto& e : full.entries) e.identity = "full-mode/" + e.identity;
        rep.merge(full);
        return rep;
    }
    if (suite == "recovery") return check_recovery(b, cap, samples, seed);
    if (suite == "dga") return check_dga(b, cap, samples, seed);
    if (suite == "equivariant") {
        auto rep = check_equivariant_closure(b, std::min(cap, 3), samples, seed);
        rep.suite = "equivariant";
        auto jac = check_jacobi_equivariant(b, std::min(cap, 3), samples, seed, 7);
        rep.merge(jac);
        EquivariantSpace<F> equi(b);
        for (int n = 0; n <= std::min(cap, 3); ++n)
            rep.add_pass("dimensions/(" + std::to_string(n) + ")=" +
                         std::to_string(equi.dim(n)) + "/" + std::to_string(b.cochain_dim(n)));
        return rep;
    }
    if (suite == "graded-commutativity") {
        CheckReport rep;
        rep.suite = "graded-commutativity";
        ComplexSlices<F> cx(b, /*equivariant=*/false);
        for (int m = 1; m <= cap; ++m)
            for (int n = m; m + n <= cap; ++n) rep.merge(check_graded_commutativity(cx, m, n));
        return rep;
    }
    if (suite == "gerstenhaber")
        return check_gerstenhaber_equivariant(b, std::min(cap, 3), samples, seed);
    throw ConfigError("--suite", "unknown suite '" + suite + "'");
}

template <Field F>
RunResult run_typed(const F& k, const std::string& command, const JobConfig& cfg,
                    const RunOptions& opts) {
    RunResult result;
    JobConfig effective = cfg;
    if (opts.max_degree) effective.max_degree = *opts.max_degree;
    if (opts.seed) effective.seed = *opts.seed;
    if (opts.samples) effective.samples = *opts.samples;

    Json meta{{"tool", kToolName},
              {"version", kToolVersion},
              {"command", command},
              {"backend", effective.backend},
              {"field", effective.field.name()},
              {"max_degree", effective.max_degree},
              {"seed", effective.seed},
              {"samples", effective.samples},
              {"config_hash", "fnv1a64:" + std::to_string(fnv1a64(cfg.raw.dump()))}};

    Job<F> job = build_job(k, effective);
    Json validation = Json::array();
    bool valid = true;
    for (const auto& rep : job.validation) {
        validation.push_back(rep.to_json());
        valid = valid && rep.all_pass();
    }

    Json report{{"meta", meta}, {"validation", validation}};
    bool ok = valid;

    if (!valid) {
        // structural axioms failed; computations on top of them are meaningless
        report["status"] = "fail";
        result.report = std::move(report);
        result.ok = false;
        return result;
    }

    if (command == "betti" || command == "report") {
        ComplexSlices<F> cx(*job.backend, opts.equivariant);
        auto table = betti_table(cx, effective.max_degree);
        report["betti"] = Json{{"equivariant", opts.equivariant}, {"values", table}};
        std::ostringstream csv;
        csv << "degree,dimension\n";
        for (std::size_t n = 0; n < table.size(); ++n) csv << n << "," << table[n] << "\n";
        result.betti_csv = csv.str();
    }
    if (command == "check" || command == "report") {
        std::vector<std::string> suites;
        if (command == "check") {
            if (opts.suite.empty()) throw ConfigError("--suite", "check needs a suite name");
            suites.push_back(opts.suite);
        } else {
            suites = known_suites();
        }
        Json suite_reports = Json::array();
        for (const auto& s : suites) {
            auto rep = run_suite(job, s, effective.seed, effective.samples);
            ok = ok && rep.all_pass();
            suite_reports.push_back(rep.to_json());
        }
        report["suites"] = suite_reports;
    }
    if (command != "validate" && command != "betti" && command != "check" && command != "report")
        throw ConfigError("command", "unknown command '" + command + "'");

    report["status"] = ok ? "pass" : "fail";
    result.report = std::move(report);
    result.ok = ok;
    return result;
}

}  // namespace

RunResult run_command(const std::string& command, const Json& config, const RunOptions& opts) {
    JobConfig cfg = parse_job_config(config);
    if (opts.field_override) cfg.field = parse_field_name(*opts.field_override);
    if (cfg.field.rationals) return run_typed(RationalField{}, command, cfg, opts);
    return run_typed(PrimeField{cfg.field.p}, command, cfg, opts);
}

}  // namespace dy

#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace dy {

using Json = nlohmann::json;

/// One verified identity: pass, or fail with a reproducible counterexample.
struct CheckEntry {
    std::string identity;
    bool pass = true;
    Json witness;  // seed, degrees, operand coordinates, left/right values on failure
};

struct CheckReport {
    std::string suite;
    std::vector<CheckEntry> entries;

    void add_pass(std::string identity) { entries.push_back({std::move(identity), true, {}}); }
    void add_fail(std::string identity, Json witness) {
        entries.push_back({std::move(identity), false, std::move(witness)});
    }
    void merge(const CheckReport& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    std::size_t fail_count() const {
        std::size_t c = 0;
        for (const auto& e : entries)
            if (!e.pass) ++c;
        return c;
    }

    /// Entries sorted by label; output is order-independent of how checks ran.
    Json to_json() const {
        auto sorted = entries;
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const CheckEntry& a, const CheckEntry& b) { return a.identity < b.identity; });
        Json results = Json::array();
        for (const auto& e : sorted) {
            Json r;
            r["identity"] = e.identity;
            r["status"] = e.pass ? "pass" : "fail";
            if (!e.pass) r["witness"] = e.witness;
            results.push_back(r);
        }
        return Json{{"suite", suite}, {"results", results}};
    }
};

}  // namespace dy

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kites {

struct RunConfig {
    int depth = 2;                 // maximum element level drawn by suites
    long long samples = 1000;      // sample count when not exhaustive; 0 = force exhaustive
    std::uint64_t seed = 1;        // RNG seed for sampled modes
    int trunc_k = 8;               // number of finite-dimensional factors kept
    long long budget = 1000000;    // case-space cap for automatic exhaustive mode
};

// One verified property.  `mode` is "exhaustive", "sampled", "partial" or
// "direct"; `checked` counts evaluated cases and `space` the full case space
// (0 when not meaningful).  `witness` holds the first counterexample.
struct CheckRecord {
    std::string name;
    std::string mode = "direct";
    long long checked = 0;
    long long space = 0;
    bool pass = true;
    std::string witness;
    std::string note;
};

struct Report {
    std::string title;
    std::vector<CheckRecord> records;
    bool truncated = false;  // a requested-exhaustive run was cut by the budget

    bool pass() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        return true;
    }
    void add(CheckRecord r) { records.push_back(std::move(r)); }
    void merge(const Report& other) {
        for (const auto& r : other.records) records.push_back(r);
        truncated = truncated || other.truncated;
    }

    std::string to_text() const;
    // Line-delimited records with stable field names; byte-identical for
    // identical inputs (no timestamps, no floats, no unordered iteration).
    std::string to_records() const;
};

}  // namespace kites

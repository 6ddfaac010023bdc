#pragma once

/**
 * Named verification suites over the enumerated graphs. Records are merged
 * in canonical key order so reports are identical across runs and thread
 * counts.
 */

#include <string>
#include <vector>

#include "posetlab/graph_posets.hpp"
#include "posetlab/io.hpp"

namespace posetlab {

inline constexpr const char* kToolVersion = "1.0.0";

struct SuiteRecord {
    std::string graph;
    CheckReport report;
};

struct SuiteOptions {
    /// rank4-deep: heavy checks (sub-sphere, duality, fibers) only up to this many edges.
    int deep_max_edges = 7;
    /// rank4-deep: graphs not started within the budget are listed as skipped
    /// and the suite fails.
    double budget_seconds = 600.0;
};

struct SuiteReport {
    std::string name;
    std::vector<std::string> assumptions;
    std::vector<SuiteRecord> records;
    std::vector<std::string> notes;
    bool incomplete = false;

    std::size_t count(Status s) const;
    bool ok() const;
    Json to_json() const;
};

const std::vector<std::string>& suite_names();
/// Throws Error on an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace posetlab

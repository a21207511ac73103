#pragma once

#include "tetra/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tetra {

struct SuiteOptions {
    std::optional<unsigned> cap;   // default depends on the suite
    unsigned max_degree = 8;
    unsigned samples = 200;
    uint64_t seed = 42;
};

const std::vector<std::string>& suite_names();

// Runs one of the verification suites: relations-def11, relations-def34,
// relations-lemma36, relations-thm61, cocycle, jacobi, diagram, center,
// onsager or all. Throws std::invalid_argument for unknown names.
ReportDocument run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace tetra

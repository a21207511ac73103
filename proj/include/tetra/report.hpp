#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tetra {

inline constexpr const char* kToolVersion = "0.1.0";

struct InstanceResult {
    std::string id;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::string difference;
};

// Outcome of one finite check suite: one entry per relation instance, with
// the rendered values of both sides and of their difference.
struct VerificationReport {
    std::string suite;
    std::vector<InstanceResult> instances;

    int passed() const;
    int failed() const;
    int total() const { return static_cast<int>(instances.size()); }
    bool all_pass() const { return failed() == 0; }

    void add(std::string id, bool pass, std::string lhs = "", std::string rhs = "",
             std::string difference = "");
    void merge(const VerificationReport& other);

    std::string text_table() const;
};

// Machine-readable run document: parameters, flattened instance results,
// summary counts. Serializes to JSON and round-trips.
struct ReportDocument {
    std::string tool_version = kToolVersion;
    std::string suite;
    std::map<std::string, std::int64_t> parameters;
    std::vector<InstanceResult> instances;

    int passed() const;
    int failed() const;
    int total() const { return static_cast<int>(instances.size()); }
    bool overall_pass() const { return failed() == 0; }

    void append(const VerificationReport& report);

    std::string to_text() const;
    std::string to_json() const;
    static ReportDocument from_json(const std::string& text);
};

}  // namespace tetra

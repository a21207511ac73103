#include "tetra/report.hpp"

#include <json.hpp>

#include <sstream>

namespace tetra {

int VerificationReport::passed() const {
    int n = 0;
    for (const auto& r : instances)
        if (r.pass)
            ++n;
    return n;
}

int VerificationReport::failed() const {
    return total() - passed();
}

void VerificationReport::add(std::string id, bool pass, std::string lhs, std::string rhs,
                             std::string difference) {
    instances.push_back({std::move(id), pass, std::move(lhs), std::move(rhs),
                         std::move(difference)});
}

void VerificationReport::merge(const VerificationReport& other) {
    instances.insert(instances.end(), other.instances.begin(), other.instances.end());
}

std::string VerificationReport::text_table() const {
    std::ostringstream os;
    os << "suite " << suite << ": " << passed() << "/" << total() << " passed\n";
    for (const auto& r : instances) {
        os << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.id;
        if (!r.pass) {
            os << "\n         lhs  = " << r.lhs << "\n         rhs  = " << r.rhs
               << "\n         diff = " << r.difference;
        }
        os << "\n";
    }
    return os.str();
}

int ReportDocument::passed() const {
    int n = 0;
    for (const auto& r : instances)
        if (r.pass)
            ++n;
    return n;
}

int ReportDocument::failed() const {
    return total() - passed();
}

void ReportDocument::append(const VerificationReport& report) {
    for (const auto& r : report.instances) {
        InstanceResult copy = r;
        copy.id = report.suite + "/" + copy.id;
        instances.push_back(std::move(copy));
    }
}

std::string ReportDocument::to_text() const {
    std::ostringstream os;
    os << "tetra " << tool_version << " suite=" << suite;
    for (const auto& [k, v] : parameters)
        os << " " << k << "=" << v;
    os << "\n";
    for (const auto& r : instances) {
        os << "[" << (r.pass ? "pass" : "FAIL") << "] " << r.id << "\n";
        if (!r.pass)
            os << "       lhs  = " << r.lhs << "\n       rhs  = " << r.rhs
               << "\n       diff = " << r.difference << "\n";
    }
    os << "result: " << passed() << "/" << total() << " passed, "
       << (overall_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string ReportDocument::to_json() const {
    nlohmann::json j;
    j["tool_version"] = tool_version;
    j["suite"] = suite;
    j["parameters"] = parameters;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : instances) {
        arr.push_back({{"id", r.id},
                       {"status", r.pass ? "pass" : "fail"},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"difference", r.difference}});
    }
    j["instances"] = std::move(arr);
    j["summary"] = {{"passed", passed()}, {"failed", failed()}, {"total", total()}};
    j["overall_pass"] = overall_pass();
    return j.dump(2);
}

ReportDocument ReportDocument::from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ReportDocument doc;
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.suite = j.at("suite").get<std::string>();
    doc.parameters = j.at("parameters").get<std::map<std::string, std::int64_t>>();
    for (const auto& item : j.at("instances")) {
        InstanceResult r;
        r.id = item.at("id").get<std::string>();
        r.pass = item.at("status").get<std::string>() == "pass";
        r.lhs = item.at("lhs").get<std::string>();
        r.rhs = item.at("rhs").get<std::string>();
        r.difference = item.at("difference").get<std::string>();
        doc.instances.push_back(std::move(r));
    }
    return doc;
}

}  // namespace tetra

#include "qreflect/report.hpp"

#include <cstdlib>
#include <ctime>
#include <sstream>
#include <utility>

namespace qref {

namespace {

std::string utc_stamp() {
    std::time_t now = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        now = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    }
    char buf[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

Report::Report(std::string command) : command_(std::move(command)), timestamp_(utc_stamp()) {}

void Report::add(const std::string& name, const std::string& expected,
                 const std::string& computed, bool pass) {
    checks_.push_back({name, expected, computed, pass});
}

void Report::expect_eq(const std::string& name, const std::string& expected,
                       const std::string& computed) {
    add(name, expected, computed, expected == computed);
}

void Report::expect_true(const std::string& name, bool condition) {
    add(name, "true", condition ? "true" : "false", condition);
}

bool Report::overall() const {
    for (const CheckRecord& c : checks_) {
        if (!c.pass) return false;
    }
    return true;
}

std::string Report::text() const {
    std::ostringstream out;
    out << "# " << command_ << " (" << timestamp_ << ")\n";
    for (const CheckRecord& c : checks_) {
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.pass || c.expected != c.computed) {
            out << "  expected " << c.expected << ", got " << c.computed;
        }
        out << "\n";
    }
    out << (overall() ? "OK" : "FAILED") << "  " << checks_.size() << " checks\n";
    return out.str();
}

nlohmann::json Report::json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckRecord& c : checks_) {
        arr.push_back({{"name", c.name},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"pass", c.pass}});
    }
    return {{"command", command_},
            {"timestamp", timestamp_},
            {"checks", arr},
            {"pass", overall()}};
}

}  // namespace qref

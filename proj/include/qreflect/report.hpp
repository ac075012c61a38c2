#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qref {

struct CheckRecord {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

/**
 * Flat pass/fail report produced by the CLI verification commands. With
 * SOURCE_DATE_EPOCH set the output is byte-for-byte reproducible.
 */
class Report {
  public:
    explicit Report(std::string command);

    void add(const std::string& name, const std::string& expected, const std::string& computed,
             bool pass);

    // Records expected == computed (by string equality).
    void expect_eq(const std::string& name, const std::string& expected,
                   const std::string& computed);
    void expect_true(const std::string& name, bool condition);

    bool overall() const;
    int exit_code() const { return overall() ? 0 : 1; }
    const std::vector<CheckRecord>& checks() const { return checks_; }

    std::string text() const;
    nlohmann::json json() const;

  private:
    std::string command_;
    std::string timestamp_;
    std::vector<CheckRecord> checks_;
};

}  // namespace qref

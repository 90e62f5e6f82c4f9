// Structured command reports: one schema rendered as text, JSON, or TSV with
// identical content.  Output is deterministic for a fixed invocation; wall
// time goes to stderr so the structured stream stays byte-stable.

#pragma once

#include <map>
#include <string>
#include <vector>

namespace strata {

struct ReportAssertion {
    std::string name;
    bool pass;
    std::string detail;  // empty when passing
};

struct Report {
    static constexpr int kSchemaVersion = 1;

    std::string command;
    std::map<std::string, std::string> params;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<ReportAssertion> assertions;

    bool all_pass() const;
    void assert_that(std::string name, bool pass, std::string detail = "");

    std::string render_text() const;
    std::string render_json() const;
    std::string render_tsv() const;
    std::string render(const std::string& format) const;  // "text", "json", "tsv"
};

}  // namespace strata

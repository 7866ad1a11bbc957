#pragma once

#include <string>
#include <vector>

#include "slitdisk/config.hpp"

namespace slitdisk {

// One verification check: a handful of computed numbers compared against a
// threshold.  The anchor is a wire-format label consumed by downstream
// tooling; registration validates it against the closed allowed set.
struct CheckRecord {
    std::string name;
    std::string anchor;
    std::vector<double> values;
    double threshold = 0.0;
    bool pass = false;
};

const std::vector<std::string>& allowed_anchors();

class VerificationReport {
public:
    explicit VerificationReport(RunConfig cfg);

    // Throws a domain error for an empty or unknown anchor, or a duplicate
    // name: a check must never enter the report unlabeled.
    void add(CheckRecord rec);

    const std::vector<CheckRecord>& checks() const { return checks_; }
    const RunConfig& config() const { return cfg_; }
    bool all_passed() const;

    // JSON document, schema "slitdisk-report/1": schema, config echo,
    // checks sorted by name, verdict.  Deliberately carries no timestamps
    // so identical runs serialize byte-identically.
    std::string to_json() const;

    // CSV: name,anchor,threshold,pass,values (values ';'-joined, %.17g).
    std::string to_csv() const;

    // Human-readable pass/fail table.
    std::string to_text_table() const;

private:
    RunConfig cfg_;
    std::vector<CheckRecord> checks_;
};

// Write via a temporary file in the same directory plus rename, creating
// parent directories as needed, so readers never observe a torn file.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace slitdisk

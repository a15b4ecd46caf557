#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace nilpath {

enum class Verdict { Pass, Fail };

const char* to_string(Verdict v) noexcept;

/// One verified claim: two independently obtained values that must agree.
struct DetailRow {
    std::string check;
    std::string expected;
    std::string observed;
    /// Which computation produced the observed value, e.g. "matrix-power".
    std::string provenance;

    bool ok() const { return expected == observed; }
};

using ParamValue = std::variant<std::int64_t, bool, std::string>;

/// Structured outcome of a CLI command. The verdict is derived from the rows.
struct ParityReport {
    std::string command;
    std::vector<std::pair<std::string, ParamValue>> parameters;
    std::vector<DetailRow> details;
    /// Informational outputs (counts, witnesses, timings); not part of the verdict.
    std::vector<std::pair<std::string, std::string>> values;
    double elapsed_ms = 0.0;

    Verdict verdict() const;
    bool passed() const { return verdict() == Verdict::Pass; }

    ParityReport& param(std::string name, ParamValue value);
    ParityReport& check(std::string name, std::string expected, std::string observed,
                        std::string provenance);
    ParityReport& value(std::string name, std::string text);
};

enum class ReportFormat { Table, Json, Csv };

/// Keys in order: command, parameters, verdict, details, values, elapsed_ms.
nlohmann::ordered_json to_json(const ParityReport& report);

void write_report(std::ostream& os, const ParityReport& report, ReportFormat format);

}  // namespace nilpath

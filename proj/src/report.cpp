#include "nilpath/report.hpp"

#include <algorithm>
#include <iomanip>

namespace nilpath {

namespace {

std::string param_text(const ParamValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return x;
            } else {
                return std::to_string(x);
            }
        },
        v);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out += c;
        }
    }
    out += '"';
    return out;
}

void write_table(std::ostream& os, const ParityReport& r) {
    os << "nilpath " << r.command << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
    if (!r.parameters.empty()) {
        os << "parameters:";
        for (const auto& [name, value] : r.parameters) {
            os << ' ' << name << '=' << param_text(value);
        }
        os << '\n';
    }

    std::size_t w_check = 5, w_exp = 8, w_obs = 8;
    for (const auto& row : r.details) {
        w_check = std::max(w_check, row.check.size());
        w_exp = std::max(w_exp, row.expected.size());
        w_obs = std::max(w_obs, row.observed.size());
    }
    os << std::left << "  " << std::setw(static_cast<int>(w_check)) << "check" << "  "
       << std::setw(static_cast<int>(w_exp)) << "expected" << "  "
       << std::setw(static_cast<int>(w_obs)) << "observed" << "  source\n";
    for (const auto& row : r.details) {
        os << (row.ok() ? "  " : "! ") << std::setw(static_cast<int>(w_check)) << row.check
           << "  " << std::setw(static_cast<int>(w_exp)) << row.expected << "  "
           << std::setw(static_cast<int>(w_obs)) << row.observed << "  " << row.provenance
           << '\n';
    }
    if (!r.values.empty()) {
        os << "values:\n";
        for (const auto& [name, text] : r.values) {
            os << "  " << name << ": " << text << '\n';
        }
    }
    os << "elapsed_ms: " << std::fixed << std::setprecision(3) << r.elapsed_ms << '\n';
    os.unsetf(std::ios::floatfield);
}

}  // namespace

const char* to_string(Verdict v) noexcept { return v == Verdict::Pass ? "pass" : "fail"; }

Verdict ParityReport::verdict() const {
    const bool all_ok =
        std::all_of(details.begin(), details.end(), [](const DetailRow& d) { return d.ok(); });
    return all_ok ? Verdict::Pass : Verdict::Fail;
}

ParityReport& ParityReport::param(std::string name, ParamValue value) {
    parameters.emplace_back(std::move(name), std::move(value));
    return *this;
}

ParityReport& ParityReport::check(std::string name, std::string expected, std::string observed,
                                  std::string provenance) {
    details.push_back(DetailRow{std::move(name), std::move(expected), std::move(observed),
                                std::move(provenance)});
    return *this;
}

ParityReport& ParityReport::value(std::string name, std::string text) {
    values.emplace_back(std::move(name), std::move(text));
    return *this;
}

nlohmann::ordered_json to_json(const ParityReport& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    auto params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.parameters) {
        std::visit([&params, &name](const auto& x) { params[name] = x; }, value);
    }
    j["parameters"] = std::move(params);
    j["verdict"] = to_string(r.verdict());
    auto details = nlohmann::ordered_json::array();
    for (const auto& row : r.details) {
        nlohmann::ordered_json d;
        d["check"] = row.check;
        d["expected"] = row.expected;
        d["observed"] = row.observed;
        d["provenance"] = row.provenance;
        details.push_back(std::move(d));
    }
    j["details"] = std::move(details);
    auto values = nlohmann::ordered_json::object();
    for (const auto& [name, text] : r.values) {
        values[name] = text;
    }
    j["values"] = std::move(values);
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

void write_report(std::ostream& os, const ParityReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json:
            os << to_json(report).dump() << '\n';
            break;
        case ReportFormat::Csv:
            os << "check,expected,observed,provenance\n";
            for (const auto& row : report.details) {
                os << csv_field(row.check) << ',' << csv_field(row.expected) << ','
                   << csv_field(row.observed) << ',' << csv_field(row.provenance) << '\n';
            }
            break;
        case ReportFormat::Table:
            write_table(os, report);
            break;
    }
}

}  // namespace nilpath

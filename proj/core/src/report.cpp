#include "levyspde/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace levyspde {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inconclusive: return "inconclusive";
        case CheckStatus::Unsupported: return "unsupported";
    }
    return "?";
}

bool Report::any_failed() const {
    for (const auto& r : records)
        if (r.status == CheckStatus::Fail) return true;
    return false;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string report_csv(const Report& r) {
    std::ostringstream ss;
    ss << "check_id,inputs,estimate,reference,tolerance,status,note\n";
    for (const auto& c : r.records) {
        ss << csv_escape(c.id) << ',' << csv_escape(c.inputs) << ','
           << format_double(c.estimate) << ',' << format_double(c.reference)
           << ',' << format_double(c.tolerance) << ',' << to_string(c.status)
           << ',' << csv_escape(c.note) << '\n';
    }
    return ss.str();
}

std::string report_json(const Report& r) {
    nlohmann::json j;
    j["seed"] = r.seed;
    j["config_hash"] = r.config_hash;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.records) {
        j["checks"].push_back({{"check_id", c.id},
                               {"inputs", c.inputs},
                               {"estimate", c.estimate},
                               {"reference", c.reference},
                               {"tolerance", c.tolerance},
                               {"status", to_string(c.status)},
                               {"note", c.note}});
    }
    return j.dump(2) + "\n";
}

std::string sweep_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < header.size(); ++i)
        ss << (i ? "," : "") << csv_escape(header[i]);
    ss << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            ss << (i ? "," : "") << csv_escape(row[i]);
        ss << '\n';
    }
    return ss.str();
}

} // namespace levyspde

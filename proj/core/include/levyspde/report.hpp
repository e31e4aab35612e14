#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace levyspde {

enum class CheckStatus { Pass, Fail, Inconclusive, Unsupported };

const char* to_string(CheckStatus s);

struct CheckRecord {
    std::string id;
    std::string inputs;       // human-readable parameter summary
    double estimate = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;   // SE-based or absolute, as the check defines
    CheckStatus status = CheckStatus::Pass;
    std::string note;
};

struct Report {
    std::vector<CheckRecord> records;
    std::uint64_t seed = 0;
    std::string config_hash;

    bool any_failed() const;
};

/// Stable number formatting shared by every writer (byte-identical output
/// is part of the determinism contract).
std::string format_double(double v);

std::string report_csv(const Report& r);
std::string report_json(const Report& r);

/// Generic CSV writer for sweep tables: header + rows of formatted doubles.
std::string sweep_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

} // namespace levyspde

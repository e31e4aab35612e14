#pragma once

#include "levyspde/measure.hpp"
#include "levyspde/operators.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace levyspde {

/// Run configuration: every field has a default, and serialize/parse is an
/// identity round trip.
struct RunConfig {
    int schema_version = 1;

    std::string kernel_family = "heat";  // heat | riesz | bessel
    double kernel_alpha = 1.0;
    int dim = 1;

    // jump measure as atoms [[z, w], ...]
    std::vector<std::pair<double, double>> levy_atoms = {{-1.0, 0.5},
                                                         {1.0, 0.5}};

    std::string op = "heat";  // heat | wave

    std::vector<double> t_grid = {1.0};
    std::vector<double> x_grid = {0.0};
    std::vector<double> p_grid = {2.0, 4.0};

    std::size_t trials = 100000;
    std::uint64_t seed = 42;
    unsigned workers = 1;
    double box_half_width = 20.0;
    double tail_tol = 1e-8;

    std::string out;              // output path; empty = stdout
    std::string format = "csv";   // csv | json

    std::map<std::string, double> tolerances;
    std::map<std::string, double> bp_table = {{"2", 1.0}, {"4", 4.0}};

    bool operator==(const RunConfig&) const = default;
};

/// Parse from JSON text; unknown keys are rejected, missing keys take
/// defaults.  Throws ConfigError on schema violations.
RunConfig parse_config(const std::string& json_text);

/// Serialize to canonical JSON (sorted keys, stable formatting).
std::string serialize_config(const RunConfig& cfg);

/// Load a config file; empty path returns defaults.
RunConfig load_config_file(const std::string& path);

// construction helpers from config fields
ColorationKernel make_kernel(const RunConfig& cfg);
GreenOperator make_operator(const RunConfig& cfg);
LevyMeasure make_measure(const RunConfig& cfg);

/// FNV-1a hash of the canonical serialization (report provenance).
std::string config_hash(const RunConfig& cfg);

} // namespace levyspde

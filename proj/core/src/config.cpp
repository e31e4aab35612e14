#include "levyspde/config.hpp"
#include "levyspde/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace levyspde {

using nlohmann::json;

namespace {

const std::set<std::string> kKnownKeys = {
    "schema_version", "kernel", "levy",   "operator", "t_grid",
    "x_grid",         "p_grid", "trials", "seed",     "workers",
    "box_half_width", "tail_tol", "out",  "format",   "tolerances",
    "bp_table"};

template <typename T>
void take(const json& j, const char* key, T& field) {
    if (j.contains(key)) field = j.at(key).get<T>();
}

} // namespace

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be an object");
    for (const auto& item : j.items()) {
        if (!kKnownKeys.count(item.key()))
            throw ConfigError("config: unknown key '" + item.key() + "'");
    }

    RunConfig cfg;
    try {
        take(j, "schema_version", cfg.schema_version);
        if (cfg.schema_version != 1)
            throw ConfigError("config: unsupported schema_version");
        if (j.contains("kernel")) {
            const json& k = j.at("kernel");
            take(k, "family", cfg.kernel_family);
            take(k, "alpha", cfg.kernel_alpha);
            take(k, "dim", cfg.dim);
        }
        if (j.contains("levy")) {
            const json& l = j.at("levy");
            if (l.contains("atoms")) {
                cfg.levy_atoms.clear();
                for (const auto& a : l.at("atoms")) {
                    if (!a.is_array() || a.size() != 2)
                        throw ConfigError("config: atom must be [z, w]");
                    cfg.levy_atoms.emplace_back(a[0].get<double>(),
                                                a[1].get<double>());
                }
            }
        }
        take(j, "operator", cfg.op);
        take(j, "t_grid", cfg.t_grid);
        take(j, "x_grid", cfg.x_grid);
        take(j, "p_grid", cfg.p_grid);
        take(j, "trials", cfg.trials);
        take(j, "seed", cfg.seed);
        take(j, "workers", cfg.workers);
        take(j, "box_half_width", cfg.box_half_width);
        take(j, "tail_tol", cfg.tail_tol);
        take(j, "out", cfg.out);
        take(j, "format", cfg.format);
        take(j, "tolerances", cfg.tolerances);
        take(j, "bp_table", cfg.bp_table);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: bad field type: ") + e.what());
    }

    if (cfg.op != "heat" && cfg.op != "wave")
        throw ConfigError("config: operator must be heat or wave");
    if (cfg.kernel_family != "heat" && cfg.kernel_family != "riesz" &&
        cfg.kernel_family != "bessel")
        throw ConfigError("config: kernel family must be heat/riesz/bessel");
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("config: format must be csv or json");
    return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
    json j;
    j["schema_version"] = cfg.schema_version;
    j["kernel"] = {{"family", cfg.kernel_family},
                   {"alpha", cfg.kernel_alpha},
                   {"dim", cfg.dim}};
    json atoms = json::array();
    for (const auto& [z, w] : cfg.levy_atoms)
        atoms.push_back(json::array({z, w}));
    j["levy"] = {{"atoms", atoms}};
    j["operator"] = cfg.op;
    j["t_grid"] = cfg.t_grid;
    j["x_grid"] = cfg.x_grid;
    j["p_grid"] = cfg.p_grid;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["workers"] = cfg.workers;
    j["box_half_width"] = cfg.box_half_width;
    j["tail_tol"] = cfg.tail_tol;
    j["out"] = cfg.out;
    j["format"] = cfg.format;
    j["tolerances"] = cfg.tolerances;
    j["bp_table"] = cfg.bp_table;
    return j.dump(2);
}

RunConfig load_config_file(const std::string& path) {
    if (path.empty()) return RunConfig{};
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

ColorationKernel make_kernel(const RunConfig& cfg) {
    if (cfg.kernel_family == "heat")
        return ColorationKernel::heat(cfg.kernel_alpha, cfg.dim);
    if (cfg.kernel_family == "riesz")
        return ColorationKernel::riesz(cfg.kernel_alpha, cfg.dim);
    return ColorationKernel::bessel(cfg.kernel_alpha, cfg.dim);
}

GreenOperator make_operator(const RunConfig& cfg) {
    return (cfg.op == "heat") ? GreenOperator::heat(cfg.dim)
                              : GreenOperator::wave(cfg.dim);
}

LevyMeasure make_measure(const RunConfig& cfg) {
    std::vector<LevyMeasure::Atom> atoms;
    for (const auto& [z, w] : cfg.levy_atoms) atoms.push_back({z, w});
    return LevyMeasure::from_atoms(std::move(atoms));
}

std::string config_hash(const RunConfig& cfg) {
    const std::string s = serialize_config(cfg);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

} // namespace levyspde

#include "topoinv/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace topoinv {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& s, int lineno) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("config line " + std::to_string(lineno) + ": expected a number, got '" +
                              s + "'");
    }
}

int parse_int(const std::string& s, int lineno) {
    const double v = parse_number(s, lineno);
    const int i = static_cast<int>(std::lround(v));
    if (i != v)
        throw ValidationError("config line " + std::to_string(lineno) + ": expected an integer");
    return i;
}

SweepAxis parse_axis(const std::string& value, int lineno) {
    std::istringstream ss(value);
    SweepAxis ax;
    std::string smin, smax, ssteps, extra;
    if (!(ss >> ax.param >> smin >> smax >> ssteps) || (ss >> extra))
        throw ValidationError("config line " + std::to_string(lineno) +
                              ": axis needs '<param> <min> <max> <steps>'");
    ax.min = parse_number(smin, lineno);
    ax.max = parse_number(smax, lineno);
    ax.steps = parse_int(ssteps, lineno);
    return ax;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream ss(s);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

} // namespace

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig cfg;
    cfg.outputs = sweep_quantities();

    std::string section;
    std::string line;
    int lineno = 0;
    bool have_kind = false;
    bool have_partition = false;

    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "model" && section != "grid" && section != "sweep" &&
                section != "partition" && section != "output" && section != "thresholds")
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": unknown section [" + section + "]");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": expected 'key = value'");

        if (section == "model") {
            if (key == "kind") {
                if (value == "kane-mele") cfg.base = Model::kane_mele({});
                else if (value == "staggered-sc") cfg.base = Model::staggered_sc({});
                else
                    throw ValidationError("config line " + std::to_string(lineno) +
                                          ": unknown model kind '" + value + "'");
                have_kind = true;
                if (!have_partition)
                    cfg.partition = cfg.base.is_sc() ? SubsystemPartition::sublattice()
                                                     : SubsystemPartition::spin();
            } else {
                if (!have_kind)
                    throw ValidationError("config line " + std::to_string(lineno) +
                                          ": set 'kind' before model parameters");
                set_model_param(cfg.base, key, parse_number(value, lineno));
                cfg.fixed_keys.push_back(key);
            }
        } else if (section == "grid") {
            if (key == "nx") cfg.grid_nx = parse_int(value, lineno);
            else if (key == "ny") cfg.grid_ny = parse_int(value, lineno);
            else
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": unknown grid key '" + key + "'");
        } else if (section == "sweep") {
            if (key == "axis1") cfg.axis1 = parse_axis(value, lineno);
            else if (key == "axis2") cfg.axis2 = parse_axis(value, lineno);
            else
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": unknown sweep key '" + key + "'");
        } else if (section == "partition") {
            if (key != "subsystem")
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": unknown partition key '" + key + "'");
            if (value == "spin") cfg.partition = SubsystemPartition::spin();
            else if (value == "sublattice") cfg.partition = SubsystemPartition::sublattice();
            else
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": unknown partition '" + value + "'");
            have_partition = true;
        } else if (section == "output") {
            if (key != "quantities")
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": unknown output key '" + key + "'");
            cfg.outputs = split_list(value);
        } else if (section == "thresholds") {
            if (key == "warn_band") cfg.warn_band = parse_number(value, lineno);
            else if (key == "residual") cfg.residual_tol = parse_number(value, lineno);
            else
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": unknown threshold key '" + key + "'");
        } else {
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": key outside any section");
        }
    }

    if (!have_kind) throw ValidationError("config: missing [model] kind");
    cfg.validate();
    return cfg;
}

SweepConfig parse_sweep_config_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_sweep_config(ss);
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot open config file '" + path + "'");
    return parse_sweep_config(f);
}

} // namespace topoinv

#include "topoinv/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "topoinv/ent_spectrum.hpp"

namespace topoinv {

namespace {

const std::vector<std::string> kQuantities = {
    "nu_a", "nu_b", "nu_total", "nu_s", "spectral_gap", "min_s_a", "min_s_b", "ent_gap",
    "reliable"};

bool is_integer_quantity(const std::string& name) {
    return name == "nu_a" || name == "nu_b" || name == "nu_total" || name == "nu_s";
}

std::string format_double(double v) {
    if (std::isnan(v)) return "na";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

constexpr double kNA = std::numeric_limits<double>::quiet_NaN();

} // namespace

const std::vector<std::string>& sweep_quantities() { return kQuantities; }

void set_model_param(Model& model, const std::string& name, double value) {
    if (model.tag == ModelTag::KaneMele) {
        if (name == "t") model.km.t = value;
        else if (name == "lambda_v") model.km.lambda_v = value;
        else if (name == "lambda_so") model.km.lambda_so = value;
        else if (name == "lambda_r") model.km.lambda_r = value;
        else if (name == "lambda_v/lambda_so") model.km.lambda_v = value * model.km.lambda_so;
        else if (name == "lambda_r/lambda_so") model.km.lambda_r = value * model.km.lambda_so;
        else throw ValidationError("unknown kane-mele parameter: " + name);
    } else {
        if (name == "mu") model.sc.mu = value;
        else if (name == "delta_stagger") model.sc.delta_stagger = value;
        else if (name == "t") model.sc.t = value;
        else if (name == "delta_pair") model.sc.delta_pair = value;
        else throw ValidationError("unknown staggered-sc parameter: " + name);
    }
}

void SweepConfig::validate() const {
    if (axis1.param.empty() || axis2.param.empty())
        throw ValidationError("sweep config: both axes must name a parameter");
    if (axis1.param == axis2.param)
        throw ValidationError("sweep config: axis parameters must be distinct");
    for (const auto& key : fixed_keys) {
        if (key == axis1.param || key == axis2.param)
            throw ValidationError("sweep config: axis parameter '" + key +
                                  "' also appears in the fixed parameter set");
    }
    for (const SweepAxis* ax : {&axis1, &axis2}) {
        if (ax->steps < 1) throw ValidationError("sweep config: axis steps must be >= 1");
        if (ax->steps == 1 && ax->min != ax->max)
            throw ValidationError("sweep config: a single-step axis needs min == max");
        Model probe = base;
        set_model_param(probe, ax->param, ax->min); // rejects unknown names
    }
    if (grid_nx < 16 || grid_ny < 16)
        throw ValidationError("sweep config: BZ grid must be at least 16x16");
    partition.validate();
    if (base.is_sc() && partition.label_a == "spin-up")
        throw ValidationError("sweep config: the spin partition needs the insulator basis");
    for (const auto& q : outputs)
        if (std::find(kQuantities.begin(), kQuantities.end(), q) == kQuantities.end())
            throw ValidationError("sweep config: unknown output quantity '" + q + "'");
}

double PhaseCell::quantity(const std::string& name) const {
    if (name == "nu_a") return nu_a;
    if (name == "nu_b") return nu_b;
    if (name == "nu_total") return nu_total;
    if (name == "nu_s") return nu_s;
    if (name == "spectral_gap") return spectral_gap;
    if (name == "min_s_a") return min_s_a;
    if (name == "min_s_b") return min_s_b;
    if (name == "ent_gap") return ent_gap;
    if (name == "reliable") return reliable ? 1.0 : 0.0;
    throw ValidationError("unknown quantity '" + name + "'");
}

bool PhaseCell::has_warning(const std::string& code) const {
    return std::find(warnings.begin(), warnings.end(), code) != warnings.end();
}

namespace {

PhaseCell evaluate_cell(const SweepConfig& cfg, int ix, int iy) {
    PhaseCell cell;
    cell.ix = ix;
    cell.iy = iy;
    cell.a1 = cfg.axis1.value(ix);
    cell.a2 = cfg.axis2.value(iy);
    cell.nu_a = cell.nu_b = cell.nu_total = cell.nu_s = kNA;
    cell.spectral_gap = cell.min_s_a = cell.min_s_b = cell.ent_gap = kNA;

    Model model = cfg.base;
    const bool spin_partition = cfg.partition.label_a == "spin-up";
    try {
        set_model_param(model, cfg.axis1.param, cell.a1);
        set_model_param(model, cfg.axis2.param, cell.a2);

        const BZGrid grid(cfg.grid_nx, cfg.grid_ny);
        const SpectralGrid spectra(grid, [&](MomentumPoint p) { return model.kernel(p); });
        cell.spectral_gap = spectra.min_gap().first;

        spectra.require_gap_open();
        cell.nu_total = chern_flux(spectra, 2);

        const GroundStatePath path = model.is_sc() ? GroundStatePath::Superconductor
                                                   : GroundStatePath::Insulator;
        const SVectorFieldPair fields = svector_fields(spectra, cfg.partition, path);
        cell.min_s_a = entanglement_measure(fields.a);
        cell.min_s_b = entanglement_measure(fields.b);

        const EntanglementField ent = model.is_sc()
                                          ? sc_ent_field(spectra, cfg.partition.a)
                                          : insulator_ent_field(fields.a);
        cell.ent_gap = model.is_sc() ? ent_gap_sc(ent) : ent_gap_insulator(ent);

        if (std::min(cell.min_s_a, cell.min_s_b) < cfg.warn_band)
            cell.warnings.push_back("high_ent");

        const auto [nu_a, nu_b] = subsystem_winding(fields);
        cell.nu_a = nu_a.value;
        cell.nu_b = nu_b.value;
        const bool quantized = nu_a.residual < cfg.residual_tol && nu_b.residual < cfg.residual_tol;
        if (!quantized) cell.warnings.push_back("unreliable");
        if (spin_partition && quantized) cell.nu_s = spin_chern(nu_a, nu_b).value();
        if (quantized && !std::isnan(cell.nu_total) &&
            std::lround(cell.nu_a + cell.nu_b) != std::lround(cell.nu_total))
            cell.warnings.push_back("additivity_mismatch");

        cell.reliable = quantized && !cell.has_warning("high_ent");
    } catch (const MaxEntanglementError&) {
        cell.status = "max_ent";
    } catch (const DegeneracyError&) {
        cell.status = "gap_closed";
    } catch (const std::exception&) {
        cell.status = "error";
    }
    return cell;
}

} // namespace

unsigned sweep_worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("TOPOINV_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) n = static_cast<unsigned>(std::min<long>(v, 256));
    }
    return n;
}

PhaseDiagram run_sweep(const SweepConfig& config) {
    config.validate();
    PhaseDiagram pd;
    pd.config = config;
    const int n1 = config.axis1.steps;
    const int n2 = config.axis2.steps;
    const std::size_t total = static_cast<std::size_t>(n1) * n2;
    pd.cells.resize(total);

    // Dynamic scheduling over cells; each cell writes only its own slot, so
    // the gathered raster does not depend on worker count or completion order.
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= total) return;
            const int ix = static_cast<int>(idx % n1);
            const int iy = static_cast<int>(idx / n1);
            pd.cells[idx] = evaluate_cell(config, ix, iy);
        }
    };

    const unsigned workers = std::min<unsigned>(sweep_worker_count(),
                                                static_cast<unsigned>(total));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return pd;
}

namespace {

std::vector<std::string> output_columns(const SweepConfig& cfg) {
    return cfg.outputs.empty() ? kQuantities : cfg.outputs;
}

} // namespace

void export_csv(const PhaseDiagram& pd, std::ostream& os) {
    const auto cols = output_columns(pd.config);
    os << "ix,iy," << pd.config.axis1.param << "," << pd.config.axis2.param
       << ",status,warnings";
    for (const auto& c : cols) os << "," << c;
    os << "\n";
    for (const PhaseCell& cell : pd.cells) {
        os << cell.ix << "," << cell.iy << "," << format_double(cell.a1) << ","
           << format_double(cell.a2) << "," << cell.status << ",";
        if (cell.warnings.empty()) {
            os << "-";
        } else {
            for (std::size_t i = 0; i < cell.warnings.size(); ++i)
                os << (i ? ";" : "") << cell.warnings[i];
        }
        for (const auto& c : cols) os << "," << format_double(cell.quantity(c));
        os << "\n";
    }
}

void export_csv(const PhaseDiagram& pd, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("export_csv: cannot open '" + path + "' for writing");
    export_csv(pd, f);
    f.flush();
    if (!f) throw ValidationError("export_csv: write failed for '" + path + "'");
}

std::string csv_string(const PhaseDiagram& pd) {
    std::ostringstream os;
    export_csv(pd, os);
    return os.str();
}

void export_json(const PhaseDiagram& pd, const std::string& path) {
    nlohmann::json j;
    j["model"] = pd.config.base.is_sc() ? "staggered-sc" : "kane-mele";
    j["basis"] = pd.config.base.basis();
    j["axis1"] = {{"param", pd.config.axis1.param}, {"min", pd.config.axis1.min},
                  {"max", pd.config.axis1.max}, {"steps", pd.config.axis1.steps}};
    j["axis2"] = {{"param", pd.config.axis2.param}, {"min", pd.config.axis2.min},
                  {"max", pd.config.axis2.max}, {"steps", pd.config.axis2.steps}};
    j["grid"] = {pd.config.grid_nx, pd.config.grid_ny};
    auto cells = nlohmann::json::array();
    const auto cols = output_columns(pd.config);
    for (const PhaseCell& cell : pd.cells) {
        nlohmann::json c;
        c["ix"] = cell.ix;
        c["iy"] = cell.iy;
        c["axis1"] = cell.a1;
        c["axis2"] = cell.a2;
        c["status"] = cell.status;
        c["warnings"] = cell.warnings;
        for (const auto& q : cols) {
            const double v = cell.quantity(q);
            if (std::isnan(v)) c[q] = nullptr;
            else c[q] = v;
        }
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("export_json: cannot open '" + path + "' for writing");
    f << j.dump(1, ' ') << "\n";
}

namespace {

struct Rgb {
    unsigned char r, g, b;
};

Rgb diverging_color(double v, double vmax) {
    const double t = std::clamp(v / vmax, -1.0, 1.0);
    if (t < 0.0) {
        const auto s = static_cast<unsigned char>(std::lround(255.0 * (1.0 + t)));
        return Rgb{s, s, 255};
    }
    const auto s = static_cast<unsigned char>(std::lround(255.0 * (1.0 - t)));
    return Rgb{255, s, s};
}

Rgb sequential_color(double v, double lo, double hi) {
    const double t = hi > lo ? std::clamp((v - lo) / (hi - lo), 0.0, 1.0) : 0.0;
    const auto s = static_cast<unsigned char>(std::lround(255.0 * t));
    return Rgb{s, s, s};
}

constexpr Rgb kSentinel{255, 0, 255};

} // namespace

void export_heatmap(const PhaseDiagram& pd, const std::string& quantity, const std::string& path) {
    if (std::find(kQuantities.begin(), kQuantities.end(), quantity) == kQuantities.end()) {
        std::string avail;
        for (const auto& q : kQuantities) avail += (avail.empty() ? "" : ", ") + q;
        throw ValidationError("export_heatmap: unknown quantity '" + quantity +
                              "'; available: " + avail);
    }

    const int n1 = pd.config.axis1.steps;
    const int n2 = pd.config.axis2.steps;
    const bool diverging = is_integer_quantity(quantity);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double amax = 1.0;
    for (const PhaseCell& cell : pd.cells) {
        const double v = cell.quantity(quantity);
        if (std::isnan(v)) continue;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        amax = std::max(amax, std::abs(v));
    }

    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("export_heatmap: cannot open '" + path + "' for writing");
    f << "P6\n" << n1 << " " << n2 << "\n255\n";
    for (int row = 0; row < n2; ++row) {
        const int iy = n2 - 1 - row; // top row = highest axis2
        for (int ix = 0; ix < n1; ++ix) {
            const double v = pd.at(ix, iy).quantity(quantity);
            Rgb c = kSentinel;
            if (!std::isnan(v))
                c = diverging ? diverging_color(v, amax) : sequential_color(v, lo, hi);
            f.put(static_cast<char>(c.r));
            f.put(static_cast<char>(c.g));
            f.put(static_cast<char>(c.b));
        }
    }
    if (!f) throw ValidationError("export_heatmap: write failed for '" + path + "'");
}

} // namespace topoinv

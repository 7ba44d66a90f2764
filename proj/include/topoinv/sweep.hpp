#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "topoinv/invariants.hpp"

namespace topoinv {

// One raster axis: a named model parameter swept linearly. Ratio parameters
// ("lambda_r/lambda_so", "lambda_v/lambda_so") are converted internally with
// the fixed lambda_so. steps == 1 pins the axis at min.
struct SweepAxis {
    std::string param;
    double min = 0.0;
    double max = 0.0;
    int steps = 2;

    double value(int i) const {
        return steps == 1 ? min : min + (max - min) * i / (steps - 1);
    }
};

struct SweepConfig {
    Model base;
    std::vector<std::string> fixed_keys; // model params set explicitly
    SweepAxis axis1;
    SweepAxis axis2;
    int grid_nx = 128;
    int grid_ny = 128;
    SubsystemPartition partition = SubsystemPartition::sublattice();
    std::vector<std::string> outputs; // quantity columns, in order
    double warn_band = kEntanglementWarn;
    double residual_tol = kResidualTol;

    void validate() const;
};

// Names accepted in SweepConfig::outputs, in canonical order.
const std::vector<std::string>& sweep_quantities();

// Per-cell record. Quantities that could not be computed are NaN and exported
// as the token "na"; status is "ok" or an explicit failure code.
struct PhaseCell {
    int ix = 0;
    int iy = 0;
    double a1 = 0.0;
    double a2 = 0.0;
    std::string status = "ok"; // ok | gap_closed | max_ent | error
    std::vector<std::string> warnings;
    double nu_a = 0.0;
    double nu_b = 0.0;
    double nu_total = 0.0;
    double nu_s = 0.0;
    double spectral_gap = 0.0;
    double min_s_a = 0.0;
    double min_s_b = 0.0;
    double ent_gap = 0.0;
    bool reliable = false;

    double quantity(const std::string& name) const;
    bool ok() const { return status == "ok"; }
    bool has_warning(const std::string& code) const;
};

struct PhaseDiagram {
    SweepConfig config;
    std::vector<PhaseCell> cells; // index iy * axis1.steps + ix

    const PhaseCell& at(int ix, int iy) const {
        return cells[static_cast<std::size_t>(iy) * config.axis1.steps + ix];
    }
};

// Evaluate every raster cell; cells where a computation fails carry a failure
// code and never abort the sweep. Worker count is capped by TOPOINV_THREADS;
// output is deterministic and independent of the worker count.
PhaseDiagram run_sweep(const SweepConfig& config);

// One header row naming every column, one row per cell; floats printed with
// 9 significant digits, failure codes as string tokens, UTF-8 with LF line
// endings. Byte-identical for identical diagrams.
void export_csv(const PhaseDiagram& pd, std::ostream& os);
void export_csv(const PhaseDiagram& pd, const std::string& path);
std::string csv_string(const PhaseDiagram& pd);

void export_json(const PhaseDiagram& pd, const std::string& path);

// Binary P6 pixmap, one pixel per cell; diverging blue-white-red map centered
// at 0 for integer invariants, grayscale for gaps and measures, magenta for
// failed or unavailable cells. Row 0 is the highest axis2 value.
void export_heatmap(const PhaseDiagram& pd, const std::string& quantity, const std::string& path);

// Number of workers run_sweep would use right now (TOPOINV_THREADS cap).
unsigned sweep_worker_count();

// Set a named parameter on a model; understands the ratio axes. Throws
// ValidationError for names the model does not have.
void set_model_param(Model& model, const std::string& name, double value);

} // namespace topoinv

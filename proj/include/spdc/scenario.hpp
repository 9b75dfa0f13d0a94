#pragma once

#include <string>
#include <vector>

#include "spdc/observables.hpp"

namespace spdc {

enum class ObservableKind {
    aniso_sweep,        // alpha/beta/gamma vs theta for the reference crystals
    collinear_spectrum, // wavelength vs cut-angle deviation maps
    rings,              // band-integrated singles density map over xi1
    spectrum,           // wavelength-resolved singles slice at xi1y = 0
    transfer,           // same-direction coincidence scan
    hom,                // Hong-Ou-Mandel dip
    opposite,           // opposite-direction coincidence profile
};

enum class ThetaMode { degrees, collinear, beamlike };

enum class AnisoQuantity { alpha, beta, gamma };

// Flat key/value description of one reproducible run. Grid sizes carry
// per-observable defaults; a zero/absent value keeps the default.
struct Scenario {
    std::string name;
    std::string note;
    std::string crystal = "bbo";
    PmFamily family = PmFamily::type1_oo;
    double pump_nm = 351.0;
    ThetaMode theta_mode = ThetaMode::collinear;
    double theta_deg = 0.0;
    double Lz_mm = 1.0;
    double zc_mm = 0.0;
    double waist_um = 25.0;
    std::string pump_table; // optional tabulated pump spectrum file

    // filter: none | delta | gaussian-nm <fwhm> | band <dnu full width>
    std::string filter_kind = "none";
    double filter_param = 0.0;
    double nu0 = 0.0;

    ObservableKind observable = ObservableKind::opposite;
    ScanAxis axis = ScanAxis::x;
    AnisoQuantity quantity = AnisoQuantity::alpha;

    // grid controls (0 = observable default)
    std::size_t theta_points = 0;
    double dtheta_deg_max = 0.0;
    std::size_t dtheta_points = 0;
    double nu_max = 0.0;
    std::size_t nu_points = 0;
    double angle_max = 0.0;
    std::size_t angle_points = 0;
    std::size_t xi2_points = 0;
    double delay_um_max = 0.0;
    std::size_t delay_points = 0;

    std::string out; // CSV filename; default <name>.csv
};

struct RunOptions {
    std::string out_dir = ".";
    double grid_scale = 1.0; // multiplies grid densities; 2.0 is nested refinement
    bool write_plot_script = true;
};

struct RunResult {
    std::string csv_path;
    std::string headline_name;
    double headline = 0.0;
    double theta_deg = 0.0; // resolved cut angle
};

Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario_file(const std::string& path);
// apply one "key=value" override (CLI flags reuse this; flags win over files)
void apply_override(Scenario& s, const std::string& key, const std::string& value);

RunResult run_scenario(const Scenario& s, const RunOptions& opt);

// bundled reference scenarios (name + canonical scenario text)
struct BundledScenario {
    std::string name;
    std::string text;
};
const std::vector<BundledScenario>& bundled_scenarios();
std::vector<std::string> list_scenarios();
Scenario find_bundled_scenario(const std::string& name);

// resolves theta_mode/crystal/filter into an executable configuration
struct ResolvedScenario {
    CutConfiguration cut;
    DetectionSetup setup;
};
ResolvedScenario resolve_scenario(const Scenario& s);

} // namespace spdc

// Command-line front end: every observable as a subcommand plus the bundled
// reference-scenario runner. Degrees and nm are accepted here only; the
// library works in radians and micrometers.
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spdc/csv.hpp"
#include "spdc/parallel.hpp"
#include "spdc/scenario.hpp"
#include "spdc/version.hpp"

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

struct CommonArgs {
    std::string crystal = "bbo";
    std::string type = "I";
    double pump_nm = 351.0;
    std::optional<double> theta_deg;
    bool collinear = false;
    bool beamlike = false;
    double Lz_mm = 1.0;
    double zc_mm = 0.0;
    double waist_um = 25.0;
    std::string pump_table;
    std::optional<double> filter_fwhm_nm;
    std::optional<double> band;
    bool no_filter = false;
    bool delta_filter = false;
    double nu0 = 0.0;
};

void add_cut_flags(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--crystal", a.crystal, "crystal name (bbo, liio3, or from --crystal-db)");
    cmd->add_option("--type", a.type, "phase-matching type, I or II")
        ->check(CLI::IsMember({"I", "II"}));
    cmd->add_option("--pump-nm", a.pump_nm, "pump wavelength in nm");
    auto* t = cmd->add_option("--theta-deg", a.theta_deg, "optic-axis angle in degrees");
    auto* c = cmd->add_flag("--collinear", a.collinear, "solve the collinear angle");
    auto* b = cmd->add_flag("--beamlike", a.beamlike, "solve the beamlike type II angle");
    t->excludes(c);
    t->excludes(b);
    c->excludes(b);
    cmd->add_option("--Lz-mm", a.Lz_mm, "crystal length in mm");
    cmd->add_option("--zc-mm", a.zc_mm, "crystal-center coordinate in mm");
    cmd->add_option("--waist-um", a.waist_um, "Gaussian pump waist in um");
    cmd->add_option("--pump-table", a.pump_table,
                    "tabulated pump angular spectrum (qx qy reE imE, or |q| reE; 1/um)");
    auto* f1 = cmd->add_option("--filter-fwhm-nm", a.filter_fwhm_nm,
                               "Gaussian filter FWHM in nm at the degenerate wavelength");
    auto* f2 = cmd->add_option("--band", a.band, "rectangular filter full width in nu");
    auto* f3 = cmd->add_flag("--no-filter", a.no_filter, "open detection band");
    auto* f4 = cmd->add_flag("--delta-filter", a.delta_filter, "monochromatic detection");
    f1->excludes(f2);
    f1->excludes(f3);
    f1->excludes(f4);
    f2->excludes(f3);
    f2->excludes(f4);
    f3->excludes(f4);
    cmd->add_option("--nu0", a.nu0, "filter center detuning");
}

void apply_to_scenario(const CommonArgs& a, spdc::Scenario& s) {
    s.crystal = a.crystal;
    s.family = (a.type == "I") ? spdc::PmFamily::type1_oo : spdc::PmFamily::type2;
    s.pump_nm = a.pump_nm;
    if (a.theta_deg) {
        s.theta_mode = spdc::ThetaMode::degrees;
        s.theta_deg = *a.theta_deg;
    } else if (a.beamlike) {
        s.theta_mode = spdc::ThetaMode::beamlike;
    } else {
        s.theta_mode = spdc::ThetaMode::collinear;
    }
    s.Lz_mm = a.Lz_mm;
    s.zc_mm = a.zc_mm;
    s.waist_um = a.waist_um;
    s.pump_table = a.pump_table;
    s.nu0 = a.nu0;
    if (a.filter_fwhm_nm) {
        s.filter_kind = "gaussian-nm";
        s.filter_param = *a.filter_fwhm_nm;
    } else if (a.band) {
        s.filter_kind = "band";
        s.filter_param = *a.band;
    } else if (a.delta_filter) {
        s.filter_kind = "delta";
    } else {
        s.filter_kind = "none";
    }
}

int run_and_report(const spdc::Scenario& s, const spdc::RunOptions& opt) {
    const auto res = spdc::run_scenario(s, opt);
    std::printf("wrote %s (theta = %.6f deg, %s = %s)\n", res.csv_path.c_str(), res.theta_deg,
                res.headline_name.c_str(), spdc::CsvWriter::format(res.headline).c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("spdc-sim ") + spdc::kVersion +
                 " - transverse and spectral structure of SPDC two-photon states"};
    app.require_subcommand(1);

    int threads = 0;
    std::string crystal_db;
    bool seedless = false;
    app.add_option("--threads", threads, "cap the worker count (0 = all cores)");
    app.add_option("--crystal-db", crystal_db, "load an additional crystal database (JSON)");
    app.add_flag("--seedless", seedless,
                 "reserved: the tool uses no random numbers anywhere");

    // ---- index ----
    auto* idx = app.add_subcommand("index", "refractive indices at a wavelength");
    std::string idx_crystal = "bbo";
    double idx_lambda_nm = 702.0;
    idx->add_option("--crystal", idx_crystal, "crystal name");
    idx->add_option("--lambda-nm", idx_lambda_nm, "wavelength in nm")->required();

    // ---- aniso ----
    auto* an = app.add_subcommand("aniso", "walk-off and curvature parameters");
    std::string an_crystal = "bbo";
    double an_lambda_nm = 702.0;
    double an_theta_deg = 45.0;
    an->add_option("--crystal", an_crystal, "crystal name");
    an->add_option("--lambda-nm", an_lambda_nm, "wavelength in nm")->required();
    an->add_option("--theta-deg", an_theta_deg, "optic-axis angle in degrees")->required();

    // ---- pm-angle ----
    auto* pm = app.add_subcommand("pm-angle", "collinear phase-matching angle (degrees)");
    std::string pm_crystal = "bbo";
    std::string pm_type = "I";
    double pm_pump_nm = 351.0;
    pm->add_option("--crystal", pm_crystal, "crystal name");
    pm->add_option("--type", pm_type, "I or II")->check(CLI::IsMember({"I", "II"}));
    pm->add_option("--pump-nm", pm_pump_nm, "pump wavelength in nm")->required();

    // ---- beamlike-angle ----
    auto* bl = app.add_subcommand("beamlike-angle", "beamlike type II angle (degrees)");
    std::string bl_crystal = "bbo";
    double bl_pump_nm = 351.0;
    bl->add_option("--crystal", bl_crystal, "crystal name");
    bl->add_option("--pump-nm", bl_pump_nm, "pump wavelength in nm")->required();

    // ---- observables sharing the cut flags ----
    CommonArgs rings_args, spec_args, cspec_args, transfer_args, hom_args, opp_args;
    std::string out_path;
    double grid_scale = 1.0;

    auto add_run_flags = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output CSV path");
        cmd->add_option("--grid-scale", grid_scale, "grid density multiplier");
    };

    auto* rings = app.add_subcommand("rings", "band-integrated singles density map over xi1");
    add_cut_flags(rings, rings_args);
    add_run_flags(rings);
    std::size_t rings_points = 0, rings_xi2 = 0;
    double rings_extent_opt = 0.0;
    rings->add_option("--angle-points", rings_points, "output grid points per axis");
    rings->add_option("--angle-max", rings_extent_opt, "output half-range in rad");
    rings->add_option("--xi2-points", rings_xi2, "inner integration points per axis");

    auto* spec = app.add_subcommand("spectrum", "wavelength-resolved singles slice (xi1y = 0)");
    add_cut_flags(spec, spec_args);
    add_run_flags(spec);
    std::size_t spec_nu_points = 0, spec_angle_points = 0, spec_xi2 = 0;
    double spec_nu_max = 0.0;
    spec->add_option("--nu-points", spec_nu_points, "detuning samples");
    spec->add_option("--nu-max", spec_nu_max, "detuning half-range");
    spec->add_option("--angle-points", spec_angle_points, "xi1x samples");
    spec->add_option("--xi2-points", spec_xi2, "inner integration points (x axis)");

    auto* cspec = app.add_subcommand("collinear-spectrum",
                                     "collinear wavelengths vs cut-angle deviation");
    add_cut_flags(cspec, cspec_args);
    add_run_flags(cspec);
    double cspec_dmax = 0.0;
    std::size_t cspec_dpoints = 0, cspec_nu_points = 0;
    cspec->add_option("--dtheta-deg-max", cspec_dmax, "half-range of the angle deviation");
    cspec->add_option("--dtheta-points", cspec_dpoints, "angle deviation samples");
    cspec->add_option("--nu-points", cspec_nu_points, "detuning samples");

    auto* tr = app.add_subcommand("transfer", "same-direction coincidence scan");
    add_cut_flags(tr, transfer_args);
    add_run_flags(tr);
    std::string tr_axis = "x";
    std::size_t tr_points = 0;
    tr->add_option("--scan-axis", tr_axis, "x or y")->check(CLI::IsMember({"x", "y"}));
    tr->add_option("--angle-points", tr_points, "scan samples");

    auto* hom = app.add_subcommand("hom", "Hong-Ou-Mandel dip vs path-length difference");
    add_cut_flags(hom, hom_args);
    add_run_flags(hom);
    double hom_delay_max = 0.0;
    std::size_t hom_delay_points = 0, hom_nu_points = 0;
    hom->add_option("--delay-um-max", hom_delay_max, "delay half-range in um");
    hom->add_option("--delay-points", hom_delay_points, "delay samples");
    hom->add_option("--nu-points", hom_nu_points, "detuning samples");

    auto* opp = app.add_subcommand("opposite", "opposite-direction coincidence profile");
    add_cut_flags(opp, opp_args);
    add_run_flags(opp);
    std::string opp_axis = "x";
    std::size_t opp_points = 0;
    opp->add_option("--scan-axis", opp_axis, "x or y")->check(CLI::IsMember({"x", "y"}));
    opp->add_option("--angle-points", opp_points, "scan samples");

    // ---- scenario ----
    auto* sc = app.add_subcommand("scenario", "bundled reference scenarios");
    sc->require_subcommand(1);
    auto* sc_list = sc->add_subcommand("list", "list bundled scenarios");
    auto* sc_run = sc->add_subcommand("run", "run a bundled scenario or a scenario file");
    std::string sc_name;
    std::string sc_out_dir = ".";
    double sc_scale = 1.0;
    std::vector<std::string> sc_sets;
    sc_run->add_option("name", sc_name, "bundled scenario name or path to a .scn file")
        ->required();
    sc_run->add_option("--out-dir", sc_out_dir, "output directory");
    sc_run->add_option("--grid-scale", sc_scale, "grid density multiplier");
    sc_run->add_option("--set", sc_sets, "override scenario keys, key=value (flags win)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (seedless)
            spdc::fail(spdc::Errc::config,
                       "--seedless is reserved: there is no RNG anywhere in this tool");
        spdc::set_max_threads(threads);
        if (!crystal_db.empty()) spdc::load_crystal_database(crystal_db);

        if (*idx) {
            const auto& c = spdc::find_crystal(idx_crystal);
            const double l = idx_lambda_nm * 1e-3;
            std::printf("%s at %s nm: n_o = %.9f  n_e = %.9f\n", c.name.c_str(),
                        spdc::CsvWriter::format(idx_lambda_nm).c_str(),
                        c.index(spdc::Polarization::ordinary, l),
                        c.index(spdc::Polarization::extraordinary, l));
            return 0;
        }
        if (*an) {
            const auto& c = spdc::find_crystal(an_crystal);
            const auto p = spdc::anisotropy(c, an_theta_deg * kDeg, an_lambda_nm * 1e-3);
            std::printf("alpha = %.9f\nbeta = %.9f\ngamma = %.9f\neta = %.9f\n", p.alpha,
                        p.beta, p.gamma, p.eta);
            return 0;
        }
        if (*pm) {
            const auto& c = spdc::find_crystal(pm_crystal);
            const auto fam =
                pm_type == "I" ? spdc::PmFamily::type1_oo : spdc::PmFamily::type2;
            const double th = spdc::solve_collinear_angle(c, pm_pump_nm * 1e-3, fam);
            std::printf("%.6f\n", th / kDeg);
            return 0;
        }
        if (*bl) {
            const auto& c = spdc::find_crystal(bl_crystal);
            const double th = spdc::solve_beamlike_angle(c, bl_pump_nm * 1e-3);
            std::printf("%.6f\n", th / kDeg);
            return 0;
        }

        auto run_observable = [&](const CommonArgs& a, spdc::ObservableKind kind,
                                  const std::string& default_name) {
            spdc::Scenario s;
            s.name = default_name;
            apply_to_scenario(a, s);
            s.observable = kind;
            if (!out_path.empty()) s.out = out_path;
            spdc::RunOptions opt;
            opt.grid_scale = grid_scale;
            return std::pair<spdc::Scenario, spdc::RunOptions>(s, opt);
        };

        if (*rings) {
            auto [s, opt] = run_observable(rings_args, spdc::ObservableKind::rings, "rings");
            s.angle_points = rings_points;
            s.angle_max = rings_extent_opt;
            s.xi2_points = rings_xi2;
            return run_and_report(s, opt);
        }
        if (*spec) {
            auto [s, opt] = run_observable(spec_args, spdc::ObservableKind::spectrum, "spectrum");
            s.nu_points = spec_nu_points;
            s.nu_max = spec_nu_max;
            s.angle_points = spec_angle_points;
            s.xi2_points = spec_xi2;
            return run_and_report(s, opt);
        }
        if (*cspec) {
            auto [s, opt] = run_observable(cspec_args, spdc::ObservableKind::collinear_spectrum,
                                           "collinear-spectrum");
            s.dtheta_deg_max = cspec_dmax;
            s.dtheta_points = cspec_dpoints;
            s.nu_points = cspec_nu_points;
            return run_and_report(s, opt);
        }
        if (*tr) {
            auto [s, opt] = run_observable(transfer_args, spdc::ObservableKind::transfer,
                                           "transfer");
            s.axis = tr_axis == "x" ? spdc::ScanAxis::x : spdc::ScanAxis::y;
            s.angle_points = tr_points;
            return run_and_report(s, opt);
        }
        if (*hom) {
            auto [s, opt] = run_observable(hom_args, spdc::ObservableKind::hom, "hom");
            s.delay_um_max = hom_delay_max;
            s.delay_points = hom_delay_points;
            s.nu_points = hom_nu_points;
            return run_and_report(s, opt);
        }
        if (*opp) {
            auto [s, opt] = run_observable(opp_args, spdc::ObservableKind::opposite, "opposite");
            s.axis = opp_axis == "x" ? spdc::ScanAxis::x : spdc::ScanAxis::y;
            s.angle_points = opp_points;
            return run_and_report(s, opt);
        }
        if (*sc_list) {
            for (const auto& n : spdc::list_scenarios()) std::printf("%s\n", n.c_str());
            return 0;
        }
        if (*sc_run) {
            spdc::Scenario s;
            const auto& names = spdc::list_scenarios();
            if (std::find(names.begin(), names.end(), sc_name) != names.end())
                s = spdc::find_bundled_scenario(sc_name);
            else
                s = spdc::load_scenario_file(sc_name);
            for (const auto& kv : sc_sets) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    spdc::fail(spdc::Errc::config, "--set needs key=value, got '" + kv + "'");
                spdc::apply_override(s, kv.substr(0, eq), kv.substr(eq + 1));
            }
            spdc::RunOptions opt;
            opt.out_dir = sc_out_dir;
            opt.grid_scale = sc_scale;
            return run_and_report(s, opt);
        }
    } catch (const spdc::Error& e) {
        std::fprintf(stderr, "error [%s] %s: %s\n", e.numeric() ? "numeric" : "config",
                     spdc::errc_name(e.code()), e.what());
        return e.numeric() ? 3 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error [config] unexpected: %s\n", e.what());
        return 2;
    }
    return 0;
}

#include "spdc/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "spdc/csv.hpp"
#include "spdc/version.hpp"

namespace spdc {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        fail(Errc::config, "scenario key '" + key + "': cannot parse number '" + v + "'");
    }
}

std::size_t to_count(const std::string& v, const std::string& key) {
    double d = to_double(v, key);
    if (d < 0 || d != std::floor(d))
        fail(Errc::config, "scenario key '" + key + "' needs a nonnegative integer");
    return static_cast<std::size_t>(d);
}

// odd-preserving density scaling; scale 2 gives the nested 2n-1 refinement
std::size_t scale_points(std::size_t base, double scale) {
    if (base < 3) base = 3;
    auto half = static_cast<long long>(std::llround(static_cast<double>(base - 1) * scale / 2.0));
    std::size_t n = static_cast<std::size_t>(2 * std::max(half, 2LL) + 1);
    return n;
}

} // namespace

void apply_override(Scenario& s, const std::string& rawkey, const std::string& rawval) {
    const std::string key = trim(rawkey);
    const std::string val = trim(rawval);
    if (key == "name") s.name = val;
    else if (key == "note") s.note = val;
    else if (key == "crystal") s.crystal = val;
    else if (key == "family") {
        if (val == "type-I" || val == "I") s.family = PmFamily::type1_oo;
        else if (val == "type-II" || val == "II") s.family = PmFamily::type2;
        else fail(Errc::config, "family must be type-I or type-II, got '" + val + "'");
    } else if (key == "pump_nm") s.pump_nm = to_double(val, key);
    else if (key == "theta") {
        if (val == "collinear") s.theta_mode = ThetaMode::collinear;
        else if (val == "beamlike") s.theta_mode = ThetaMode::beamlike;
        else {
            s.theta_mode = ThetaMode::degrees;
            s.theta_deg = to_double(val, key);
        }
    } else if (key == "Lz_mm") s.Lz_mm = to_double(val, key);
    else if (key == "zc_mm") s.zc_mm = to_double(val, key);
    else if (key == "waist_um") s.waist_um = to_double(val, key);
    else if (key == "pump_table") s.pump_table = val;
    else if (key == "filter") {
        std::istringstream ss(val);
        std::string kind;
        ss >> kind;
        double param = 0.0;
        if (kind == "none" || kind == "delta") {
            // no parameter
        } else if (kind == "gaussian-nm" || kind == "band" || kind == "band-nm") {
            if (!(ss >> param)) fail(Errc::config, "filter '" + kind + "' needs a width");
        } else {
            fail(Errc::config, "unknown filter kind '" + kind + "'");
        }
        s.filter_kind = kind;
        s.filter_param = param;
    } else if (key == "nu0") s.nu0 = to_double(val, key);
    else if (key == "observable") {
        if (val == "aniso") s.observable = ObservableKind::aniso_sweep;
        else if (val == "collinear-spectrum") s.observable = ObservableKind::collinear_spectrum;
        else if (val == "rings") s.observable = ObservableKind::rings;
        else if (val == "spectrum") s.observable = ObservableKind::spectrum;
        else if (val == "transfer") s.observable = ObservableKind::transfer;
        else if (val == "hom") s.observable = ObservableKind::hom;
        else if (val == "opposite") s.observable = ObservableKind::opposite;
        else fail(Errc::config, "unknown observable '" + val + "'");
    } else if (key == "axis") {
        if (val == "x") s.axis = ScanAxis::x;
        else if (val == "y") s.axis = ScanAxis::y;
        else fail(Errc::config, "axis must be x or y");
    } else if (key == "quantity") {
        if (val == "alpha") s.quantity = AnisoQuantity::alpha;
        else if (val == "beta") s.quantity = AnisoQuantity::beta;
        else if (val == "gamma") s.quantity = AnisoQuantity::gamma;
        else fail(Errc::config, "quantity must be alpha, beta or gamma");
    } else if (key == "theta_points") s.theta_points = to_count(val, key);
    else if (key == "dtheta_deg_max") s.dtheta_deg_max = to_double(val, key);
    else if (key == "dtheta_points") s.dtheta_points = to_count(val, key);
    else if (key == "nu_max") s.nu_max = to_double(val, key);
    else if (key == "nu_points") s.nu_points = to_count(val, key);
    else if (key == "angle_max") s.angle_max = to_double(val, key);
    else if (key == "angle_points") s.angle_points = to_count(val, key);
    else if (key == "xi2_points") s.xi2_points = to_count(val, key);
    else if (key == "delay_um_max") s.delay_um_max = to_double(val, key);
    else if (key == "delay_points") s.delay_points = to_count(val, key);
    else if (key == "out") s.out = val;
    else fail(Errc::config, "unknown scenario key '" + key + "'");
}

Scenario parse_scenario_text(const std::string& text) {
    Scenario s;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(Errc::config, "scenario line is not key = value: '" + line + "'");
        apply_override(s, line.substr(0, eq), line.substr(eq + 1));
    }
    if (s.name.empty()) fail(Errc::config, "scenario needs a name");
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::config, "cannot open scenario file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario_text(ss.str());
}

ResolvedScenario resolve_scenario(const Scenario& s) {
    ResolvedScenario r;
    r.cut.crystal = find_crystal(s.crystal);
    r.cut.lambda_p_um = s.pump_nm * 1e-3;
    r.cut.Lz_um = s.Lz_mm * 1e3;
    r.cut.zc_um = s.zc_mm * 1e3;
    r.cut.family = s.family;
    switch (s.theta_mode) {
    case ThetaMode::degrees: r.cut.theta = s.theta_deg * kDeg; break;
    case ThetaMode::collinear:
        r.cut.theta = solve_collinear_angle(r.cut.crystal, r.cut.lambda_p_um, s.family);
        break;
    case ThetaMode::beamlike:
        if (s.family != PmFamily::type2)
            fail(Errc::config, "beamlike cuts exist only for type-II phase matching");
        r.cut.theta = solve_beamlike_angle(r.cut.crystal, r.cut.lambda_p_um);
        break;
    }
    r.cut.validate();

    r.setup.pump = s.pump_table.empty() ? PumpSpectrum::gaussian(s.waist_um)
                                         : PumpSpectrum::tabulated(s.pump_table);
    const double ldeg = 2.0 * r.cut.lambda_p_um;
    if (s.filter_kind == "none") r.setup.filter = SpectralFilter::none();
    else if (s.filter_kind == "delta") r.setup.filter = SpectralFilter::delta_at(s.nu0);
    else if (s.filter_kind == "gaussian-nm")
        r.setup.filter = {FilterShape::gaussian, s.nu0, filter_fwhm_from_nm(s.filter_param, ldeg)};
    else if (s.filter_kind == "band")
        r.setup.filter = {FilterShape::rectangular, s.nu0, s.filter_param};
    else if (s.filter_kind == "band-nm")
        r.setup.filter = {FilterShape::rectangular, s.nu0,
                          filter_fwhm_from_nm(s.filter_param, ldeg)};
    else fail(Errc::config, "unknown filter kind '" + s.filter_kind + "'");
    return r;
}

namespace {

std::string family_name(PmFamily f) { return f == PmFamily::type1_oo ? "type-I" : "type-II"; }

std::string filter_description(const Scenario& s, const SpectralFilter& f) {
    std::ostringstream ss;
    switch (f.shape) {
    case FilterShape::gaussian: ss << "gaussian fwhm_nu=" << f.fwhm; break;
    case FilterShape::rectangular:
        ss << (f.is_open_band() ? "none (open band)" : "rectangular width_nu=");
        if (!f.is_open_band()) ss << f.fwhm;
        break;
    case FilterShape::delta: ss << "delta"; break;
    }
    ss << " center_nu=" << f.nu0 << " (input: " << s.filter_kind;
    if (s.filter_param > 0) ss << " " << s.filter_param;
    ss << ")";
    return ss.str();
}

void write_common_header(CsvWriter& w, const Scenario& s, const ResolvedScenario& r,
                         const RunOptions& opt) {
    w.comment(std::string("spdc-sim v") + kVersion);
    w.key_value("scenario", s.name);
    if (!s.note.empty()) w.key_value("note", s.note);
    w.key_value("crystal", r.cut.crystal.name);
    w.key_value("family", family_name(s.family));
    w.key_value("pump_nm", s.pump_nm);
    w.key_value("theta_deg", r.cut.theta / kDeg);
    w.key_value("theta_mode", s.theta_mode == ThetaMode::degrees
                                  ? "user"
                                  : (s.theta_mode == ThetaMode::collinear ? "solved-collinear"
                                                                          : "solved-beamlike"));
    w.key_value("Lz_mm", s.Lz_mm);
    w.key_value("zc_mm", s.zc_mm);
    if (s.pump_table.empty())
        w.key_value("waist_um", s.waist_um);
    else
        w.key_value("pump_table", s.pump_table);
    w.key_value("filter", filter_description(s, r.setup.filter));
    // internal values behind the boundary units
    w.key_value("lambda_p_um", r.cut.lambda_p_um);
    w.key_value("theta_rad", r.cut.theta);
    w.key_value("Lz_um", r.cut.Lz_um);
    w.key_value("zc_um", r.cut.zc_um);
    w.key_value("K_per_um", r.cut.K());
    w.key_value("grid_scale", opt.grid_scale);
    w.key_value("units", "angles rad (theta columns deg), wavelengths nm, lengths um");
}

void write_plot_sidecar(const std::string& csv_path, ObservableKind kind) {
    std::ofstream gp(csv_path + ".gp", std::ios::binary);
    gp << "# gnuplot sidecar; run: gnuplot -p " << csv_path << ".gp\n";
    gp << "set datafile separator ','\n";
    gp << "set datafile commentschars '#'\n";
    switch (kind) {
    case ObservableKind::rings:
        gp << "set view map\nset size ratio -1\n";
        gp << "splot '" << csv_path << "' using 1:2:3 with points pt 5 ps 0.4 palette\n";
        break;
    case ObservableKind::spectrum:
        gp << "set view map\n";
        gp << "splot '" << csv_path << "' using 1:3:4 with points pt 5 ps 0.4 palette\n";
        break;
    case ObservableKind::collinear_spectrum:
        gp << "set view map\n";
        gp << "splot '" << csv_path << "' using 1:3:4 with points pt 5 ps 0.4 palette\n";
        break;
    default:
        gp << "plot '" << csv_path << "' using 1:2 with lines\n";
        break;
    }
}

struct GridDefaults {
    std::size_t theta_points = 181;
    double dtheta_deg_max = 0.4;
    std::size_t dtheta_points = 81;
    double nu_max = 0.14;
    std::size_t nu_points = 2241;
    std::size_t angle_points = 121;
    std::size_t xi2_points = 41;
    std::size_t band_points = 9;      // nu samples inside a singles band
    std::size_t transfer_nu_points = 201;
    double delay_um_max = 20.0;
    std::size_t delay_points = 401;
    std::size_t hom_nu_points = 2401;
    double hom_nu_max = 0.145;
};

double rings_extent(const CutConfiguration& cut, const DerivedIndexSet& d,
                    const SpectralFilter& filter) {
    std::vector<Channel> channels = (cut.family == PmFamily::type1_oo)
                                        ? std::vector<Channel>{Channel::oo}
                                        : std::vector<Channel>{Channel::oe, Channel::eo};
    const double half_band =
        filter.shape == FilterShape::delta ? 0.0 : std::min(0.5 * filter.fwhm, kMaxDetuning);
    const double floor_hw =
        std::sqrt(4.0 * std::numbers::pi * d.n_bar_o / (cut.K() * cut.Lz_um));
    double e = 5.0 * floor_hw;
    for (Channel ch : channels)
        for (double nu : {0.0, half_band, -half_band}) {
            auto rg = ring_geometry(cut, d, nu, ch);
            if (rg)
                e = std::max(e, std::fabs(rg->center.x) + rg->radius + 5.0 * rg->half_width);
        }
    return e;
}

} // namespace

RunResult run_scenario(const Scenario& s, const RunOptions& opt) {
    const ResolvedScenario r = resolve_scenario(s);
    const double scale = opt.grid_scale;
    GridDefaults def;

    const std::string out_name = s.out.empty() ? s.name + ".csv" : s.out;
    const std::string path = opt.out_dir.empty() ? out_name : opt.out_dir + "/" + out_name;

    RunResult res;
    res.csv_path = path;
    res.theta_deg = r.cut.theta / kDeg;

    CsvWriter w(path);
    write_common_header(w, s, r, opt);

    const auto pts = [&](std::size_t user, std::size_t base) {
        return scale_points(user ? user : base, scale);
    };

    switch (s.observable) {
    case ObservableKind::aniso_sweep: {
        const std::size_t n = pts(s.theta_points, def.theta_points);
        const Grid1D th(0.0, 90.0 * kDeg, n);
        const char* qname = s.quantity == AnisoQuantity::alpha ? "alpha"
                            : s.quantity == AnisoQuantity::beta ? "beta"
                                                                : "gamma";
        w.key_value("quantity", qname);
        w.columns({"theta_deg", "bbo_300nm", "bbo_600nm", "liio3_300nm", "liio3_600nm"});
        auto pick = [&](const AnisotropyParams& p) {
            switch (s.quantity) {
            case AnisoQuantity::alpha: return p.alpha;
            case AnisoQuantity::beta: return p.beta;
            case AnisoQuantity::gamma: return p.gamma;
            }
            return 0.0;
        };
        double peak = 0.0;
        std::vector<std::array<double, 5>> rows(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = th.point(i);
            rows[i] = {t / kDeg, pick(anisotropy(bbo(), t, 0.300)),
                       pick(anisotropy(bbo(), t, 0.600)), pick(anisotropy(liio3(), t, 0.300)),
                       pick(anisotropy(liio3(), t, 0.600))};
            peak = std::max(peak, rows[i][1]);
        }
        res.headline_name = "peak_bbo_300";
        res.headline = peak;
        w.key_value("headline " + res.headline_name, res.headline);
        for (const auto& row : rows) w.row(row);
        break;
    }
    case ObservableKind::collinear_spectrum: {
        const double dmax = (s.dtheta_deg_max > 0 ? s.dtheta_deg_max : def.dtheta_deg_max) * kDeg;
        const Grid1D dth(-dmax, dmax, pts(s.dtheta_points, def.dtheta_points));
        const double numax = s.nu_max > 0 ? s.nu_max : def.nu_max;
        const Grid1D nug(-numax, numax, pts(s.nu_points, def.nu_points));
        const auto cs = collinear_spectrum(r.cut, dth, nug);
        const bool type2 = s.family == PmFamily::type2;
        // headline: spectral FWHM (in nu) of the first channel at dtheta = 0
        const std::size_t mid = dth.n / 2;
        std::vector<double> center(cs.primary.begin() + mid * nug.n,
                                   cs.primary.begin() + (mid + 1) * nug.n);
        res.headline_name = "collinear_fwhm_nu";
        res.headline = curve_fwhm(nug.points(), center);
        w.key_value("headline " + res.headline_name, res.headline);
        w.columns(type2 ? std::vector<std::string>{"dtheta_deg", "nu", "lambda_nm", "I_oe",
                                                   "I_eo", "locus_nu_oe", "locus_nu_eo"}
                        : std::vector<std::string>{"dtheta_deg", "nu", "lambda_nm", "I_oo",
                                                   "locus_nu_pos", "locus_nu_neg"});
        const double ldeg_nm = 2.0 * s.pump_nm;
        for (std::size_t i = 0; i < dth.n; ++i)
            for (std::size_t k = 0; k < nug.n; ++k) {
                const double nu = nug.point(k);
                const double lam = ldeg_nm / (1.0 + nu);
                if (type2)
                    w.row(std::array<double, 7>{dth.point(i) / kDeg, nu, lam,
                                                cs.primary[i * nug.n + k],
                                                cs.secondary[i * nug.n + k], cs.locus_a[i],
                                                cs.locus_b[i]});
                else
                    w.row(std::array<double, 6>{dth.point(i) / kDeg, nu, lam,
                                                cs.primary[i * nug.n + k], cs.locus_a[i],
                                                cs.locus_b[i]});
            }
        break;
    }
    case ObservableKind::rings: {
        const DerivedIndexSet d = derived_index_set(r.cut);
        const double ext = s.angle_max > 0 ? s.angle_max : rings_extent(r.cut, d, r.setup.filter);
        const Grid1D gx(-ext, ext, pts(s.angle_points, def.angle_points));
        const Grid1D gy(-ext, ext, pts(s.angle_points, def.angle_points));
        SinglesOptions so;
        so.xi2_points = pts(s.xi2_points, def.xi2_points);
        so.nu_points = pts(s.nu_points, def.band_points);
        const auto sm = singles_map(r.cut, d, r.setup, gx, gy, so);
        // closed-form ring geometry at nu = 0 for the header
        if (s.family == PmFamily::type2) {
            for (Channel ch : {Channel::oe, Channel::eo}) {
                auto rg = ring_geometry(r.cut, d, 0.0, ch);
                const std::string tag = ch == Channel::oe ? "oe" : "eo";
                if (rg) {
                    w.key_value("ring_" + tag + "_radius_rad", rg->radius);
                    w.key_value("ring_" + tag + "_center_x_rad", rg->center.x);
                    w.key_value("ring_" + tag + "_half_width_rad", rg->half_width);
                } else {
                    w.key_value("ring_" + tag, "absent (R^2 < 0)");
                }
            }
        } else {
            auto rg = ring_geometry(r.cut, d, 0.0, Channel::oo);
            if (rg) {
                w.key_value("ring_oo_radius_rad", rg->radius);
                w.key_value("ring_oo_half_width_rad", rg->half_width);
            } else {
                w.key_value("ring_oo", "absent (R^2 < 0)");
            }
        }
        w.key_value("truncation_warning", sm.truncation_warning ? 1.0 : 0.0);
        w.key_value("outside_fraction", sm.outside_fraction);
        // headline: intensity centroid of the positive-x lobe on the y = 0 row
        const std::size_t jmid = gy.n / 2;
        std::vector<double> cut_row(gx.n);
        for (std::size_t i = 0; i < gx.n; ++i) cut_row[i] = sm.map.at(i, jmid);
        res.headline_name = "ring_centroid_rad";
        res.headline = positive_lobe_centroid(gx.points(), cut_row);
        w.key_value("headline " + res.headline_name, res.headline);
        w.columns({"xi1x_rad", "xi1y_rad", "intensity"});
        for (std::size_t i = 0; i < gx.n; ++i)
            for (std::size_t j = 0; j < gy.n; ++j)
                w.row(std::array<double, 3>{gx.point(i), gy.point(j), sm.map.at(i, j)});
        break;
    }
    case ObservableKind::spectrum: {
        const DerivedIndexSet d = derived_index_set(r.cut);
        const double numax = s.nu_max > 0 ? s.nu_max : 0.12;
        const Grid1D nug(-numax, numax, pts(s.nu_points, 61));
        double ext = s.angle_max;
        if (ext <= 0) {
            auto rg = ring_geometry(r.cut, d, numax, Channel::oo);
            auto rg2 = ring_geometry(r.cut, d, -numax, Channel::oo);
            double rmax = 0.0;
            if (rg) rmax = std::max(rmax, rg->radius + 5.0 * rg->half_width);
            if (rg2) rmax = std::max(rmax, rg2->radius + 5.0 * rg2->half_width);
            ext = 1.3 * std::max(rmax, 0.02);
        }
        const Grid1D gx(-ext, ext, pts(s.angle_points, 161));
        SinglesOptions so;
        so.xi2_points = pts(s.xi2_points, 501);
        so.xi2y_points = scale_points(41, scale); // oscillations live along x
        const auto sl = singles_slices(r.cut, d, r.setup, gx, 0.0, nug, so);
        // headline: intensity-weighted mean |xi1x| over the whole map, which
        // is stable under grid refinement (single slices move with the grid)
        KahanSum num, den;
        for (std::size_t i = 0; i < gx.n; ++i) {
            const double ax = std::fabs(gx.point(i));
            for (std::size_t k = 0; k < nug.n; ++k) {
                num.add(ax * sl.v[i * nug.n + k]);
                den.add(sl.v[i * nug.n + k]);
            }
        }
        res.headline_name = "mean_abs_angle_rad";
        res.headline = den.value() > 0.0 ? num.value() / den.value() : 0.0;
        w.key_value("headline " + res.headline_name, res.headline);
        w.columns({"lambda_nm", "nu", "xi1x_rad", "intensity"});
        const double ldeg_nm = 2.0 * s.pump_nm;
        for (std::size_t k = 0; k < nug.n; ++k) {
            const double nu = nug.point(k);
            for (std::size_t i = 0; i < gx.n; ++i)
                w.row(std::array<double, 4>{ldeg_nm / (1.0 + nu), nu, gx.point(i),
                                            sl.v[i * nug.n + k]});
        }
        break;
    }
    case ObservableKind::transfer: {
        const DerivedIndexSet d = derived_index_set(r.cut);
        const double K = r.cut.K();
        double ext = s.angle_max;
        if (ext <= 0) {
            const double pump_ext = 6.0 / (K * s.waist_um);
            double sinc_ext = 0.0;
            if (s.axis == ScanAxis::x) {
                const double slope = (s.family == PmFamily::type1_oo)
                                         ? d.alpha_p
                                         : (d.alpha_p - 0.5 * d.alpha_bar);
                sinc_ext = 2.5 * 2.0 * std::numbers::pi / (K * r.cut.Lz_um * slope);
                if (s.family == PmFamily::type2 &&
                    r.setup.filter.shape != FilterShape::delta) {
                    const double m = transfer_slope_m(d);
                    sinc_ext += 0.5 * r.setup.filter.fwhm / std::fabs(m);
                }
            }
            ext = std::max(pump_ext, sinc_ext);
        }
        const Grid1D grid(-ext, ext, pts(s.angle_points, 401));
        double nu_half = 0.5 * r.setup.filter.fwhm;
        if (r.setup.filter.shape == FilterShape::gaussian) nu_half = 1.5 * r.setup.filter.fwhm;
        nu_half = std::min(std::max(nu_half, 1e-4), kMaxDetuning - 1e-3);
        const Grid1D nug(r.setup.filter.nu0 - nu_half, r.setup.filter.nu0 + nu_half,
                         pts(s.nu_points, def.transfer_nu_points));
        const auto prof = coincidence_same(r.cut, d, r.setup, s.axis, grid, nug);
        res.headline_name = "fitted_fwhm_rad";
        res.headline = curve_fwhm(prof.t, prof.value);
        w.key_value("axis", s.axis == ScanAxis::x ? "x" : "y");
        w.key_value("pump_fwhm_rad", 2.0 * std::sqrt(2.0 * std::numbers::ln2) / (K * s.waist_um));
        w.key_value("headline " + res.headline_name, res.headline);
        w.columns({"xi_s_rad", "value", "pump_profile", "monochromatic"});
        DetectionSetup mono = r.setup;
        mono.filter = SpectralFilter::delta_at(r.setup.filter.nu0);
        const auto mono_prof = coincidence_same(r.cut, d, mono, s.axis, grid, nug);
        for (std::size_t i = 0; i < grid.n; ++i) {
            const Angle2 xs = (s.axis == ScanAxis::x) ? Angle2{grid.point(i), 0.0}
                                                      : Angle2{0.0, grid.point(i)};
            const double E2 = std::norm(r.setup.pump.value(K * xs.x, K * xs.y));
            w.row(std::array<double, 4>{grid.point(i), prof.value[i], E2, mono_prof.value[i]});
        }
        break;
    }
    case ObservableKind::hom: {
        const DerivedIndexSet d = derived_index_set(r.cut);
        const Angle2 xi1 = default_collection_angle(r.cut, d);
        const Angle2 xi2 = xi1 * -1.0;
        const double dmax = s.delay_um_max > 0 ? s.delay_um_max : def.delay_um_max;
        const Grid1D delays(-dmax, dmax, pts(s.delay_points, def.delay_points));
        const double numax = s.nu_max > 0 ? s.nu_max : def.hom_nu_max;
        const Grid1D nug(-numax, numax, pts(s.nu_points, def.hom_nu_points));
        const auto curve = hom_dip(r.cut, d, r.setup, xi1, xi2, delays, nug);
        std::vector<double> depth(curve.p_c.size());
        for (std::size_t i = 0; i < depth.size(); ++i) depth[i] = 0.5 - curve.p_c[i];
        res.headline_name = "dip_fwhm_um";
        res.headline = curve_fwhm(curve.delay_um, depth);
        w.key_value("collection_xi1x_rad", xi1.x);
        w.key_value("collection_xi2x_rad", xi2.x);
        w.key_value("headline " + res.headline_name, res.headline);
        w.columns({"delay_um", "p_c"});
        for (std::size_t i = 0; i < curve.delay_um.size(); ++i)
            w.row(std::array<double, 2>{curve.delay_um[i], curve.p_c[i]});
        break;
    }
    case ObservableKind::opposite: {
        const DerivedIndexSet d = derived_index_set(r.cut);
        double ext = s.angle_max > 0 ? s.angle_max : rings_extent(r.cut, d, r.setup.filter);
        const Grid1D grid(-ext, ext, pts(s.angle_points, 401));
        const Angle2 axis = (s.axis == ScanAxis::x) ? Angle2{1.0, 0.0} : Angle2{0.0, 1.0};
        const auto scan = coincidence_opposite(r.cut, d, r.setup, axis, grid, s.nu0);
        res.headline_name = "ring_centroid_rad";
        res.headline = positive_lobe_centroid(scan.t, scan.total);
        w.key_value("nu", s.nu0);
        w.key_value("headline " + res.headline_name, res.headline);
        w.columns({"xi_d_rad", "total", "oe", "eo"});
        for (std::size_t i = 0; i < scan.t.size(); ++i) {
            const double oe = scan.oe.empty() ? 0.0 : scan.oe[i];
            const double eo = scan.eo.empty() ? 0.0 : scan.eo[i];
            w.row(std::array<double, 4>{scan.t[i], scan.total[i], oe, eo});
        }
        break;
    }
    }

    if (opt.write_plot_script) write_plot_sidecar(path, s.observable);
    return res;
}

namespace {

const std::vector<BundledScenario>& catalog() {
    static const std::vector<BundledScenario> cat = {
        {"fig-alpha",
         "# walk-off slope vs optic-axis angle for the reference crystals\n"
         "name = fig-alpha\n"
         "note = walk-off sweep, BBO and LiIO3 at 300 nm and 600 nm\n"
         "observable = aniso\n"
         "quantity = alpha\n"},
        {"fig-beta",
         "# x-curvature factor vs optic-axis angle\n"
         "name = fig-beta\n"
         "note = curvature sweep, BBO and LiIO3 at 300 nm and 600 nm\n"
         "observable = aniso\n"
         "quantity = beta\n"},
        {"fig-gamma",
         "# y-curvature factor vs optic-axis angle\n"
         "name = fig-gamma\n"
         "note = curvature sweep, BBO and LiIO3 at 300 nm and 600 nm\n"
         "observable = aniso\n"
         "quantity = gamma\n"},
        {"fig-spectrum",
         "# output angle vs down-converted wavelength, 15 mm LiIO3, 325 nm pump\n"
         "name = fig-spectrum\n"
         "note = collinear-cut tuning curve of the output angle vs wavelength\n"
         "crystal = liio3\n"
         "family = type-I\n"
         "pump_nm = 325\n"
         "theta = 59.217\n"
         "Lz_mm = 15\n"
         "waist_um = 25\n"
         "filter = none\n"
         "observable = spectrum\n"
         "nu_max = 0.12\n"
         "nu_points = 41\n"
         "angle_points = 121\n"
         "xi2_points = 401\n"},
        {"fig-match1",
         "# collinear type I wavelengths vs cut-angle deviation, LiIO3 5 mm\n"
         "name = fig-match1\n"
         "note = theta_m = 51.704 deg for LiIO3 at 351 nm\n"
         "crystal = liio3\n"
         "family = type-I\n"
         "pump_nm = 351\n"
         "theta = collinear\n"
         "Lz_mm = 5\n"
         "observable = collinear-spectrum\n"},
        {"fig-match2",
         "# collinear type I wavelengths vs cut-angle deviation, BBO 5 mm\n"
         "name = fig-match2\n"
         "note = theta_m = 33.543 deg for BBO at 351 nm\n"
         "crystal = bbo\n"
         "family = type-I\n"
         "pump_nm = 351\n"
         "theta = collinear\n"
         "Lz_mm = 5\n"
         "observable = collinear-spectrum\n"},
        {"fig-match3",
         "# collinear type II wavelengths vs cut-angle deviation, BBO 5 mm\n"
         "name = fig-match3\n"
         "note = theta_m = 49.223 deg for BBO at 351 nm, mu_oe/mu_eo loci\n"
         "crystal = bbo\n"
         "family = type-II\n"
         "pump_nm = 351\n"
         "theta = collinear\n"
         "Lz_mm = 5\n"
         "observable = collinear-spectrum\n"},
        {"fig-cone-II",
         "# type II singles rings, BBO 407 nm, theta 42.5 deg, 1 mm, band 0.025\n"
         "name = fig-cone-II\n"
         "note = two-ring singles density map, 10 nm filter\n"
         "crystal = bbo\n"
         "family = type-II\n"
         "pump_nm = 407\n"
         "theta = 42.5\n"
         "Lz_mm = 1\n"
         "waist_um = 25\n"
         "filter = band 0.025\n"
         "observable = rings\n"
         "angle_points = 81\n"
         "xi2_points = 35\n"
         "nu_points = 7\n"},
        {"fig-hom1",
         "# Hong-Ou-Mandel dip, 1 mm BBO type I at 34 deg, 351 nm, no filters\n"
         "name = fig-hom1\n"
         "note = narrow type-I dip, collection on the nu = 0 ring\n"
         "crystal = bbo\n"
         "family = type-I\n"
         "pump_nm = 351\n"
         "theta = 34\n"
         "Lz_mm = 1\n"
         "filter = none\n"
         "observable = hom\n"
         "delay_um_max = 20\n"
         "delay_points = 401\n"},
        {"fig-hom2",
         "# Hong-Ou-Mandel dip, 1 mm BBO beamlike type II, 351 nm, 20 nm filters\n"
         "name = fig-hom2\n"
         "note = wide type-II dip at the beamlike cut\n"
         "crystal = bbo\n"
         "family = type-II\n"
         "pump_nm = 351\n"
         "theta = beamlike\n"
         "Lz_mm = 1\n"
         "filter = gaussian-nm 20\n"
         "observable = hom\n"
         "delay_um_max = 120\n"
         "delay_points = 481\n"},
        {"fig-clip1",
         "# type I transfer x-scan, 5 mm BBO, 405 nm, waist 25 um\n"
         "name = fig-clip1\n"
         "note = walk-off clipping of the angular-spectrum transfer\n"
         "crystal = bbo\n"
         "family = type-I\n"
         "pump_nm = 405\n"
         "theta = collinear\n"
         "Lz_mm = 5\n"
         "waist_um = 25\n"
         "filter = gaussian-nm 10\n"
         "observable = transfer\n"
         "axis = x\n"},
        {"fig-clip2",
         "# type I transfer y-scan, 5 mm BBO, 405 nm, waist 25 um\n"
         "name = fig-clip2\n"
         "note = undistorted pump profile in the y direction\n"
         "crystal = bbo\n"
         "family = type-I\n"
         "pump_nm = 405\n"
         "theta = collinear\n"
         "Lz_mm = 5\n"
         "waist_um = 25\n"
         "filter = gaussian-nm 10\n"
         "observable = transfer\n"
         "axis = y\n"},
        {"fig-clip3",
         "# type II transfer x-scan, 5 mm BBO, 405 nm, 10 nm band filter\n"
         "name = fig-clip3\n"
         "note = complete transfer of the pump profile through the filter band\n"
         "crystal = bbo\n"
         "family = type-II\n"
         "pump_nm = 405\n"
         "theta = collinear\n"
         "Lz_mm = 5\n"
         "waist_um = 25\n"
         "filter = band-nm 10\n"
         "observable = transfer\n"
         "axis = x\n"},
        {"fig-clip4",
         "# type II transfer y-scan, 5 mm BBO, 405 nm, 10 nm band filter\n"
         "name = fig-clip4\n"
         "note = undistorted pump profile in the y direction\n"
         "crystal = bbo\n"
         "family = type-II\n"
         "pump_nm = 405\n"
         "theta = collinear\n"
         "Lz_mm = 5\n"
         "waist_um = 25\n"
         "filter = band-nm 10\n"
         "observable = transfer\n"
         "axis = y\n"},
    };
    return cat;
}

} // namespace

const std::vector<BundledScenario>& bundled_scenarios() { return catalog(); }

std::vector<std::string> list_scenarios() {
    std::vector<std::string> names;
    for (const auto& b : catalog()) names.push_back(b.name);
    return names;
}

Scenario find_bundled_scenario(const std::string& name) {
    for (const auto& b : catalog())
        if (b.name == name) return parse_scenario_text(b.text);
    fail(Errc::config, "unknown bundled scenario '" + name + "' (see 'scenario list')");
}

} // namespace spdc

#include "spdc/crystal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <mutex>

#include <json.hpp>

namespace spdc {

namespace {

double n_squared(const SellmeierCoeffs& c, SellmeierForm form, double l) {
    const double l2 = l * l;
    switch (form) {
    case SellmeierForm::inverse_pole: return c.a + c.b / (l2 - c.c) - c.d * l2;
    case SellmeierForm::scaled_pole: return c.a + c.b * l2 / (l2 - c.c) - c.d * l2;
    }
    return 0.0;
}

double dn2_dlambda(const SellmeierCoeffs& c, SellmeierForm form, double l) {
    const double l2 = l * l;
    const double den = (l2 - c.c) * (l2 - c.c);
    switch (form) {
    case SellmeierForm::inverse_pole: return -2.0 * l * c.b / den - 2.0 * c.d * l;
    case SellmeierForm::scaled_pole: return -2.0 * l * c.b * c.c / den - 2.0 * c.d * l;
    }
    return 0.0;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return s;
}

std::vector<CrystalDispersion>& registry() {
    static std::vector<CrystalDispersion> r = {bbo(), liio3()};
    return r;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

double CrystalDispersion::index(Polarization pol, double lambda_um) const {
    if (!(lambda_um >= valid_lo_um && lambda_um <= valid_hi_um))
        fail(Errc::out_of_range, name + ": wavelength " + std::to_string(lambda_um) +
                                     " um outside validity window [" +
                                     std::to_string(valid_lo_um) + ", " +
                                     std::to_string(valid_hi_um) + "]");
    const SellmeierCoeffs& c = (pol == Polarization::ordinary) ? o : e;
    if (std::fabs(lambda_um * lambda_um - c.c) < 1e-6)
        fail(Errc::pole_proximity, name + ": wavelength too close to the Sellmeier pole");
    const double n2 = n_squared(c, form, lambda_um);
    return std::sqrt(n2);
}

double CrystalDispersion::index_derivative(Polarization pol, double lambda_um) const {
    const double n = index(pol, lambda_um);
    const SellmeierCoeffs& c = (pol == Polarization::ordinary) ? o : e;
    return dn2_dlambda(c, form, lambda_um) / (2.0 * n);
}

double sellmeier_index(const CrystalDispersion& c, Polarization pol, double lambda_um) {
    return c.index(pol, lambda_um);
}

const CrystalDispersion& bbo() {
    static const CrystalDispersion c{
        "BBO",
        SellmeierForm::inverse_pole,
        {2.7359, 0.01878, 0.01822, 0.01354},
        {2.3753, 0.01224, 0.01667, 0.01516},
        0.3,
        1.5,
    };
    return c;
}

const CrystalDispersion& liio3() {
    static const CrystalDispersion c{
        "LiIO3",
        SellmeierForm::scaled_pole,
        {2.083648, 1.332068, 0.035306, 0.008525},
        {1.673463, 1.245229, 0.028224, 0.003641},
        0.3,
        1.5,
    };
    return c;
}

const CrystalDispersion& find_crystal(const std::string& name) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    const std::string key = lower(name);
    for (const auto& c : registry())
        if (lower(c.name) == key) return c;
    fail(Errc::config, "unknown crystal '" + name + "'");
}

std::vector<std::string> crystal_names() {
    std::lock_guard<std::mutex> lock(registry_mutex());
    std::vector<std::string> out;
    for (const auto& c : registry()) out.push_back(c.name);
    return out;
}

void register_crystals(const std::vector<CrystalDispersion>& crystals) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    for (const auto& c : crystals) {
        auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& r) {
            return lower(r.name) == lower(c.name);
        });
        if (it != registry().end())
            *it = c;
        else
            registry().push_back(c);
    }
}

std::vector<CrystalDispersion> load_crystal_database(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::config, "cannot open crystal database '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        fail(Errc::config, "crystal database parse error: " + std::string(ex.what()));
    }
    if (!j.contains("version") || !j.contains("crystals"))
        fail(Errc::config, "crystal database needs 'version' and 'crystals' fields");

    std::vector<CrystalDispersion> out;
    for (const auto& e : j["crystals"]) {
        CrystalDispersion c;
        c.name = e.at("name").get<std::string>();
        const std::string form = e.at("form").get<std::string>();
        if (form == "inverse-pole")
            c.form = SellmeierForm::inverse_pole;
        else if (form == "scaled-pole")
            c.form = SellmeierForm::scaled_pole;
        else
            fail(Errc::config, "crystal '" + c.name + "': unknown form '" + form + "'");
        auto coeffs = [&](const char* key) {
            const auto& v = e.at(key);
            if (v.size() != 4) fail(Errc::config, "crystal coefficients need 4 entries");
            return SellmeierCoeffs{v[0].get<double>(), v[1].get<double>(), v[2].get<double>(),
                                   v[3].get<double>()};
        };
        c.o = coeffs("o");
        c.e = coeffs("e");
        const auto& r = e.at("valid_range_um");
        c.valid_lo_um = r[0].get<double>();
        c.valid_hi_um = r[1].get<double>();
        out.push_back(c);
    }
    register_crystals(out);
    return out;
}

} // namespace spdc

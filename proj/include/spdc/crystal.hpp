#pragma once

#include <string>
#include <vector>

#include "spdc/error.hpp"

namespace spdc {

enum class Polarization { ordinary, extraordinary };

// Two functional shapes of n^2(lambda) appear in the shipped Sellmeier sets
// (lambda in micrometers):
//   inverse_pole:  n^2 = A + B/(l^2 - C) - D l^2
//   scaled_pole:   n^2 = A + B l^2/(l^2 - C) - D l^2
enum class SellmeierForm { inverse_pole, scaled_pole };

struct SellmeierCoeffs {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
};

struct CrystalDispersion {
    std::string name;
    SellmeierForm form = SellmeierForm::inverse_pole;
    SellmeierCoeffs o;
    SellmeierCoeffs e;
    double valid_lo_um = 0.3;
    double valid_hi_um = 1.5;

    double index(Polarization pol, double lambda_um) const;
    // closed-form dn/dlambda of the Sellmeier shape
    double index_derivative(Polarization pol, double lambda_um) const;
    bool negative_uniaxial(double lambda_um) const {
        return index(Polarization::extraordinary, lambda_um) <
               index(Polarization::ordinary, lambda_um);
    }
};

double sellmeier_index(const CrystalDispersion& c, Polarization pol, double lambda_um);

// Built-in negative uniaxial crystals.
const CrystalDispersion& bbo();
const CrystalDispersion& liio3();

// Case-insensitive lookup among built-ins plus any crystals registered from a
// database file. Throws Errc::config when the name is unknown.
const CrystalDispersion& find_crystal(const std::string& name);
std::vector<std::string> crystal_names();

// Loads a JSON crystal database ({version, crystals:[{name, form, o, e,
// valid_range_um}]}) and registers its entries for find_crystal.
std::vector<CrystalDispersion> load_crystal_database(const std::string& path);
void register_crystals(const std::vector<CrystalDispersion>& crystals);

} // namespace spdc

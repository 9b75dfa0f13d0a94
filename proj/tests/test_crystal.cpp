#include <doctest.h>

#include <cmath>

#include "spdc/crystal.hpp"

using namespace spdc;

// frozen oracle values from a 40-digit evaluation of the published
// coefficient sets (see the Sellmeier shapes in crystal.hpp)
namespace {
constexpr double kBboNo702 = 1.66397083275129132977371887882;
constexpr double kBboNe702 = 1.54710573013481994566340513154;
constexpr double kLiio3No702 = 1.87465012569777383808350555334;
constexpr double kLiio3Ne702 = 1.72989809319525289526102831826;
constexpr double kBboNo351 = 1.70678685599594105703741513285;
} // namespace

TEST_CASE("Sellmeier indices match the high-precision oracle") {
    CHECK(std::fabs(bbo().index(Polarization::ordinary, 0.702) - kBboNo702) < 1e-14);
    CHECK(std::fabs(bbo().index(Polarization::extraordinary, 0.702) - kBboNe702) < 1e-14);
    CHECK(std::fabs(liio3().index(Polarization::ordinary, 0.702) - kLiio3No702) < 1e-14);
    CHECK(std::fabs(liio3().index(Polarization::extraordinary, 0.702) - kLiio3Ne702) < 1e-14);
    CHECK(std::fabs(bbo().index(Polarization::ordinary, 0.351) - kBboNo351) < 1e-14);
}

TEST_CASE("nm input converted to um gives the identical value") {
    const double via_nm = bbo().index(Polarization::ordinary, 702.0 / 1000.0);
    const double via_um = bbo().index(Polarization::ordinary, 0.702);
    CHECK(via_nm == via_um);
}

TEST_CASE("indices are physical over the validity window") {
    for (const CrystalDispersion* c : {&bbo(), &liio3()}) {
        for (int i = 0; i <= 120; ++i) {
            const double l = 0.3 + i * (1.5 - 0.3) / 120.0;
            const double no = c->index(Polarization::ordinary, l);
            const double ne = c->index(Polarization::extraordinary, l);
            CHECK(no * no > 1.0);
            CHECK(ne * ne > 1.0);
            CHECK(ne < no); // negative uniaxial
            CHECK(std::isfinite(no));
        }
        CHECK(c->negative_uniaxial(0.702));
    }
}

TEST_CASE("wavelengths outside the validity window are rejected") {
    CHECK_THROWS_AS(bbo().index(Polarization::ordinary, 0.2), Error);
    CHECK_THROWS_AS(bbo().index(Polarization::ordinary, 1.6), Error);
    try {
        bbo().index(Polarization::ordinary, 0.2);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::out_of_range);
    }
}

TEST_CASE("pole proximity is rejected") {
    // synthetic crystal with a pole inside the validity window
    CrystalDispersion c = bbo();
    c.o.c = 0.25; // pole at 0.5 um
    CHECK_THROWS_AS(c.index(Polarization::ordinary, 0.5), Error);
    try {
        c.index(Polarization::ordinary, 0.5);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::pole_proximity);
    }
    CHECK_NOTHROW(c.index(Polarization::ordinary, 0.6));
}

TEST_CASE("analytic dn/dlambda matches the central finite difference") {
    const double h = 1e-5;
    for (const CrystalDispersion* c : {&bbo(), &liio3()})
        for (Polarization p : {Polarization::ordinary, Polarization::extraordinary})
            for (double l : {0.4, 0.6, 0.9}) {
                const double fd = (c->index(p, l + h) - c->index(p, l - h)) / (2 * h);
                const double an = c->index_derivative(p, l);
                CHECK(std::fabs(an - fd) / std::fabs(fd) < 1e-6);
            }
}

TEST_CASE("repeated evaluations are bitwise identical") {
    const double a = liio3().index(Polarization::extraordinary, 0.61234);
    const double b = liio3().index(Polarization::extraordinary, 0.61234);
    CHECK(a == b);
}

TEST_CASE("crystal database file matches the built-ins digit for digit") {
    const auto db = load_crystal_database(std::string(SPDC_SOURCE_DIR) + "/data/crystals.json");
    REQUIRE(db.size() >= 2);
    const CrystalDispersion* file_bbo = nullptr;
    const CrystalDispersion* file_lio = nullptr;
    for (const auto& c : db) {
        if (c.name == "BBO") file_bbo = &c;
        if (c.name == "LiIO3") file_lio = &c;
    }
    REQUIRE(file_bbo != nullptr);
    REQUIRE(file_lio != nullptr);
    auto same = [](const SellmeierCoeffs& a, const SellmeierCoeffs& b) {
        return a.a == b.a && a.b == b.b && a.c == b.c && a.d == b.d;
    };
    CHECK(file_bbo->form == SellmeierForm::inverse_pole);
    CHECK(same(file_bbo->o, bbo().o));
    CHECK(same(file_bbo->e, bbo().e));
    CHECK(file_lio->form == SellmeierForm::scaled_pole);
    CHECK(same(file_lio->o, liio3().o));
    CHECK(same(file_lio->e, liio3().e));
}

TEST_CASE("find_crystal is case-insensitive and rejects unknowns") {
    CHECK(find_crystal("BBO").name == "BBO");
    CHECK(find_crystal("bbo").name == "BBO");
    CHECK(find_crystal("LiIO3").name == "LiIO3");
    CHECK_THROWS_AS(find_crystal("ktp"), Error);
}

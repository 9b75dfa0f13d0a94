#pragma once

#include <stdexcept>
#include <string>

namespace spdc {

enum class Errc {
    config,          // invalid configuration / input file
    out_of_range,    // wavelength outside the crystal validity window
    pole_proximity,  // too close to a Sellmeier resonance pole
    out_of_model,    // outside the small-detuning model (|nu| >= 0.15)
    empty_grid,
    no_root,         // no sign change found when scanning for a root
    no_sign_change,  // bracket endpoints do not bracket a root
    not_converged,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }
    // numeric failures get a distinct process exit code in the CLI
    bool numeric() const {
        return code_ == Errc::no_root || code_ == Errc::no_sign_change ||
               code_ == Errc::not_converged;
    }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace spdc

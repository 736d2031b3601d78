#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace rwa {

/// Parameters of the driven (Duffing) oscillator
///   H = p^2/2m + m w0^2 x^2/2 + alpha x^4/4 - F0 cos(w t) x.
/// alpha = 0 reduces every computation to the driven harmonic oscillator.
struct PhysicalConfig {
    double m = 1.0;       // mass, > 0
    double omega0 = 1.0;  // natural angular frequency, > 0
    double alpha = 0.0;   // quartic coefficient, any real
    double F0 = 0.0;      // drive force amplitude, >= 0
    double hbar = 1.0;    // action constant, > 0

    void validate() const;
};

/// Which operator basis underlies a rotating-frame computation: the standard
/// basis built on the natural frequency w0, or the one built on the drive
/// frequency w.
enum class FrameKind { Bare, Drive };

struct Frame {
    FrameKind kind;
    double reference_frequency;  // w0 for Bare, drive w for Drive

    static Frame bare(const PhysicalConfig& cfg);
    static Frame drive(double omega);
};

/// Rotating-frame expectation value (a c-number; phase = arg).
using SlowAmplitude = std::complex<double>;

// --- error types -----------------------------------------------------------

/// Undamped response diverges at w = w0; raised instead of returning +-Inf.
struct ResonanceSingularity : std::domain_error {
    double omega;
    explicit ResonanceSingularity(double omega_)
        : std::domain_error("response singular at omega = " + std::to_string(omega_)),
          omega(omega_) {}
};

/// c3 = c1 = 0 with c0 != 0: the steady-state condition has no solution.
struct DegenerateCubic : std::domain_error {
    DegenerateCubic() : std::domain_error("degenerate steady-state condition: c3 = c1 = 0, c0 != 0") {}
};

/// |x| exceeded the configured bound during time integration.
struct NumericalBlowup : std::runtime_error {
    double omega;
    NumericalBlowup(double omega_, const std::string& what_)
        : std::runtime_error(what_), omega(omega_) {}
};

/// Relative discrepancy against a zero reference amplitude is undefined.
struct ZeroReference : std::domain_error {
    ZeroReference() : std::domain_error("reference amplitude is zero") {}
};

/// A boundary comparison was requested for an F0 without an oracle jump.
struct MissingOracle : std::runtime_error {
    double F0;
    explicit MissingOracle(double F0_)
        : std::runtime_error("no oracle jump record for F0 = " + std::to_string(F0_)), F0(F0_) {}
};

}  // namespace rwa

#pragma once

#include <vector>

#include "rwa/model.hpp"
#include "rwa/types.hpp"

namespace rwa {

enum class ResponseMethod { Exact, RwaBare, RwaDrive };

/// Signed steady-state displacement amplitude, x(t) = X cos(w t).
/// X > 0: in phase with the drive; X < 0: antiphase.
struct HarmonicResponse {
    double X;
    ResponseMethod method;
};

/// Default guard on |w0^2 - w^2| below which the undamped response is treated
/// as singular.
double default_resonance_guard(const PhysicalConfig& cfg);

/// Exact response X = F0 / [m (w0^2 - w^2)].
/// Throws ResonanceSingularity when |w0^2 - w^2| <= eps_res (default 1e-9 w0^2).
HarmonicResponse exact_response(const PhysicalConfig& cfg, double omega, double eps_res = -1.0);

/// Standard rotating-wave result in the bare basis, X = -F0 / (2 m w0 Delta).
HarmonicResponse rwa_bare_response(const PhysicalConfig& cfg, double omega, double eps_res = -1.0);

/// Stationary solution in the drive-frequency basis:
/// beta = 2 F_b w / (w0^2 - w^2), converted to displacement. Coincides with
/// exact_response up to floating-point rounding.
HarmonicResponse rwa_drive_response(const PhysicalConfig& cfg, double omega, double eps_res = -1.0);

/// exact / bare-RWA amplitude ratio, 2 w0 / (w0 + w).
double response_ratio(const PhysicalConfig& cfg, double omega);

/// One point of a phase-space path parameterized by (x, p/(m w0)).
struct PhasePoint {
    double x;
    double p_scaled;
};

/// Samples one drive period of the exact trajectory x = X cos(w t),
/// p = -m w X sin(w t) in (x, p/(m w0)) coordinates: an ellipse with vertices
/// X and X w/w0. n_samples >= 4.
std::vector<PhasePoint> phase_trajectory(double X, const PhysicalConfig& cfg, double omega,
                                         int n_samples);

/// Radius of the circular path traced by a stationary bare-frame amplitude,
/// 2 |<a>| sqrt(hbar / (2 m w0)), with <a> taken from rwa_bare_response.
double rwa_circle_radius(const PhysicalConfig& cfg, double omega, double eps_res = -1.0);

/// Samples the circular bare-RWA path of radius rwa_circle_radius.
std::vector<PhasePoint> rwa_circle_trajectory(const PhysicalConfig& cfg, double omega,
                                              int n_samples, double eps_res = -1.0);

/// Decomposition of the exact solution's bare-rotating-frame amplitude,
/// <a~(t)> = stationary + counter_rotating * e^{2 i w t}. The counter-rotating
/// part is the micromotion discarded by the RWA; it vanishes at w = w0.
struct Micromotion {
    SlowAmplitude stationary;        // X sqrt(m/(2 hbar w0)) (w0 + w)/2
    SlowAmplitude counter_rotating;  // X sqrt(m/(2 hbar w0)) (w0 - w)/2
};

Micromotion micromotion_components(const PhysicalConfig& cfg, double omega, double eps_res = -1.0);

}  // namespace rwa

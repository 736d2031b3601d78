#include "rwa/harmonic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rwa {

namespace {

double resolve_guard(const PhysicalConfig& cfg, double eps_res) {
    return eps_res < 0.0 ? default_resonance_guard(cfg) : eps_res;
}

// |w0^2 - w^2| > eps, else singular
void check_resonance(const PhysicalConfig& cfg, double omega, double eps) {
    const double d2 = cfg.omega0 * cfg.omega0 - omega * omega;
    if (std::abs(d2) <= eps) throw ResonanceSingularity(omega);
}

}  // namespace

double default_resonance_guard(const PhysicalConfig& cfg) {
    return 1e-9 * cfg.omega0 * cfg.omega0;
}

HarmonicResponse exact_response(const PhysicalConfig& cfg, double omega, double eps_res) {
    const double eps = resolve_guard(cfg, eps_res);
    check_resonance(cfg, omega, eps);
    const double X = cfg.F0 / (cfg.m * (cfg.omega0 * cfg.omega0 - omega * omega));
    return {X, ResponseMethod::Exact};
}

HarmonicResponse rwa_bare_response(const PhysicalConfig& cfg, double omega, double eps_res) {
    const double eps = resolve_guard(cfg, eps_res);
    const double delta = detuning(cfg, omega);
    if (std::abs(delta) <= eps / cfg.omega0) throw ResonanceSingularity(omega);
    const double X = -cfg.F0 / (2.0 * cfg.m * cfg.omega0 * delta);
    return {X, ResponseMethod::RwaBare};
}

HarmonicResponse rwa_drive_response(const PhysicalConfig& cfg, double omega, double eps_res) {
    const double eps = resolve_guard(cfg, eps_res);
    check_resonance(cfg, omega, eps);
    const Frame frame = Frame::drive(omega);
    const double fb = drive_coupling(cfg, frame);
    const double beta = 2.0 * fb * omega / (cfg.omega0 * cfg.omega0 - omega * omega);
    return {signed_displacement_from_amplitude(beta, cfg, frame), ResponseMethod::RwaDrive};
}

double response_ratio(const PhysicalConfig& cfg, double omega) {
    return 2.0 * cfg.omega0 / (cfg.omega0 + omega);
}

std::vector<PhasePoint> phase_trajectory(double X, const PhysicalConfig& cfg, double omega,
                                         int n_samples) {
    if (n_samples < 4) throw std::invalid_argument("phase_trajectory: n_samples must be >= 4");
    std::vector<PhasePoint> points;
    points.reserve(static_cast<std::size_t>(n_samples));
    const double ratio = omega / cfg.omega0;
    for (int i = 0; i < n_samples; ++i) {
        const double phase = 2.0 * std::numbers::pi * i / n_samples;
        points.push_back({X * std::cos(phase), -ratio * X * std::sin(phase)});
    }
    return points;
}

double rwa_circle_radius(const PhysicalConfig& cfg, double omega, double eps_res) {
    const double X = rwa_bare_response(cfg, omega, eps_res).X;
    const Frame frame = Frame::bare(cfg);
    const double amp = std::abs(amplitude_from_signed_displacement(X, cfg, frame));
    return 2.0 * amp * amplitude_scale(cfg, frame);
}

std::vector<PhasePoint> rwa_circle_trajectory(const PhysicalConfig& cfg, double omega,
                                              int n_samples, double eps_res) {
    if (n_samples < 4) throw std::invalid_argument("rwa_circle_trajectory: n_samples must be >= 4");
    const double R = rwa_circle_radius(cfg, omega, eps_res);
    std::vector<PhasePoint> points;
    points.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double phase = 2.0 * std::numbers::pi * i / n_samples;
        points.push_back({R * std::cos(phase), -R * std::sin(phase)});
    }
    return points;
}

Micromotion micromotion_components(const PhysicalConfig& cfg, double omega, double eps_res) {
    // Substitute the exact solution into the bare-frame amplitude
    // <a~(t)> = e^{iwt} sqrt(m w0 / 2 hbar) [x + i p/(m w0)] and collect the
    // stationary and e^{2iwt} parts.
    const double X = exact_response(cfg, omega, eps_res).X;
    const double scale = std::sqrt(cfg.m / (2.0 * cfg.hbar * cfg.omega0));
    return Micromotion{
        SlowAmplitude{X * scale * 0.5 * (cfg.omega0 + omega), 0.0},
        SlowAmplitude{X * scale * 0.5 * (cfg.omega0 - omega), 0.0},
    };
}

}  // namespace rwa

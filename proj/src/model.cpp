#include "rwa/model.hpp"

#include <cmath>
#include <stdexcept>

namespace rwa {

void PhysicalConfig::validate() const {
    if (!(m > 0.0)) throw std::invalid_argument("PhysicalConfig: m must be > 0");
    if (!(omega0 > 0.0)) throw std::invalid_argument("PhysicalConfig: omega0 must be > 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("PhysicalConfig: hbar must be > 0");
    if (!(F0 >= 0.0)) throw std::invalid_argument("PhysicalConfig: F0 must be >= 0");
    if (!std::isfinite(alpha)) throw std::invalid_argument("PhysicalConfig: alpha must be finite");
}

Frame Frame::bare(const PhysicalConfig& cfg) {
    return Frame{FrameKind::Bare, cfg.omega0};
}

Frame Frame::drive(double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("Frame::drive: omega must be > 0");
    return Frame{FrameKind::Drive, omega};
}

double detuning(const PhysicalConfig& cfg, double omega) {
    return omega - cfg.omega0;
}

double drive_coupling(const PhysicalConfig& cfg, const Frame& frame) {
    return cfg.F0 / (2.0 * std::sqrt(2.0 * cfg.m * frame.reference_frequency * cfg.hbar));
}

double amplitude_scale(const PhysicalConfig& cfg, const Frame& frame) {
    return std::sqrt(cfg.hbar / (2.0 * cfg.m * frame.reference_frequency));
}

Displacement amplitude_to_displacement(SlowAmplitude beta, const PhysicalConfig& cfg,
                                       const Frame& frame) {
    return Displacement{2.0 * std::abs(beta) * amplitude_scale(cfg, frame), std::arg(beta)};
}

SlowAmplitude displacement_to_amplitude(const Displacement& d, const PhysicalConfig& cfg,
                                        const Frame& frame) {
    const double mag = d.magnitude / (2.0 * amplitude_scale(cfg, frame));
    return std::polar(mag, d.phase);
}

double amplitude_from_signed_displacement(double X, const PhysicalConfig& cfg,
                                          const Frame& frame) {
    return X / (2.0 * amplitude_scale(cfg, frame));
}

double signed_displacement_from_amplitude(double beta, const PhysicalConfig& cfg,
                                          const Frame& frame) {
    return 2.0 * beta * amplitude_scale(cfg, frame);
}

}  // namespace rwa

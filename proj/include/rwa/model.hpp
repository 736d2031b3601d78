#pragma once

#include "rwa/types.hpp"

namespace rwa {

/// Lab-frame displacement amplitude and phase, x(t) = magnitude * cos(w t - phase).
struct Displacement {
    double magnitude;  // >= 0
    double phase;      // radians
};

/// Detuning Delta = w - w0.
double detuning(const PhysicalConfig& cfg, double omega);

/// Drive coupling of the frame's ladder operators, F0 / (2 sqrt(2 m W hbar))
/// with W the frame's reference frequency. Has units of angular frequency.
double drive_coupling(const PhysicalConfig& cfg, const Frame& frame);

/// sqrt(hbar / (2 m W)): the length scale relating amplitudes to displacement,
/// x = 2 Re<beta e^{-iwt}> * amplitude_scale.
double amplitude_scale(const PhysicalConfig& cfg, const Frame& frame);

/// Stationary rotating-frame amplitude -> lab-frame displacement,
/// X = 2 |beta| sqrt(hbar / (2 m W)), theta = arg beta.
Displacement amplitude_to_displacement(SlowAmplitude beta, const PhysicalConfig& cfg,
                                       const Frame& frame);

/// Inverse of amplitude_to_displacement.
SlowAmplitude displacement_to_amplitude(const Displacement& d, const PhysicalConfig& cfg,
                                        const Frame& frame);

/// Signed real displacement amplitude -> real rotating-frame amplitude
/// (phase 0 or pi folded into the sign).
double amplitude_from_signed_displacement(double X, const PhysicalConfig& cfg,
                                          const Frame& frame);

/// Real rotating-frame amplitude -> signed displacement amplitude.
double signed_displacement_from_amplitude(double beta, const PhysicalConfig& cfg,
                                          const Frame& frame);

}  // namespace rwa

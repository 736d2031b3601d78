#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "rwa/types.hpp"

namespace rwa {

/// Settings of the time-domain ground-truth integrator.
struct IntegratorConfig {
    int steps_per_period = 256;   // >= 32
    double gamma = -1.0;          // damping rate; < 0 means default 1e-3 * w0
    int settle_periods = 2000;    // transient periods before measuring
    int measure_periods = 100;    // Fourier window length in drive periods
    double blowup_limit = 1e6;    // |x| bound; exceeding it raises NumericalBlowup

    double resolved_gamma(const PhysicalConfig& cfg) const;
    void validate(const PhysicalConfig& cfg) const;
};

struct State {
    double x = 0.0;
    double p = 0.0;
};

struct TrajectorySample {
    double t;
    double x;
    double p;
};

using Trajectory = std::vector<TrajectorySample>;

/// Fixed-step integration of
///   dx/dt = p/m,  dp/dt = -m w0^2 x - alpha x^3 + F0 cos(w t) - gamma p
/// over n_periods drive periods T = 2 pi / w, sampled every step (including
/// t = 0). The stepper is the two-stage Gauss-Legendre Runge-Kutta method
/// (order 4, symplectic): it conserves the quadratic energy of the
/// undriven, undamped harmonic case to roundoff, so the only dissipation in
/// the oracle is the explicit gamma term.
Trajectory integrate(const PhysicalConfig& cfg, const IntegratorConfig& icfg, double omega,
                     State state0, int n_periods);

/// Energy of a state, p^2/2m + m w0^2 x^2/2 + alpha x^4/4.
double energy(const PhysicalConfig& cfg, const State& s);

/// Fourier component at the drive frequency,
///   x_w = (2/T) integral x(t) e^{-i w t} dt
/// over the trajectory's full span (an integer number of drive periods by
/// construction), so that x(t) = X cos(w t + phi) gives x_w = X e^{i phi}.
/// Trapezoidal quadrature on the integration grid.
std::complex<double> fourier_component(const Trajectory& traj, double omega);

/// An adiabatic frequency sweep: ordered grid from omega_start to omega_end.
/// By default the final state of each point seeds the next one; with
/// cold_restart every point starts from initial_state (basin probing).
struct SweepPlan {
    double omega_start;
    double omega_end;
    int n_points;  // >= 2
    State initial_state{0.0, 0.0};
    bool cold_restart = false;

    void validate() const;
    std::vector<double> omegas() const;
};

struct SweepRecord {
    double omega;
    std::complex<double> x_omega;
    double magnitude;
    State final_state;
};

/// For each frequency of the plan: settle settle_periods, then measure
/// measure_periods with Fourier projection. NumericalBlowup carries the
/// offending omega.
std::vector<SweepRecord> adiabatic_sweep(const PhysicalConfig& cfg, const IntegratorConfig& icfg,
                                         const SweepPlan& plan);

/// Midpoint of the first adjacent pair whose |x_w| difference exceeds
/// threshold_factor times the median adjacent difference; nullopt when no
/// such pair exists. Requires >= 3 records.
std::optional<double> detect_jump(std::span<const SweepRecord> records,
                                  double threshold_factor = 20.0);

}  // namespace rwa

#pragma once

#include <span>
#include <string>
#include <vector>

#include "rwa/model.hpp"
#include "rwa/types.hpp"

namespace rwa {

/// Coefficients of the rotating-frame slow-flow equation
///   i d<beta>/dt = lambda beta + kappa (q beta + beta |beta|^2) - f,
/// with q = 1 when the operator-ordering linear term is kept, else 0.
struct SlowFlowParams {
    Frame frame;
    double lambda;  // -Delta (Bare) or (w0^2 - w^2)/(2w) (Drive)
    double kappa;   // 3 alpha hbar / (4 m^2 W^2)
    double f;       // drive coupling F0 / (2 sqrt(2 m W hbar))
    bool quantum_ordering = false;
};

SlowFlowParams slow_flow_params(const PhysicalConfig& cfg, double omega, FrameKind kind,
                                bool quantum_ordering = false);

/// Right-hand side of the slow flow, i.e. d<beta>/dt divided by -i.
/// Zero at a steady state.
SlowAmplitude slow_flow_rhs(const SlowFlowParams& params, SlowAmplitude beta);

/// Real steady-state condition c3 X^3 + c1 X + c0 = 0 in the signed
/// displacement amplitude X (no quadratic term by construction).
struct CubicCondition {
    double c3;  // 3 alpha / (4 m)
    double c1;  // (w0^2 - w^2) Drive, 2 w0 (w0 - w) Bare; +3 alpha hbar/(2 m W) if ordering kept
    double c0;  // -F0 / m
};

CubicCondition steady_cubic(const PhysicalConfig& cfg, double omega, FrameKind kind,
                            bool quantum_ordering = false);

/// -4 c3 c1^3 - 27 c3^2 c0^2: positive for three distinct real roots, zero at
/// a fold, negative for one real root.
double discriminant(const CubicCondition& cond);

/// One steady-state displacement branch.
struct SteadyBranch {
    double X;
    bool stable = false;
    int multiplicity = 1;
};

/// All real roots of the steady-state condition, Newton-refined so that
/// |c3 X^3 + c1 X + c0| <= 1e-12 max(|c3 X^3|, |c1 X|, |c0|, tiny).
/// Stability is left unset. Throws DegenerateCubic when c3 = c1 = 0, c0 != 0.
std::vector<SteadyBranch> solve_cubic(const CubicCondition& cond);

/// gamma -> 0+ stability classification: a single root is stable; of three
/// distinct roots the one of middle |X| is unstable; at a fold the doubled
/// root is unstable.
std::vector<SteadyBranch> classify_stability(std::vector<SteadyBranch> branches);

/// Branches at one sweep frequency. `error` is empty on success; a failed
/// point is recorded, not fatal.
struct SweepPoint {
    double omega;
    std::vector<SteadyBranch> branches;
    std::string error;
};

struct SlowFlowSweep {
    std::vector<SweepPoint> points;
    std::vector<double> fold_frequencies;  // discriminant zeros, bisected to 1e-10 relative
};

/// Classified branches over a frequency grid plus fold frequencies located by
/// discriminant sign changes refined with bisection.
SlowFlowSweep frequency_sweep(const PhysicalConfig& cfg, FrameKind kind,
                              std::span<const double> omega_grid, bool quantum_ordering = false);

/// Bisects discriminant(steady_cubic(w)) = 0 on [omega_lo, omega_hi]
/// (endpoints must bracket a sign change) to 1e-10 relative in omega.
double refine_fold(const PhysicalConfig& cfg, FrameKind kind, double omega_lo, double omega_hi,
                   bool quantum_ordering = false);

/// Fold frequency for a hardening oscillator (alpha > 0, F0 > 0): the single
/// discriminant zero above w0, bracketed automatically and bisected.
double fold_frequency(const PhysicalConfig& cfg, FrameKind kind, bool quantum_ordering = false);

}  // namespace rwa

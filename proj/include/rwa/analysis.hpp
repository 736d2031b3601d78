#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "rwa/duffing.hpp"
#include "rwa/types.hpp"

namespace rwa {

enum class BranchLabel { Low, High };

/// Relative amplitude discrepancy of one RWA prediction from the oracle.
struct DiscrepancyPoint {
    double omega;
    double delta_x;  // >= 0
    BranchLabel branch;
    bool flagged = false;  // amplitude mismatch > 50% at pairing time
};

/// delta_x = | |x_w| - |x_RWA| | / |x_w|, compared on magnitudes (the RWA
/// steady states are real while the oracle carries an O(gamma) phase).
/// Throws ZeroReference when |x_w| = 0.
double discrepancy_x(std::complex<double> x_omega_oracle, double x_rwa);

/// delta_w = |w_ref - w_rwa| / w_ref.
double discrepancy_omega(double omega_ref, double omega_rwa);

/// Nearest classified-stable branch to an oracle magnitude. Returns the index
/// into `branches` plus the relative mismatch; flagged when mismatch > 0.5.
struct BranchMatch {
    int index = -1;
    double mismatch = 0.0;
    bool flagged = false;
    BranchLabel label = BranchLabel::Low;
};

BranchMatch match_stable_branch(std::span<const SteadyBranch> branches, double oracle_magnitude);

/// Stable-solution counts over an (omega, F0) grid and per-frame fold
/// boundary curves omega*(F0).
struct PhaseDiagram {
    std::vector<double> omega_grid;
    std::vector<double> F0_grid;
    // row-major: cell(iF0, iomega) = counts[iF0 * omega_grid.size() + iomega]
    std::vector<int> count_drive;
    std::vector<int> count_bare;
    std::vector<double> boundary_drive;  // omega*(F0), one per F0
    std::vector<double> boundary_bare;

    int cell(FrameKind kind, std::size_t iF0, std::size_t iomega) const;
};

/// Per cell: 1 stable solution where the cubic has one real root, 2 where it
/// has three. Boundaries from discriminant bisection per F0 row.
PhaseDiagram phase_diagram(const PhysicalConfig& cfg, std::span<const double> omega_grid,
                           std::span<const double> F0_grid, bool quantum_ordering = false);

/// Fold-boundary discrepancies of both frames against oracle jump
/// frequencies, one entry per F0.
struct BoundaryComparison {
    double F0;
    double fold_drive;
    double fold_bare;
    double omega_jump;
    double delta_drive;  // |fold_drive - jump| / jump
    double delta_bare;
};

/// Throws MissingOracle for any F0 whose jump entry is nullopt.
std::vector<BoundaryComparison> boundary_compare(
    const PhysicalConfig& cfg, std::span<const double> F0_list,
    std::span<const std::optional<double>> oracle_jumps, bool quantum_ordering = false);

}  // namespace rwa

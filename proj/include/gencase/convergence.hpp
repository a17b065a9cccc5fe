#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gencase/density.hpp"

namespace gencase {
namespace strata {

enum class ConvergenceClass {
    strongly_generic,
    generic,
    negligible,
    strongly_negligible,
    inconclusive,
};

const char* convergence_class_name(ConvergenceClass c);

enum class LimitTarget { zero, one, automatic };

/// Knobs of the finite-window classifier. Superpolynomial convergence is not
/// decidable from finitely many radii, so the classifier is an explicit
/// proxy: fit |rho - delta(n)| by the best polynomial decay n^-d with
/// d <= d_max and by an exponential decay, both least-squares in log space,
/// and call the convergence "strongly" only when the exponential model's
/// residual is at least `strongly_ratio` times smaller.
struct ClassifyParams {
    double d_max = 8.0;
    double strongly_ratio = 10.0;
    /// Minimum fitted decay degree to accept that the profile converges to
    /// the target at all.
    double min_decay = 0.25;
    /// The final observed residual must be below this to claim the limit.
    double limit_tolerance = 0.25;
};

struct ConvergenceReport {
    ConvergenceClass klass = ConvergenceClass::inconclusive;
    double limit_estimate = 0.0;   // rho
    double fitted_exponent = 0.0;  // d of the best polynomial model (clamped to d_max)
    double fit_residual = 0.0;     // log-space RMSE of the winning model
    double poly_rmse = 0.0;
    double exp_rmse = 0.0;
    double exp_rate = 0.0;  // b in residual ~ C * exp(-b n)
    std::vector<uint32_t> radii;
};

/// Classifies how (and whether) a density profile converges to 0 or 1.
/// Requires at least 4 points. Noisy or non-converging profiles come back
/// inconclusive rather than erroring.
ConvergenceReport classify_convergence(const DensityProfile& profile,
                                       LimitTarget target = LimitTarget::automatic,
                                       const ClassifyParams& params = {});

} // namespace strata
} // namespace gencase

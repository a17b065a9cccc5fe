#include "gencase/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gencase {
namespace strata {

namespace {

constexpr double kExactEps = 1e-12;
constexpr double kLogFloor = 1e-15;

struct Fit {
    double slope = 0.0;
    double rmse = 0.0;
};

/// Least squares y ~ a + slope * x; if the slope lands outside
/// [slope_min, slope_max] it is clamped and the intercept refit.
Fit fit_line(const std::vector<double>& xs, const std::vector<double>& ys, double slope_min,
             double slope_max) {
    const size_t n = xs.size();
    double mx = 0, my = 0;
    for (size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    Fit f;
    f.slope = sxx > 0 ? sxy / sxx : 0.0;
    f.slope = std::clamp(f.slope, slope_min, slope_max);
    const double intercept = my - f.slope * mx;
    double sse = 0;
    for (size_t i = 0; i < n; ++i) {
        const double e = ys[i] - (intercept + f.slope * xs[i]);
        sse += e * e;
    }
    f.rmse = std::sqrt(sse / static_cast<double>(n));
    return f;
}

struct TargetFit {
    bool converges = false;
    bool strongly = false;
    double d = 0.0;
    double poly_rmse = 0.0;
    double exp_rmse = 0.0;
    double exp_rate = 0.0;
    double final_residual = 0.0;
};

TargetFit fit_target(const std::vector<uint32_t>& radii, const std::vector<double>& values,
                     double rho, const ClassifyParams& p) {
    const size_t n = radii.size();
    std::vector<double> residual(n);
    for (size_t i = 0; i < n; ++i) residual[i] = std::abs(rho - values[i]);

    TargetFit tf;
    tf.final_residual = residual.back();

    // Exactly rho from some radius on: converged faster than the window can
    // resolve, which is the strongest verdict the data supports.
    size_t trailing_exact = 0;
    while (trailing_exact < n && residual[n - 1 - trailing_exact] <= kExactEps) ++trailing_exact;
    if (trailing_exact >= std::max<size_t>(2, n / 2)) {
        tf.converges = true;
        tf.strongly = true;
        tf.d = p.d_max;
        tf.poly_rmse = 0.0;
        tf.exp_rmse = 0.0;
        return tf;
    }

    std::vector<double> log_r(n), log_n(n), lin_n(n);
    for (size_t i = 0; i < n; ++i) {
        log_r[i] = std::log(std::max(residual[i], kLogFloor));
        log_n[i] = std::log(static_cast<double>(radii[i]));
        lin_n[i] = static_cast<double>(radii[i]);
    }

    const Fit poly = fit_line(log_n, log_r, -p.d_max, 0.0);
    const Fit expo = fit_line(lin_n, log_r, -1e9, 0.0);
    tf.d = -poly.slope;
    tf.poly_rmse = poly.rmse;
    tf.exp_rmse = expo.rmse;
    tf.exp_rate = -expo.slope;

    const bool poly_decays = tf.d >= p.min_decay;
    const bool exp_decays = tf.exp_rate > 0.0;
    tf.converges = (poly_decays || exp_decays) && tf.final_residual < p.limit_tolerance;
    tf.strongly = tf.converges && exp_decays && tf.exp_rmse * p.strongly_ratio <= tf.poly_rmse;
    return tf;
}

} // namespace

const char* convergence_class_name(ConvergenceClass c) {
    switch (c) {
        case ConvergenceClass::strongly_generic: return "strongly_generic";
        case ConvergenceClass::generic: return "generic";
        case ConvergenceClass::negligible: return "negligible";
        case ConvergenceClass::strongly_negligible: return "strongly_negligible";
        case ConvergenceClass::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

ConvergenceReport classify_convergence(const DensityProfile& profile, LimitTarget target,
                                       const ClassifyParams& params) {
    if (profile.points.size() < 4)
        throw std::invalid_argument("classify_convergence: need at least 4 profile points");

    std::vector<uint32_t> radii;
    std::vector<double> values;
    for (const auto& pt : profile.points) {
        radii.push_back(pt.n);
        values.push_back(pt.value);
    }

    ConvergenceReport report;
    report.radii = radii;

    const bool try_one = target != LimitTarget::zero;
    const bool try_zero = target != LimitTarget::one;
    TargetFit at_one, at_zero;
    if (try_one) at_one = fit_target(radii, values, 1.0, params);
    if (try_zero) at_zero = fit_target(radii, values, 0.0, params);

    const TargetFit* winner = nullptr;
    double rho = 0.0;
    if (at_one.converges && (!at_zero.converges || at_one.final_residual <= at_zero.final_residual)) {
        winner = &at_one;
        rho = 1.0;
    } else if (at_zero.converges) {
        winner = &at_zero;
        rho = 0.0;
    }

    if (winner == nullptr) {
        report.klass = ConvergenceClass::inconclusive;
        const size_t tail = std::min<size_t>(3, values.size());
        double mean = 0.0;
        for (size_t i = values.size() - tail; i < values.size(); ++i) mean += values[i];
        report.limit_estimate = mean / static_cast<double>(tail);
        const TargetFit& best = (try_one && (!try_zero || at_one.final_residual <= at_zero.final_residual))
                                    ? at_one
                                    : at_zero;
        report.fitted_exponent = best.d;
        report.poly_rmse = best.poly_rmse;
        report.exp_rmse = best.exp_rmse;
        report.exp_rate = best.exp_rate;
        report.fit_residual = std::min(best.poly_rmse, best.exp_rmse);
        return report;
    }

    report.limit_estimate = rho;
    report.fitted_exponent = winner->d;
    report.poly_rmse = winner->poly_rmse;
    report.exp_rmse = winner->exp_rmse;
    report.exp_rate = winner->exp_rate;
    report.fit_residual = winner->strongly ? winner->exp_rmse : winner->poly_rmse;
    if (rho == 1.0) {
        report.klass =
            winner->strongly ? ConvergenceClass::strongly_generic : ConvergenceClass::generic;
    } else {
        report.klass =
            winner->strongly ? ConvergenceClass::strongly_negligible : ConvergenceClass::negligible;
    }
    return report;
}

} // namespace strata
} // namespace gencase

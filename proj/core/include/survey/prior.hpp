#pragma once

#include <random>
#include <string>
#include <vector>

#include "survey/numeric.hpp"

namespace survey {

enum class PriorKind { Exponential, Uniform, LogNormal, PiecewisePolynomial };

struct PriorEval {
    double pdf = 0.0;
    double cdf = 0.0;
    double pdf_derivative = 0.0;
};

// Interval on which the regularity condition 2 f^2 >= f' F fails.
struct IrregularInterval {
    double i = 0.0;
    double j = 0.0;
};

// The marginal cost distribution F.  Immutable after construction; safe to
// share across threads.  Piecewise-polynomial densities are normalized to
// unit mass at construction (coefficients are in ascending powers of
// (x - piece_lo)).
class Prior {
  public:
    static Prior exponential(double rate);
    static Prior uniform(double lo, double hi);
    static Prior lognormal(double mu, double sigma);
    static Prior piecewise_polynomial(std::vector<double> breakpoints,
                                      std::vector<std::vector<double>> coefficients);

    PriorKind kind() const { return kind_; }
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }  // +inf for unbounded tails
    bool bounded() const { return hi_ < kInf; }

    // (f, F, f') at x.  Off support: (0, 0 or 1, 0).  Throws
    // NonFiniteDerivative at an interior piecewise-polynomial breakpoint.
    PriorEval eval(double x) const;
    // One-sided (right-limit) evaluation; never throws inside the support.
    PriorEval eval_right(double x) const;

    double pdf(double x) const { return eval_right(x).pdf; }
    double cdf(double x) const;
    double pdf_derivative(double x) const { return eval_right(x).pdf_derivative; }

    // Inverse CDF.  u in [0,1].
    double quantile(double u) const;
    double sample_cost(std::mt19937_64& rng) const;

    // 2 f(x)^2 - f'(x) F(x); preconditions as eval.
    double regularity_gap(double x) const;

    // Scans the sign of the regularity gap on a grid (refined until the
    // crossing count stabilizes; GridTooCoarse beyond the refinement cap),
    // then bisects each crossing.  Returns disjoint sorted intervals.
    std::vector<IrregularInterval> find_irregular_intervals(int grid_resolution = 4096) const;

    // Upper integration limit: support top, or the point where 1 - F < tail_eps.
    double effective_hi(double tail_eps = 1e-12) const;

    // Interior breakpoints (piecewise-polynomial only) for quadrature splitting.
    const std::vector<double>& interior_breakpoints() const { return interior_breaks_; }

    // Parameters (for serialization).
    double param(int idx) const { return params_[idx]; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<std::vector<double>>& coefficients() const { return coefficients_; }

  private:
    Prior() = default;
    PriorEval eval_impl(double x, bool one_sided) const;

    PriorKind kind_ = PriorKind::Uniform;
    double lo_ = 0.0;
    double hi_ = 0.0;
    double params_[2] = {0.0, 0.0};
    std::vector<double> breakpoints_;
    std::vector<std::vector<double>> coefficients_;  // normalized
    std::vector<double> piece_cdf_base_;             // F at each breakpoint
    std::vector<double> interior_breaks_;
};

}  // namespace survey

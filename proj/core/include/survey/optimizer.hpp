#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "survey/functionals.hpp"
#include "survey/offer.hpp"
#include "survey/prior.hpp"

namespace survey {

struct SolverOptions {
    double alpha_lo = 1e-9;
    double alpha_hi = 1e9;
    int max_iter = 200;
    double rel_tol = 1e-6;       // constraint match, relative
    double tradeoff_tol = 1e-8;  // variable-n trade-off residual
    bool run_certificate = true;
};

// A solved mechanism: the offer distribution plus the scale, sample count,
// multiplier, achieved metrics and its optimality certificate.
struct Design {
    OfferDistribution dist;
    double alpha = 0.0;
    int n = 1;
    double lambda = 0.0;  // alpha * n^2
    double achieved_cost = 0.0;
    double achieved_vstar = 0.0;
    CertificateReport certificate;
    std::map<std::string, double> diagnostics;
    std::vector<std::string> log;
};

// Minimize V* subject to expected cost <= B (binding): bisection on log(alpha)
// using monotonicity of cost in alpha.  Throws InfeasibleBudget with the
// achievable range.
Design solve_budget(const Prior& prior, int n, double budget, const SolverOptions& opts = {});

// Minimize cost subject to V* <= vmax (binding).
Design solve_variance(const Prior& prior, int n, double vmax, const SolverOptions& opts = {});

// Black-box convex objective Phi(cost, vstar) with partial-derivative oracle.
struct ConvexObjective {
    std::function<double(double, double)> value;
    std::function<double(double, double)> d_cost;
    std::function<double(double, double)> d_vstar;
};

// Solves the stationarity fixed point alpha = dPhi/dvstar / dPhi/dcost at
// (Cost(alpha), V*(alpha)).  Monotonicity/convexity of Phi are spot-checked
// on a 5x5 grid of achievable (cost, vstar) values (InvalidInput on failure);
// NoCrossing if no bracket exists in [alpha_lo, alpha_hi].
Design solve_convex(const Prior& prior, int n, const ConvexObjective& phi,
                    const SolverOptions& opts = {});

struct VariableNConstraint {
    enum class Type { Budget, Variance };
    Type type = Type::Budget;
    double value = 0.0;
};

// Variable number of participants with per-recruit cost beta.  beta > 0:
// root of the trade-off sqrt(a) V*_1(a) = (Cost_1(a) + beta)/sqrt(a), then n
// from the active constraint, rounded to an integer and alpha re-tightened.
// beta = 0: the family representative with the smallest n at which xbar = 0;
// NoFiniteOptimum when the prior has mass at arbitrarily small costs.
Design solve_variable_n(const Prior& prior, double beta, const VariableNConstraint& constraint,
                        const SolverOptions& opts = {});

}  // namespace survey

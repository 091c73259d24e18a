#pragma once

#include <vector>

#include "survey/offer.hpp"
#include "survey/prior.hpp"

namespace survey {

// Discretized offer-design program on a price grid: minimize
//   sum_i fcell_i / s_i   (f mass per cell over the cell's survival)
// over nonincreasing s in [floor, 1], subject to the discretized cost
//   boundary_cost_0 + sum_i w_i s_i <= budget  (w_i = x_{i+1}F_{i+1} - x_i F_i).
// Used only by tests and the `verify` command as an independent optimum.
struct GridProblem {
    std::vector<double> boundaries;   // M+1 ascending prices covering the support
    std::vector<double> f_cell;       // prior mass per cell (sums to ~1)
    std::vector<double> cost_weight;  // per-survival-variable cost coefficients
    double fixed_cost = 0.0;          // x_1 F(x_1) * s_0 with s_0 = 1
    double budget = 0.0;              // per-sample budget
    int n = 1;
    double survival_floor = 1e-6;

    static GridProblem from_prior(const Prior& prior, int cells, double per_sample_budget,
                                  int n = 1);
};

struct GridSolution {
    std::vector<double> survival;  // per cell
    double objective = 0.0;        // sum f/s = n * V*
    double cost = 0.0;
    double multiplier = 0.0;
    int iterations = 0;
};

// Projected gradient (Armijo backtracking) with pool-adjacent-violators
// isotonic projection, to unit-step projected-gradient residual 1e-8; the
// budget multiplier is bisected on the outside.  Throws NotConverged past
// the iteration cap.
GridSolution grid_optimize(const GridProblem& gp);

// Exact expectations on a discrete toy by full outcome enumeration.
// Costs equiprobable unless weights are given; q_bits fixed per cost.
struct ToyResult {
    double ht_mean = 0.0;       // E[d] per draw (= E[S])
    double ht_variance = 0.0;   // Var[d] per draw (Var[S] = this / n)
    double tilde_mean = 0.0;    // E for the signed estimator
    double tilde_variance = 0.0;
    double mean_payment = 0.0;  // expected payment per draw
    double mean_q = 0.0;
};

ToyResult enumerate_toy(const std::vector<double>& costs, const std::vector<int>& q_bits,
                        const std::vector<Atom>& offer_atoms,
                        const std::vector<double>& cost_weights = {});

}  // namespace survey

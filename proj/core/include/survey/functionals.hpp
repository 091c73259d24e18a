#pragma once

#include <utility>
#include <vector>

#include "survey/offer.hpp"
#include "survey/prior.hpp"

namespace survey {

struct FunctionalValue {
    double value = 0.0;
    double abs_error = 0.0;
};

// Expected cost of surveying n individuals with per-recruit cost beta:
// n * (beta + int x F(x) g(x) dx + sum_atoms price * F(price) * mass).
FunctionalValue expected_cost(const Prior& prior, const OfferLaw& law, double n,
                              double beta = 0.0);

// Worst-case variance proxy V* = (1/n) int f(v) / (1 - G(v)) dv over the
// prior support.  Throws InfiniteVariance when the survival vanishes on a
// set of positive prior mass.
FunctionalValue vstar(const Prior& prior, const OfferLaw& law, double n);

// First variations at law in the direction (direction - law).
// delta Cost = n * [ int x F dG^ - int x F dG ]  (cost is linear in G).
double gateaux_cost(const Prior& prior, const OfferLaw& law, const OfferLaw& direction,
                    double n);
// delta V* = (1/n) int f(x) (G^(x) - G(x)) / (1 - G(x))^2 dx.
double gateaux_vstar(const Prior& prior, const OfferLaw& law, const OfferLaw& direction,
                     double n);

// Lagrangian M = n int x F g + (lambda/n) int f/(1-G) = cost(n) + lambda * vstar(n).
double M_value(const Prior& prior, const OfferLaw& law, double n, double lambda);

struct CertificateOptions {
    int grid_points = 2000;
    double flat_rel_tol = 1e-6;
};

struct CertificateReport {
    double lambda = 0.0;
    double support_constant = 0.0;
    double max_flatness_deviation = 0.0;
    double min_off_support_slack = 0.0;
    bool passed = false;
    std::vector<std::pair<double, double>> h_values;  // (x, H(x))
};

// Optimality certificate: H(x) = n x F(x) + (lambda/n) int_x^{top} f/(1-G)^2,
// evaluated on a grid.  Passes iff H is constant (relative tolerance) on the
// smooth offer support and at least that constant (up to tolerance) on flats,
// on [0, xbar) and beyond a bounded support.
CertificateReport certificate(const Prior& prior, const OfferLaw& law, double n, double lambda,
                              const CertificateOptions& opts = {});

}  // namespace survey

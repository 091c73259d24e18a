#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "survey/mechanism.hpp"
#include "survey/offer.hpp"
#include "survey/prior.hpp"

namespace survey {

// A joint distribution D: cost marginal (the prior) plus a conditional
// response model c -> Pr[q = 1 | c].
struct PopulationSpec {
    Prior prior;
    std::function<double(double)> response_prob;
};

// The variance-maximizing population consistent with the prior: q == 1.
PopulationSpec worst_case_population(const Prior& prior);

// Horvitz-Thompson estimate (1/n) sum q_i / A(c_i) over transacted records.
// Throws ZeroSurvivalWeight if an accepted record has allocation 0.
double ht_estimate(const std::vector<Transaction>& transactions, const OfferLaw& law, int n);

// Signed variant (1/n) sum (-1)^{q_i} / A(c_i): unbiased for 1 - 2 E[q].
double tilde_estimate(const std::vector<Transaction>& transactions, const OfferLaw& law, int n);

struct SimulationReport {
    std::int64_t trials = 0;
    int n = 0;
    std::uint64_t seed = 0;
    double mean_estimate = 0.0;
    double se_mean_estimate = 0.0;
    double variance_times_n = 0.0;
    double se_variance_times_n = 0.0;
    double mean_tilde_estimate = 0.0;
    double se_mean_tilde = 0.0;
    double tilde_variance_times_n = 0.0;
    double se_tilde_variance_times_n = 0.0;
    double mean_total_cost = 0.0;
    double se_mean_total_cost = 0.0;
    double acceptance_rate = 0.0;
    double se_acceptance_rate = 0.0;
};

// Monte Carlo survey simulation: each trial draws n individuals from the
// population, runs a TIOLI transaction for each (truthful reports), and
// computes both estimators and the total payment.  Deterministic for a fixed
// seed regardless of thread count (counter-based per-trial substreams,
// order-independent aggregation).  threads = 0 picks a hardware default.
SimulationReport simulate(const PopulationSpec& pop, const OfferLaw& law, int n,
                          std::int64_t trials, std::uint64_t seed, int threads = 0);

}  // namespace survey

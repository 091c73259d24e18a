#pragma once

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "survey/offer.hpp"

namespace survey {

// An allocation/expected-payment pair (A, P), supplied as closed forms or
// loaded from a table.
struct GenericMechanism {
    std::function<double(double)> allocation;
    std::function<double(double)> expected_payment;
    double domain_lo = 0.0;
    double domain_hi = kInf;

    // CSV rows: cost,A,P with strictly increasing cost.  Linear interpolation
    // between rows, constant extension outside.
    static GenericMechanism from_csv(const std::string& path);
    static GenericMechanism from_table(const std::vector<double>& cost,
                                       const std::vector<double>& a,
                                       const std::vector<double>& p);
};

struct Transaction {
    double reported_cost = 0.0;
    double offered_price = 0.0;  // 0 encodes decline
    bool accepted = false;
    double payment = 0.0;
    int response = -1;  // 0/1, -1 when absent
};

// Samples p from the law; accepts iff reported_cost <= p (ties accept).
Transaction tioli_transact(const OfferLaw& law, double reported_cost, int true_response,
                           std::mt19937_64& rng);

// u(c, A(chat), P(chat)) = A(chat) * (P(chat) - c).
double utility(double true_cost, const GenericMechanism& mech, double reported_cost);

struct MechanismViolation {
    std::string kind;  // "truthfulness" | "ir" | "monotonicity"
    double cost = 0.0;
    double report = 0.0;
    double magnitude = 0.0;
};

struct MechanismCheckReport {
    bool truthful = true;
    bool individually_rational = true;
    bool allocation_monotone = true;
    std::vector<MechanismViolation> violations;
    bool ok() const { return truthful && individually_rational && allocation_monotone; }
};

// Verifies u(c,c) >= u(c,chat) on the grid product, P(chat) >= chat wherever
// A(chat) > 0, and that A is nonincreasing (tolerance 1e-9 per grid step).
MechanismCheckReport check_truthful_ir(const GenericMechanism& mech,
                                       const std::vector<double>& cost_grid,
                                       const std::vector<double>& report_grid);

// Converts a truthful allocation rule to the equivalent TIOLI offer law with
// g = -dA/dx (survival equals A).  Throws NotMonotone if A increases anywhere
// on the check grid.
std::unique_ptr<OfferLaw> to_tioli(const GenericMechanism& mech, int check_grid = 1024);

}  // namespace survey

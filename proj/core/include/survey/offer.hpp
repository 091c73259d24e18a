#pragma once

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "survey/prior.hpp"

namespace survey {

struct Atom {
    double price = 0.0;
    double mass = 0.0;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;  // may be +inf
};

// Ironed (flattened) stretch of the offer CDF.
struct IronedInterval {
    double ibar = 0.0;
    double jbar = 0.0;
    double level = 0.0;  // CDF value G~(jbar) (= G~(ibar) unless boundary-clamped)
};

// A price law for a take-it-or-leave-it mechanism: a CDF made of absolutely
// continuous pieces, atoms, and a decline mass (point mass at price 0 that
// no agent accepts).  Implementations are immutable and thread-safe.
class OfferLaw {
  public:
    virtual ~OfferLaw() = default;

    // Right-continuous CDF, including atoms at or below x.
    virtual double cdf(double x) const = 0;
    // Density on the continuous pieces (0 elsewhere / at atoms).
    virtual double density(double x) const = 0;
    // Intervals where the CDF is absolutely continuous with density > 0.
    virtual std::vector<Interval> continuous_pieces() const = 0;
    virtual std::vector<Atom> atoms() const = 0;
    virtual double decline_mass() const = 0;
    virtual double sample(std::mt19937_64& rng) const = 0;

    double survival(double x) const { return 1.0 - cdf(x); }
    // Pr[p >= x] = 1 - cdf(x-): the transact probability for a report of x
    // (ties at atoms accept).
    double allocation(double x) const;
};

// The constructed optimal family G-bar_{F,alpha}: closed-form candidate
// G~(x) = 1 - sqrt(alpha f / (F + x f)) on the prior support, ironed over
// extended irregular intervals, clamped at zero below xbar, with explicit
// atoms where the CDF jumps.
class OfferDistribution final : public OfferLaw {
  public:
    // build_offer_distribution: throws DegenerateMechanism when G~ < 0 on the
    // whole support (the design surveys nobody).
    static OfferDistribution build(const Prior& prior, double alpha);

    // Reassembles a distribution from serialized structure without re-ironing
    // (piece CDF values are recomputable from prior + alpha).
    static OfferDistribution from_structure(const Prior& prior, double alpha, double xbar,
                                            double decline_mass, std::vector<Interval> smooth,
                                            std::vector<IronedInterval> flats,
                                            std::vector<Atom> atoms,
                                            std::vector<std::string> notes);

    double cdf(double x) const override;
    double density(double x) const override;
    std::vector<Interval> continuous_pieces() const override;
    std::vector<Atom> atoms() const override { return atoms_; }
    double decline_mass() const override { return decline_mass_; }
    double sample(std::mt19937_64& rng) const override;

    const Prior& prior() const { return prior_; }
    double alpha() const { return alpha_; }
    double xbar() const { return xbar_; }
    const std::vector<Interval>& smooth_pieces() const { return smooth_; }
    const std::vector<IronedInterval>& flat_pieces() const { return flats_; }
    const std::vector<std::string>& construction_notes() const { return notes_; }

  private:
    struct InverseKnots {
        std::vector<double> u;
        std::vector<double> x;
    };
    void finalize();

    Prior prior_;
    double alpha_ = 0.0;
    double xbar_ = 0.0;
    double decline_mass_ = 0.0;
    std::vector<Interval> smooth_;
    std::vector<IronedInterval> flats_;
    std::vector<Atom> atoms_;
    std::vector<std::string> notes_;
    std::vector<InverseKnots> inverse_;  // per smooth piece, for fast sampling
};

// Monotone piecewise-linear CDF from a table, plus atoms; the adapter that
// lets the functionals evaluate mechanisms outside the constructed family.
class TabulatedOfferLaw final : public OfferLaw {
  public:
    // knots_x strictly increasing, knots_cdf nondecreasing in [0,1].
    // cdf(x) = decline for x < knots_x.front(); linear between knots;
    // an atom at the top is added when the final CDF value is below 1.
    TabulatedOfferLaw(std::vector<double> knots_x, std::vector<double> knots_cdf,
                      double decline = 0.0);
    // Pure-atom law (discrete offer toys).
    static TabulatedOfferLaw from_atoms(std::vector<Atom> atoms, double decline = 0.0);

    double cdf(double x) const override;
    double density(double x) const override;
    std::vector<Interval> continuous_pieces() const override;
    std::vector<Atom> atoms() const override { return atoms_; }
    double decline_mass() const override { return decline_; }
    double sample(std::mt19937_64& rng) const override;

  private:
    std::vector<double> xs_;
    std::vector<double> cs_;
    std::vector<Atom> atoms_;
    double decline_ = 0.0;
};

// (1-eps) * base + eps * other; used by finite-difference oracles and the
// convexity probes.
class MixtureLaw final : public OfferLaw {
  public:
    MixtureLaw(const OfferLaw& base, const OfferLaw& other, double eps)
        : base_(base), other_(other), eps_(eps) {}

    double cdf(double x) const override;
    double density(double x) const override;
    std::vector<Interval> continuous_pieces() const override;
    std::vector<Atom> atoms() const override;
    double decline_mass() const override;
    double sample(std::mt19937_64& rng) const override;

  private:
    const OfferLaw& base_;
    const OfferLaw& other_;
    double eps_;
};

// Law defined by a survival (allocation) callable A: cdf = 1 - A, with
// numerically differentiated density.  Produced by to_tioli for closed-form
// allocation rules.
class SurvivalFunctionLaw final : public OfferLaw {
  public:
    SurvivalFunctionLaw(std::function<double(double)> survival, double domain_lo,
                        double domain_hi);

    double cdf(double x) const override;
    double density(double x) const override;
    std::vector<Interval> continuous_pieces() const override;
    std::vector<Atom> atoms() const override;
    double decline_mass() const override;
    double sample(std::mt19937_64& rng) const override;

  private:
    std::function<double(double)> survival_;
    double lo_;
    double hi_;
};

// G~_{F,alpha}(x) = 1 - sqrt(alpha f(x) / (F(x) + x f(x))).  May be negative.
// Throws DegenerateDenominator when F + x f = 0.
double tilde_cdf(const Prior& prior, double alpha, double x);
// d/dx G~ = (sqrt(alpha)/2) (2 f^2 - F f') / (f^{1/2} (F + x f)^{3/2}).
double tilde_density(const Prior& prior, double alpha, double x);

// K_k(x) = int_x^{j} f(y) [ (1-G~(y))^{-2} - (1-G~(j))^{-2} ] dy with the
// reference level taken at the interval's right end.
double ironing_K(const Prior& prior, double alpha, const IrregularInterval& interval, double x);

// Equal-area ironing: each raw interval is extended on both sides to the
// pool [ibar, jbar] whose level L satisfies G~(ibar) = G~(jbar) = L and
// K(ibar; jbar) = 0; overlapping pools are merged to a fixed point.
std::vector<IronedInterval> iron(const Prior& prior, double alpha,
                                 const std::vector<IrregularInterval>& raw);

}  // namespace survey

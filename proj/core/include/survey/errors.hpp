#pragma once

#include <stdexcept>
#include <string>

namespace survey {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Numerics
class QuadratureFailure : public Error {
  public:
    using Error::Error;
};
class NoConvergence : public Error {
  public:
    using Error::Error;
};
class NotConverged : public Error {
  public:
    using Error::Error;
};

// Prior
class NonFiniteDerivative : public Error {
  public:
    using Error::Error;
};
class GridTooCoarse : public Error {
  public:
    using Error::Error;
};

// Offer construction
class DegenerateDenominator : public Error {
  public:
    using Error::Error;
};
class DegenerateMechanism : public Error {
  public:
    using Error::Error;
};

// Functionals
class InfiniteVariance : public Error {
  public:
    using Error::Error;
};

// Mechanism conversion
class NotMonotone : public Error {
  public:
    using Error::Error;
};

// Estimation
class ZeroSurvivalWeight : public Error {
  public:
    using Error::Error;
};
class TooManyOutcomes : public Error {
  public:
    using Error::Error;
};

// Solvers. Infeasibility errors carry the achievable range when known.
class Infeasible : public Error {
  public:
    Infeasible(const std::string& what, double lo, double hi)
        : Error(what), achievable_lo(lo), achievable_hi(hi) {}
    double achievable_lo;
    double achievable_hi;
};
class InfeasibleBudget : public Infeasible {
  public:
    using Infeasible::Infeasible;
};
class InfeasibleVariance : public Infeasible {
  public:
    using Infeasible::Infeasible;
};
class NoCrossing : public Error {
  public:
    using Error::Error;
};
class NoFiniteOptimum : public Error {
  public:
    using Error::Error;
};

// Input validation (bad configs, bad mechanism tables, precondition rejections).
class InvalidInput : public Error {
  public:
    using Error::Error;
};

}  // namespace survey

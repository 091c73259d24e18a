#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace survey {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct QuadratureOptions {
    double abs_tol = 1e-9;
    double rel_tol = 1e-8;
    int max_intervals = 4000;
    // Known kinks / breakpoints; the integration range is pre-split there.
    std::vector<double> split_points{};
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
};

// Adaptive Gauss-Kronrod (G7,K15) on [lo, hi]; hi may be +inf, in which case
// the tail is mapped through x = lo + t/(1-t).  Throws QuadratureFailure if
// the interval budget is exhausted before reaching tolerance.
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           const QuadratureOptions& opts = {});

struct BisectionOptions {
    double x_tol = 1e-10;
    int max_iter = 200;
};

// Root of a continuous function with f(lo), f(hi) of opposite sign.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   const BisectionOptions& opts = {});

// Monotone increasing first index trick: smallest x in [lo,hi] with pred(x) true,
// assuming pred is false-then-true along the interval.
double bisect_boundary(const std::function<bool(double)>& pred, double lo, double hi,
                       double x_tol = 1e-10);

// Numerically stable sum (pairwise); used where reduction order must not
// depend on accumulation chunking.
double pairwise_sum(const std::vector<double>& v);

// SplitMix64 step; used to derive per-trial RNG substreams from a master seed.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t index);

}  // namespace survey

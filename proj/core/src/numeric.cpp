#include "survey/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "survey/errors.hpp"

namespace survey {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
constexpr double kKronrodWeights[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
// Gauss weights for the odd Kronrod nodes (indices 0, 2, 4, 6).
constexpr double kGaussWeights[4] = {0.417959183673469, 0.381830050505119,
                                     0.279705391489277, 0.129484966168870};

struct Cell {
    double lo, hi, value, error;
    bool operator<(const Cell& o) const { return error < o.error; }
};

Cell gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double f0 = f(mid);
    double k = kKronrodWeights[0] * f0;
    double g = kGaussWeights[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kKronrodNodes[i];
        const double fi = f(mid + dx) + f(mid - dx);
        k += kKronrodWeights[i] * fi;
        if (i % 2 == 0) g += kGaussWeights[i / 2] * fi;
    }
    k *= h;
    g *= h;
    // Conservative: the raw G7/K15 difference, floored at roundoff scale.
    const double err = std::max(std::abs(k - g), 5e-16 * std::abs(k));
    return {lo, hi, k, err};
}

QuadratureResult integrate_finite(const std::function<double(double)>& f, double lo, double hi,
                                  const QuadratureOptions& opts) {
    if (!(hi > lo)) return {0.0, 0.0};

    std::vector<double> pts{lo};
    for (double s : opts.split_points)
        if (s > lo && s < hi) pts.push_back(s);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());

    std::priority_queue<Cell> heap;
    double total = 0.0, err_total = 0.0;
    int cells = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1] <= pts[i]) continue;
        Cell c = gk15(f, pts[i], pts[i + 1]);
        total += c.value;
        err_total += c.error;
        heap.push(c);
        ++cells;
    }

    double stuck_error = 0.0;  // cells at floating-point resolution
    while (err_total > opts.abs_tol && err_total > opts.rel_tol * std::abs(total)) {
        if (cells >= opts.max_intervals || heap.empty())
            throw QuadratureFailure("quadrature: tolerance not met after " +
                                    std::to_string(cells) + " intervals (err=" +
                                    std::to_string(err_total) + ")");
        Cell worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            err_total -= worst.error;
            stuck_error += worst.error;
            continue;
        }
        Cell a = gk15(f, worst.lo, mid);
        Cell b = gk15(f, mid, worst.hi);
        total += a.value + b.value - worst.value;
        err_total += a.error + b.error - worst.error;
        heap.push(a);
        heap.push(b);
        ++cells;
    }
    return {total, err_total + stuck_error};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           const QuadratureOptions& opts) {
    if (std::isinf(hi)) {
        // x = lo + t/(1-t), dx = dt/(1-t)^2, t in [0,1).
        auto g = [&f, lo](double t) {
            const double om = 1.0 - t;
            const double x = lo + t / om;
            return f(x) / (om * om);
        };
        QuadratureOptions sub = opts;
        sub.split_points.clear();
        for (double s : opts.split_points) {
            if (s > lo && std::isfinite(s)) sub.split_points.push_back((s - lo) / (1.0 + s - lo));
        }
        return integrate_finite(g, 0.0, 1.0 - 1e-14, sub);
    }
    return integrate_finite(f, lo, hi, opts);
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   const BisectionOptions& opts) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw NoConvergence("bisect_root: endpoints do not bracket a root");
    for (int it = 0; it < opts.max_iter && hi - lo > opts.x_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double bisect_boundary(const std::function<bool(double)>& pred, double lo, double hi,
                       double x_tol) {
    if (pred(lo)) return lo;
    if (!pred(hi)) return hi;
    while (hi - lo > x_tol) {
        const double mid = 0.5 * (lo + hi);
        if (pred(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double pairwise_sum(const std::vector<double>& v) {
    std::function<double(std::size_t, std::size_t)> rec = [&](std::size_t lo,
                                                              std::size_t hi) -> double {
        if (hi - lo <= 8) {
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) s += v[i];
            return s;
        }
        const std::size_t mid = lo + (hi - lo) / 2;
        return rec(lo, mid) + rec(mid, hi);
    };
    return v.empty() ? 0.0 : rec(0, v.size());
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t s = master_seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    std::uint64_t b = splitmix64(s);
    return b;
}

}  // namespace survey

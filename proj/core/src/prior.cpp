#include "survey/prior.hpp"

#include <algorithm>
#include <cmath>

#include "survey/errors.hpp"

namespace survey {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double poly_eval(const std::vector<double>& c, double u) {
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * u + c[k];
    return v;
}

double poly_derivative(const std::vector<double>& c, double u) {
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) v = v * u + c[k] * static_cast<double>(k);
    return v;
}

double poly_integral(const std::vector<double>& c, double u) {
    // int_0^u poly
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * u + c[k] / static_cast<double>(k + 1);
    return v * u;
}

}  // namespace

Prior Prior::exponential(double rate) {
    if (!(rate > 0.0)) throw InvalidInput("exponential prior: rate must be positive");
    Prior p;
    p.kind_ = PriorKind::Exponential;
    p.lo_ = 0.0;
    p.hi_ = kInf;
    p.params_[0] = rate;
    return p;
}

Prior Prior::uniform(double lo, double hi) {
    if (!(hi > lo) || lo < 0.0) throw InvalidInput("uniform prior: need 0 <= lo < hi");
    Prior p;
    p.kind_ = PriorKind::Uniform;
    p.lo_ = lo;
    p.hi_ = hi;
    return p;
}

Prior Prior::lognormal(double mu, double sigma) {
    if (!(sigma > 0.0)) throw InvalidInput("lognormal prior: sigma must be positive");
    Prior p;
    p.kind_ = PriorKind::LogNormal;
    p.lo_ = 0.0;
    p.hi_ = kInf;
    p.params_[0] = mu;
    p.params_[1] = sigma;
    return p;
}

Prior Prior::piecewise_polynomial(std::vector<double> breakpoints,
                                  std::vector<std::vector<double>> coefficients) {
    if (breakpoints.size() < 2 || coefficients.size() + 1 != breakpoints.size())
        throw InvalidInput("piecewise polynomial prior: need k+1 breakpoints for k pieces");
    if (breakpoints.front() < 0.0) throw InvalidInput("piecewise polynomial prior: support < 0");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i + 1] > breakpoints[i]))
            throw InvalidInput("piecewise polynomial prior: breakpoints must increase");

    // Total mass (exact polynomial integration), then normalize.
    double mass = 0.0;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        mass += poly_integral(coefficients[i], breakpoints[i + 1] - breakpoints[i]);
    if (!(mass > 0.0)) throw InvalidInput("piecewise polynomial prior: nonpositive mass");
    for (auto& piece : coefficients)
        for (auto& c : piece) c /= mass;

    Prior p;
    p.kind_ = PriorKind::PiecewisePolynomial;
    p.lo_ = breakpoints.front();
    p.hi_ = breakpoints.back();
    p.breakpoints_ = std::move(breakpoints);
    p.coefficients_ = std::move(coefficients);
    p.piece_cdf_base_.assign(p.breakpoints_.size(), 0.0);
    for (std::size_t i = 0; i < p.coefficients_.size(); ++i) {
        p.piece_cdf_base_[i + 1] =
            p.piece_cdf_base_[i] +
            poly_integral(p.coefficients_[i], p.breakpoints_[i + 1] - p.breakpoints_[i]);
        // Density must be nonnegative; probe on a fine grid.
        const double w = p.breakpoints_[i + 1] - p.breakpoints_[i];
        for (int k = 0; k <= 64; ++k) {
            if (poly_eval(p.coefficients_[i], w * k / 64.0) < -1e-12)
                throw InvalidInput("piecewise polynomial prior: negative density");
        }
    }
    p.piece_cdf_base_.back() = 1.0;
    p.interior_breaks_.assign(p.breakpoints_.begin() + 1, p.breakpoints_.end() - 1);
    return p;
}

PriorEval Prior::eval_impl(double x, bool one_sided) const {
    PriorEval r;
    if (x < lo_) {
        r.cdf = 0.0;
        return r;
    }
    if (x > hi_) {
        r.cdf = 1.0;
        return r;
    }
    switch (kind_) {
        case PriorKind::Exponential: {
            const double rate = params_[0];
            const double e = std::exp(-rate * x);
            r.pdf = rate * e;
            r.cdf = 1.0 - e;
            r.pdf_derivative = -rate * rate * e;
            return r;
        }
        case PriorKind::Uniform: {
            const double d = 1.0 / (hi_ - lo_);
            r.pdf = d;
            r.cdf = (x - lo_) * d;
            r.pdf_derivative = 0.0;
            return r;
        }
        case PriorKind::LogNormal: {
            if (x <= 0.0) return r;  // density -> 0 faster than any power
            const double mu = params_[0], sigma = params_[1];
            const double z = (std::log(x) - mu) / sigma;
            const double phi = std::exp(-0.5 * z * z) / (sigma * x * std::sqrt(2.0 * M_PI));
            r.pdf = phi;
            r.cdf = 0.5 * std::erfc(-z * kInvSqrt2);
            r.pdf_derivative = -phi * (1.0 + z / sigma) / x;
            return r;
        }
        case PriorKind::PiecewisePolynomial: {
            // Piece index: right limit at breakpoints.
            auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
            std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
            if (idx == 0) idx = 1;
            if (idx >= breakpoints_.size()) idx = breakpoints_.size() - 1;
            std::size_t piece = idx - 1;
            if (!one_sided && x > lo_ && x < hi_) {
                for (double b : interior_breaks_)
                    if (x == b)
                        throw NonFiniteDerivative(
                            "pdf derivative undefined at piecewise breakpoint x=" +
                            std::to_string(x) + "; use one-sided evaluation");
            }
            const double u = x - breakpoints_[piece];
            r.pdf = std::max(0.0, poly_eval(coefficients_[piece], u));
            r.pdf_derivative = poly_derivative(coefficients_[piece], u);
            r.cdf = std::min(1.0, piece_cdf_base_[piece] + poly_integral(coefficients_[piece], u));
            return r;
        }
    }
    return r;
}

PriorEval Prior::eval(double x) const { return eval_impl(x, false); }
PriorEval Prior::eval_right(double x) const { return eval_impl(x, true); }

double Prior::cdf(double x) const { return eval_right(x).cdf; }

double Prior::quantile(double u) const {
    u = std::clamp(u, 0.0, 1.0);
    switch (kind_) {
        case PriorKind::Exponential:
            return u >= 1.0 ? kInf : -std::log1p(-u) / params_[0];
        case PriorKind::Uniform:
            return lo_ + u * (hi_ - lo_);
        default:
            break;
    }
    if (u <= 0.0) return lo_;
    if (u >= 1.0) return hi_;
    // Monotone CDF: bracket then bisect with Newton polish.
    double lo = lo_, hi = bounded() ? hi_ : std::max(1.0, lo_ + 1.0);
    if (!bounded()) {
        while (cdf(hi) < u) hi = lo_ + 2.0 * (hi - lo_);
    }
    double x = bisect_root([this, u](double t) { return cdf(t) - u; }, lo, hi, {1e-13, 200});
    for (int k = 0; k < 2; ++k) {
        const double d = pdf(x);
        if (d > 1e-12) {
            const double step = (cdf(x) - u) / d;
            const double nx = x - step;
            if (nx > lo && nx < hi) x = nx;
        }
    }
    return x;
}

double Prior::sample_cost(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return quantile(unit(rng));
}

double Prior::regularity_gap(double x) const {
    const PriorEval e = eval(x);
    return 2.0 * e.pdf * e.pdf - e.pdf_derivative * e.cdf;
}

double Prior::effective_hi(double tail_eps) const {
    if (bounded()) return hi_;
    return quantile(1.0 - tail_eps);
}

std::vector<IrregularInterval> Prior::find_irregular_intervals(int grid_resolution) const {
    if (grid_resolution < 2) throw InvalidInput("find_irregular_intervals: grid resolution < 2");
    const double lo = lo_;
    const double hi = effective_hi(1e-12);

    auto gap_right = [this](double x) {
        const PriorEval e = eval_right(x);
        return 2.0 * e.pdf * e.pdf - e.pdf_derivative * e.cdf;
    };

    // Scan at increasing resolution until the crossing set stabilizes.
    auto scan = [&](int cells) {
        std::vector<double> roots;
        const double h = (hi - lo) / cells;
        double xprev = lo + 1e-12 * (hi - lo);
        double gprev = gap_right(xprev);
        for (int k = 1; k <= cells; ++k) {
            double x = (k == cells) ? hi - 1e-12 * (hi - lo) : lo + k * h;
            // Stay clear of exact breakpoints.
            for (double b : interior_breaks_)
                if (x == b) x = std::nextafter(x, hi);
            const double g = gap_right(x);
            if ((gprev < 0.0) != (g < 0.0)) {
                roots.push_back(
                    bisect_root(gap_right, xprev, x, {1e-12 * std::max(1.0, hi), 200}));
            }
            xprev = x;
            gprev = g;
        }
        return roots;
    };

    std::vector<double> roots = scan(grid_resolution);
    int res = grid_resolution;
    constexpr int kMaxResolution = 1 << 20;
    while (true) {
        if (res * 2 > kMaxResolution) {
            if (scan(res).size() != roots.size())
                throw GridTooCoarse("find_irregular_intervals: crossing count did not "
                                    "stabilize at maximum grid refinement");
            break;
        }
        std::vector<double> finer = scan(res * 2);
        if (finer.size() == roots.size()) {
            roots = std::move(finer);
            break;
        }
        roots = std::move(finer);
        res *= 2;
    }

    // Pair sign changes: gap negative inside irregular intervals.
    std::vector<IrregularInterval> out;
    const double eps = 1e-9 * std::max(1.0, hi - lo);
    bool inside = gap_right(lo + 1e-12 * (hi - lo)) < 0.0;
    double start = inside ? lo : 0.0;
    for (double r : roots) {
        if (inside) {
            out.push_back({start, r});
            inside = false;
        } else {
            start = r;
            inside = true;
        }
    }
    if (inside) out.push_back({start, hi});
    // Drop slivers from roundoff at breakpoints.
    std::vector<IrregularInterval> cleaned;
    for (const auto& iv : out)
        if (iv.j - iv.i > eps) cleaned.push_back(iv);
    return cleaned;
}

}  // namespace survey

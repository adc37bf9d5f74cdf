#pragma once

// Coefficient-condition classifiers, M(alpha) membership tests, the
// coefficient/growth/area bounds and the Kaplan-type arc integrals.
//
// Every sum over n runs to the truncation order; reports carry that order.
// Grid-based checks are necessary conditions only.

#include <hmap/catalog.hpp>
#include <hmap/harmonic_map.hpp>
#include <hmap/series.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hmap {

struct ClassificationReport {
    std::string condition_name;
    double condition_value = 0.0;  // the computed coefficient sum
    double threshold = 1.0;
    bool passed = false;
    std::optional<double> order_starlike;
    std::optional<double> order_convex;
    bool degenerate = false;       // an order formula returned exactly 1
    bool close_to_convex = false;  // only set by theorem2_classify
    int truncation_order = 0;
};

namespace detail {

inline constexpr double kThresholdSlack = 1e-12;

/// Orders live in [0, 1); an exact 1 is reported just below 1 and flagged.
inline double clamp_order(double v, bool& degenerate)
{
    if (v >= 1.0) {
        degenerate = true;
        return std::nextafter(1.0, 0.0);
    }
    return v < 0.0 && v > -kThresholdSlack ? 0.0 : v;
}

}  // namespace detail

struct CoefficientSumReports {
    ClassificationReport first;   // sum n (|a_n| + |b_n|)
    ClassificationReport second;  // sum n^2 (|a_n| + |b_n|)
};

/// Fully starlike / fully convex orders from the weighted coefficient sums.
inline CoefficientSumReports lemma13_orders(const HarmonicMap& f)
{
    if (std::abs(f.g()[1]) > 1e-12) {
        throw std::invalid_argument("lemma13_orders: requires b_1 = g'(0) = 0");
    }
    CoefficientSumReports out;
    const double l1 = weighted_abs_sum(f.h(), 1) + weighted_abs_sum(f.g(), 1);
    const double l2 = weighted_abs_sum(f.h(), 2) + weighted_abs_sum(f.g(), 2);

    auto& r1 = out.first;
    r1.condition_name = "sum n(|a_n|+|b_n|) <= 1";
    r1.condition_value = l1;
    r1.truncation_order = f.order();
    r1.passed = l1 <= 1.0 + detail::kThresholdSlack;
    if (r1.passed) {
        r1.order_starlike = detail::clamp_order(2.0 * (1.0 - l1) / (2.0 + l1), r1.degenerate);
    }

    auto& r2 = out.second;
    r2.condition_name = "sum n^2(|a_n|+|b_n|) <= 1";
    r2.condition_value = l2;
    r2.truncation_order = f.order();
    r2.passed = l2 <= 1.0 + detail::kThresholdSlack;
    if (r2.passed) {
        r2.order_starlike = detail::clamp_order(2.0 * (2.0 - l2) / (4.0 + l2), r2.degenerate);
        r2.order_convex = detail::clamp_order(2.0 * (1.0 - l2) / (2.0 + l2), r2.degenerate);
    }
    return out;
}

/// Maps with g' = alpha z h' under sum n^power |a_n| <= 1 (power 2 or 3).
inline ClassificationReport theorem2_classify(const TruncatedSeries& h, cplx alpha, int power)
{
    if (power != 2 && power != 3) {
        throw std::invalid_argument("theorem2_classify: power must be 2 or 3");
    }
    if (std::abs(h[0]) > 1e-12 || std::abs(h[1] - 1.0) > 1e-12) {
        throw std::invalid_argument("theorem2_classify: h must be normalized");
    }
    const double a = std::abs(alpha);
    const double s = weighted_abs_sum(h, power);
    const double eps = detail::kThresholdSlack;

    ClassificationReport rep;
    rep.condition_name = power == 2 ? "sum n^2 |a_n| <= 1" : "sum n^3 |a_n| <= 1";
    rep.condition_value = s;
    rep.truncation_order = h.order();
    const bool hyp = s <= 1.0 + eps;
    rep.close_to_convex = hyp && a <= 1.0 + eps;
    if (power == 2) {
        rep.passed = rep.close_to_convex;
        if (rep.passed && a <= 1.0 / 3.0 + eps) {
            rep.order_starlike =
                detail::clamp_order(2.0 * (1.0 - 3.0 * a) / (5.0 + 3.0 * a), rep.degenerate);
        }
    } else {
        rep.passed = hyp && a <= 2.0 / 11.0 + eps;
        if (rep.passed) {
            rep.order_starlike =
                detail::clamp_order(2.0 * (6.0 - 11.0 * a) / (18.0 + 11.0 * a), rep.degenerate);
            rep.order_convex =
                detail::clamp_order(2.0 * (2.0 - 11.0 * a) / (10.0 + 11.0 * a), rep.degenerate);
        }
    }
    return rep;
}

// ─── M(alpha) ───────────────────────────────────────────────────────────────

inline constexpr double kRelationTol = 1e-10;

/// max_n |(n+1) b_{n+1} - n alpha a_n| including |b_1|.
inline double m_alpha_relation_residual(const HarmonicMap& f, cplx alpha)
{
    double res = std::abs(f.g()[1]);
    for (int n = 1; n < f.order(); ++n) {
        res = std::max(res, std::abs(static_cast<double>(n + 1) * f.g()[n + 1] -
                                     static_cast<double>(n) * alpha * f.h()[n]));
    }
    return res;
}

struct MAlphaReport {
    bool relation_passed = false;
    double relation_residual = 0.0;
    bool curvature_passed = false;
    double min_curvature = std::numeric_limits<double>::infinity();  // min Re(1 + z h''/h')
    cplx argmin{};
    double r_max = 0.0;
    PolarGrid grid;
    int truncation_order = 0;
    bool passed() const { return relation_passed && curvature_passed; }
};

/// (a) g' = alpha z h' coefficientwise, (b) Re(1 + z h''/h') > -1/2 on the
/// grid up to r_max.
inline MAlphaReport m_alpha_check(const HarmonicMap& f, cplx alpha, double r_max = 0.99,
                                  PolarGrid grid = {64, 256})
{
    if (!(std::abs(alpha) <= 1.0 + 1e-15)) {
        throw std::invalid_argument("m_alpha_check: |alpha| must be <= 1");
    }
    if (!(r_max > 0.0 && r_max < 1.0)) {
        throw std::domain_error("m_alpha_check: r_max must lie in (0, 1)");
    }
    MAlphaReport rep;
    rep.r_max = r_max;
    rep.grid = grid;
    rep.truncation_order = f.order();
    rep.relation_residual = m_alpha_relation_residual(f, alpha);
    rep.relation_passed = rep.relation_residual <= kRelationTol;
    for_each_grid_node(r_max, grid, [&](double, double, cplx z) {
        const AnalyticJet h = f.jet(z).h;
        if (std::abs(h.d1) < 1e-14) throw singular_point_error("m_alpha_check: h' vanishes", z);
        const double v = std::real(1.0 + z * h.d2 / h.d1);
        if (v < rep.min_curvature) {
            rep.min_curvature = v;
            rep.argmin = z;
        }
    });
    rep.curvature_passed = rep.min_curvature > -0.5;
    return rep;
}

struct BoundsReport {
    bool coefficients_passed = false;
    double max_a_excess = -std::numeric_limits<double>::infinity();  // max |a_n| - (n+1)/2
    double max_b_excess = -std::numeric_limits<double>::infinity();  // max |b_n| - (n-1)|alpha|/2
    bool growth_passed = false;
    double min_growth_slack = std::numeric_limits<double>::infinity();
    cplx worst_point{};
    int samples = 0;
    int truncation_order = 0;
    bool passed() const { return coefficients_passed && growth_passed; }
};

/// |z|/(1-|z|)^2 [1 - (1-|alpha|)|z|/2]
inline double growth_bound(double rho, double abs_alpha)
{
    return rho / ((1.0 - rho) * (1.0 - rho)) * (1.0 - 0.5 * (1.0 - abs_alpha) * rho);
}

inline BoundsReport coefficient_bounds(const HarmonicMap& f, cplx alpha)
{
    BoundsReport rep;
    rep.truncation_order = f.order();
    const double a = std::abs(alpha);
    for (int n = 2; n <= f.order(); ++n) {
        rep.max_a_excess = std::max(rep.max_a_excess, std::abs(f.h()[n]) - 0.5 * (n + 1));
        rep.max_b_excess = std::max(rep.max_b_excess, std::abs(f.g()[n]) - 0.5 * (n - 1) * a);
    }
    rep.coefficients_passed = rep.max_a_excess <= 1e-12 && rep.max_b_excess <= 1e-12;
    return rep;
}

/// Coefficient bounds up to the truncation and the growth bound at random
/// points of |z| <= 0.9. The M(alpha) relation is assumed, not checked.
inline BoundsReport thm31_bounds_check(const HarmonicMap& f, cplx alpha, int samples,
                                       std::uint64_t seed = 1234)
{
    BoundsReport rep = coefficient_bounds(f, alpha);
    rep.samples = samples;
    const double a = std::abs(alpha);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < samples; ++i) {
        const cplx z = std::polar(0.9 * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
        const double slack = growth_bound(std::abs(z), a) - std::abs(evaluate_f(f, z));
        if (slack < rep.min_growth_slack) {
            rep.min_growth_slack = slack;
            rep.worst_point = z;
        }
    }
    rep.growth_passed = rep.min_growth_slack >= -1e-9;
    return rep;
}

/// pi (1 - |alpha|^2/2) + pi sum_{n>=2} (n - n^2 |alpha|^2/(n+1)) |a_n|^2
inline double area_series(const HarmonicMap& f, cplx alpha)
{
    const double a2 = std::norm(alpha);
    double s = 0.0;
    for (int n = 2; n <= f.order(); ++n) {
        const double nn = n;
        s += (nn - nn * nn * a2 / (nn + 1.0)) * std::norm(f.h()[n]);
    }
    return std::numbers::pi * (1.0 - 0.5 * a2) + std::numbers::pi * s;
}

/// Midpoint rule in polar coordinates for the integral of the Jacobian over
/// the disk.
inline double jacobian_area_quadrature(const HarmonicMap& f, int n_r = 400, int n_theta = 400)
{
    const double dr = 1.0 / n_r;
    const double dt = 2.0 * std::numbers::pi / n_theta;
    double s = 0.0;
    for (int i = 0; i < n_r; ++i) {
        const double r = (i + 0.5) * dr;
        double ring = 0.0;
        for (int k = 0; k < n_theta; ++k) ring += jacobian(f, std::polar(r, (k + 0.5) * dt));
        s += ring * r;
    }
    return s * dr * dt;
}

// ─── Kaplan-type arc integrals ──────────────────────────────────────────────

/// (1 - |zeta|^2) / |e^{i theta} - zeta|^2
inline double poisson_kernel(cplx zeta, double theta)
{
    if (!(std::abs(zeta) < 1.0)) {
        throw std::domain_error("poisson_kernel: |zeta| must be < 1");
    }
    return (1.0 - std::norm(zeta)) / std::norm(std::polar(1.0, theta) - zeta);
}

/// Re(1 + z F''/F') for F = h + eps g at z = r e^{i theta}.
inline double kaplan_integrand(const HarmonicMap& f, cplx eps, double r, double theta)
{
    const cplx z = std::polar(r, theta);
    const MapJet j = f.jet(z);
    const cplx d1 = j.h.d1 + eps * j.g.d1;
    if (std::abs(d1) < 1e-14) throw singular_point_error("kaplan: (h + eps g)' vanishes", z);
    return std::real(1.0 + z * (j.h.d2 + eps * j.g.d2) / d1);
}

inline constexpr double kKaplanTol = 1e-6;

/// Integral of Re(1 + z F''/F') over [theta1, theta2] by adaptive
/// Gauss-Kronrod. Close-to-convexity requires values > -pi on every arc
/// shorter than a full turn; a full turn gives 2 pi for locally univalent F.
inline double kaplan_integral_check(const HarmonicMap& f, cplx eps, double r, double theta1,
                                    double theta2)
{
    const double len = theta2 - theta1;
    if (!(len > 0.0 && len <= 2.0 * std::numbers::pi + 1e-15)) {
        throw std::invalid_argument("kaplan_integral_check: need 0 < theta2 - theta1 <= 2 pi");
    }
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("kaplan_integral_check: r in (0, 1)");
    auto integrand = [&](double t) { return kaplan_integrand(f, eps, r, t); };
    // Boost's tolerance is relative to the running estimate, so arcs whose
    // integral is near zero never meet it; the depth cap bounds the work.
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, theta1, theta2,
                                                                           12, 1e-11);
}

struct KaplanArc {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double value = 0.0;
};

/// Arc (shorter than a full turn) with the smallest integral, located on a
/// grid of cumulative trapezoid sums and then integrated adaptively.
inline KaplanArc kaplan_worst_subarc(const HarmonicMap& f, cplx eps, double r, int n_grid = 1024)
{
    const double step = 2.0 * std::numbers::pi / n_grid;
    std::vector<double> v(static_cast<std::size_t>(n_grid));
    for (int k = 0; k < n_grid; ++k) v[k] = kaplan_integrand(f, eps, r, k * step);
    // prefix[k] = integral from 0 to k*step over two periods
    std::vector<double> prefix(static_cast<std::size_t>(2 * n_grid) + 1, 0.0);
    for (int k = 0; k < 2 * n_grid; ++k) {
        prefix[k + 1] = prefix[k] + 0.5 * step * (v[k % n_grid] + v[(k + 1) % n_grid]);
    }
    int best_i = 0, best_j = 1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_grid; ++i) {
        for (int j = i + 1; j < i + n_grid; ++j) {
            const double s = prefix[j] - prefix[i];
            if (s < best) {
                best = s;
                best_i = i;
                best_j = j;
            }
        }
    }
    KaplanArc arc{best_i * step, best_j * step, 0.0};
    arc.value = kaplan_integral_check(f, eps, r, arc.theta1, arc.theta2);
    return arc;
}

/// The unimodular eps_k = e^{2 pi i k / count}.
inline std::vector<cplx> unimodular_sweep(int count = 16)
{
    std::vector<cplx> out;
    for (int k = 0; k < count; ++k) out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / count));
    return out;
}

}  // namespace hmap

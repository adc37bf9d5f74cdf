#pragma once

// Radii of convexity and starlikeness: sampled monotonicity tests on
// circles, bisection in r, and the explicit expressions for the map
// F = Re z/(1-z)^2 + i Im z/(1-z).

#include <hmap/harmonic_map.hpp>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hmap {

enum class RadiusKind { convexity, starlikeness };

inline std::string_view to_string(RadiusKind k)
{
    return k == RadiusKind::convexity ? "convexity" : "starlikeness";
}

inline constexpr int kDefaultThetaGrid = 4096;
inline constexpr double kRateTol = 1e-9;
inline constexpr double kTurningTol = 1e-3;

struct CircleTestResult {
    bool passed = false;
    double min_rate = std::numeric_limits<double>::infinity();
    double argmin_theta = 0.0;
    double total_turning = 0.0;
};

namespace detail {

// Rate of change in theta of arg f (starlike) or arg df/dtheta (convex).
inline double turning_rate(const HarmonicMap& f, RadiusKind kind, double r, double theta)
{
    const AngularDerivatives d = angular_derivatives(f, r, theta);
    if (kind == RadiusKind::convexity) {
        if (std::abs(d.d1) < 1e-300) {
            throw singular_point_error("convex test: df/dtheta vanishes", std::polar(r, theta));
        }
        return std::imag(d.d2 / d.d1);
    }
    const cplx v = evaluate_f(f, std::polar(r, theta));
    if (std::abs(v) < 1e-300) {
        throw singular_point_error("starlike test: f vanishes on the circle", std::polar(r, theta));
    }
    return std::imag(d.d1 / v);
}

inline CircleTestResult circle_test(const HarmonicMap& f, RadiusKind kind, double r, int n_theta)
{
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("radius test: r must lie in (0, 1)");
    if (n_theta < 8) throw std::invalid_argument("radius test: n_theta must be >= 8");
    const double step = 2.0 * std::numbers::pi / n_theta;
    CircleTestResult res;
    double sum = 0.0;
    int kmin = 0;
    for (int k = 0; k < n_theta; ++k) {
        const double v = turning_rate(f, kind, r, k * step);
        sum += v;
        if (v < res.min_rate) {
            res.min_rate = v;
            kmin = k;
        }
    }
    res.total_turning = sum * step;  // trapezoid, periodic integrand
    res.argmin_theta = kmin * step;
    // the grid minimum can sit beside a narrow dip; refine between neighbours
    auto rate = [&](double t) { return turning_rate(f, kind, r, t); };
    const auto [t_ref, v_ref] = boost::math::tools::brent_find_minima(
        rate, (kmin - 1) * step, (kmin + 1) * step, std::numeric_limits<double>::digits / 2);
    if (v_ref < res.min_rate) {
        res.min_rate = v_ref;
        res.argmin_theta = t_ref;
    }
    res.passed = res.min_rate >= -kRateTol &&
                 std::abs(res.total_turning - 2.0 * std::numbers::pi) <= kTurningTol;
    return res;
}

}  // namespace detail

/// Every circle |z| = r maps onto a convex curve: d/dtheta arg(df/dtheta) >= 0.
inline CircleTestResult convex_test_at_radius(const HarmonicMap& f, double r,
                                              int n_theta = kDefaultThetaGrid)
{
    return detail::circle_test(f, RadiusKind::convexity, r, n_theta);
}

/// The circle |z| = r maps onto a curve starlike about 0: d/dtheta arg f >= 0.
inline CircleTestResult starlike_test_at_radius(const HarmonicMap& f, double r,
                                                int n_theta = kDefaultThetaGrid)
{
    return detail::circle_test(f, RadiusKind::starlikeness, r, n_theta);
}

struct RadiusResult {
    RadiusKind kind = RadiusKind::convexity;
    double r_lo = 0.0;  // test passes
    double r_hi = 0.0;  // test fails, unless saturated
    int grid_theta = kDefaultThetaGrid;
    double tol = 1e-6;
    bool saturated = false;  // passed everywhere up to r_limit
    double r_limit = 0.999;
    int scan_points = 0;
};

class radius_search_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kInnerRadius = 0.01;
inline constexpr int kMonotoneScanPoints = 50;

/// Brackets the largest r for which the circle test passes. Assumes the
/// property is monotone in r and aborts when a linear scan contradicts it.
inline RadiusResult radius_search(const HarmonicMap& f, RadiusKind kind, double tol = 1e-6,
                                  int n_theta = kDefaultThetaGrid, double r_limit = 0.999)
{
    auto pass = [&](double r) { return detail::circle_test(f, kind, r, n_theta).passed; };
    if (!pass(kInnerRadius)) {
        throw radius_search_error("radius_search: test fails at r = 0.01, no inner radius");
    }
    RadiusResult res;
    res.kind = kind;
    res.grid_theta = n_theta;
    res.tol = tol;
    res.r_limit = r_limit;
    res.scan_points = kMonotoneScanPoints;

    double last_pass = kInnerRadius;
    double first_fail = -1.0;
    for (int i = 1; i < kMonotoneScanPoints; ++i) {
        const double r = kInnerRadius + (r_limit - kInnerRadius) * i / (kMonotoneScanPoints - 1);
        const bool ok = pass(r);
        if (ok && first_fail > 0.0) {
            throw radius_search_error("radius_search: non-monotone, fails at r = " +
                                      std::to_string(first_fail) + " but passes at r = " +
                                      std::to_string(r));
        }
        if (ok) last_pass = r;
        else if (first_fail < 0.0) first_fail = r;
    }
    if (first_fail < 0.0) {
        res.r_lo = res.r_hi = r_limit;
        res.saturated = true;
        return res;
    }
    double lo = last_pass, hi = first_fail;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (pass(mid) ? lo : hi) = mid;
    }
    res.r_lo = lo;
    res.r_hi = hi;
    return res;
}

// ─── Explicit expressions for F ─────────────────────────────────────────────

enum class ClosedFormExpr { A, B, C, D };

/// dF/dtheta = A + iB and F = C + iD at z = r e^{i theta}:
///   |1-z|^6 A = -r[(1-6r^2+r^4) sin t + r(1+r^2) sin 2t]
///   |1-z|^4 B =  r[(1+r^2) cos t - 2r]
///   |1-z|^4 C =  r[(1+r^2) cos t - 2r]
///   |1-z|^2 D =  r sin t
inline double closed_form_F(ClosedFormExpr expr, double r, double t)
{
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("closed_form_F: r must lie in (0, 1)");
    const double m2 = 1.0 - 2.0 * r * std::cos(t) + r * r;  // |1-z|^2
    const double r2 = r * r;
    switch (expr) {
    case ClosedFormExpr::A:
        return -r * ((1.0 - 6.0 * r2 + r2 * r2) * std::sin(t) + r * (1.0 + r2) * std::sin(2.0 * t)) /
               (m2 * m2 * m2);
    case ClosedFormExpr::B:
    case ClosedFormExpr::C: return r * ((1.0 + r2) * std::cos(t) - 2.0 * r) / (m2 * m2);
    case ClosedFormExpr::D: return r * std::sin(t) / m2;
    }
    return 0.0;
}

/// Numerator of d/dtheta tan(arg dF/dtheta) after clearing
/// [(1-6r^2+r^4) + 2r(1+r^2)u]^2 (1-u^2), u = cos theta.
inline double polynomial_p(double r, double u)
{
    const double r2 = r * r, r4 = r2 * r2;
    return 1.0 + 4.0 * r2 - 26.0 * r4 + 4.0 * r4 * r2 + r4 * r4 -
           6.0 * u * r * (1.0 + r2) * (1.0 + r4 - 6.0 * r2) -
           12.0 * r2 * u * u * (1.0 + r2) * (1.0 + r2) + 4.0 * r * u * u * u * (1.0 + r2) * (1.0 + r4);
}

/// Numerator of d/dtheta tan(arg F) after clearing [(1+r^2)u - 2r]^2.
inline double polynomial_q(double r, double u)
{
    const double r2 = r * r;
    return (1.0 - r2) * (1.0 - r2) - 2.0 * r * u * (1.0 + r2) + 8.0 * r2 * u * u -
           2.0 * r * (1.0 + r2) * u * u * u;
}

inline double polynomial_q_du(double r, double u)
{
    const double r2 = r * r;
    return -2.0 * r * (1.0 + r2) + 16.0 * r2 * u - 6.0 * r * (1.0 + r2) * u * u;
}

/// Discriminant -3 + 10 r^2 - 3 r^4 of dq/du; real critical points need it >= 0.
inline double q_discriminant(double r)
{
    const double r2 = r * r;
    return -3.0 + 10.0 * r2 - 3.0 * r2 * r2;
}

/// Location of the local minimum of u -> q(r, u).
inline double q_local_min_u(double r)
{
    const double disc = q_discriminant(r);
    if (disc < 0.0) throw std::domain_error("q_local_min_u: needs r >= 1/sqrt(3)");
    return (4.0 * r - std::sqrt(disc)) / (3.0 * (1.0 + r * r));
}

/// q(r, u*) at the local minimum, in closed form:
///   [27 - 72r^2 + 58r^4 - 72r^6 + 27r^8 + 4r(3 - 10r^2 + 3r^4) sqrt(disc)] / (27 (1+r^2)^2)
inline double q_at_local_min(double r)
{
    const double disc = q_discriminant(r);
    if (disc < 0.0) throw std::domain_error("q_at_local_min: needs r >= 1/sqrt(3)");
    const double r2 = r * r, r4 = r2 * r2, r6 = r4 * r2, r8 = r4 * r4;
    const double poly = 27.0 - 72.0 * r2 + 58.0 * r4 - 72.0 * r6 + 27.0 * r8;
    const double rad = 4.0 * r * (3.0 - 10.0 * r2 + 3.0 * r4) * std::sqrt(disc);
    return (poly + rad) / (27.0 * (1.0 + r2) * (1.0 + r2));
}

struct TangentIdentityResidual {
    double convex_residual;    // tangent of arg dF/dtheta against p
    double starlike_residual;  // tangent of arg F against q
};

inline constexpr double kPoleExclusion = 0.02;
inline constexpr double kIdentityTol = 1e-5;

/// Both sides of the two derivative identities: the left side uses a
/// five-point difference of B/A (resp. D/C) in theta = arccos u. Residuals
/// are relative to max(1, |rhs|).
inline TangentIdentityResidual identity_check_tangent(double r, double u)
{
    if (!(u > -1.0 && u < 1.0)) throw std::domain_error("identity_check_tangent: needs |u| < 1");
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("identity_check_tangent: r in (0, 1)");
    const double r2 = r * r;
    const double pole_a = (1.0 - 6.0 * r2 + r2 * r2) + 2.0 * r * (1.0 + r2) * u;
    const double pole_c = (1.0 + r2) * u - 2.0 * r;
    if (std::abs(pole_a) < kPoleExclusion || std::abs(pole_c) < kPoleExclusion) {
        throw std::domain_error("identity_check_tangent: too close to a pole of the tangent");
    }
    const double theta = std::acos(u);
    const double h = 1e-4;
    auto d5 = [&](auto&& fn) {
        return (-fn(theta + 2 * h) + 8.0 * fn(theta + h) - 8.0 * fn(theta - h) + fn(theta - 2 * h)) /
               (12.0 * h);
    };
    auto tan_psi = [&](double t) {
        return closed_form_F(ClosedFormExpr::B, r, t) / closed_form_F(ClosedFormExpr::A, r, t);
    };
    auto tan_phi = [&](double t) {
        return closed_form_F(ClosedFormExpr::D, r, t) / closed_form_F(ClosedFormExpr::C, r, t);
    };
    const double lhs_p = pole_a * pole_a * (1.0 - u * u) * d5(tan_psi);
    const double lhs_q = pole_c * pole_c * d5(tan_phi);
    const double p = polynomial_p(r, u);
    const double q = polynomial_q(r, u);
    return {std::abs(lhs_p - p) / std::max(1.0, std::abs(p)),
            std::abs(lhs_q - q) / std::max(1.0, std::abs(q))};
}

struct SpecialRadii {
    double r_convex;             // root of 1 - 4r + r^2 in (0, 1)
    double r_star;               // root of q(r, u*(r)) on [1/sqrt 3, 1)
    double r_star_closed_form;   // (1/3) sqrt((37 - 8 sqrt 10)/3)
    double class_starlike_bound; // 4 sqrt 2 - 5
    double class_convex_bound;   // 2 - sqrt 3
};

inline SpecialRadii solve_special_radii()
{
    using boost::math::tools::bisect;
    using boost::math::tools::eps_tolerance;
    const eps_tolerance<double> tol(std::numeric_limits<double>::digits - 2);

    auto convex_factor = [](double r) { return 1.0 - 4.0 * r + r * r; };
    const auto [c_lo, c_hi] = bisect(convex_factor, 0.0, 1.0, tol);

    const double r_min = 1.0 / std::sqrt(3.0);
    if (!(q_at_local_min(r_min) > 0.0 && q_at_local_min(1.0) < 0.0)) {
        throw std::runtime_error("solve_special_radii: starlikeness root not bracketed");
    }
    const auto [s_lo, s_hi] = bisect(q_at_local_min, r_min, 1.0, tol);

    SpecialRadii out;
    out.r_convex = 0.5 * (c_lo + c_hi);
    out.r_star = 0.5 * (s_lo + s_hi);
    out.r_star_closed_form = std::sqrt((37.0 - 8.0 * std::sqrt(10.0)) / 3.0) / 3.0;
    out.class_starlike_bound = 4.0 * std::sqrt(2.0) - 5.0;
    out.class_convex_bound = 2.0 - std::sqrt(3.0);
    return out;
}

struct PRootMonotonicity {
    std::vector<double> u;
    std::vector<double> root;  // smallest root of p(., u) in (0, 1); 1 when there is none
    bool increasing = false;
};

/// Smallest root in r of p(r, u) on a u-grid strictly inside (-1, 1), and
/// whether it is nondecreasing in u. A sampled check, not a proof.
inline PRootMonotonicity p_root_monotonicity(int n_u = 199, int n_scan = 4000)
{
    using boost::math::tools::bisect;
    using boost::math::tools::eps_tolerance;
    const eps_tolerance<double> tol(std::numeric_limits<double>::digits - 4);
    PRootMonotonicity out;
    out.increasing = true;
    for (int k = 1; k <= n_u; ++k) {
        const double u = -1.0 + 2.0 * k / (n_u + 1);
        auto p = [u](double r) { return polynomial_p(r, u); };
        double root = 1.0;
        double prev = 0.0;
        for (int i = 1; i < n_scan; ++i) {
            const double r = static_cast<double>(i) / n_scan;
            if (p(r) <= 0.0) {
                const auto [lo, hi] = bisect(p, prev, r, tol);
                root = 0.5 * (lo + hi);
                break;
            }
            prev = r;
        }
        if (!out.root.empty() && root < out.root.back() - 1e-12) out.increasing = false;
        out.u.push_back(u);
        out.root.push_back(root);
    }
    return out;
}

}  // namespace hmap

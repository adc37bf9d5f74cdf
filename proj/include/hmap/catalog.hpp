#pragma once

// Named mappings and the shear construction.

#include <hmap/harmonic_map.hpp>
#include <hmap/series.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hmap {

using AnalyticEvaluator = std::function<AnalyticJet(cplx)>;

/// A normalized analytic function given by its series and, optionally, a
/// closed-form jet.
struct AnalyticProfile {
    TruncatedSeries series;
    AnalyticEvaluator exact{};
};

namespace detail {

/// integral of fp along the segment [0, z]
inline cplx integrate_segment(const std::function<cplx(cplx)>& fp, cplx z)
{
    if (z == cplx{}) return cplx{};
    auto integrand = [&](double t) { return fp(t * z) * z; };
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, 1.0, 12,
                                                                           1e-13);
}

inline AnalyticJet half_plane_jet(cplx z)
{
    const cplx u = 1.0 / (1.0 - z);
    return {z * u, u * u, 2.0 * u * u * u};
}

inline AnalyticJet koebe_jet(cplx z)
{
    const cplx u = 1.0 / (1.0 - z);
    return {z * u * u, (1.0 + z) * u * u * u, (4.0 + 2.0 * z) * u * u * u * u};
}

}  // namespace detail

/// z/(1-z) with its closed form.
inline AnalyticProfile half_plane_profile(int order = kDefaultOrder)
{
    return {make_generator(Generator::half_plane_l, order), detail::half_plane_jet};
}

enum class CatalogName { f_alpha, L, F, g_alpha, example21, example22, M_alpha_member };

struct CatalogEntry {
    CatalogName name;
    cplx alpha{0.0};
};

inline bool requires_alpha(CatalogName n)
{
    return n == CatalogName::f_alpha || n == CatalogName::g_alpha ||
           n == CatalogName::M_alpha_member;
}

inline std::string_view to_string(CatalogName n)
{
    switch (n) {
    case CatalogName::f_alpha: return "f_alpha";
    case CatalogName::L: return "L";
    case CatalogName::F: return "F";
    case CatalogName::g_alpha: return "g_alpha";
    case CatalogName::example21: return "example21";
    case CatalogName::example22: return "example22";
    case CatalogName::M_alpha_member: return "M_alpha_member";
    }
    return "?";
}

namespace detail {

inline std::string alpha_suffix(cplx a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, ":%.12g,%.12g", a.real(), a.imag());
    return buf;
}

/// h = (l + k)/2, g = alpha (k - l)/2
inline HarmonicMap make_f_alpha(cplx alpha, int order, std::string label)
{
    const TruncatedSeries l = make_generator(Generator::half_plane_l, order);
    const TruncatedSeries k = make_generator(Generator::koebe_k, order);
    TruncatedSeries h = scaled(combine(l, k, SeriesOp::add), 0.5);
    TruncatedSeries g = scaled(combine(k, l, SeriesOp::sub), 0.5 * alpha);
    auto exact = [alpha](cplx z) {
        const cplx u = 1.0 / (1.0 - z);
        const cplx u2 = u * u;
        const cplx u3 = u2 * u;
        MapJet j;
        j.h = {0.5 * z * (2.0 - z) * u2, u3, 3.0 * u3 * u};
        j.g = {0.5 * alpha * z * z * u2, alpha * z * u3, alpha * (1.0 + 2.0 * z) * u3 * u};
        return j;
    };
    CoefficientLaws laws{CoefficientLaw({0.5, 0.5}), CoefficientLaw({-0.5 * alpha, 0.5 * alpha})};
    return HarmonicMap(std::move(h), std::move(g), std::move(label), exact, laws);
}

inline void check_alpha(cplx alpha)
{
    if (!(std::abs(alpha) <= 1.0 + 1e-15)) {
        throw std::invalid_argument("catalog: |alpha| must be <= 1");
    }
}

}  // namespace detail

/// f = h + conj(g) with b_1 = 0 and g' = alpha z h'; g is integrated
/// termwise. Membership condition on h is not checked here.
inline HarmonicMap make_M_alpha_member(const AnalyticProfile& h_profile, cplx alpha,
                                       std::string label = "M_alpha_member")
{
    detail::check_alpha(alpha);
    const TruncatedSeries& h = h_profile.series;
    std::vector<cplx> b(static_cast<std::size_t>(h.order()) + 1, cplx{});
    for (int n = 1; n < h.order(); ++n) {
        b[n + 1] = static_cast<double>(n) * alpha * h[n] / static_cast<double>(n + 1);
    }
    JetEvaluator exact;
    if (h_profile.exact) {
        exact = [hx = h_profile.exact, alpha](cplx z) {
            const AnalyticJet hj = hx(z);
            MapJet j;
            j.h = hj;
            j.g.d1 = alpha * z * hj.d1;
            j.g.d2 = alpha * (hj.d1 + z * hj.d2);
            j.g.value = detail::integrate_segment(
                [&](cplx s) { return alpha * s * hx(s).d1; }, z);
            return j;
        };
    }
    return HarmonicMap(h, TruncatedSeries(std::move(b)), std::move(label), exact);
}

inline HarmonicMap make_named(const CatalogEntry& entry, int order = kDefaultOrder)
{
    if (order < 8) {
        throw std::invalid_argument("make_named: order must be >= 8");
    }
    if (requires_alpha(entry.name)) detail::check_alpha(entry.alpha);
    const std::string suffix = detail::alpha_suffix(entry.alpha);
    switch (entry.name) {
    case CatalogName::f_alpha:
        return detail::make_f_alpha(entry.alpha, order, "f_alpha" + suffix);
    case CatalogName::L: return detail::make_f_alpha(-1.0, order, "L");
    case CatalogName::F: return detail::make_f_alpha(1.0, order, "F");
    case CatalogName::g_alpha: {
        TruncatedSeries h = make_generator(Generator::identity, order);
        std::vector<cplx> b(static_cast<std::size_t>(order) + 1, cplx{});
        b[2] = 0.5 * entry.alpha;
        return HarmonicMap(std::move(h), TruncatedSeries(std::move(b)), "g_alpha" + suffix);
    }
    case CatalogName::example21: {
        std::vector<cplx> a(static_cast<std::size_t>(order) + 1, cplx{});
        std::vector<cplx> b(static_cast<std::size_t>(order) + 1, cplx{});
        a[1] = 1.0;
        a[2] = -0.5;
        b[2] = 0.5;
        b[3] = -1.0 / 3.0;
        return HarmonicMap(TruncatedSeries(std::move(a)), TruncatedSeries(std::move(b)),
                           "example21");
    }
    case CatalogName::example22: {
        const TruncatedSeries l = make_generator(Generator::half_plane_l, order);
        const TruncatedSeries lg = make_generator(Generator::log_one_minus_z, order);
        auto exact = [](cplx z) {
            const cplx u = 1.0 / (1.0 - z);
            MapJet j;
            j.h = detail::half_plane_jet(z);
            j.g = {z * u + std::log(1.0 - z), z * u * u, (1.0 + z) * u * u * u};
            return j;
        };
        return HarmonicMap(l, combine(l, lg, SeriesOp::add), "example22", exact);
    }
    case CatalogName::M_alpha_member:
        throw std::invalid_argument(
            "make_named: M_alpha_member needs an analytic part; use make_M_alpha_member");
    }
    throw std::invalid_argument("make_named: unknown catalog entry");
}

// ─── Shearing ───────────────────────────────────────────────────────────────

enum class ShearDirection { horizontal, vertical };

namespace detail {

inline HarmonicMap shear(const AnalyticProfile& phi, const TruncatedSeries& w, ShearDirection dir,
                         std::string label)
{
    const TruncatedSeries& ps = phi.series;
    if (std::abs(ps[0]) > 1e-12 || std::abs(ps[1] - 1.0) > 1e-12) {
        throw std::invalid_argument("shear: phi must satisfy phi(0) = 0, phi'(0) = 1");
    }
    if (std::abs(w[0]) > 1e-15) {
        throw std::invalid_argument("shear: dilatation must vanish at 0");
    }
    const double sign = dir == ShearDirection::horizontal ? 1.0 : -1.0;
    // 1 - sign*w must stay away from zero and |w| < 1 on a sample grid.
    for_each_grid_node(0.999, PolarGrid{16, 64}, [&](double, double, cplx z) {
        const AnalyticJet wj = evaluate_jet(w, z);
        if (std::abs(1.0 - sign * wj.value) < 1e-12) {
            throw singular_point_error("shear: 1 -/+ w vanishes on the sample grid", z);
        }
        if (std::abs(wj.value) >= 1.0) {
            throw std::invalid_argument("shear: |w| must be < 1 on the disk");
        }
    });

    // h' = phi' * sum_k (sign*w)^k, truncated
    const TruncatedSeries dphi = differentiate(ps);
    const TruncatedSeries sw = scaled(w, sign);
    TruncatedSeries dh = dphi;
    TruncatedSeries term = dphi;
    for (int k = 1; k <= dphi.order(); ++k) {
        term = combine(term, sw, SeriesOp::mul);
        dh = combine(dh, term, SeriesOp::add);
    }
    TruncatedSeries h = integrate(dh);
    TruncatedSeries g = dir == ShearDirection::horizontal ? combine(h, ps, SeriesOp::sub)
                                                          : combine(ps, h, SeriesOp::sub);

    JetEvaluator exact;
    if (phi.exact) {
        exact = [px = phi.exact, w, sign, dir](cplx z) {
            auto dh_at = [&](cplx s) {
                return px(s).d1 / (1.0 - sign * evaluate_jet(w, s).value);
            };
            const AnalyticJet p = px(z);
            const AnalyticJet wj = evaluate_jet(w, z);
            const cplx den = 1.0 - sign * wj.value;
            MapJet j;
            j.h.d1 = p.d1 / den;
            j.h.d2 = (p.d2 * den + sign * p.d1 * wj.d1) / (den * den);
            j.h.value = integrate_segment(dh_at, z);
            j.g.d1 = wj.value * j.h.d1;
            j.g.d2 = wj.d1 * j.h.d1 + wj.value * j.h.d2;
            j.g.value = dir == ShearDirection::horizontal ? j.h.value - p.value : p.value - j.h.value;
            return j;
        };
    }
    return HarmonicMap(std::move(h), std::move(g), std::move(label), exact);
}

}  // namespace detail

/// h - g = phi with dilatation w (a polynomial vanishing at 0).
inline HarmonicMap shear_horizontal(const AnalyticProfile& phi, const TruncatedSeries& w,
                                    std::string label = "shear_horizontal")
{
    return detail::shear(phi, w, ShearDirection::horizontal, std::move(label));
}

/// h + g = phi with dilatation w (a polynomial vanishing at 0).
inline HarmonicMap shear_vertical(const AnalyticProfile& phi, const TruncatedSeries& w,
                                  std::string label = "shear_vertical")
{
    return detail::shear(phi, w, ShearDirection::vertical, std::move(label));
}

/// Polynomial c z^n as a series of the given order.
inline TruncatedSeries monomial(cplx c, int n, int order)
{
    if (n < 0 || n > order) throw std::invalid_argument("monomial: degree out of range");
    std::vector<cplx> v(static_cast<std::size_t>(order) + 1, cplx{});
    v[n] = c;
    return TruncatedSeries(std::move(v));
}

}  // namespace hmap

#pragma once

// One-shot verification suites. Each record compares a computed quantity
// with its expected value under a stated relation and tolerance.

#include <hmap/catalog.hpp>
#include <hmap/classifiers.hpp>
#include <hmap/convolution.hpp>
#include <hmap/harmonic_map.hpp>
#include <hmap/plot.hpp>
#include <hmap/radius.hpp>
#include <hmap/report_json.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hmap {

enum class Relation { abs_diff, at_most, at_least, less_than, greater_than };

inline std::string_view to_string(Relation r)
{
    switch (r) {
    case Relation::abs_diff: return "abs_diff";
    case Relation::at_most: return "at_most";
    case Relation::at_least: return "at_least";
    case Relation::less_than: return "less_than";
    case Relation::greater_than: return "greater_than";
    }
    return "?";
}

struct VerificationRecord {
    std::string claim_id;
    std::string anchor;  // the statement being checked, in words
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    Relation relation = Relation::abs_diff;
    bool passed = false;
};

inline VerificationRecord make_record(std::string id, std::string anchor, double computed,
                                      double expected, double tolerance,
                                      Relation rel = Relation::abs_diff)
{
    bool ok = false;
    switch (rel) {
    case Relation::abs_diff: ok = std::abs(computed - expected) <= tolerance; break;
    case Relation::at_most: ok = computed <= expected + tolerance; break;
    case Relation::at_least: ok = computed >= expected - tolerance; break;
    case Relation::less_than: ok = computed < expected; break;
    case Relation::greater_than: ok = computed > expected; break;
    }
    return {std::move(id), std::move(anchor), computed, expected, tolerance, rel, ok};
}

struct VerificationReport {
    std::string suite;
    std::vector<VerificationRecord> records;

    bool passed() const
    {
        for (const auto& r : records)
            if (!r.passed) return false;
        return true;
    }
};

inline json to_json(const VerificationRecord& r)
{
    return {{"claim_id", r.claim_id}, {"anchor", r.anchor},     {"computed", r.computed},
            {"expected", r.expected}, {"tolerance", r.tolerance}, {"relation", to_string(r.relation)},
            {"passed", r.passed}};
}

inline json to_json(const VerificationReport& rep)
{
    json recs = json::array();
    for (const auto& r : rep.records) recs.push_back(to_json(r));
    return {{"suite", rep.suite}, {"passed", rep.passed()}, {"records", recs}};
}

namespace detail {

using Records = std::vector<VerificationRecord>;

inline std::string alpha_tag(cplx a)
{
    return "(" + format_real(a.real()) + "," + format_real(a.imag()) + ")";
}

/// Distance of x outside [lo, hi]; zero inside.
inline double outside(double x, double lo, double hi)
{
    return x < lo ? lo - x : (x > hi ? x - hi : 0.0);
}

inline void coefficient_records(Records& out)
{
    for (cplx a : {cplx{1.0}, cplx{-1.0}, cplx{0.0, 1.0}, cplx{0.5}}) {
        const HarmonicMap f = make_named({CatalogName::f_alpha, a});
        double da = 0.0, db = 0.0;
        for (int n = 2; n <= f.order(); ++n) {
            da = std::max(da, std::abs(std::abs(f.h()[n]) - 0.5 * (n + 1)));
            db = std::max(db, std::abs(std::abs(f.g()[n]) - 0.5 * (n - 1) * std::abs(a)));
        }
        out.push_back(make_record("f_alpha_a_equality" + alpha_tag(a),
                                  "|a_n| = (n+1)/2 attained by f_alpha", da, 0.0, 1e-12));
        out.push_back(make_record("f_alpha_b_equality" + alpha_tag(a),
                                  "|b_n| = (n-1)|alpha|/2 attained by f_alpha", db, 0.0, 1e-12));
        out.push_back(make_record("f_alpha_b1_zero" + alpha_tag(a), "b_1 = g'(0) = 0 in M(alpha)",
                                  std::abs(f.g()[1]), 0.0, 0.0));
    }

    const HarmonicMap small(TruncatedSeries({0.0, 1.0, 0.25}), TruncatedSeries(2), "z+z^2/4");
    const auto l13 = lemma13_orders(small);
    out.push_back(make_record("lemma13_starlike_order", "sum n(|a_n|+|b_n|) = 1/2 gives order 2/5",
                              l13.first.order_starlike.value_or(-1.0), 0.4, 0.0));
    const auto t2 = theorem2_classify(TruncatedSeries({0.0, 1.0, 0.125}), 2.0 / 11.0, 3);
    out.push_back(make_record("theorem2_cubic_starlike", "|alpha| = 2/11 gives starlike order 2/5",
                              t2.order_starlike.value_or(-1.0), 0.4, 1e-15));
    out.push_back(make_record("theorem2_cubic_convex", "|alpha| = 2/11 gives convex order 0",
                              t2.order_convex.value_or(-1.0), 0.0, 1e-15));

    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double dp = 0.0, dq = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double r = unit(rng);
        dp = std::max(dp, std::abs(polynomial_p(r, -1.0) - std::pow(1 + r, 6) * (1 - 4 * r + r * r)));
        dq = std::max(dq, std::abs(polynomial_q(r, -1.0) - std::pow(1 + r, 4)));
        dq = std::max(dq, std::abs(polynomial_q(r, 1.0) - std::pow(1 - r, 4)));
    }
    out.push_back(make_record("p_at_u_minus_1", "p(r,-1) = (1+r)^6 (1-4r+r^2)", dp, 0.0, 1e-12));
    out.push_back(make_record("q_at_u_pm_1", "q(r,-1) = (1+r)^4, q(r,1) = (1-r)^4", dq, 0.0, 1e-12));

    double worst_p = 0.0, worst_q = 0.0;
    for (int i = 0; i < 20; ++i) {
        for (int k = 0; k < 20; ++k) {
            const double r = 0.025 + 0.05 * i;
            const double u = -0.95 + 0.1 * k;
            try {
                const auto res = identity_check_tangent(r, u);
                worst_p = std::max(worst_p, res.convex_residual);
                worst_q = std::max(worst_q, res.starlike_residual);
            } catch (const std::domain_error&) {
                // pole of the tangent; excluded
            }
        }
    }
    out.push_back(make_record("tangent_identity_p", "derivative of tan of the tangent angle equals p",
                              worst_p, 0.0, kIdentityTol, Relation::at_most));
    out.push_back(make_record("tangent_identity_q", "derivative of tan of the radial angle equals q",
                              worst_q, 0.0, kIdentityTol, Relation::at_most));
}

inline void radii_records(Records& out)
{
    const SpecialRadii s = solve_special_radii();
    const double r0 = s.r_star_closed_form;
    out.push_back(make_record("radius_convexity_root", "root of 1-4r+r^2 is 2-sqrt(3)", s.r_convex,
                              2.0 - std::sqrt(3.0), 1e-12));
    out.push_back(make_record("radius_starlikeness_root",
                              "root of q at its local minimum is (1/3)sqrt((37-8 sqrt 10)/3)",
                              s.r_star, r0, 1e-10));
    out.push_back(make_record("class_starlike_bound", "4 sqrt(2) - 5 ~ 0.65685",
                              s.class_starlike_bound, 0.65685, 5e-6));
    out.push_back(make_record("starlike_sandwich", "4 sqrt(2) - 5 <= r_0", s.class_starlike_bound,
                              r0, 0.0, Relation::at_most));

    const PRootMonotonicity pm = p_root_monotonicity();
    out.push_back(make_record("p_roots_increasing_in_u",
                              "smallest root of p(., u) is nondecreasing on a u-grid (sampled)",
                              pm.increasing ? 1.0 : 0.0, 1.0, 0.0));

    const HarmonicMap F = make_named({CatalogName::F});
    const RadiusResult rc = radius_search(F, RadiusKind::convexity, 1e-6);
    out.push_back(make_record("F_convexity_bracket", "radius of convexity of F is 2-sqrt(3)",
                              outside(2.0 - std::sqrt(3.0), rc.r_lo, rc.r_hi), 0.0, 0.0));
    out.push_back(make_record("F_convexity_bracket_width", "bracket width <= 1e-6", rc.r_hi - rc.r_lo,
                              1e-6, 0.0, Relation::at_most));
    const RadiusResult rs = radius_search(F, RadiusKind::starlikeness, 1e-6);
    out.push_back(make_record("F_starlikeness_bracket", "radius of starlikeness of F is r_0",
                              outside(r0, rs.r_lo, rs.r_hi), 0.0, 0.0));
    out.push_back(make_record("F_starlikeness_bracket_width", "bracket width <= 1e-6",
                              rs.r_hi - rs.r_lo, 1e-6, 0.0, Relation::at_most));
}

inline void convolution_records(Records& out)
{
    const HarmonicMap L = make_named({CatalogName::L});
    const HarmonicMap LL = hadamard(L, L).product;
    double dh = 0.0, dg = 0.0;
    for (int n = 2; n <= LL.order(); ++n) {
        dh = std::max(dh, std::abs(LL.h()[n] - std::pow(0.5 * (n + 1), 2)));
        dg = std::max(dg, std::abs(LL.g()[n] - std::pow(0.5 * (n - 1), 2)));
    }
    out.push_back(make_record("LL_analytic_coeffs", "L*L analytic coefficients ((n+1)/2)^2", dh, 0.0, 0.0));
    out.push_back(make_record("LL_coanalytic_coeffs", "L*L co-analytic coefficients ((n-1)/2)^2", dg, 0.0, 0.0));

    for (cplx a : {cplx{1.0}, cplx{-1.0}, cplx{0.0, 1.0}, std::polar(1.0, std::numbers::pi / 3)}) {
        const HarmonicMap p = hadamard(make_named({CatalogName::f_alpha, a}),
                                       make_named({CatalogName::f_alpha, std::conj(a)}))
                                  .product;
        double d = 0.0;
        for (int n = 0; n <= p.order(); ++n) {
            d = std::max(d, std::abs(p.h()[n] - LL.h()[n]));
            d = std::max(d, std::abs(p.g()[n] - LL.g()[n]));
        }
        out.push_back(make_record("f_alpha_conv_f_conj_alpha" + alpha_tag(a),
                                  "f_alpha * f_conj(alpha) = L*L for |alpha| = 1", d, 0.0, 1e-12));
    }

    // The circle test is full starlikeness: every |z| = r must map to a
    // starlike curve. L*L fails it from r ~ 0.6 on even though the image of
    // the whole disk, a slit plane, is starlike. Both are recorded.
    const auto st = starlike_test_at_radius(LL, 0.99);
    out.push_back(make_record("LL_starlike_0.99", "image of |z| = r starlike for every r <= 0.99",
                              st.min_rate, 0.0, kRateTol, Relation::at_least));
    double slit = 0.0;
    for (int k = 0; k <= 2000; ++k) {
        const double t = 0.5 + (2.0 * std::numbers::pi - 1.0) * k / 2000;
        const cplx v = evaluate_f(LL, std::polar(0.99999, t));
        slit = std::max({slit, std::abs(v.imag()), v.real() + 0.25});
    }
    out.push_back(make_record("LL_boundary_on_slit",
                              "L*L boundary values lie on (-inf, -1/4], so the image is a slit plane",
                              slit, 0.0, 1e-3, Relation::at_most));

    const HarmonicMap fa = make_named({CatalogName::f_alpha, 0.5});
    const auto sq = coefficient_bounds(hadamard(fa, fa).product, 0.5);
    out.push_back(make_record("f_alpha_squared_not_in_M", "f_alpha * f_alpha violates |a_n| <= (n+1)/2",
                              sq.max_a_excess, 0.0, 0.0, Relation::greater_than));

    const HarmonicMap LF = hadamard(L, make_named({CatalogName::F})).product;
    const auto sp = sense_preserving_check(LF, 0.99);
    out.push_back(make_record("LF_sense_preserving", "L*F is sense-preserving", sp.min_jacobian, 0.0,
                              0.0, Relation::greater_than));
    const auto cross = circle_self_intersection(LF, 0.9);
    out.push_back(make_record("LF_not_univalent", "L*F is not univalent (image of |z|=0.9 crosses itself)",
                              cross ? 1.0 : 0.0, 1.0, 0.0));

    for (int n : {1, 2}) {
        for (double th : {0.0, std::numbers::pi / 3, std::numbers::pi}) {
            const auto rep = tilde_dilatation_check(n, th);
            const std::string tag = "(n=" + std::to_string(n) + ",theta=" + format_real(th) + ")";
            out.push_back(make_record("tilde_w_max" + tag, "|dilatation of F*f| < 1", rep.max_abs, 1.0,
                                      0.0, Relation::less_than));
            out.push_back(make_record("tilde_w_crosscheck" + tag,
                                      "closed-form dilatation matches product series",
                                      rep.crosscheck_residual, 0.0, kTildeCrosscheckTol,
                                      Relation::at_most));
        }
    }
}

/// Eight M(alpha) members with known alpha.
inline std::vector<std::pair<HarmonicMap, cplx>> sample_M_alpha_members(int order = kDefaultOrder)
{
    std::vector<std::pair<HarmonicMap, cplx>> out;
    for (cplx a : {cplx{1.0}, cplx{-1.0}, cplx{0.0, 1.0}, cplx{0.5}, cplx{0.3, 0.4}}) {
        out.emplace_back(make_named({CatalogName::f_alpha, a}, order), a);
    }
    out.emplace_back(make_named({CatalogName::g_alpha, cplx{0.0, 1.0}}, order), cplx{0.0, 1.0});
    const cplx a7{0.7, 0.0};
    std::vector<cplx> poly(static_cast<std::size_t>(order) + 1, cplx{});
    poly[1] = 1.0;
    poly[2] = 0.125;
    out.emplace_back(make_M_alpha_member({TruncatedSeries(poly)}, a7, "z+z^2/8 in M(0.7)"), a7);
    const cplx a8{-0.5, 0.5};
    out.emplace_back(make_M_alpha_member(half_plane_profile(order), a8, "z/(1-z) in M(-0.5+0.5i)"), a8);
    return out;
}

inline void bounds_records(Records& out)
{
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& [f, a] : sample_M_alpha_members()) {
        worst = std::min(worst, thm31_bounds_check(f, a, 1250).min_growth_slack);
    }
    out.push_back(make_record("growth_bound", "|f(z)| <= |z|/(1-|z|)^2 [1 - (1-|alpha|)|z|/2]", worst,
                              0.0, 1e-9, Relation::at_least));
    const HarmonicMap F = make_named({CatalogName::F});
    double eq = 0.0;
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        eq = std::max(eq, std::abs(std::abs(evaluate_f(F, r)) - growth_bound(r, 1.0)) /
                              growth_bound(r, 1.0));
    }
    out.push_back(make_record("growth_equality_f1", "growth bound attained by f_1 on (0,1)", eq, 0.0, 1e-9));

    for (cplx a : {cplx{1.0}, cplx{0.0, 1.0}, cplx{0.6, 0.0}}) {
        const HarmonicMap g = make_named({CatalogName::g_alpha, a});
        const double expect = std::numbers::pi * (1.0 - 0.5 * std::norm(a));
        out.push_back(make_record("area_minimum" + alpha_tag(a), "area of g_alpha is pi(1-|alpha|^2/2)",
                                  area_series(g, a), expect, 1e-12));
        const double quad = jacobian_area_quadrature(g);
        out.push_back(make_record("area_quadrature" + alpha_tag(a), "Jacobian integral matches area",
                                  std::abs(quad - expect) / expect, 0.0, 1e-4, Relation::at_most));
    }

    const HarmonicMap e21 = make_named({CatalogName::example21});
    const cplx z0{0.75, std::sqrt(3.0) / 4.0};
    out.push_back(make_record("example21_collision_z0", "f(z0) = 3/4", std::abs(evaluate_f(e21, z0) - 0.75),
                              0.0, 1e-12));
    out.push_back(make_record("example21_collision_conj", "f(conj z0) = 3/4",
                              std::abs(evaluate_f(e21, std::conj(z0)) - 0.75), 0.0, 1e-12));
    out.push_back(make_record("example21_sense_preserving", "Jacobian > 0 up to r = 0.95",
                              sense_preserving_check(e21, 0.95).min_jacobian, 0.0, 0.0,
                              Relation::greater_than));

    double full = 0.0, worst_arc = std::numeric_limits<double>::infinity();
    for (double r : {0.5, 0.9}) {
        for (cplx e : unimodular_sweep(16)) {
            full = std::max(full, std::abs(kaplan_integral_check(F, e, r, 0.0, 2.0 * std::numbers::pi) -
                                           2.0 * std::numbers::pi));
            worst_arc = std::min(worst_arc, kaplan_worst_subarc(F, e, r).value);
        }
    }
    out.push_back(make_record("kaplan_full_period", "full-turn integral equals 2 pi", full, 0.0, 1e-6,
                              Relation::at_most));
    out.push_back(make_record("kaplan_subarcs", "every sub-arc integral exceeds -pi", worst_arc,
                              -std::numbers::pi, 0.0, Relation::greater_than));

    const auto m = m_alpha_check(F, 1.0);
    out.push_back(make_record("F_in_M1_curvature", "Re(1 + z h''/h') > -1/2 for F", m.min_curvature, -0.5,
                              0.0, Relation::greater_than));
    out.push_back(make_record("F_in_M1_relation", "g' = z h' for F", m.relation_residual, 0.0,
                              kRelationTol, Relation::at_most));
}

}  // namespace detail

inline const std::vector<std::string_view>& verify_suites()
{
    static const std::vector<std::string_view> s{"all", "coefficients", "radii", "convolution", "bounds"};
    return s;
}

inline VerificationReport run_verification(std::string_view suite)
{
    VerificationReport rep;
    rep.suite = std::string(suite);
    const bool all = suite == "all";
    if (!all && suite != "coefficients" && suite != "radii" && suite != "convolution" &&
        suite != "bounds") {
        throw std::invalid_argument("unknown verification suite: " + std::string(suite));
    }
    if (all || suite == "coefficients") detail::coefficient_records(rep.records);
    if (all || suite == "radii") detail::radii_records(rep.records);
    if (all || suite == "convolution") detail::convolution_records(rep.records);
    if (all || suite == "bounds") detail::bounds_records(rep.records);
    return rep;
}

}  // namespace hmap

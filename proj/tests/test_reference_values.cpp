// Small hand-checkable values for each module.

#include <hmap/hmap.hpp>

#include <gtest/gtest.h>

#include <numbers>

using namespace hmap;

namespace {

HarmonicMap identity_map() { return {make_generator(Generator::identity, 8), TruncatedSeries(8), "identity"}; }

HarmonicMap poly(std::vector<cplx> a, std::vector<cplx> b)
{
    return {TruncatedSeries(std::move(a)), TruncatedSeries(std::move(b)), "poly"};
}

}  // namespace

TEST(ReferenceSeries, GeneratorTables)
{
    const auto l = make_generator(Generator::half_plane_l, 3);
    EXPECT_EQ(std::vector<cplx>(l.coeffs().begin(), l.coeffs().end()), (std::vector<cplx>{0, 1, 1, 1}));
    const auto k = make_generator(Generator::koebe_k, 4);
    EXPECT_EQ(std::vector<cplx>(k.coeffs().begin(), k.coeffs().end()), (std::vector<cplx>{0, 1, 2, 3, 4}));
    const auto lg = make_generator(Generator::log_one_minus_z, 3);
    EXPECT_DOUBLE_EQ(lg[2].real(), -0.5);
    EXPECT_DOUBLE_EQ(lg[3].real(), -1.0 / 3.0);
}

TEST(ReferenceSeries, Arithmetic)
{
    const auto l = make_generator(Generator::half_plane_l, 8);
    const auto k = make_generator(Generator::koebe_k, 8);
    const auto id = make_generator(Generator::identity, 8);
    EXPECT_EQ(combine(l, k, SeriesOp::add)[2], cplx{3.0});
    const auto sq = combine(id, id, SeriesOp::mul);
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(sq[n], cplx(n == 2 ? 1.0 : 0.0));
    const auto zero = combine(l, l, SeriesOp::sub);
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(zero[n], cplx{});
}

TEST(ReferenceSeries, Derivatives)
{
    const auto dl = differentiate(make_generator(Generator::half_plane_l, 8));
    for (int n = 0; n <= dl.order(); ++n) EXPECT_EQ(dl[n], cplx(n + 1.0));
    const auto d2 = differentiate(make_generator(Generator::identity, 8), 2);
    for (int n = 0; n <= d2.order(); ++n) EXPECT_EQ(d2[n], cplx{});
    const auto dlog = differentiate(make_generator(Generator::log_one_minus_z, 8));
    for (int n = 0; n <= dlog.order(); ++n) EXPECT_NEAR(dlog[n].real(), -1.0, 1e-15);
}

TEST(ReferenceSeries, Evaluation)
{
    EXPECT_NEAR(std::abs(evaluate(make_generator(Generator::half_plane_l, 50), 0.5) - 1.0), 0.0,
                std::pow(0.5, 50) / 0.5);
    EXPECT_NEAR(evaluate(make_generator(Generator::koebe_k, 60), 0.3).real(), 0.3 / 0.49, 1e-12);
    const TruncatedSeries a({cplx{0.7, -0.1}, 1.0, 2.0});
    EXPECT_EQ(evaluate(a, 0.0), a[0]);
}

TEST(ReferenceMap, PointValues)
{
    EXPECT_EQ(evaluate_f(identity_map(), cplx(0.3, 0.4)), cplx(0.3, 0.4));
    const HarmonicMap L = make_named({CatalogName::L});
    EXPECT_LT(std::abs(dilatation(L, cplx(0.0, 0.2)) - cplx(0.0, -0.2)), 1e-15);
    const cplx a = std::polar(1.0, 0.8);
    const HarmonicMap g = make_named({CatalogName::g_alpha, a});
    const cplx z{0.4, -0.3};
    EXPECT_LT(std::abs(dilatation(g, z) - a * z), 1e-15);
    EXPECT_NEAR(jacobian(g, z), 1.0 - std::norm(z), 1e-15);
    EXPECT_EQ(jacobian(identity_map(), z), 1.0);
}

TEST(ReferenceMap, AngularDerivatives)
{
    const AngularDerivatives d = angular_derivatives(identity_map(), 0.5, 0.0);
    EXPECT_LT(std::abs(d.d1 - cplx(0.0, 0.5)), 1e-15);
    EXPECT_LT(std::abs(d.d2 - cplx(-0.5, 0.0)), 1e-15);
    const AngularDerivatives f = angular_derivatives(make_named({CatalogName::F}), 0.1, std::numbers::pi / 2);
    EXPECT_NEAR(f.d1.imag(), -0.02 / std::norm(cplx(1.0, -0.1)) / std::norm(cplx(1.0, -0.1)), 1e-15);
    EXPECT_NEAR(f.d1.imag(), -0.0196, 1e-4);
}

TEST(ReferenceMap, SenseAndInjectivity)
{
    EXPECT_TRUE(sense_preserving_check(make_named({CatalogName::g_alpha, cplx{0.0, 1.0}}), 0.95).passed);
    const auto bad = sense_preserving_check(poly({0.0, 1.0, 0.0}, {0.0, 0.0, 2.0}), 0.5, {64, 64});
    EXPECT_FALSE(bad.passed);
    ASSERT_TRUE(bad.first_violation);
    EXPECT_GE(bad.first_violation->r, 0.25 - 1e-12);
    EXPECT_FALSE(injectivity_sample_check(make_named({CatalogName::F}), 0.9, 1500).collision);
}

TEST(ReferenceCatalog, ShearWithZeroDilatation)
{
    for (bool horizontal : {true, false}) {
        const TruncatedSeries w = monomial(0.0, 1, 32);
        const HarmonicMap s = horizontal ? shear_horizontal(half_plane_profile(32), w)
                                         : shear_vertical(half_plane_profile(32), w);
        for (int n = 0; n <= 32; ++n) {
            EXPECT_LT(std::abs(s.h()[n] - cplx(n >= 1 ? 1.0 : 0.0)), 1e-15);
            EXPECT_LT(std::abs(s.g()[n]), 1e-15);
        }
    }
}

TEST(ReferenceCatalog, VerticalShearAnalyticPart)
{
    const HarmonicMap s = shear_vertical(half_plane_profile(32), monomial(-1.0, 1, 32));
    for (int n = 1; n <= 32; ++n) EXPECT_NEAR(std::abs(s.h()[n] - 0.5 * (n + 1.0)), 0.0, 1e-10);
}

TEST(ReferenceCatalog, MAlphaMembers)
{
    const HarmonicMap e = make_M_alpha_member(half_plane_profile(32), 1.0, "e");
    for (int n = 2; n <= 32; ++n) EXPECT_NEAR(std::abs(e.g()[n] - (n - 1.0) / n), 0.0, 1e-14);
    const HarmonicMap ex22 = make_named({CatalogName::example22}, 32);
    for (int n = 0; n <= 32; ++n) EXPECT_NEAR(std::abs(e.g()[n] - ex22.g()[n]), 0.0, 1e-14);
    const cplx a{0.2, 0.5};
    const HarmonicMap g = make_M_alpha_member({make_generator(Generator::identity, 16)}, a, "g");
    EXPECT_LT(std::abs(g.g()[2] - 0.5 * a), 1e-15);
    const HarmonicMap z = make_M_alpha_member(half_plane_profile(16), 0.0, "zero");
    for (int n = 0; n <= 16; ++n) EXPECT_EQ(z.g()[n], cplx{});
}

TEST(ReferenceClassifiers, OrderFormulas)
{
    const auto r1 = lemma13_orders(poly({0.0, 1.0, 0.5}, {0.0, 0.0, 0.0}));
    ASSERT_TRUE(r1.first.order_starlike);
    EXPECT_EQ(*r1.first.order_starlike, 0.0);
    const auto r2 = theorem2_classify(TruncatedSeries({0.0, 1.0, 0.25}), 1.0 / 3.0, 2);
    ASSERT_TRUE(r2.order_starlike);
    EXPECT_NEAR(*r2.order_starlike, 0.0, 1e-15);
    EXPECT_GE(*r2.order_starlike, 0.0);
}

TEST(ReferenceClassifiers, MAlphaExamples)
{
    EXPECT_TRUE(m_alpha_check(make_named({CatalogName::F}), 1.0, 0.99).passed());
    const cplx a{0.0, 0.6};
    EXPECT_TRUE(m_alpha_check(make_named({CatalogName::g_alpha, a}), a).passed());
    const auto r = m_alpha_check(poly({0.0, 1.0, 0.2}, {0.0, 0.0, 0.0}), 1.0);
    EXPECT_FALSE(r.relation_passed);
}

TEST(ReferenceClassifiers, BoundsAndArea)
{
    const cplx a{0.3, -0.4};
    const auto b = coefficient_bounds(make_named({CatalogName::g_alpha, a}), a);
    EXPECT_TRUE(b.coefficients_passed);
    EXPECT_NEAR(b.max_b_excess, 0.0, 1e-15);
    EXPECT_NEAR(area_series(make_named({CatalogName::g_alpha, 1.0}), 1.0), std::numbers::pi / 2, 1e-15);
    EXPECT_NEAR(area_series(identity_map(), 0.0), std::numbers::pi, 1e-15);
    for (const auto& [f, al] : detail::sample_M_alpha_members()) {
        EXPECT_GE(area_series(f, al), std::numbers::pi * (1.0 - 0.5 * std::norm(al)) - 1e-9) << f.label();
    }
}

TEST(ReferenceClassifiers, PoissonAndKaplan)
{
    EXPECT_DOUBLE_EQ(poisson_kernel(0.0, 1.3), 1.0);
    EXPECT_DOUBLE_EQ(poisson_kernel(0.5, 0.0), 3.0);
    const HarmonicMap g = make_named({CatalogName::g_alpha, 1.0});
    EXPECT_GT(kaplan_integral_check(g, 1.0, 0.5, 0.3, 2.9), -std::numbers::pi);
    EXPECT_GT(kaplan_worst_subarc(g, 1.0, 0.5).value, -std::numbers::pi);
    EXPECT_GT(kaplan_worst_subarc(make_named({CatalogName::F}), -1.0, 0.95).value, -std::numbers::pi);
}

TEST(ReferenceConvolution, ConvexCombination)
{
    const HarmonicMap F = make_named({CatalogName::F});
    const auto l = make_generator(Generator::half_plane_l, F.order());
    const HarmonicMap same = convex_combination_convolve(l, 1.0, F);
    const HarmonicMap analytic = convex_combination_convolve(l, 0.0, F);
    for (int n = 0; n <= F.order(); ++n) {
        EXPECT_EQ(same.h()[n], F.h()[n]);
        EXPECT_EQ(same.g()[n], F.g()[n]);
        EXPECT_EQ(analytic.g()[n], cplx{});
    }
    EXPECT_EQ(tilde_dilatation(MonomialDilatation{1, 0.0}, 0.0), cplx{});
}

TEST(ReferenceRadius, CircleTests)
{
    const HarmonicMap F = make_named({CatalogName::F});
    EXPECT_TRUE(convex_test_at_radius(F, 0.25).passed);
    EXPECT_FALSE(convex_test_at_radius(F, 0.30).passed);
    EXPECT_TRUE(starlike_test_at_radius(F, 0.65).passed);
    EXPECT_FALSE(starlike_test_at_radius(F, 0.67).passed);
    for (double r : {0.1, 0.5, 0.9, 0.99}) {
        const auto c = convex_test_at_radius(identity_map(), r);
        const auto s = starlike_test_at_radius(identity_map(), r);
        EXPECT_TRUE(c.passed);
        EXPECT_TRUE(s.passed);
        EXPECT_NEAR(c.min_rate, 1.0, 1e-12);
        EXPECT_NEAR(s.min_rate, 1.0, 1e-12);
    }
}

TEST(ReferenceRadius, ClosedFormsAndIdentities)
{
    EXPECT_NEAR(closed_form_F(ClosedFormExpr::C, 0.5, 0.0), 2.0, 1e-14);
    for (auto [r, u] : {std::pair{0.2, 0.3}, std::pair{0.5, -0.5}}) {
        const auto res = identity_check_tangent(r, u);
        EXPECT_LT(res.convex_residual, 1e-5);
        EXPECT_LT(res.starlike_residual, 1e-5);
    }
    const SpecialRadii s = solve_special_radii();
    EXPECT_NEAR(s.r_convex, 0.26794919, 1e-8);
    EXPECT_NEAR(s.r_star, 0.658331, 1e-6);
    EXPECT_NEAR(s.class_starlike_bound, 0.65685, 1e-5);
}

TEST(ReferencePlot, Figures)
{
    // example22 is not starlike on |z| = 0.95
    EXPECT_FALSE(starlike_test_at_radius(make_named({CatalogName::example22}), 0.95).passed);
    const HarmonicMap F = make_named({CatalogName::F});
    EXPECT_TRUE(convex_test_at_radius(F, 2.0 - std::sqrt(3.0) - 1e-9).passed);
    EXPECT_FALSE(convex_test_at_radius(F, 0.5).passed);
    PlotSpec spec;
    spec.radii = {0.3, 0.7};
    spec.samples_per_curve = 64;
    for (const auto& c : sample_curves(identity_map(), spec)) {
        if (c.kind != "circle") continue;
        for (const auto& p : c.points) EXPECT_NEAR(std::abs(p.w), c.param, 1e-12);
    }
}

// Randomised and sweep-style invariants across modules.

#include <hmap/hmap.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hmap;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, int order, double decay = 1.0)
{
    std::normal_distribution<double> d;
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
    double s = 1.0;
    for (auto& x : c) {
        x = cplx(d(rng), d(rng)) * s;
        s *= decay;
    }
    return TruncatedSeries(std::move(c));
}

HarmonicMap random_map(std::mt19937_64& rng, int order)
{
    auto h = random_series(rng, order, 0.5);
    auto g = random_series(rng, order, 0.5);
    std::vector<cplx> a(h.coeffs().begin(), h.coeffs().end()), b(g.coeffs().begin(), g.coeffs().end());
    a[0] = 0.0;
    a[1] = 1.0;
    b[0] = 0.0;
    return {TruncatedSeries(a), TruncatedSeries(b), "random"};
}

double max_diff(const TruncatedSeries& a, const TruncatedSeries& b)
{
    double m = 0.0;
    for (int n = 0; n <= std::min(a.order(), b.order()); ++n) m = std::max(m, std::abs(a[n] - b[n]));
    return m;
}

}  // namespace

TEST(SeriesProperty, DifferentiateIsLinear)
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 20; ++i) {
        const auto a = random_series(rng, 20), b = random_series(rng, 20);
        const cplx s{0.3, -1.2};
        EXPECT_LT(max_diff(differentiate(combine(a, b, SeriesOp::add, s)),
                           combine(differentiate(a), differentiate(b), SeriesOp::add, s)),
                  1e-12);
    }
}

TEST(SeriesProperty, ProductIsAssociative)
{
    std::mt19937_64 rng(22);
    for (int i = 0; i < 20; ++i) {
        const auto a = random_series(rng, 12), b = random_series(rng, 12), c = random_series(rng, 12);
        EXPECT_LT(max_diff(combine(combine(a, b, SeriesOp::mul), c, SeriesOp::mul),
                           combine(a, combine(b, c, SeriesOp::mul), SeriesOp::mul)),
                  1e-11);
    }
}

TEST(SeriesProperty, GeneratorTailBound)
{
    const int N = 64;
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const cplx z = std::polar(0.5 * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
        const double tail = std::pow(std::abs(z), N + 1) / (1.0 - std::abs(z));
        EXPECT_LE(std::abs(evaluate(make_generator(Generator::half_plane_l, N), z) - z / (1.0 - z)), tail + 1e-15);
        EXPECT_LE(std::abs(evaluate(make_generator(Generator::koebe_k, N), z) - z / ((1.0 - z) * (1.0 - z))),
                  (N + 1) * tail / (1.0 - std::abs(z)) + 1e-15);
    }
}

TEST(MapProperty, JacobianIdentityAtRandomPoints)
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const HarmonicMap f = random_map(rng, 10);
        const cplx z = std::polar(0.9 * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
        const MapJet j = f.jet(z);
        if (std::abs(j.h.d1) < 1e-3) continue;
        const double expect = std::norm(j.h.d1) * (1.0 - std::norm(dilatation(f, z)));
        EXPECT_NEAR(jacobian(f, z), expect, 1e-10 * std::max(1.0, std::norm(j.h.d1)));
    }
}

TEST(MapProperty, AngularDerivativesOnGridForCatalog)
{
    std::vector<HarmonicMap> maps{make_named({CatalogName::F}), make_named({CatalogName::L}),
                                  make_named({CatalogName::f_alpha, cplx{0.0, 1.0}}),
                                  make_named({CatalogName::g_alpha, cplx{0.5, 0.5}}),
                                  make_named({CatalogName::example21}), make_named({CatalogName::example22})};
    for (const auto& f : maps) {
        double worst1 = 0.0, worst2 = 0.0;
        for (int i = 1; i <= 16; ++i) {
            const double r = 0.05 * i;  // up to 0.8
            for (int k = 0; k < 16; ++k) {
                const double t = 2.0 * std::numbers::pi * k / 16 + 0.1;
                auto curve = [&](double s) { return evaluate_f(f, std::polar(r, s)); };
                const AngularDerivatives d = angular_derivatives(f, r, t);
                const double eps = 1e-5;
                const cplx fd1 = (curve(t + eps) - curve(t - eps)) / (2.0 * eps);
                const double hh = 1e-3;
                const cplx fd2 = (-curve(t + 2 * hh) + 16.0 * curve(t + hh) - 30.0 * curve(t) +
                                  16.0 * curve(t - hh) - curve(t - 2 * hh)) /
                                 (12.0 * hh * hh);
                worst1 = std::max(worst1, std::abs(d.d1 - fd1) / std::max(1.0, std::abs(d.d1)));
                worst2 = std::max(worst2, std::abs(d.d2 - fd2) / std::max(1.0, std::abs(d.d2)));
            }
        }
        EXPECT_LT(worst1, 1e-6) << f.label();
        EXPECT_LT(worst2, 1e-6) << f.label();
    }
}

TEST(MapProperty, ExactAndSeriesAgreeInHalfDisk)
{
    for (const HarmonicMap& f : {make_named({CatalogName::F}), make_named({CatalogName::example22}),
                                 hadamard(make_named({CatalogName::L}), make_named({CatalogName::F})).product}) {
        ASSERT_TRUE(f.has_exact());
        for (int k = 0; k < 32; ++k) {
            const cplx z = std::polar(0.5 * (k % 8 + 1) / 8.0, 0.7 * k);
            const MapJet s = f.series_jet(z);
            const cplx fs = s.h.value + std::conj(s.g.value);
            EXPECT_LT(std::abs(evaluate_f(f, z) - fs), 1e-8) << f.label();
        }
    }
}

TEST(MapProperty, JacobianSignConstantForSensePreservingMaps)
{
    for (const auto& [f, a] : detail::sample_M_alpha_members()) {
        if (std::abs(a) >= 1.0) continue;  // |w| = |a z| < 1 strictly on the closed grid
        bool pos = true;
        for_each_grid_node(0.99, {32, 64}, [&](double, double, cplx z) { pos = pos && jacobian(f, z) > 0.0; });
        EXPECT_TRUE(pos) << f.label();
    }
}

TEST(CatalogProperty, ShearRoundtrip)
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    const AnalyticProfile phi = half_plane_profile(48);
    for (int i = 0; i < 6; ++i) {
        const TruncatedSeries w = monomial(std::polar(0.9, u(rng)), 1 + i % 3, 48);
        const HarmonicMap hs = shear_horizontal(phi, w);
        const HarmonicMap vs = shear_vertical(phi, w);
        for (int n = 0; n <= 48; ++n) {
            EXPECT_LT(std::abs(hs.h()[n] - hs.g()[n] - phi.series[n]), 1e-12);
            EXPECT_LT(std::abs(vs.h()[n] + vs.g()[n] - phi.series[n]), 1e-12);
        }
        for (cplx z : {cplx{0.2, 0.3}, cplx{-0.4, -0.1}}) {
            EXPECT_LT(std::abs(dilatation(hs, z) - evaluate(w, z)), 1e-9);
            EXPECT_LT(std::abs(dilatation(vs, z) - evaluate(w, z)), 1e-9);
        }
    }
}

TEST(CatalogProperty, FIsHorizontalShearAndF1)
{
    const HarmonicMap F = make_named({CatalogName::F});
    const HarmonicMap f1 = make_named({CatalogName::f_alpha, 1.0});
    const HarmonicMap s = shear_horizontal(half_plane_profile(), monomial(1.0, 1, kDefaultOrder));
    for (int n = 0; n <= F.order(); ++n) {
        EXPECT_EQ(F.h()[n], f1.h()[n]);
        EXPECT_EQ(F.g()[n], f1.g()[n]);
        EXPECT_LT(std::abs(F.h()[n] - s.h()[n]), 1e-9 * std::max(1.0, std::abs(F.h()[n])));
        EXPECT_LT(std::abs(F.g()[n] - s.g()[n]), 1e-9 * std::max(1.0, std::abs(F.g()[n])));
    }
}

TEST(ClassifierProperty, OrderDecreasesWithCoefficientMass)
{
    // nested sets: scaling a fixed tail by t grows both weighted sums
    double prev1 = 1.0, prev2 = 1.0;
    for (int i = 0; i <= 20; ++i) {
        const double t = i / 20.0;
        const HarmonicMap f(TruncatedSeries({0.0, 1.0, 0.1 * t, cplx(0.0, 0.05) * t}),
                            TruncatedSeries({0.0, 0.0, 0.08 * t, 0.0}), "nested");
        const auto r = lemma13_orders(f);
        ASSERT_TRUE(r.first.order_starlike);
        EXPECT_LE(*r.first.order_starlike, prev1 + 1e-15);
        prev1 = *r.first.order_starlike;
        if (r.second.order_convex) {
            EXPECT_LE(*r.second.order_convex, prev2 + 1e-15);
            prev2 = *r.second.order_convex;
        }
    }
}

TEST(ClassifierProperty, QuadraticConditionVersusCoefficientSums)
{
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int compared = 0;
    for (int i = 0; i < 200; ++i) {
        std::vector<cplx> a(6, cplx{});
        a[1] = 1.0;
        for (int n = 2; n <= 5; ++n) a[n] = std::polar(u(rng) * 0.25 / (n * n), 6.28 * u(rng));
        const TruncatedSeries h(a);
        const auto t2 = theorem2_classify(h, 0.0, 2);
        if (!t2.passed) continue;
        const auto l13 = lemma13_orders(HarmonicMap(h, TruncatedSeries(5), "h"));
        ASSERT_TRUE(l13.first.passed);
        ASSERT_TRUE(l13.first.order_starlike && t2.order_starlike);
        EXPECT_GE(*l13.first.order_starlike, *t2.order_starlike - 1e-15);
        ++compared;
    }
    EXPECT_GT(compared, 50);
}

TEST(ConvolutionProperty, CommutativeAndAssociative)
{
    std::mt19937_64 rng(61);
    for (int i = 0; i < 10; ++i) {
        const HarmonicMap a = random_map(rng, 12), b = random_map(rng, 12), c = random_map(rng, 12);
        const HarmonicMap ab_c = hadamard(hadamard(a, b).product, c).product;
        const HarmonicMap a_bc = hadamard(a, hadamard(b, c).product).product;
        const HarmonicMap ba = hadamard(b, a).product;
        const HarmonicMap ab = hadamard(a, b).product;
        EXPECT_LT(max_diff(ab_c.h(), a_bc.h()), 1e-12);
        EXPECT_LT(max_diff(ab_c.g(), a_bc.g()), 1e-12);
        EXPECT_LT(max_diff(ab.h(), ba.h()), 1e-15);
        EXPECT_LT(max_diff(ab.g(), ba.g()), 1e-15);
    }
}

TEST(ConvolutionProperty, SquareOfFAlphaBreaksCoefficientBound)
{
    const HarmonicMap fa = make_named({CatalogName::f_alpha, cplx{0.0, 0.5}});
    const HarmonicMap sq = hadamard(fa, fa).product;
    EXPECT_EQ(sq.h()[3], cplx{4.0});
    EXPECT_FALSE(coefficient_bounds(sq, cplx{0.0, 0.5}).coefficients_passed);
}

TEST(ConvolutionProperty, LStarFInjectivitySamplerFindsCollision)
{
    const HarmonicMap LF = hadamard(make_named({CatalogName::L}), make_named({CatalogName::F})).product;
    const auto cross = circle_self_intersection(LF, 0.9);
    ASSERT_TRUE(cross);
    const auto rep = injectivity_sample_check(LF, 0.9, 200, 0.05,
                                              {std::polar(0.9, cross->theta1), std::polar(0.9, cross->theta2)});
    EXPECT_LT(rep.min_image_distance, 0.05 * std::abs(cross->image));
    EXPECT_TRUE(sense_preserving_check(LF, 0.99).passed);
}

TEST(RadiusProperty, PSignFlipsAtConvexityRadius)
{
    auto min_p = [](double r) {
        double m = 1e9;
        for (int k = 0; k <= 2000; ++k) m = std::min(m, polynomial_p(r, -1.0 + 2.0 * k / 2000));
        return m;
    };
    const double rc = 2.0 - std::sqrt(3.0);
    EXPECT_GE(min_p(rc - 1e-3), 0.0);
    EXPECT_LT(min_p(rc + 1e-3), 0.0);
}

TEST(RadiusProperty, QSignFlipsAtStarlikenessRadius)
{
    auto min_q = [](double r) {
        double m = 1e9;
        for (int k = 0; k <= 20000; ++k) m = std::min(m, polynomial_q(r, -1.0 + 2.0 * k / 20000));
        return m;
    };
    const double r0 = std::sqrt((37.0 - 8.0 * std::sqrt(10.0)) / 3.0) / 3.0;
    EXPECT_GE(min_q(r0 - 1e-3), 0.0);
    EXPECT_LT(min_q(r0 + 1e-3), 0.0);
}

TEST(CliProperty, CsvByteIdenticalAcrossRuns)
{
    const auto dir = std::filesystem::temp_directory_path() / "hmap_tests";
    std::filesystem::create_directories(dir);
    std::string contents[2];
    for (int i = 0; i < 2; ++i) {
        const auto p = dir / ("same" + std::to_string(i) + ".csv");
        const std::string ps = p.string();
        const char* argv[] = {"hmap", "plot", "--function", "conv(L,F)", "--radii", "0.3,0.8", "--out", ps.c_str()};
        std::ostringstream out, err;
        ASSERT_EQ(cli::run(8, argv, out, err), 0);
        std::ifstream is(p, std::ios::binary);
        contents[i].assign(std::istreambuf_iterator<char>(is), {});
    }
    EXPECT_FALSE(contents[0].empty());
    EXPECT_EQ(contents[0], contents[1]);
}

TEST(CliProperty, VerifyExitMatchesRecords)
{
    const auto dir = std::filesystem::temp_directory_path() / "hmap_tests";
    std::filesystem::create_directories(dir);
    for (const char* suite : {"coefficients", "radii", "convolution", "bounds"}) {
        const std::string p = (dir / (std::string(suite) + ".json")).string();
        const char* argv[] = {"hmap", "verify", "--suite", suite, "--out", p.c_str()};
        std::ostringstream out, err;
        const int code = cli::run(6, argv, out, err);
        std::ifstream is(p);
        const json j = json::parse(is);
        bool all = true;
        for (const auto& r : j["records"]) all = all && r["passed"].get<bool>();
        EXPECT_EQ(code, all ? 0 : 1) << suite;
        EXPECT_EQ(j["passed"].get<bool>(), all);
    }
}

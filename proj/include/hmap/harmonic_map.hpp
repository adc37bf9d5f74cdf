#pragma once

// f = h + conj(g) on the unit disk: evaluation, dilatation, Jacobian,
// angular derivatives and sampled sanity checks.

#include <hmap/series.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hmap {

/// Jets of both analytic parts at one point.
struct MapJet {
    AnalyticJet h;
    AnalyticJet g;
};

using JetEvaluator = std::function<MapJet(cplx)>;

/// Coefficient laws for both parts, valid for every n >= 1.
struct CoefficientLaws {
    CoefficientLaw h;
    CoefficientLaw g;
};

/// Above this modulus the closed-form evaluator (when present) replaces the
/// truncated series.
inline constexpr double kExactSwitchRadius = 0.5;

/// Tolerance for agreement between closed forms and series at construction.
inline constexpr double kExactAgreementTol = 1e-8;

class singular_point_error : public std::runtime_error {
public:
    singular_point_error(const std::string& what, cplx z) : std::runtime_error(what), z_(z) {}
    cplx where() const noexcept { return z_; }

private:
    cplx z_;
};

class HarmonicMap {
public:
    HarmonicMap(TruncatedSeries h, TruncatedSeries g, std::string label = {},
                JetEvaluator exact = {}, std::optional<CoefficientLaws> laws = std::nullopt)
        : h_(std::move(h)), g_(std::move(g)), label_(std::move(label)), exact_(std::move(exact)),
          laws_(std::move(laws))
    {
        const int n = std::min(h_.order(), g_.order());
        if (h_.order() != n) h_ = h_.truncated(n);
        if (g_.order() != n) g_ = g_.truncated(n);
        if (std::abs(h_[0]) > 1e-12 || std::abs(h_[1] - 1.0) > 1e-12 || std::abs(g_[0]) > 1e-12) {
            throw std::invalid_argument("HarmonicMap '" + label_ +
                                        "': expected h(0) = g(0) = 0 and h'(0) = 1");
        }
        if (!exact_ && laws_) {
            exact_ = [laws = *laws_](cplx z) { return MapJet{laws.h.jet(z), laws.g.jet(z)}; };
        }
        if (exact_) check_exact_agreement();
    }

    const TruncatedSeries& h() const noexcept { return h_; }
    const TruncatedSeries& g() const noexcept { return g_; }
    const std::string& label() const noexcept { return label_; }
    int order() const noexcept { return h_.order(); }
    bool has_exact() const noexcept { return static_cast<bool>(exact_); }
    const JetEvaluator& exact() const noexcept { return exact_; }
    const std::optional<CoefficientLaws>& laws() const noexcept { return laws_; }

    MapJet series_jet(cplx z) const { return {evaluate_jet(h_, z), evaluate_jet(g_, z)}; }

    MapJet jet(cplx z) const
    {
        require_inside_disk(z, "HarmonicMap::jet");
        if (exact_ && std::abs(z) > kExactSwitchRadius) return exact_(z);
        return series_jet(z);
    }

    HarmonicMap relabeled(std::string label) const
    {
        HarmonicMap copy = *this;
        copy.label_ = std::move(label);
        return copy;
    }

private:
    // Sample radius shrinks for short truncations so the series tail stays
    // below the agreement tolerance even for O(n^3) second-derivative terms.
    void check_exact_agreement() const
    {
        const double n1 = static_cast<double>(order() + 1);
        const double rho = std::min(0.5, std::pow(1e-11 / (n1 * n1 * n1), 1.0 / n1));
        std::mt19937_64 rng(0x5eedULL);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        auto close = [](cplx a, cplx b) {
            return std::abs(a - b) <= kExactAgreementTol * std::max(1.0, std::abs(b));
        };
        for (int i = 0; i < 20; ++i) {
            const cplx z = std::polar(rho * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
            const MapJet e = exact_(z);
            const MapJet s = series_jet(z);
            const bool ok = close(e.h.value, s.h.value) && close(e.h.d1, s.h.d1) &&
                            close(e.h.d2, s.h.d2) && close(e.g.value, s.g.value) &&
                            close(e.g.d1, s.g.d1) && close(e.g.d2, s.g.d2);
            if (!ok) {
                throw std::invalid_argument("HarmonicMap '" + label_ +
                                            "': closed form disagrees with series");
            }
        }
    }

    TruncatedSeries h_;
    TruncatedSeries g_;
    std::string label_;
    JetEvaluator exact_;
    std::optional<CoefficientLaws> laws_;
};

// ─── Pointwise quantities ───────────────────────────────────────────────────

inline cplx evaluate_f(const HarmonicMap& f, cplx z)
{
    const MapJet j = f.jet(z);
    return j.h.value + std::conj(j.g.value);
}

inline cplx dilatation(const HarmonicMap& f, cplx z)
{
    const MapJet j = f.jet(z);
    if (std::abs(j.h.d1) < 1e-14) {
        throw singular_point_error("dilatation: h'(z) vanishes", z);
    }
    return j.g.d1 / j.h.d1;
}

inline double jacobian(const HarmonicMap& f, cplx z)
{
    const MapJet j = f.jet(z);
    return std::norm(j.h.d1) - std::norm(j.g.d1);
}

struct AngularDerivatives {
    cplx d1;  // df/dtheta
    cplx d2;  // d^2f/dtheta^2
};

/// Derivatives of theta -> f(r e^{i theta}).
inline AngularDerivatives angular_derivatives(const HarmonicMap& f, double r, double theta)
{
    if (!(r > 0.0 && r < 1.0)) {
        throw std::domain_error("angular_derivatives: r must lie in (0, 1)");
    }
    const cplx z = std::polar(r, theta);
    const MapJet j = f.jet(z);
    const cplx i{0.0, 1.0};
    const cplx zh1 = z * j.h.d1;
    const cplx zg1 = z * j.g.d1;
    const cplx z2h2 = z * z * j.h.d2;
    const cplx z2g2 = z * z * j.g.d2;
    return {i * (zh1 - std::conj(zg1)), -(zh1 + z2h2) - std::conj(zg1 + z2g2)};
}

// ─── Sampled checks ─────────────────────────────────────────────────────────

struct PolarGrid {
    int n_r = 64;
    int n_theta = 256;
};

/// Nodes r_j = r_max * j / n_r (j = 1..n_r), theta_k = 2 pi k / n_theta.
template <class Visit>
void for_each_grid_node(double r_max, PolarGrid grid, Visit&& visit)
{
    for (int jr = 1; jr <= grid.n_r; ++jr) {
        const double r = r_max * jr / grid.n_r;
        for (int k = 0; k < grid.n_theta; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / grid.n_theta;
            visit(r, theta, std::polar(r, theta));
        }
    }
}

struct GridViolation {
    double r;
    double theta;
    double value;
};

struct SensePreservingReport {
    bool passed = true;
    double min_jacobian = std::numeric_limits<double>::infinity();
    std::optional<GridViolation> first_violation;
    double r_max = 0.0;
    PolarGrid grid;
};

inline SensePreservingReport sense_preserving_check(const HarmonicMap& f, double r_max,
                                                    PolarGrid grid = {})
{
    if (!(r_max > 0.0 && r_max < 1.0)) {
        throw std::domain_error("sense_preserving_check: r_max must lie in (0, 1)");
    }
    if (grid.n_r < 8 || grid.n_theta < 8) {
        throw std::invalid_argument("sense_preserving_check: grid dimensions must be >= 8");
    }
    SensePreservingReport rep;
    rep.r_max = r_max;
    rep.grid = grid;
    for_each_grid_node(r_max, grid, [&](double r, double theta, cplx z) {
        const double j = jacobian(f, z);
        rep.min_jacobian = std::min(rep.min_jacobian, j);
        if (!(j > 0.0) && !rep.first_violation) {
            rep.passed = false;
            rep.first_violation = GridViolation{r, theta, j};
        }
    });
    return rep;
}

struct InjectivityReport {
    int n_points = 0;
    double delta = 0.0;
    double min_image_distance = std::numeric_limits<double>::infinity();
    cplx z1{}, z2{};
    bool collision = false;  // min_image_distance below collision_tol
};

inline constexpr double kCollisionTol = 1e-9;

/// Sunflower-pattern sample of |z| <= r_max plus optional extra points;
/// reports the closest pair of images among preimages at least delta apart.
inline InjectivityReport injectivity_sample_check(const HarmonicMap& f, double r_max, int n_samples,
                                                  double delta = 0.05,
                                                  const std::vector<cplx>& extra_points = {})
{
    if (n_samples < 1 || n_samples > 2000) {
        throw std::invalid_argument("injectivity_sample_check: n_samples must lie in [1, 2000]");
    }
    if (!(r_max > 0.0 && r_max < 1.0)) {
        throw std::domain_error("injectivity_sample_check: r_max must lie in (0, 1)");
    }
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<cplx> pts;
    pts.reserve(static_cast<std::size_t>(n_samples) + extra_points.size());
    for (int k = 0; k < n_samples; ++k) {
        pts.push_back(std::polar(r_max * std::sqrt((k + 0.5) / n_samples), golden * k));
    }
    pts.insert(pts.end(), extra_points.begin(), extra_points.end());

    std::vector<cplx> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) img[i] = evaluate_f(f, pts[i]);

    InjectivityReport rep;
    rep.n_points = static_cast<int>(pts.size());
    rep.delta = delta;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (std::abs(pts[i] - pts[j]) < delta) continue;
            const double d = std::abs(img[i] - img[j]);
            if (d < rep.min_image_distance) {
                rep.min_image_distance = d;
                rep.z1 = pts[i];
                rep.z2 = pts[j];
            }
        }
    }
    rep.collision = rep.min_image_distance < kCollisionTol;
    return rep;
}

struct CurveCrossing {
    double theta1;
    double theta2;
    cplx image;
};

/// First transversal self-crossing of the polygon through f(r e^{i theta_k}).
/// A crossing means two distinct points of |z| = r share an image, so f is
/// not univalent.
inline std::optional<CurveCrossing> circle_self_intersection(const HarmonicMap& f, double r,
                                                             int n_theta = 1024)
{
    std::vector<cplx> p(static_cast<std::size_t>(n_theta));
    for (int k = 0; k < n_theta; ++k) {
        p[k] = evaluate_f(f, std::polar(r, 2.0 * std::numbers::pi * k / n_theta));
    }
    auto cross = [](cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); };
    for (int i = 0; i < n_theta; ++i) {
        const cplx a0 = p[i];
        const cplx a1 = p[(i + 1) % n_theta];
        for (int j = i + 2; j < n_theta; ++j) {
            if (i == 0 && j == n_theta - 1) continue;
            const cplx b0 = p[j];
            const cplx b1 = p[(j + 1) % n_theta];
            const cplx da = a1 - a0;
            const cplx db = b1 - b0;
            const double den = cross(da, db);
            if (den == 0.0) continue;
            const double s = cross(b0 - a0, db) / den;
            const double t = cross(b0 - a0, da) / den;
            if (s > 0.0 && s < 1.0 && t > 0.0 && t < 1.0) {
                const double step = 2.0 * std::numbers::pi / n_theta;
                return CurveCrossing{(i + s) * step, (j + t) * step, a0 + s * da};
            }
        }
    }
    return std::nullopt;
}

}  // namespace hmap

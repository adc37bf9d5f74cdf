#pragma once

// Harmonic Hadamard products and the dilatation of F * f for
// right-half-plane maps f with monomial dilatation.

#include <hmap/catalog.hpp>
#include <hmap/harmonic_map.hpp>
#include <hmap/series.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace hmap {

struct ConvolutionResult {
    HarmonicMap product;
    std::string left_label;
    std::string right_label;
};

/// f * F = h*H + conj(g*G). When both factors carry coefficient laws the
/// product carries their product law, and with it a closed form.
inline ConvolutionResult hadamard(const HarmonicMap& f, const HarmonicMap& F)
{
    std::optional<CoefficientLaws> laws;
    if (f.laws() && F.laws()) {
        laws = CoefficientLaws{f.laws()->h * F.laws()->h, f.laws()->g * F.laws()->g};
    }
    std::string label = "conv(" + f.label() + "," + F.label() + ")";
    HarmonicMap p(hadamard_product(f.h(), F.h()), hadamard_product(f.g(), F.g()), label, {},
                  laws);
    return {std::move(p), f.label(), F.label()};
}

/// (beta conj(phi) + phi) * f = phi*h + conj(conj(beta) (phi*g)).
inline HarmonicMap convex_combination_convolve(const TruncatedSeries& phi, cplx beta,
                                               const HarmonicMap& f)
{
    if (std::abs(phi[0]) > 1e-12 || std::abs(phi[1] - 1.0) > 1e-12) {
        throw std::invalid_argument("convex_combination_convolve: phi must be normalized");
    }
    if (!(std::abs(beta) <= 1.0 + 1e-15)) {
        throw std::invalid_argument("convex_combination_convolve: |beta| must be <= 1");
    }
    return HarmonicMap(hadamard_product(phi, f.h()),
                       scaled(hadamard_product(phi, f.g()), std::conj(beta)),
                       "phi_combination*" + f.label());
}

/// w(z) = e^{i theta} z^n
struct MonomialDilatation {
    int n = 1;
    double theta = 0.0;

    AnalyticJet at(cplx z) const
    {
        const cplx c = std::polar(1.0, theta);
        const cplx zn1 = n >= 1 ? std::pow(z, n - 1) : cplx{};
        return {c * zn1 * z, c * static_cast<double>(n) * zn1, {}};
    }

    TruncatedSeries series(int order) const { return monomial(std::polar(1.0, theta), n, order); }
};

/// Closed-form dilatation of F * f where h + g = z/(1-z) and g'/h' = w:
///   z (w^2 + [w - w'z/2] + w'/2) / (1 + [w - w'z/2] + w'z^2/2)
inline cplx tilde_dilatation(cplx w, cplx dw, cplx z)
{
    const cplx mid = w - 0.5 * dw * z;
    const cplx den = 1.0 + mid + 0.5 * dw * z * z;
    if (std::abs(den) < 1e-14) throw singular_point_error("tilde_dilatation: denominator vanishes", z);
    return z * (w * w + mid + 0.5 * dw) / den;
}

inline cplx tilde_dilatation(const MonomialDilatation& w, cplx z)
{
    const AnalyticJet j = w.at(z);
    return tilde_dilatation(j.value, j.d1, z);
}

/// The right-half-plane map with h + g = z/(1-z) and dilatation w.
inline HarmonicMap half_plane_shear(const MonomialDilatation& w, int order)
{
    return shear_vertical(half_plane_profile(order), w.series(order), "half_plane_shear");
}

struct TildeDilatationReport {
    int n = 1;
    double theta = 0.0;
    double r_max = 0.999;
    PolarGrid grid;
    double max_abs = 0.0;
    cplx argmax{};
    bool passed = false;  // max |w~| < 1
    double crosscheck_r_max = 0.9;
    double crosscheck_residual = 0.0;
    bool crosscheck_passed = false;
};

inline constexpr double kTildeCrosscheckTol = 1e-6;
inline constexpr int kTildeCrosscheckOrder = 512;

/// |w~| < 1 on the grid, plus the closed form against the dilatation of the
/// truncated product series F * f on r <= crosscheck_r_max.
inline TildeDilatationReport tilde_dilatation_check(int n, double theta, PolarGrid grid = {64, 256},
                                                    double r_max = 0.999,
                                                    double crosscheck_r_max = 0.9)
{
    if (n != 1 && n != 2) throw std::invalid_argument("tilde_dilatation_check: n must be 1 or 2");
    const MonomialDilatation w{n, theta};
    TildeDilatationReport rep;
    rep.n = n;
    rep.theta = theta;
    rep.r_max = r_max;
    rep.grid = grid;
    rep.crosscheck_r_max = crosscheck_r_max;
    for_each_grid_node(r_max, grid, [&](double, double, cplx z) {
        const double a = std::abs(tilde_dilatation(w, z));
        if (a > rep.max_abs) {
            rep.max_abs = a;
            rep.argmax = z;
        }
    });
    rep.passed = rep.max_abs < 1.0;

    const int order = kTildeCrosscheckOrder;
    const HarmonicMap F = make_named({CatalogName::F}, order);
    const HarmonicMap f = half_plane_shear(w, order);
    const HarmonicMap prod = hadamard(F, f).product;
    for_each_grid_node(crosscheck_r_max, PolarGrid{16, 64}, [&](double, double, cplx z) {
        const double d = std::abs(dilatation(prod, z) - tilde_dilatation(w, z));
        rep.crosscheck_residual = std::max(rep.crosscheck_residual, d);
    });
    rep.crosscheck_passed = rep.crosscheck_residual <= kTildeCrosscheckTol;
    return rep;
}

}  // namespace hmap

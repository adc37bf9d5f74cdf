#pragma once

// Images of concentric circles and radial segments, written as CSV rows or
// SVG polylines. Output depends only on the map and the PlotSpec.

#include <hmap/harmonic_map.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hmap {

enum class PlotFormat { svg, csv };

struct PlotSpec {
    std::vector<double> radii;  // drawn explicitly; the largest sets the extent
    int n_rays = 16;
    int n_circles = 8;
    int samples_per_curve = 256;
    PlotFormat format = PlotFormat::svg;
};

struct CurvePoint {
    double t;  // theta on circles, radius on rays
    cplx w;
};

struct Curve {
    int id = 0;
    std::string kind;  // "circle" or "ray"
    double param = 0.0;  // radius of a circle, angle of a ray
    std::vector<CurvePoint> points;
};

/// Up to 12 significant digits, shortest round-trip form, locale independent.
inline std::string format_real(double v)
{
    if (v == 0.0) return "0";  // also folds -0
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    int digits = 0;
    bool leading = true;
    for (const char* p = buf; p != res.ptr && *p != 'e'; ++p) {
        if (*p < '0' || *p > '9') continue;
        if (leading && *p == '0') continue;
        leading = false;
        ++digits;
    }
    if (digits > 12) res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

inline void validate(const PlotSpec& spec)
{
    if (spec.radii.empty()) throw std::invalid_argument("plot: at least one radius is required");
    for (double r : spec.radii) {
        if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("plot: radii must lie in (0, 1)");
    }
    if (spec.samples_per_curve < 64) throw std::invalid_argument("plot: samples_per_curve must be >= 64");
    if (spec.n_rays < 0 || spec.n_circles < 0) throw std::invalid_argument("plot: negative curve count");
}

/// Circle radii: the requested ones plus n_circles equally spaced up to the
/// largest, sorted and de-duplicated.
inline std::vector<double> circle_radii(const PlotSpec& spec)
{
    const double r_max = *std::max_element(spec.radii.begin(), spec.radii.end());
    std::vector<double> out = spec.radii;
    for (int k = 1; k <= spec.n_circles; ++k) out.push_back(r_max * k / spec.n_circles);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-12; }),
              out.end());
    return out;
}

inline std::vector<Curve> sample_curves(const HarmonicMap& f, const PlotSpec& spec)
{
    validate(spec);
    const double r_max = *std::max_element(spec.radii.begin(), spec.radii.end());
    const int m = spec.samples_per_curve;
    std::vector<Curve> curves;
    int id = 0;
    for (double r : circle_radii(spec)) {
        Curve c{id++, "circle", r, {}};
        c.points.reserve(static_cast<std::size_t>(m) + 1);
        for (int j = 0; j <= m; ++j) {
            const double t = 2.0 * std::numbers::pi * (j % m) / m;
            c.points.push_back({j == m ? 2.0 * std::numbers::pi : t, evaluate_f(f, std::polar(r, t))});
        }
        curves.push_back(std::move(c));
    }
    for (int k = 0; k < spec.n_rays; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / spec.n_rays;
        Curve c{id++, "ray", phi, {}};
        c.points.reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            const double t = r_max * j / (m - 1);
            c.points.push_back({t, evaluate_f(f, std::polar(t, phi))});
        }
        curves.push_back(std::move(c));
    }
    return curves;
}

inline void write_csv(std::ostream& os, const std::vector<Curve>& curves)
{
    os << "curve_id,kind,param,t,u,v\n";
    for (const auto& c : curves) {
        const std::string head = std::to_string(c.id) + "," + c.kind + "," + format_real(c.param) + ",";
        for (const auto& p : c.points) {
            os << head << format_real(p.t) << ',' << format_real(p.w.real()) << ','
               << format_real(p.w.imag()) << '\n';
        }
    }
}

inline void write_svg(std::ostream& os, const std::vector<Curve>& curves, const std::string& title = {})
{
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& c : curves) {
        for (const auto& p : c.points) {
            xmin = std::min(xmin, p.w.real());
            xmax = std::max(xmax, p.w.real());
            ymin = std::min(ymin, p.w.imag());
            ymax = std::max(ymax, p.w.imag());
        }
    }
    const double w = std::max(xmax - xmin, 1e-9), h = std::max(ymax - ymin, 1e-9);
    const double mx = 0.05 * w, my = 0.05 * h;
    const double vx = xmin - mx, vy = -(ymax + my), vw = w + 2 * mx, vh = h + 2 * my;
    const double stroke = 0.002 * std::max(vw, vh);

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\""
       << format_real(vx) << ' ' << format_real(vy) << ' ' << format_real(vw) << ' '
       << format_real(vh) << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
    if (!title.empty()) os << "  <title>" << title << "</title>\n";
    for (const auto& c : curves) {
        os << "  <polyline id=\"curve" << c.id << "\" class=\"" << c.kind
           << "\" fill=\"none\" stroke=\"" << (c.kind == "circle" ? "#1f4e9c" : "#b0361e")
           << "\" stroke-width=\"" << format_real(stroke) << "\" points=\"";
        for (std::size_t i = 0; i < c.points.size(); ++i) {
            if (i) os << ' ';
            // SVG y grows downward
            os << format_real(c.points[i].w.real()) << ',' << format_real(-c.points[i].w.imag());
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
}

}  // namespace hmap

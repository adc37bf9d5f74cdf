#pragma once

// Command-line dispatch: plot, classify, radius, convolve, verify.
// Exit codes: 0 success, 1 a check failed, 2 usage error.

#include <hmap/catalog.hpp>
#include <hmap/classifiers.hpp>
#include <hmap/convolution.hpp>
#include <hmap/expression.hpp>
#include <hmap/plot.hpp>
#include <hmap/radius.hpp>
#include <hmap/report_json.hpp>
#include <hmap/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace hmap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void write_file(const std::string& path, const std::string& content)
{
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot open '" + path + "' for writing");
    os << content;
    if (!os) throw io_error("write to '" + path + "' failed");
}

/// Writes to `path`, or to `out` when path is empty or "-".
inline void emit(const std::string& path, const std::string& content, std::ostream& out)
{
    if (path.empty() || path == "-") out << content;
    else write_file(path, content);
}

struct PlotArgs {
    std::string function;
    std::vector<double> radii;
    int rays = 16;
    int circles = 8;
    int samples = 256;
    std::string format;
    std::string out;
};

struct ClassifyArgs {
    std::string function;
    std::string check;
    std::string alpha;
    int power = 2;
    double r_max = 0.99;
    std::string out;
};

struct RadiusArgs {
    std::string function;
    std::string kind;
    double tol = 1e-6;
    int n_theta = kDefaultThetaGrid;
    std::string out;
};

struct ConvolveArgs {
    std::string left;
    std::string right;
    std::string emit = "coeffs";
    std::string out;
};

struct VerifyArgs {
    std::string suite = "all";
    std::string out = "verification.json";
};

inline int run_plot(const PlotArgs& a, int order, std::ostream& out)
{
    const ParsedFunction pf = parse_function(a.function, order);
    PlotSpec spec;
    spec.radii = a.radii.empty() ? std::vector<double>{0.9} : a.radii;
    spec.n_rays = a.rays;
    spec.n_circles = a.circles;
    spec.samples_per_curve = a.samples;
    std::string fmt = a.format;
    if (fmt.empty()) fmt = a.out.ends_with(".csv") ? "csv" : "svg";
    spec.format = fmt == "csv" ? PlotFormat::csv : PlotFormat::svg;

    const auto curves = sample_curves(pf.map, spec);
    std::ostringstream body;
    if (spec.format == PlotFormat::csv) write_csv(body, curves);
    else write_svg(body, curves, pf.map.label());
    write_file(a.out, body.str());
    out << "plot: " << curves.size() << " curves of " << pf.map.label() << " -> " << a.out << "\n";
    return kExitOk;
}

inline int run_classify(const ClassifyArgs& a, int order, std::ostream& out)
{
    const ParsedFunction pf = parse_function(a.function, order);
    const HarmonicMap& f = pf.map;
    const cplx alpha = a.alpha.empty() ? pf.alpha.value_or(cplx{}) : parse_complex(a.alpha);

    json j;
    bool passed = false;
    if (a.check == "lemma13") {
        const auto r = lemma13_orders(f);
        j = {{"first", to_json(r.first)}, {"second", to_json(r.second)}};
        passed = r.first.passed || r.second.passed;
    } else if (a.check == "theorem2") {
        if (std::abs(f.g()[1]) > 1e-12 || m_alpha_relation_residual(f, alpha) > kRelationTol) {
            out << "note: co-analytic part does not satisfy g' = alpha z h'; classifying h only\n";
        }
        const auto r = theorem2_classify(f.h(), alpha, a.power);
        j = to_json(r);
        passed = r.passed;
    } else if (a.check == "m-alpha") {
        const auto r = m_alpha_check(f, alpha, a.r_max);
        j = to_json(r);
        passed = r.passed();
    } else if (a.check == "bounds") {
        const auto r = thm31_bounds_check(f, alpha, 10000);
        j = to_json(r);
        passed = r.passed();
    } else if (a.check == "area") {
        const double s = area_series(f, alpha);
        const double lower = std::numbers::pi * (1.0 - 0.5 * std::norm(alpha));
        passed = s >= lower - 1e-9;
        j = {{"condition_name", "area >= pi(1-|alpha|^2/2)"}, {"condition_value", s},
             {"threshold", lower}, {"passed", passed}, {"orders", nullptr},
             {"truncation_order", f.order()}, {"grid", nullptr}};
    } else if (a.check == "sense") {
        const auto r = sense_preserving_check(f, a.r_max);
        j = to_json(r);
        passed = r.passed;
    } else if (a.check == "injectivity") {
        const auto r = injectivity_sample_check(f, a.r_max, 1500);
        j = to_json(r);
        const auto cross = circle_self_intersection(f, a.r_max);
        j["circle_self_intersection"] =
            cross ? json{{"theta1", cross->theta1}, {"theta2", cross->theta2},
                         {"image", complex_json(cross->image)}}
                  : json(nullptr);
        passed = !r.collision && !cross;
        j["passed"] = passed;
    } else if (a.check == "kaplan") {
        json arcs = json::array();
        double worst = std::numeric_limits<double>::infinity();
        for (cplx e : unimodular_sweep(16)) {
            const auto arc = kaplan_worst_subarc(f, e, a.r_max);
            worst = std::min(worst, arc.value);
            arcs.push_back({{"epsilon", complex_json(e)}, {"theta1", arc.theta1},
                            {"theta2", arc.theta2}, {"value", arc.value}});
        }
        passed = worst > -std::numbers::pi - kKaplanTol;
        j = {{"condition_name", "Kaplan arc integrals > -pi (necessary check)"},
             {"condition_value", worst}, {"threshold", -std::numbers::pi}, {"passed", passed},
             {"orders", nullptr}, {"truncation_order", f.order()}, {"grid", nullptr},
             {"arcs", arcs}};
    } else {
        throw CLI::ValidationError("--check", "unknown check '" + a.check + "'");
    }
    j["function"] = f.label();
    emit(a.out, j.dump(2) + "\n", out);
    out << "classify " << a.check << " on " << f.label() << ": " << (passed ? "pass" : "fail") << "\n";
    return passed ? kExitOk : kExitCheckFailed;
}

inline int run_radius(const RadiusArgs& a, int order, std::ostream& out)
{
    const ParsedFunction pf = parse_function(a.function, order);
    const RadiusKind kind = a.kind == "convex" ? RadiusKind::convexity : RadiusKind::starlikeness;
    const RadiusResult r = radius_search(pf.map, kind, a.tol, a.n_theta);
    json j = to_json(r);
    j["function"] = pf.map.label();
    if (!a.out.empty()) write_file(a.out, j.dump(2) + "\n");
    out << "radius of " << to_string(kind) << " of " << pf.map.label() << ": ["
        << format_real(r.r_lo) << ", " << format_real(r.r_hi) << "]"
        << (r.saturated ? " (passes up to the search limit)" : "") << "\n";
    if (a.out.empty()) out << j.dump(2) << "\n";
    return kExitOk;
}

inline int run_convolve(const ConvolveArgs& a, int order, std::ostream& out)
{
    const ParsedFunction left = parse_function(a.left, order);
    const ParsedFunction right = parse_function(a.right, order);
    const ConvolutionResult c = hadamard(left.map, right.map);
    const HarmonicMap& p = c.product;
    std::ostringstream body;
    if (a.emit == "coeffs") {
        body << "n,a_re,a_im,b_re,b_im\n";
        for (int n = 0; n <= p.order(); ++n) {
            body << n << ',' << format_real(p.h()[n].real()) << ',' << format_real(p.h()[n].imag())
                 << ',' << format_real(p.g()[n].real()) << ',' << format_real(p.g()[n].imag()) << '\n';
        }
    } else {
        json j;
        j["left"] = c.left_label;
        j["right"] = c.right_label;
        j["product"] = p.label();
        j["truncation_order"] = p.order();
        j["closed_form"] = p.has_exact();
        if (std::abs(p.g()[1]) <= 1e-12) {
            const auto l13 = lemma13_orders(p);
            j["lemma13"] = {to_json(l13.first), to_json(l13.second)};
        }
        // beyond the series' accurate range only closed forms are trusted
        const double r_max = p.has_exact() ? 0.99 : 0.5;
        j["sense_preserving"] = to_json(sense_preserving_check(p, r_max));
        const auto cross = circle_self_intersection(p, p.has_exact() ? 0.9 : 0.5);
        j["circle_self_intersection"] =
            cross ? json{{"theta1", cross->theta1}, {"theta2", cross->theta2},
                         {"image", complex_json(cross->image)}}
                  : json(nullptr);
        body << j.dump(2) << "\n";
    }
    emit(a.out, body.str(), out);
    if (!a.out.empty() && a.out != "-") out << "convolve: " << p.label() << " -> " << a.out << "\n";
    return kExitOk;
}

inline int run_verify(const VerifyArgs& a, std::ostream& out)
{
    const VerificationReport rep = run_verification(a.suite);
    write_file(a.out, to_json(rep).dump(2) + "\n");
    int failed = 0;
    for (const auto& r : rep.records) {
        out << (r.passed ? "PASS " : "FAIL ") << r.claim_id << "  computed=" << format_real(r.computed)
            << " expected=" << format_real(r.expected) << " (" << to_string(r.relation)
            << ", tol " << format_real(r.tolerance) << ")\n";
        if (!r.passed) ++failed;
    }
    out << rep.records.size() - failed << "/" << rep.records.size() << " records passed -> " << a.out
        << "\n";
    return failed == 0 ? kExitOk : kExitCheckFailed;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr)
{
    CLI::App app{"Planar harmonic mappings on the unit disk"};
    app.name("hmap");
    app.require_subcommand(1);

    PlotArgs pa;
    auto* plot = app.add_subcommand("plot", "images of circles and radial segments (SVG or CSV)");
    plot->add_option("--function", pa.function, "function expression")->required();
    plot->add_option("--radii", pa.radii, "circle radii in (0,1)")->delimiter(',');
    plot->add_option("--rays", pa.rays, "number of radial segments");
    plot->add_option("--circles", pa.circles, "equally spaced circles up to the largest radius");
    plot->add_option("--samples", pa.samples, "samples per curve (>= 64)");
    plot->add_option("--format", pa.format, "svg or csv (default from --out)")
        ->check(CLI::IsMember({"svg", "csv"}));
    plot->add_option("--out", pa.out, "output file")->required();

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "coefficient classifiers and sampled checks");
    classify->add_option("--function", ca.function, "function expression")->required();
    classify->add_option("--check", ca.check, "which check")
        ->required()
        ->check(CLI::IsMember({"lemma13", "theorem2", "m-alpha", "bounds", "area", "sense",
                               "injectivity", "kaplan"}));
    classify->add_option("--alpha", ca.alpha, "alpha as re,im (default: the function's parameter)");
    classify->add_option("--power", ca.power, "2 or 3 for theorem2")->check(CLI::IsMember({2, 3}));
    classify->add_option("--r-max", ca.r_max, "sampling radius")->check(CLI::Range(0.0, 0.9999));
    classify->add_option("--out", ca.out, "JSON report file (default: stdout)");

    RadiusArgs ra;
    auto* radius = app.add_subcommand("radius", "radius of convexity or starlikeness");
    radius->add_option("--function", ra.function, "function expression")->required();
    radius->add_option("--kind", ra.kind, "convex or starlike")
        ->required()
        ->check(CLI::IsMember({"convex", "starlike"}));
    radius->add_option("--tol", ra.tol, "bracket width")->check(CLI::PositiveNumber);
    radius->add_option("--n-theta", ra.n_theta, "angles per circle")->check(CLI::Range(8, 1 << 20));
    radius->add_option("--out", ra.out, "JSON output file");

    ConvolveArgs va;
    auto* convolve = app.add_subcommand("convolve", "harmonic Hadamard product");
    convolve->add_option("--left", va.left, "left factor")->required();
    convolve->add_option("--right", va.right, "right factor")->required();
    convolve->add_option("--emit", va.emit, "coeffs or report")->check(CLI::IsMember({"coeffs", "report"}));
    convolve->add_option("--out", va.out, "output file (default: stdout)");

    VerifyArgs ya;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--suite", ya.suite, "all, coefficients, radii, convolution or bounds")
        ->check(CLI::IsMember({"all", "coefficients", "radii", "convolution", "bounds"}));
    verify->add_option("--out", ya.out, "JSON report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const int order = truncation_order_from_env();
        if (plot->parsed()) return run_plot(pa, order, out);
        if (classify->parsed()) return run_classify(ca, order, out);
        if (radius->parsed()) return run_radius(ra, order, out);
        if (convolve->parsed()) return run_convolve(va, order, out);
        if (verify->parsed()) return run_verify(ya, out);
    } catch (const expression_error& e) {
        err << "hmap: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        err << "hmap: " << e.what() << "\n";
        return kExitUsage;
    } catch (const singular_point_error& e) {
        err << "hmap: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::invalid_argument& e) {  // bad parameter values
        err << "hmap: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "hmap: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "hmap: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace hmap::cli

#pragma once

// JSON records for reports. Classification reports follow
// {condition_name, condition_value, threshold, passed, orders,
//  truncation_order, grid}.

#include <hmap/classifiers.hpp>
#include <hmap/convolution.hpp>
#include <hmap/harmonic_map.hpp>
#include <hmap/radius.hpp>

#include <json.hpp>

#include <optional>

namespace hmap {

using json = nlohmann::ordered_json;

inline json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline json grid_json(PolarGrid g, double r_max)
{
    return {{"n_r", g.n_r}, {"n_theta", g.n_theta}, {"r_max", r_max}};
}

template <class T>
json optional_json(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

inline json to_json(const ClassificationReport& r)
{
    json j;
    j["condition_name"] = r.condition_name;
    j["condition_value"] = r.condition_value;
    j["threshold"] = r.threshold;
    j["passed"] = r.passed;
    j["orders"] = {{"starlike", optional_json(r.order_starlike)},
                   {"convex", optional_json(r.order_convex)},
                   {"degenerate", r.degenerate}};
    j["close_to_convex"] = r.close_to_convex;
    j["truncation_order"] = r.truncation_order;
    j["grid"] = nullptr;
    return j;
}

inline json to_json(const MAlphaReport& r)
{
    json j;
    j["condition_name"] = "M(alpha) membership (necessary check)";
    j["condition_value"] = r.min_curvature;
    j["threshold"] = -0.5;
    j["passed"] = r.passed();
    j["relation_passed"] = r.relation_passed;
    j["relation_residual"] = r.relation_residual;
    j["curvature_passed"] = r.curvature_passed;
    j["argmin"] = complex_json(r.argmin);
    j["orders"] = nullptr;
    j["truncation_order"] = r.truncation_order;
    j["grid"] = grid_json(r.grid, r.r_max);
    return j;
}

inline json to_json(const BoundsReport& r)
{
    json j;
    j["condition_name"] = "coefficient and growth bounds";
    j["condition_value"] = r.min_growth_slack;
    j["threshold"] = -1e-9;
    j["passed"] = r.passed();
    j["coefficients_passed"] = r.coefficients_passed;
    j["max_a_excess"] = r.max_a_excess;
    j["max_b_excess"] = r.max_b_excess;
    j["growth_passed"] = r.growth_passed;
    j["worst_point"] = complex_json(r.worst_point);
    j["samples"] = r.samples;
    j["orders"] = nullptr;
    j["truncation_order"] = r.truncation_order;
    j["grid"] = nullptr;
    return j;
}

inline json to_json(const SensePreservingReport& r)
{
    json j;
    j["condition_name"] = "Jacobian > 0 on grid";
    j["condition_value"] = r.min_jacobian;
    j["threshold"] = 0.0;
    j["passed"] = r.passed;
    if (r.first_violation) {
        j["first_violation"] = {{"r", r.first_violation->r},
                                {"theta", r.first_violation->theta},
                                {"jacobian", r.first_violation->value}};
    } else {
        j["first_violation"] = nullptr;
    }
    j["orders"] = nullptr;
    j["grid"] = grid_json(r.grid, r.r_max);
    return j;
}

inline json to_json(const InjectivityReport& r)
{
    json j;
    j["condition_name"] = "sampled injectivity (necessary check)";
    j["condition_value"] = r.min_image_distance;
    j["threshold"] = kCollisionTol;
    j["passed"] = !r.collision;
    j["n_points"] = r.n_points;
    j["delta"] = r.delta;
    j["closest_pair"] = json::array({complex_json(r.z1), complex_json(r.z2)});
    j["orders"] = nullptr;
    j["grid"] = nullptr;
    return j;
}

inline json to_json(const RadiusResult& r)
{
    json j;
    j["kind"] = std::string(to_string(r.kind));
    j["r_lo"] = r.r_lo;
    j["r_hi"] = r.r_hi;
    j["grid_theta"] = r.grid_theta;
    j["tol"] = r.tol;
    j["saturated"] = r.saturated;
    j["r_limit"] = r.r_limit;
    j["scan_points"] = r.scan_points;
    return j;
}

inline json to_json(const TildeDilatationReport& r)
{
    json j;
    j["n"] = r.n;
    j["theta"] = r.theta;
    j["max_abs"] = r.max_abs;
    j["argmax"] = complex_json(r.argmax);
    j["passed"] = r.passed;
    j["grid"] = grid_json(r.grid, r.r_max);
    j["crosscheck_r_max"] = r.crosscheck_r_max;
    j["crosscheck_residual"] = r.crosscheck_residual;
    j["crosscheck_passed"] = r.crosscheck_passed;
    return j;
}

}  // namespace hmap

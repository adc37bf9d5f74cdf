#pragma once

// Function expressions used on the command line:
//   expr := name [":" re "," im] | "conv(" expr "," expr ")"
//   name := f_alpha | L | F | g_alpha | example21 | example22 | identity

#include <hmap/catalog.hpp>
#include <hmap/convolution.hpp>
#include <hmap/harmonic_map.hpp>

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hmap {

class expression_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Truncation order from HMAP_TRUNC_ORDER, else the default.
inline int truncation_order_from_env()
{
    const char* v = std::getenv("HMAP_TRUNC_ORDER");
    if (v == nullptr || *v == '\0') return kDefaultOrder;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || n < 8 || n > 100000) {
        throw expression_error("HMAP_TRUNC_ORDER must be an integer in [8, 100000]");
    }
    return static_cast<int>(n);
}

struct ParsedFunction {
    HarmonicMap map;
    std::optional<cplx> alpha;  // catalog parameter, when the expression names one
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline double parse_real(std::string_view s)
{
    const std::string str(trim(s));
    char* end = nullptr;
    const double v = std::strtod(str.c_str(), &end);
    if (str.empty() || end != str.c_str() + str.size()) {
        throw expression_error("not a number: '" + str + "'");
    }
    return v;
}

}  // namespace detail

/// "re,im" or "re"
inline cplx parse_complex(std::string_view s)
{
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) return {detail::parse_real(s), 0.0};
    return {detail::parse_real(s.substr(0, comma)), detail::parse_real(s.substr(comma + 1))};
}

inline ParsedFunction parse_function(std::string_view expr, int order)
{
    expr = detail::trim(expr);
    if (expr.starts_with("conv(")) {
        if (!expr.ends_with(")")) throw expression_error("conv(...): missing ')'");
        const std::string_view inner = expr.substr(5, expr.size() - 6);
        int depth = 0;
        std::size_t split = std::string_view::npos;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            else if (inner[i] == ')') --depth;
            else if (inner[i] == ',' && depth == 0) {
                // a top-level comma right after a parameter belongs to it
                const std::string_view head = inner.substr(0, i);
                const auto colon = head.rfind(':');
                const auto paren = head.rfind(')');
                const bool in_param = colon != std::string_view::npos &&
                                      (paren == std::string_view::npos || colon > paren) &&
                                      head.substr(colon).find(',') == std::string_view::npos;
                if (!in_param) {
                    split = i;
                    break;
                }
            }
        }
        if (split == std::string_view::npos) throw expression_error("conv(...): expected two arguments");
        const ParsedFunction left = parse_function(inner.substr(0, split), order);
        const ParsedFunction right = parse_function(inner.substr(split + 1), order);
        return {hadamard(left.map, right.map).product, std::nullopt};
    }

    const auto colon = expr.find(':');
    const std::string_view name = expr.substr(0, colon);
    std::optional<cplx> alpha;
    if (colon != std::string_view::npos) alpha = parse_complex(expr.substr(colon + 1));

    auto need_alpha = [&](CatalogName n) {
        if (!alpha) throw expression_error(std::string(name) + " needs a parameter, e.g. " +
                                           std::string(name) + ":0.5,0");
        return CatalogEntry{n, *alpha};
    };
    auto no_alpha = [&](CatalogName n) {
        if (alpha) throw expression_error(std::string(name) + " takes no parameter");
        return CatalogEntry{n, 0.0};
    };

    if (name == "f_alpha") return {make_named(need_alpha(CatalogName::f_alpha), order), alpha};
    if (name == "g_alpha") return {make_named(need_alpha(CatalogName::g_alpha), order), alpha};
    if (name == "L") return {make_named(no_alpha(CatalogName::L), order), cplx{-1.0}};
    if (name == "F") return {make_named(no_alpha(CatalogName::F), order), cplx{1.0}};
    if (name == "example21") return {make_named(no_alpha(CatalogName::example21), order), std::nullopt};
    if (name == "example22") return {make_named(no_alpha(CatalogName::example22), order), cplx{1.0}};
    if (name == "identity") {
        no_alpha(CatalogName::g_alpha);
        return {HarmonicMap(make_generator(Generator::identity, order), TruncatedSeries(order),
                            "identity"),
                cplx{0.0}};
    }
    throw expression_error("unknown function '" + std::string(name) + "'");
}

}  // namespace hmap

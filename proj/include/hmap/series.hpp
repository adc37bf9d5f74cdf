#pragma once

// Truncated complex power series c_0 + c_1 z + ... + c_N z^N and the
// closed forms of series whose coefficients are polynomials in n.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hmap {

using cplx = std::complex<double>;

/// Truncation degree used by every catalog construction unless overridden.
inline constexpr int kDefaultOrder = 64;

/// Absolute tolerance for coefficient identities.
inline constexpr double kSeriesTol = 1e-9;

/// Value and first two derivatives of an analytic function at a point.
struct AnalyticJet {
    cplx value{};
    cplx d1{};
    cplx d2{};
};

inline void require_inside_disk(cplx z, const char* where)
{
    if (!(std::abs(z) < 1.0)) {
        throw std::domain_error(std::string(where) + ": |z| must be < 1, got |z| = " +
                                std::to_string(std::abs(z)));
    }
}

class TruncatedSeries {
public:
    /// Zero series of the given truncation order.
    explicit TruncatedSeries(int order = 1)
    {
        if (order < 1) {
            throw std::invalid_argument("TruncatedSeries: order must be >= 1");
        }
        c_.assign(static_cast<std::size_t>(order) + 1, cplx{});
    }

    explicit TruncatedSeries(std::vector<cplx> coeffs) : c_(std::move(coeffs))
    {
        if (c_.size() < 2) {
            throw std::invalid_argument("TruncatedSeries: need at least two coefficients");
        }
    }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of z^n; zero above the truncation order.
    cplx coeff(int n) const noexcept
    {
        return (n >= 0 && n <= order()) ? c_[static_cast<std::size_t>(n)] : cplx{};
    }

    cplx operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }

    std::span<const cplx> coeffs() const noexcept { return c_; }

    TruncatedSeries truncated(int order) const
    {
        if (order < 1 || order > this->order()) {
            throw std::invalid_argument("TruncatedSeries::truncated: order out of range");
        }
        return TruncatedSeries(std::vector<cplx>(c_.begin(), c_.begin() + order + 1));
    }

private:
    std::vector<cplx> c_;
};

// ─── Construction ───────────────────────────────────────────────────────────

enum class Generator { half_plane_l, koebe_k, log_one_minus_z, identity };

inline Generator parse_generator(std::string_view name)
{
    if (name == "half_plane_l" || name == "l") return Generator::half_plane_l;
    if (name == "koebe_k" || name == "k") return Generator::koebe_k;
    if (name == "log_one_minus_z") return Generator::log_one_minus_z;
    if (name == "identity") return Generator::identity;
    throw std::invalid_argument("unknown generator kind: " + std::string(name));
}

/// Taylor expansion at 0 of z/(1-z), z/(1-z)^2, log(1-z) or z.
inline TruncatedSeries make_generator(Generator kind, int order)
{
    if (order < 1) {
        throw std::invalid_argument("make_generator: order must be >= 1");
    }
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx{});
    for (int n = 1; n <= order; ++n) {
        switch (kind) {
        case Generator::half_plane_l: c[n] = 1.0; break;
        case Generator::koebe_k: c[n] = static_cast<double>(n); break;
        case Generator::log_one_minus_z: c[n] = -1.0 / n; break;
        case Generator::identity: c[n] = (n == 1) ? 1.0 : 0.0; break;
        }
    }
    return TruncatedSeries(std::move(c));
}

// ─── Arithmetic ─────────────────────────────────────────────────────────────

enum class SeriesOp { add, sub, mul };

/// a (op) scalar*b, truncated to the smaller of the two orders.
inline TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op,
                               std::optional<cplx> scalar = std::nullopt)
{
    const int n = std::min(a.order(), b.order());
    const cplx s = scalar.value_or(cplx{1.0});
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx{});
    switch (op) {
    case SeriesOp::add:
        for (int k = 0; k <= n; ++k) c[k] = a[k] + s * b[k];
        break;
    case SeriesOp::sub:
        for (int k = 0; k <= n; ++k) c[k] = a[k] - s * b[k];
        break;
    case SeriesOp::mul:
        for (int i = 0; i <= n; ++i) {
            if (a[i] == cplx{}) continue;
            for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * s * b[j];
        }
        break;
    }
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries scaled(const TruncatedSeries& a, cplx s)
{
    std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x *= s;
    return TruncatedSeries(std::move(c));
}

/// Coefficientwise (Hadamard) product.
inline TruncatedSeries hadamard_product(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[k] = a[k] * b[k];
    return TruncatedSeries(std::move(c));
}

/// Termwise derivative; the order drops by `times`, which must leave at
/// least a linear term.
inline TruncatedSeries differentiate(const TruncatedSeries& a, int times = 1)
{
    if (times != 1 && times != 2) {
        throw std::invalid_argument("differentiate: times must be 1 or 2");
    }
    if (a.order() - times < 1) {
        throw std::invalid_argument("differentiate: order too small for requested derivative");
    }
    const int n = a.order() - times;
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        double f = 1.0;
        for (int j = 1; j <= times; ++j) f *= static_cast<double>(k + j);
        c[k] = f * a[k + times];
    }
    return TruncatedSeries(std::move(c));
}

/// Antiderivative vanishing at 0; the order rises by one (exact).
inline TruncatedSeries integrate(const TruncatedSeries& a)
{
    std::vector<cplx> c(static_cast<std::size_t>(a.order()) + 2, cplx{});
    for (int k = 0; k <= a.order(); ++k) c[k + 1] = a[k] / static_cast<double>(k + 1);
    return TruncatedSeries(std::move(c));
}

/// sum_{n >= from} n^power |c_n|
inline double weighted_abs_sum(const TruncatedSeries& a, int power, int from = 2)
{
    double s = 0.0;
    for (int n = from; n <= a.order(); ++n) s += std::pow(static_cast<double>(n), power) * std::abs(a[n]);
    return s;
}

// ─── Evaluation ─────────────────────────────────────────────────────────────

inline cplx evaluate(const TruncatedSeries& a, cplx z)
{
    require_inside_disk(z, "evaluate");
    cplx acc{};
    for (int n = a.order(); n >= 0; --n) acc = acc * z + a[n];
    return acc;
}

/// Horner evaluation of the polynomial and its first two derivatives.
inline AnalyticJet evaluate_jet(const TruncatedSeries& a, cplx z)
{
    require_inside_disk(z, "evaluate_jet");
    cplx p{}, dp{}, ddp{};
    for (int n = a.order(); n >= 0; --n) {
        ddp = ddp * z + 2.0 * dp;
        dp = dp * z + p;
        p = p * z + a[n];
    }
    return {p, dp, ddp};
}

// ─── Polynomial coefficient laws ────────────────────────────────────────────

/// The function sum_{n>=1} P(n) z^n for a polynomial P, with its closed form.
///
/// With u = 1/(1-z), the series sum_{n>=0} C(n+m-1, m-1) z^n equals u^m, so
/// writing P(n) = sum_m beta_m C(n+m-1, m-1) gives the function as
/// sum_m beta_m (u^m - 1). Evaluating P at n = -1, -2, ... makes the basis
/// change triangular because C(m-1-j, m-1) vanishes for 1 <= j < m.
class CoefficientLaw {
public:
    /// poly[k] is the coefficient of n^k.
    explicit CoefficientLaw(std::vector<cplx> poly) : poly_(std::move(poly))
    {
        while (poly_.size() > 1 && poly_.back() == cplx{}) poly_.pop_back();
        if (poly_.empty()) poly_.push_back(cplx{});
        build_basis();
    }

    std::span<const cplx> polynomial() const noexcept { return poly_; }

    cplx coefficient(int n) const
    {
        if (n <= 0) return cplx{};
        return poly_at(static_cast<double>(n));
    }

    TruncatedSeries series(int order) const
    {
        std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx{});
        for (int n = 1; n <= order; ++n) c[n] = coefficient(n);
        return TruncatedSeries(std::move(c));
    }

    AnalyticJet jet(cplx z) const
    {
        require_inside_disk(z, "CoefficientLaw::jet");
        const cplx u = 1.0 / (1.0 - z);
        AnalyticJet j;
        cplx um = u;  // u^m
        for (std::size_t i = 0; i < beta_.size(); ++i) {
            const double m = static_cast<double>(i + 1);
            j.value += beta_[i] * (um - 1.0);
            j.d1 += beta_[i] * m * um * u;
            j.d2 += beta_[i] * m * (m + 1.0) * um * u * u;
            um *= u;
        }
        return j;
    }

    friend CoefficientLaw operator*(const CoefficientLaw& a, const CoefficientLaw& b)
    {
        std::vector<cplx> p(a.poly_.size() + b.poly_.size() - 1, cplx{});
        for (std::size_t i = 0; i < a.poly_.size(); ++i)
            for (std::size_t j = 0; j < b.poly_.size(); ++j) p[i + j] += a.poly_[i] * b.poly_[j];
        return CoefficientLaw(std::move(p));
    }

    CoefficientLaw scaled(cplx s) const
    {
        auto p = poly_;
        for (auto& x : p) x *= s;
        return CoefficientLaw(std::move(p));
    }

private:
    cplx poly_at(double n) const
    {
        cplx acc{};
        for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) acc = acc * n + *it;
        return acc;
    }

    static double binomial(int top, int k)
    {
        double r = 1.0;
        for (int i = 0; i < k; ++i) r = r * static_cast<double>(top - i) / static_cast<double>(i + 1);
        return r;
    }

    void build_basis()
    {
        // P(-j) = sum_{m=1}^{j} (-1)^(m-1) C(j-1, m-1) beta_m
        const int count = static_cast<int>(poly_.size());
        beta_.assign(static_cast<std::size_t>(count), cplx{});
        for (int j = 1; j <= count; ++j) {
            cplx rhs = poly_at(-static_cast<double>(j));
            for (int m = 1; m < j; ++m) {
                const double sign = (m % 2 == 1) ? 1.0 : -1.0;
                rhs -= sign * binomial(j - 1, m - 1) * beta_[m - 1];
            }
            const double lead = (j % 2 == 1) ? 1.0 : -1.0;
            beta_[j - 1] = rhs / lead;
        }
    }

    std::vector<cplx> poly_;
    std::vector<cplx> beta_;
};

}  // namespace hmap

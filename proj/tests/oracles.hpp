#pragma once

// Independent reference computations shared by the tests. They avoid the
// library's own jets and closed forms.

#include <hmap/harmonic_map.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracle {

using cplx = std::complex<double>;

/// Central difference of a real-variable complex function.
inline cplx diff(const std::function<cplx(double)>& f, double t, double h = 1e-5)
{
    return (-f(t + 2 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2 * h)) / (12.0 * h);
}

/// Complex derivative of an analytic function along the real direction.
inline cplx cdiff(const std::function<cplx(cplx)>& f, cplx z, double h = 1e-5)
{
    return diff([&](double s) { return f(z + s); }, 0.0, h);
}

/// Direct summation of the truncated series, in long double.
inline cplx series_sum(const hmap::TruncatedSeries& a, cplx z)
{
    std::complex<long double> acc{0}, zn{1};
    const std::complex<long double> zz(z.real(), z.imag());
    for (int n = 0; n <= a.order(); ++n) {
        acc += std::complex<long double>(a[n].real(), a[n].imag()) * zn;
        zn *= zz;
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

/// Composite trapezoid over a full period; spectrally accurate for smooth
/// periodic integrands.
inline double periodic_trapezoid(const std::function<double(double)>& f, int n = 4096)
{
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += f(2.0 * std::numbers::pi * k / n);
    return s * 2.0 * std::numbers::pi / n;
}

}  // namespace oracle

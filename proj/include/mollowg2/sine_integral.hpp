#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mollowg2 {

namespace detail {

// Power series Si(x) = sum (-1)^k x^(2k+1) / ((2k+1)(2k+1)!), used for
// |x| <= 8 where cancellation stays below ~2 decimal digits.
inline double si_series(double x) {
    if (x == 0.0) return 0.0;
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k < 64; ++k) {
        const double km = 2.0 * k;
        term *= -x2 * (km - 1.0) / ((km + 1.0) * (km + 1.0) * km);
        sum += term;
        if (std::abs(term) <= std::numeric_limits<double>::epsilon() * std::abs(sum))
            return sum;
    }
    throw std::runtime_error("si_series: no convergence");
}

// E1(z) by the modified Lentz continued fraction,
//   E1(z) = exp(-z) / (z + 1 - 1^2/(z + 3 - 2^2/(z + 5 - ...))).
// Used on the imaginary axis z = i x, where it converges for x >~ 1.
inline std::complex<double> e1_continued_fraction(std::complex<double> z) {
    constexpr double tiny = 1e-300;
    std::complex<double> b = z + 1.0;
    std::complex<double> c = 1.0 / tiny;
    std::complex<double> d = 1.0 / b;
    std::complex<double> h = d;
    for (int i = 1; i < 400; ++i) {
        const double a = -static_cast<double>(i) * static_cast<double>(i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const std::complex<double> del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < std::numeric_limits<double>::epsilon())
            return h * std::exp(-z);
    }
    throw std::runtime_error("e1_continued_fraction: no convergence");
}

} // namespace detail

/// Sine integral Si(x) = int_0^x sin(t)/t dt. Full double accuracy on the
/// whole real axis; for |x| > 8 evaluated through E1(ix), using
/// Si(x) = pi/2 + Im E1(ix).
inline double si(double x) {
    if (std::isnan(x)) return x;
    const double ax = std::abs(x);
    double v;
    if (ax <= 8.0)
        v = detail::si_series(ax);
    else if (std::isinf(ax))
        v = 0.5 * std::numbers::pi;
    else
        v = 0.5 * std::numbers::pi + detail::e1_continued_fraction({0.0, ax}).imag();
    return std::copysign(v, x);
}

/// sin(x)/x with the removable singularity filled in; series for small x.
inline double sinc(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-6) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

} // namespace mollowg2

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace mollowg2 {

namespace detail {

// 15-point Kronrod rule with embedded 7-point Gauss rule (nodes/weights on
// [-1, 1], symmetric half stored).
inline constexpr std::array<double, 8> gk_nodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kronrod_weights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> gauss_weights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkEstimate {
    double value;
    double error; // |Kronrod - Gauss|
};

template <class F>
GkEstimate gauss_kronrod_15(F& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * gk_nodes[static_cast<std::size_t>(i)];
        const double pair_sum = f(mid - dx) + f(mid + dx);
        kronrod += kronrod_weights[static_cast<std::size_t>(i)] * pair_sum;
        if (i % 2 == 1)
            gauss += gauss_weights[static_cast<std::size_t>(i / 2)] * pair_sum;
    }
    const double f_mid = f(mid);
    kronrod += kronrod_weights[7] * f_mid;
    gauss += gauss_weights[3] * f_mid;
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

template <class F>
double integrate_segment(F& f, double a, double b, double abs_tol, int depth) {
    const GkEstimate est = gauss_kronrod_15(f, a, b);
    if (est.error <= abs_tol || depth >= 60)
        return est.value;
    const double mid = 0.5 * (a + b);
    return integrate_segment(f, a, mid, 0.5 * abs_tol, depth + 1) +
           integrate_segment(f, mid, b, 0.5 * abs_tol, depth + 1);
}

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b] to absolute tolerance
/// abs_tol. initial_segments pre-splits the interval before refinement;
/// oscillatory integrands want roughly one segment per period.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol, int initial_segments = 1) {
    if (!(b >= a)) throw std::invalid_argument("integrate: need b >= a");
    if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate: need abs_tol > 0");
    if (initial_segments < 1) initial_segments = 1;
    if (a == b) return 0.0;
    const double width = (b - a) / initial_segments;
    const double seg_tol = abs_tol / initial_segments;
    double total = 0.0;
    for (int s = 0; s < initial_segments; ++s) {
        const double lo = a + s * width;
        const double hi = (s + 1 == initial_segments) ? b : lo + width;
        total += detail::integrate_segment(f, lo, hi, seg_tol, 0);
    }
    return total;
}

} // namespace mollowg2

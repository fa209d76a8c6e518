#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "radlab/errors.hpp"

namespace radlab {

// Globally adaptive Gauss-Kronrod 7-15 quadrature.  The worst interval by
// error estimate is bisected until the summed estimate meets the tolerance.
// Splitting order is tie-broken by insertion index so results are identical
// run to run.

namespace gk15 {
// 15-point Kronrod abscissae (positive half) and weights; the embedded
// 7-point Gauss rule lives on the odd-indexed abscissae.
inline constexpr std::array<double, 8> xk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> wk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
} // namespace gk15

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;
    bool converged = false;
};

namespace detail {
template <class F>
inline void gk15_apply(F& f, double a, double b, double& kronrod, double& err) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    const double fc = f(c);
    resk += gk15::wk[7] * fc;
    resg += gk15::wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = hw * gk15::xk[j];
        const double f1 = f(c - x);
        const double f2 = f(c + x);
        resk += gk15::wk[j] * (f1 + f2);
        if (j % 2 == 1) resg += gk15::wg[j / 2] * (f1 + f2);
    }
    kronrod = resk * hw;
    err = std::abs((resk - resg) * hw);
}
} // namespace detail

// f: double -> double on [a, b] (a <= b).  Converged when the total error
// estimate drops below max(abs_tol, rel_tol * |integral|).
template <class F>
QuadResult adaptive_gk15(F&& f, double a, double b, double abs_tol, double rel_tol,
                         int max_intervals = 4000) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    if (!(b > a)) throw domain_error("adaptive_gk15: need a <= b");

    struct Interval {
        double a, b, value, err;
        std::size_t seq;
    };
    struct ByErr {
        bool operator()(const Interval& p, const Interval& q) const {
            if (p.err != q.err) return p.err < q.err;
            return p.seq > q.seq;
        }
    };
    std::priority_queue<Interval, std::vector<Interval>, ByErr> heap;
    std::size_t seq = 0;

    double v0, e0;
    detail::gk15_apply(f, a, b, v0, e0);
    heap.push({a, b, v0, e0, seq++});
    double total_v = v0, total_e = e0;
    int n_int = 1;

    while (total_e > std::max(abs_tol, rel_tol * std::abs(total_v)) && n_int < max_intervals) {
        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // worst interval is at rounding resolution; its error estimate
            // is the floor of what this rule can certify
            heap.push(worst);
            break;
        }
        double vl, el, vr, er;
        detail::gk15_apply(f, worst.a, mid, vl, el);
        detail::gk15_apply(f, mid, worst.b, vr, er);
        total_v += vl + vr - worst.value;
        total_e += el + er - worst.err;
        heap.push({worst.a, mid, vl, el, seq++});
        heap.push({mid, worst.b, vr, er, seq++});
        ++n_int;
    }

    out.value = total_v;
    out.error_estimate = total_e;
    out.intervals = n_int;
    out.converged = total_e <= std::max(abs_tol, rel_tol * std::abs(total_v));
    return out;
}

} // namespace radlab

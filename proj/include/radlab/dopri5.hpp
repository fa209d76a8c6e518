#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "radlab/errors.hpp"

namespace radlab {

// Dormand-Prince 5(4) embedded pair for a 2-component system, with the
// classical quartic continuous extension.  The pair is FSAL: the last stage
// of an accepted step seeds the next one.

using State2 = std::array<double, 2>;

// One accepted step [r0, r0 + h].  For each component,
//   y(r0 + s h) = c0 + s (c1 + (1-s)(c2 + s (c3 + (1-s) c4))),  s in [0, 1],
// which reproduces values and slopes at both endpoints and carries a local
// interpolation error of the same order as the step error.
struct DenseSegment {
    double r0 = 0.0;
    double h = 0.0;
    std::array<std::array<double, 5>, 2> c{};

    double eval(int comp, double r) const {
        const double s = (r - r0) / h;
        const auto& a = c[comp];
        return a[0] + s * (a[1] + (1.0 - s) * (a[2] + s * (a[3] + (1.0 - s) * a[4])));
    }
};

struct StepRecord {
    double r0 = 0.0;
    double h = 0.0;
    State2 y0{};
    State2 y1{};
    DenseSegment seg{};
};

struct Dopri5Options {
    double rtol = 1e-10;
    double atol = 1e-10;
    double h_initial = 0.0;   // 0: choose automatically
    double h_max = 0.0;       // 0: |r_end - r_start|
    std::int64_t max_steps = 4'000'000;
};

namespace dp5 {
inline constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
inline constexpr double a21 = 1.0 / 5.0;
inline constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
inline constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
inline constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                        a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
inline constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                        a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
inline constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                        b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
// b - b_hat, i.e. the embedded error weights
inline constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                        e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// dense-output weights for the s^2 (1-s)^2 term
inline constexpr double d1 = -12715105075.0 / 11282082432.0;
inline constexpr double d3 = 87487479700.0 / 32700410799.0;
inline constexpr double d4 = -10690763975.0 / 1880347072.0;
inline constexpr double d5 = 701980252875.0 / 199316789632.0;
inline constexpr double d6 = -1453857185.0 / 822651844.0;
inline constexpr double d7 = 69997945.0 / 29380423.0;
} // namespace dp5

// Integrates y' = f(r, y) from (r_start, y_start) toward r_end (r_end >
// r_start).  The observer receives every accepted step and returns false to
// stop early.  Throws numerical_error when the controller stalls.
template <class RHS, class Observer>
void dopri5_integrate(RHS&& f, double r_start, State2 y_start, double r_end,
                      const Dopri5Options& opt, Observer&& observe) {
    using namespace dp5;
    if (!(r_end > r_start)) throw domain_error("dopri5: r_end must exceed r_start");

    double r = r_start;
    State2 y = y_start;
    State2 k1 = f(r, y);

    const double h_max = opt.h_max > 0.0 ? opt.h_max : (r_end - r_start);

    double h;
    if (opt.h_initial > 0.0) {
        h = opt.h_initial;
    } else {
        // small trial step from the scaled sizes of y and f(y)
        double d0 = 0.0, d1n = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double sc = opt.atol + opt.rtol * std::abs(y[i]);
            d0 += (y[i] / sc) * (y[i] / sc);
            d1n += (k1[i] / sc) * (k1[i] / sc);
        }
        h = (d1n > 1e-10 && d0 > 1e-10) ? 0.01 * std::sqrt(d0 / d1n) : 1e-6;
        h = std::min(h, 0.1 * (r_end - r_start));
    }
    h = std::min(h, h_max);

    std::int64_t steps = 0;
    int consecutive_rejects = 0;
    while (r < r_end) {
        if (++steps > opt.max_steps) throw numerical_error("dopri5: step budget exhausted");
        if (h < 1e-14 * (1.0 + std::abs(r)))
            throw numerical_error("dopri5: step size underflow");
        bool last = false;
        if (r + h >= r_end) {
            h = r_end - r;
            last = true;
        }

        State2 yt, k2, k3, k4, k5, k6, k7, y1;
        for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * a21 * k1[i];
        k2 = f(r + c2 * h, yt);
        for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        k3 = f(r + c3 * h, yt);
        for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        k4 = f(r + c4 * h, yt);
        for (int i = 0; i < 2; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        k5 = f(r + c5 * h, yt);
        for (int i = 0; i < 2; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        k6 = f(r + h, yt);
        for (int i = 0; i < 2; ++i)
            y1[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        k7 = f(r + h, y1);

        double err = 0.0;
        bool finite = true;
        for (int i = 0; i < 2; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                  e6 * k6[i] + e7 * k7[i]);
            const double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y1[i]));
            err += (e / sc) * (e / sc);
            if (!std::isfinite(y1[i])) finite = false;
        }
        err = std::sqrt(0.5 * err);

        if (!finite || err > 1.0) {
            const double fac = finite ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.2;
            h *= fac;
            if (++consecutive_rejects > 60)
                throw numerical_error("dopri5: repeated step rejections");
            continue;
        }
        consecutive_rejects = 0;

        StepRecord rec;
        rec.r0 = r;
        rec.h = h;
        rec.y0 = y;
        rec.y1 = y1;
        rec.seg.r0 = r;
        rec.seg.h = h;
        for (int i = 0; i < 2; ++i) {
            const double dy = y1[i] - y[i];
            const double bspl = h * k1[i] - dy;
            rec.seg.c[i][0] = y[i];
            rec.seg.c[i][1] = dy;
            rec.seg.c[i][2] = bspl;
            rec.seg.c[i][3] = dy - h * k7[i] - bspl;
            rec.seg.c[i][4] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                   d6 * k6[i] + d7 * k7[i]);
        }

        r += h;
        y = y1;
        k1 = k7; // FSAL

        if (!observe(rec)) return;
        if (last) return; // the step was clamped to land on r_end

        const double fac = err > 0.0 ? std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2)))
                                     : 5.0;
        h = std::min(h * fac, h_max);
    }
}

} // namespace radlab

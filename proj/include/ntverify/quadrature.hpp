#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>
#include <vector>

// Adaptive 1-D quadrature on a Gauss 7 / Kronrod 15 embedded pair. The
// integrand returns (value, inherited_error) so nested integrals can
// propagate the error estimates of inner levels through outer ones.

namespace ntv {

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
};

namespace qk15 {

// Positive abscissae of the 15-point Kronrod rule; even indices are the
// Kronrod-only points, odd indices (and the center) the embedded Gauss-7.
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526, 0.949107912342758524526189684048,
    0.864864423359769072789712788641, 0.741531185599394439863864773281,
    0.586087235467691130294144838259, 0.405845151377397166906606412077,
    0.207784955007898467600689403773, 0.0};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008059, 0.063092092629978553290700663189,
    0.104790010322250183839876322542, 0.140653259715525918745189590510,
    0.169004726639267902826583426599, 0.190350578064785409913256402421,
    0.204432940075298892414161999235, 0.209482141084727828012999174892};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679, 0.279705391489276667901467771424,
    0.381830050505118944950369775489, 0.417959183673469387755102040816};

}  // namespace qk15

// One Kronrod-15 panel on [a, b]. F: double -> std::pair<double, double>
// (value, inherited absolute error). The inherited error is integrated with
// the Kronrod weights and added to |K15 - G7|.
template <typename F>
QuadResult kronrod_panel(F&& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double k = 0.0, g = 0.0, inner = 0.0;
    {
        auto [v, e] = f(c);
        k = qk15::wgk[7] * v;
        g = qk15::wg[3] * v;
        inner = qk15::wgk[7] * std::abs(e);
    }
    for (int i = 0; i < 7; ++i) {
        auto [v1, e1] = f(c - h * qk15::xgk[i]);
        auto [v2, e2] = f(c + h * qk15::xgk[i]);
        k += qk15::wgk[i] * (v1 + v2);
        inner += qk15::wgk[i] * (std::abs(e1) + std::abs(e2));
        if (i % 2 == 1) g += qk15::wg[i / 2] * (v1 + v2);
    }
    return {h * k, h * (std::abs(k - g) + inner)};
}

// Adaptive bisection: repeatedly split the panel with the largest error
// until the total satisfies the relative tolerance or the panel cap.
template <typename F>
QuadResult adaptive_quad(F&& f, double a, double b, double rel_tol,
                         int max_panels = 64) {
    if (!(a < b)) return {0.0, 0.0};
    struct Panel {
        double a, b, value, err;
        bool operator<(const Panel& o) const { return err < o.err; }
    };
    std::priority_queue<Panel> panels;
    auto first = kronrod_panel(f, a, b);
    panels.push({a, b, first.value, first.err_est});
    double total_v = first.value, total_e = first.err_est;
    int n = 1;
    while (n < max_panels &&
           total_e > rel_tol * std::max(std::abs(total_v), 1e-300)) {
        Panel top = panels.top();
        panels.pop();
        total_v -= top.value;
        total_e -= top.err;
        const double mid = 0.5 * (top.a + top.b);
        auto left = kronrod_panel(f, top.a, mid);
        auto right = kronrod_panel(f, mid, top.b);
        panels.push({top.a, mid, left.value, left.err_est});
        panels.push({mid, top.b, right.value, right.err_est});
        total_v += left.value + right.value;
        total_e += left.err_est + right.err_est;
        ++n;
    }
    // Fixed-order pairwise resum for a reproducible, better-conditioned total.
    std::vector<Panel> all;
    while (!panels.empty()) {
        all.push_back(panels.top());
        panels.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double v = 0.0, e = 0.0;
    for (const auto& p : all) {
        v += p.value;
        e += p.err;
    }
    return {v, e};
}

}  // namespace ntv

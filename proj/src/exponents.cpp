#include "ntverify/exponents.hpp"

#include <algorithm>
#include <stdexcept>

namespace ntv {

bool type_i_ii_ok(const ExponentParams& p) {
    if (!p.sigma) throw std::invalid_argument("type_i_ii_ok: sigma required");
    const double w = p.omega, d = p.delta, s = *p.sigma;
    return 72 * w + 24 * d < 1 && 48 * w + 16 * d + 4 * s < 1 &&
           64 * w + 20 * d + 2 * s < 1;
}

bool type_iii_ok(const ExponentParams& p) {
    if (!p.sigma) throw std::invalid_argument("type_iii_ok: sigma required");
    const double w = p.omega, d = p.delta, s = *p.sigma;
    return w < 1.0 / 12 && s > 1.0 / 18 + 28 * w / 9 + 2 * d / 9;
}

SigmaWindow mpz_sigma_window(double w, double d) {
    SigmaWindow win;
    win.lower = std::max({1.0 / 18 + 28 * w / 9 + 2 * d / 9, 0.1, 2 * w});
    win.upper = std::min({0.25 - 12 * w - 4 * d, 0.5 - 32 * w - 10 * d, 0.5});
    win.nonempty = win.lower < win.upper && 72 * w + 24 * d < 1;
    return win;
}

bool mpz_simple(double w, double d) { return mpz_simple_margin(w, d) > 0; }

double mpz_simple_margin(double w, double d) { return 1 - (80 * w + 80 * d / 3); }

bool polymath_mpz(double w, double d) { return 600 * w / 7 + 180 * d / 7 < 1; }

double hm_exponent(double theta, double c1) {
    if (theta <= 0) throw std::invalid_argument("hm_exponent: theta must be > 0");
    if (c1 >= 1) throw std::invalid_argument("hm_exponent: c1 must be < 1");
    return 2.0 / (theta * (1.0 - c1));
}

std::vector<ThresholdCheck> harman_threshold_checks() {
    const double w = 0.01265;
    const double eta = 0.0138825;
    const double t3 = 1.0 / 18 + 28 * w / 9;  // Type III threshold term
    std::vector<ThresholdCheck> checks{
        {"type_i", 199.0 / 600 + 119 * eta / 240, 0.33856, false},
        {"type_ii", std::max(0.25 + 12 * w, 32 * w), 0.40481, false},
        {"type_iii_upper", 0.5 + t3, 0.595, false},
        {"type_iii_lower", 0.405, 0.5 - t3, false},
        {"sieve_window", 2 * t3, 0.19, false},
    };
    for (auto& c : checks) c.pass = c.lhs < c.rhs;
    return checks;
}

std::vector<DHLCase> dhl_cases() {
    return {
        {35265, 2, 0.99479, 0.85213, 0.00556625, 0.0207987, 396516},
        {1624545, 3, 1.00422, 0.80148, 0.00768601, 0.0144419, 24409000},
    };
}

}  // namespace ntv

#pragma once

#include <optional>
#include <string>
#include <vector>

// Inequality systems governing the Type I/II and Type III exponent ranges,
// the sigma window they induce, the simplified and earlier-known sufficient
// conditions on (omega, delta), and the H_m exponent constant.

namespace ntv {

struct ExponentParams {
    double omega = 0.0;
    double delta = 0.0;
    std::optional<double> sigma;
};

struct SigmaWindow {
    double lower = 0.0;
    double upper = 0.0;
    bool nonempty = false;
};

// 72w + 24d < 1  and  48w + 16d + 4s < 1  and  64w + 20d + 2s < 1.
// Throws std::invalid_argument when sigma is absent.
bool type_i_ii_ok(const ExponentParams& p);

// w < 1/12  and  s > 1/18 + 28w/9 + 2d/9. Throws when sigma is absent.
bool type_iii_ok(const ExponentParams& p);

// lower = max{1/18 + 28w/9 + 2d/9, 1/10, 2w},
// upper = min{1/4 - 12w - 4d, 1/2 - 32w - 10d, 1/2};
// nonempty also requires 72w + 24d < 1.
SigmaWindow mpz_sigma_window(double omega, double delta);

// 80w + (80/3)d < 1.
bool mpz_simple(double omega, double delta);
double mpz_simple_margin(double omega, double delta);  // 1 - (80w + 80d/3)

// Earlier sufficient condition: 600w/7 + 180d/7 < 1.
bool polymath_mpz(double omega, double delta);

// 2 / (theta * (1 - c1)). Requires theta > 0 and c1 < 1.
double hm_exponent(double theta, double c1);

struct ThresholdCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;  // lhs < rhs
    double margin() const { return rhs - lhs; }
};

// The five numeric threshold inequalities behind the Type I/II/III
// decomposition, at omega = 0.01265 and eta = 0.0138825. All pass.
std::vector<ThresholdCheck> harman_threshold_checks();

// A published certificate case: k-tuples containing m+1 primes, with the
// sieve-weight coefficients c and T given as multiples of 1/log(k). The
// lower-bound computation behind it is external; this only records the
// parameters, whose (omega, delta) must satisfy the simplified criterion.
struct DHLCase {
    long long k = 0;
    int m = 0;
    double c_coeff = 0.0;  // c = c_coeff / log(k)
    double T_coeff = 0.0;  // T = T_coeff / log(k)
    double omega = 0.0;
    double delta = 0.0;
    long long claimed_diameter = 0;
};

// The two recorded cases: (35265, m=2, diameter 396516) and
// (1624545, m=3, diameter 24409000).
std::vector<DHLCase> dhl_cases();

}  // namespace ntv

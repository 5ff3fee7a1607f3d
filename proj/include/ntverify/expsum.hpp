#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ntverify/modmath.hpp"

// Numerical checks of the exponential-sum identities behind the Type I
// dispersion estimates: the six-factor phase product Psi and its two-factor
// CRT factorization, the phase-splitting identity used by the q-van der
// Corput step, empirical sampling of the square-root cancellation bound,
// and an exact gcd-sum evaluator.

namespace ntv {

struct PsiParams {
    i64 n = 1;
    i64 h1 = 0, h2 = 0;
    i64 ell = 0;
    i64 r1 = 1, q0 = 1, u1 = 1, v1 = 1, v2 = 1, q2 = 1;
    i64 a = 1, b1 = 1, b2 = 1;
    i64 d = 1;

    // m = r1 * q0 * u1 * lcm(v1, v2) * q2
    i64 combined_modulus() const;
};

// Names of violated preconditions; empty when the instance is valid.
// Checked: combined modulus squarefree, (r1 q0 u1 v1 v2 q2, d a b1 b2) = 1,
// (n, d r1 q0 u1 v1 v2) = 1, (n + ell*d*r1, q0 q2) = 1.
std::vector<std::string> psi_param_violations(const PsiParams& p);

// The six-factor product, each factor via eq_phase, with r = d * r1.
std::complex<double> psi_direct(const PsiParams& p);

struct PsiFactored {
    std::complex<double> value;
    i64 A = 0;  // residue mod m, coprime to m
    i64 B = 0;  // residue mod m
    i64 m = 1;
};

// Two-factor form e_d(a*(h1 v2* - h2 v1*)/(n*m)) * e_m(A*(h1 v2* - h2 v1*)/(d(n+Bd))),
// where v* = gcd(v1, v2), vi* = vi/v*. A and B are assembled by CRT from the
// per-prime-factor residues that the splitting chain produces:
//   A = a (mod r1),  A = b1 (mod q0 u1 [v1,v2]),  A = b2 (mod q2),
//   B = 0 (mod m/q2),  B = ell * r1 (mod q2).
// Throws std::invalid_argument listing violated preconditions by name.
PsiFactored psi_factored(const PsiParams& p);

// Checks e_{md}(B*y/(n+C*d)) == e_d(B*c/m) * e_m(B*y/(d*(n+C*d))) with
// c = y * n^{-1} mod d, within tol. Requires (m, d) = (n, d) = 1.
bool phase_split_check(i64 B, i64 y, i64 n, i64 C, i64 d, i64 m, double tol = 1e-9);

// Fixed bump profile: exp(-1/(1-u^2)) rescaled so the support of the
// normalized argument (t - shift)/scale is [1, 2] and the peak value is 1.
struct SmoothCutoff {
    double scale = 1.0;
    double shift = 0.0;
    double operator()(double t) const;
    // Integer support of the cutoff, [first, last] inclusive.
    i64 support_begin() const;
    i64 support_end() const;
};

struct DeligneInstance {
    i64 m = 1;           // squarefree, <= kDeligneDeskCap
    i64 A = 0, B = 0, L = 0;
    SmoothCutoff psi_delta;  // scale = Delta
    SmoothCutoff psi_n;      // scale = N
};

inline constexpr i64 kDeligneDeskCap = 10000;

// |sum_{d,n} psi_Delta(d) psi_N(n) e_m(AL / ((n+Bd)(n+(B+L)d)))| divided by
// gcd(AL, m) * (N/sqrt(m) + sqrt(m)) * (Delta/sqrt(m) + sqrt(m)),
// by direct double summation. Throws on m > desk cap or m not squarefree.
double deligne_ratio(const DeligneInstance& inst);

bool is_squarefree(i64 m);

// sum over |k| <= K with gcd(A*k+B, m) <= T of gcd(A*k+B, m), where
// gcd(0, m) = m. Exact enumeration. Requires A != 0 and T >= K.
i64 gcd_sum(i64 A, i64 B, i64 m, double K, double T);

// Divisor count tau(m), used by the explicit bound 3 * tau(m) * gcd(A,m) * T.
i64 divisor_count(i64 m);

// A uniformly-scrambled valid parameter set (psi_param_violations empty),
// built from small distinct primes by rejection. Deterministic in the RNG.
PsiParams random_psi_params(std::mt19937_64& rng);

}  // namespace ntv

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Exact modular arithmetic and normalized additive characters e_q(a/b).
//
// The phase e_q(a/b) is exp(2*pi*i*c/q) with c = a * b^{-1} mod q when b is
// invertible mod q, and exactly 0 otherwise. The residue c is computed with
// exact integer arithmetic (extended gcd), so the only floating-point step
// is the final complex exponential.

namespace ntv {

using i64 = std::int64_t;

// Reduces a into [0, q). q >= 1.
i64 mod_reduce(i64 a, i64 q);

// (a * b) mod q without overflow for q < 2^62.
i64 mul_mod(i64 a, i64 b, i64 q);

// Multiplicative inverse of a mod q, present iff gcd(a, q) = 1.
// For q = 1 every a is invertible with inverse 0.
std::optional<i64> mod_inverse(i64 a, i64 q);

// exp(2*pi*i*c/q) with c reduced exactly.
std::complex<double> unit_phase(i64 c, i64 q);

// e_q(a/b): unit_phase(a * b^{-1}, q) if gcd(b, q) = 1, else 0.
std::complex<double> eq_phase(i64 a, i64 b, i64 q);

// prod_i e_{q_i}(c / prod_{j != i} q_j) for pairwise coprime moduli.
// Equals eq_phase(c, 1, prod q_i). Throws std::invalid_argument naming the
// offending pair if two moduli share a factor.
std::complex<double> crt_phase_product(i64 c, std::span<const i64> moduli);

}  // namespace ntv

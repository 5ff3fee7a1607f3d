#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ntverify/quadrature.hpp"

// Iterated integrals of 1/(prod a_i * (1 - sum a_i)) over regions whose
// per-variable bounds are maxima/minima of affine forms in the earlier
// variables, evaluated by nested adaptive quadrature, plus a seeded
// Monte Carlo cross-check and the two deficiency integrals whose sum is
// the sieve loss constant.

namespace ntv {

// constant + sum coeffs[j] * x[j] over the previously bound variables.
struct AffineForm {
    double constant = 0.0;
    std::vector<double> coeffs;

    double eval(std::span<const double> x) const {
        double v = constant;
        for (std::size_t j = 0; j < coeffs.size(); ++j) v += coeffs[j] * x[j];
        return v;
    }
};

struct DimBounds {
    std::vector<AffineForm> lowers;  // effective lower = max of these
    std::vector<AffineForm> uppers;  // effective upper = min of these
};

struct IteratedRegion {
    std::vector<DimBounds> dims;

    double lower(std::size_t i, std::span<const double> x) const;
    double upper(std::size_t i, std::span<const double> x) const;
    bool contains(std::span<const double> x) const;
};

// 1/(prod x_i * (1 - sum x_i)). Throws std::domain_error naming the sample
// point if the denominator is not strictly positive.
double deficiency_integrand(std::span<const double> x);

// Nested adaptive quadrature, outermost variable first. Empty slices
// contribute 0. rel_tol must lie in (1e-8, 1e-1); the per-level tolerance is
// tightened until err_est <= rel_tol * |value| (or value == 0).
QuadResult integrate(const IteratedRegion& region, double rel_tol);

IteratedRegion five_prime_region();
IteratedRegion four_prime_region();

QuadResult five_prime_deficiency(double rel_tol = 1e-3);
QuadResult four_prime_deficiency(double rel_tol = 1e-3);
QuadResult c1_total(double rel_tol = 1e-3);

struct McResult {
    double value = 0.0;
    double std_err = 0.0;
    std::uint64_t accepted = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

// Sequential conditional sampling: each coordinate drawn uniformly inside
// its exact conditional interval, weighted by the product of interval
// widths; empty slices contribute 0. mt19937_64 with the given seed,
// deterministic for fixed (samples, seed). accepted counts nonempty draws.
McResult mc_estimate(const IteratedRegion& region, std::uint64_t samples,
                     std::uint64_t seed = kDefaultSeed);

}  // namespace ntv

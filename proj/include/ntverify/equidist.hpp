#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Desk-scale harness for prime equidistribution in arithmetic progressions
// to smooth squarefree moduli: segmented prime sieve, smooth-squarefree
// modulus enumeration, and per-modulus discrepancy tables with a trivial
// bound for comparison.

namespace ntv {

using i64 = std::int64_t;

inline constexpr i64 kPrimeLimitCap = 100000000;  // 1e8
inline constexpr std::size_t kModuliCap = 1000000;

class PrimeTable {
  public:
    explicit PrimeTable(i64 limit);

    i64 limit() const { return limit_; }
    bool is_prime(i64 n) const { return n >= 2 && n <= limit_ && bits_[n]; }
    i64 prime_count(i64 x) const;                 // pi(x)
    i64 count_in_ap(i64 x, i64 q, i64 a) const;   // #{p <= x : p = a mod q}

  private:
    i64 limit_;
    std::vector<bool> bits_;
};

PrimeTable sieve_primes(i64 limit);

struct SmoothModulusSet {
    double z = 2.0;  // smoothness bound: all prime factors < z
    i64 Q = 1;       // cap
    std::vector<i64> moduli;  // sorted, squarefree, z-smooth, includes 1
};

SmoothModulusSet enumerate_smooth_squarefree(double z, i64 Q);

// Euler phi of a squarefree integer: product of (p - 1).
i64 phi_squarefree(i64 q);

struct DiscrepancyRow {
    i64 q = 1;
    i64 count_in_class = 0;  // #{p <= x : p = a mod q}
    double main_term = 0.0;  // #{p <= x : (p, q) = 1} / phi(q)
    double discrepancy = 0.0;
};

struct DiscrepancyReport {
    i64 x = 0;
    i64 a = 1;
    double z = 2.0;
    i64 Q = 1;
    std::vector<DiscrepancyRow> rows;  // ascending q, only (q, a) = 1
    double total = 0.0;                // sum of discrepancies
    double trivial_bound = 0.0;        // sum over q of 2 pi(x) / phi(q)
};

// Moduli from enumerate_smooth_squarefree(x^delta, x^theta); one streaming
// pass over the prime table buckets residues for every modulus at once.
// workers = 0 picks hardware concurrency; output is identical for any
// worker count. Throws on x > 1e8, theta outside (0, 0.55], delta outside
// (0, 0.2], or more than the moduli cap.
DiscrepancyReport discrepancy_table(i64 x, double theta, double delta, i64 a,
                                    unsigned workers = 1);

// Columns q,count,main_term,discrepancy plus a trailing summary row.
std::string to_csv(const DiscrepancyReport& rep);

}  // namespace ntv

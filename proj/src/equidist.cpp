#include "ntverify/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ntv {

PrimeTable::PrimeTable(i64 limit) : limit_(limit) {
    if (limit < 2 || limit > kPrimeLimitCap)
        throw std::invalid_argument("PrimeTable: limit must lie in [2, 1e8]");
    bits_.assign(limit + 1, false);

    // Base primes up to sqrt(limit), then mark segments.
    const i64 root = static_cast<i64>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<bool> small(root + 1, true);
    std::vector<i64> base;
    for (i64 i = 2; i <= root; ++i) {
        if (small[i]) {
            base.push_back(i);
            for (i64 j = i * i; j <= root; j += i) small[j] = false;
        }
    }
    const i64 seg = 1 << 18;
    std::vector<bool> mark;
    for (i64 lo = 2; lo <= limit; lo += seg) {
        const i64 hi = std::min(limit, lo + seg - 1);
        mark.assign(hi - lo + 1, true);
        for (i64 p : base) {
            if (p * p > hi) break;
            i64 start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (i64 j = start; j <= hi; j += p) mark[j - lo] = false;
        }
        for (i64 n = lo; n <= hi; ++n)
            if (mark[n - lo]) bits_[n] = true;
    }
}

i64 PrimeTable::prime_count(i64 x) const {
    if (x > limit_) throw std::invalid_argument("prime_count: x beyond table limit");
    i64 c = 0;
    for (i64 n = 2; n <= x; ++n)
        if (bits_[n]) ++c;
    return c;
}

i64 PrimeTable::count_in_ap(i64 x, i64 q, i64 a) const {
    if (x > limit_) throw std::invalid_argument("count_in_ap: x beyond table limit");
    if (q < 1) throw std::invalid_argument("count_in_ap: q must be >= 1");
    const i64 r = ((a % q) + q) % q;
    i64 c = 0;
    for (i64 n = 2; n <= x; ++n)
        if (bits_[n] && n % q == r) ++c;
    return c;
}

PrimeTable sieve_primes(i64 limit) { return PrimeTable(limit); }

SmoothModulusSet enumerate_smooth_squarefree(double z, i64 Q) {
    if (z < 2.0) throw std::invalid_argument("enumerate_smooth_squarefree: z must be >= 2");
    if (Q < 1) throw std::invalid_argument("enumerate_smooth_squarefree: Q must be >= 1");
    std::vector<i64> primes;
    for (i64 p = 2; static_cast<double>(p) < z; ++p) {
        bool is_p = p >= 2;
        for (i64 d = 2; d * d <= p; ++d)
            if (p % d == 0) { is_p = false; break; }
        if (is_p) primes.push_back(p);
    }
    SmoothModulusSet out;
    out.z = z;
    out.Q = Q;
    // DFS over products of distinct primes, pruned at Q.
    out.moduli.push_back(1);
    auto dfs = [&](auto&& self, std::size_t next, i64 prod) -> void {
        for (std::size_t i = next; i < primes.size(); ++i) {
            if (primes[i] > Q / prod) break;
            i64 q = prod * primes[i];
            out.moduli.push_back(q);
            if (out.moduli.size() > kModuliCap)
                throw std::runtime_error("enumerate_smooth_squarefree: moduli cap exceeded");
            self(self, i + 1, q);
        }
    };
    dfs(dfs, 0, 1);
    std::sort(out.moduli.begin(), out.moduli.end());
    return out;
}

i64 phi_squarefree(i64 q) {
    i64 phi = 1;
    for (i64 p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            q /= p;
            phi *= p - 1;
        }
    }
    if (q > 1) phi *= q - 1;
    return phi;
}

DiscrepancyReport discrepancy_table(i64 x, double theta, double delta, i64 a,
                                    unsigned workers) {
    if (x < 2 || x > kPrimeLimitCap)
        throw std::invalid_argument("discrepancy_table: x must lie in [2, 1e8]");
    if (!(theta > 0.0 && theta <= 0.55))
        throw std::invalid_argument("discrepancy_table: theta must lie in (0, 0.55]");
    if (!(delta > 0.0 && delta <= 0.2))
        throw std::invalid_argument("discrepancy_table: delta must lie in (0, 0.2]");

    const double z = std::pow(static_cast<double>(x), delta);
    const i64 Q = static_cast<i64>(std::pow(static_cast<double>(x), theta));
    auto mods = enumerate_smooth_squarefree(std::max(2.0, z), std::max<i64>(1, Q));

    std::vector<i64> used;  // moduli coprime to a, fixed ascending order
    for (i64 q : mods.moduli)
        if (std::gcd(q, a) == 1) used.push_back(q);

    const PrimeTable table = sieve_primes(x);

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, 64);

    // Per-worker counters: for each modulus, hits in the class a mod q and
    // primes coprime to q. Workers shard the prime range; integer counters
    // merge identically for any worker count.
    const std::size_t nq = used.size();
    std::vector<std::vector<i64>> in_class(workers, std::vector<i64>(nq, 0));
    std::vector<std::vector<i64>> coprime(workers, std::vector<i64>(nq, 0));
    std::vector<i64> residue(nq);
    for (std::size_t i = 0; i < nq; ++i) residue[i] = ((a % used[i]) + used[i]) % used[i];

    auto run = [&](unsigned wid) {
        const i64 span = (x - 1) / workers + 1;
        const i64 lo = 2 + static_cast<i64>(wid) * span;
        const i64 hi = std::min(x, lo + span - 1);
        auto& ic = in_class[wid];
        auto& cp = coprime[wid];
        for (i64 n = lo; n <= hi; ++n) {
            if (!table.is_prime(n)) continue;
            for (std::size_t i = 0; i < nq; ++i) {
                const i64 q = used[i];
                const i64 r = n % q;
                if (r == residue[i]) ++ic[i];
                if (q == 1 || std::gcd(r, q) == 1) ++cp[i];
            }
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    DiscrepancyReport rep;
    rep.x = x;
    rep.a = a;
    rep.z = mods.z;
    rep.Q = mods.Q;
    const double pix = static_cast<double>(table.prime_count(x));
    for (std::size_t i = 0; i < nq; ++i) {
        i64 cnt = 0, cop = 0;
        for (unsigned w = 0; w < workers; ++w) {
            cnt += in_class[w][i];
            cop += coprime[w][i];
        }
        const double ph = static_cast<double>(phi_squarefree(used[i]));
        DiscrepancyRow row;
        row.q = used[i];
        row.count_in_class = cnt;
        row.main_term = static_cast<double>(cop) / ph;
        row.discrepancy = std::abs(static_cast<double>(cnt) - row.main_term);
        rep.total += row.discrepancy;
        rep.trivial_bound += 2.0 * pix / ph;
        rep.rows.push_back(row);
    }
    return rep;
}

std::string to_csv(const DiscrepancyReport& rep) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << "q,count,main_term,discrepancy\n";
    for (const auto& r : rep.rows)
        os << r.q << ',' << r.count_in_class << ',' << r.main_term << ','
           << r.discrepancy << '\n';
    os << "total,,," << rep.total << '\n';
    return os.str();
}

}  // namespace ntv

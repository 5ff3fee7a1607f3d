#include "ntverify/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ntv {

namespace {

// CRT combine: x = r1 mod m1, x = r2 mod m2, (m1, m2) = 1.
i64 crt_pair(i64 r1, i64 m1, i64 r2, i64 m2) {
    if (m2 == 1) return mod_reduce(r1, m1);
    if (m1 == 1) return mod_reduce(r2, m2);
    i64 inv = *mod_inverse(m1, m2);
    i64 diff = mod_reduce(r2 - mod_reduce(r1, m2), m2);
    return mod_reduce(r1, m1) + m1 * mul_mod(diff, inv, m2);
}

}  // namespace

i64 PsiParams::combined_modulus() const {
    i64 vstar = std::gcd(v1, v2);
    return r1 * q0 * u1 * (v1 / vstar) * v2 * q2;
}

std::vector<std::string> psi_param_violations(const PsiParams& p) {
    std::vector<std::string> out;
    for (i64 v : {p.r1, p.q0, p.u1, p.v1, p.v2, p.q2, p.d, p.n})
        if (v < 1) out.push_back("positivity: n, d and all modulus factors must be >= 1");
    if (!out.empty()) return out;
    i64 m = p.combined_modulus();
    if (!is_squarefree(m)) out.push_back("r1*q0*u1*lcm(v1,v2)*q2 squarefree");
    if (std::gcd(m, p.d) != 1 || std::gcd(m, p.a) != 1 || std::gcd(m, p.b1) != 1 ||
        std::gcd(m, p.b2) != 1)
        out.push_back("(r1*q0*u1*v1*v2*q2, d*a*b1*b2) = 1");
    if (std::gcd(p.n, p.d * p.r1 * p.q0 * p.u1) != 1 || std::gcd(p.n, p.v1) != 1 ||
        std::gcd(p.n, p.v2) != 1)
        out.push_back("(n, d*r1*q0*u1*v1*v2) = 1");
    if (std::gcd(p.n + p.ell * p.d * p.r1, p.q0 * p.q2) != 1)
        out.push_back("(n + ell*d*r1, q0*q2) = 1");
    return out;
}

std::complex<double> psi_direct(const PsiParams& p) {
    const i64 r = p.d * p.r1;
    auto phase = [](i64 num, i64 h, std::initializer_list<i64> den_factors, i64 q) {
        i64 den = 1;
        for (i64 f : den_factors) den = mul_mod(den, f, q);
        i64 numr = mul_mod(mod_reduce(num, q), mod_reduce(h, q), q);
        return eq_phase(numr, den, q);
    };
    std::complex<double> f{1.0, 0.0};
    f *= phase(p.a, p.h1, {p.n, p.q0, p.u1, p.v1, p.q2}, r);
    f *= phase(p.b1, p.h1, {p.n, r, p.q2}, p.q0 * p.u1 * p.v1);
    f *= phase(p.b2, p.h1, {p.n + p.ell * r, r, p.q0, p.u1, p.v1}, p.q2);
    f *= phase(-p.a, p.h2, {p.n, p.q0, p.u1, p.v2, p.q2}, r);
    f *= phase(-p.b1, p.h2, {p.n, r, p.q2}, p.q0 * p.u1 * p.v2);
    f *= phase(-p.b2, p.h2, {p.n + p.ell * r, r, p.q0, p.u1, p.v2}, p.q2);
    return f;
}

PsiFactored psi_factored(const PsiParams& p) {
    auto bad = psi_param_violations(p);
    if (!bad.empty()) {
        std::string msg = "psi_factored: precondition violated:";
        for (const auto& s : bad) msg += " [" + s + "]";
        throw std::invalid_argument(msg);
    }
    const i64 vstar = std::gcd(p.v1, p.v2);
    const i64 v1s = p.v1 / vstar;
    const i64 v2s = p.v2 / vstar;
    const i64 m = p.combined_modulus();
    const i64 m_over_q2 = m / p.q2;
    const i64 mid = p.q0 * p.u1 * vstar * v1s * v2s;  // q0*u1*[v1,v2]

    // Per-factor residues produced by the CRT splitting chain.
    i64 A = crt_pair(mod_reduce(p.a, p.r1), p.r1, mod_reduce(p.b1, mid), mid);
    A = crt_pair(A, m_over_q2, mod_reduce(p.b2, p.q2), p.q2);
    i64 B = crt_pair(0, m_over_q2, mod_reduce(p.ell * p.r1, p.q2), p.q2);

    const i64 lam = p.h1 * v2s - p.h2 * v1s;
    std::complex<double> value =
        eq_phase(mul_mod(mod_reduce(p.a, p.d), mod_reduce(lam, p.d), p.d),
                 mul_mod(p.n, m, p.d), p.d) *
        eq_phase(mul_mod(A, mod_reduce(lam, m), m),
                 mul_mod(p.d, mod_reduce(p.n + mul_mod(B, p.d, m), m), m), m);
    return {value, A, B, m};
}

bool phase_split_check(i64 B, i64 y, i64 n, i64 C, i64 d, i64 m, double tol) {
    if (std::gcd(m, d) != 1) throw std::invalid_argument("phase_split_check: (m, d) != 1");
    if (std::gcd(n, d) != 1) throw std::invalid_argument("phase_split_check: (n, d) != 1");
    const i64 md = m * d;
    std::complex<double> lhs =
        eq_phase(mul_mod(mod_reduce(B, md), mod_reduce(y, md), md), mod_reduce(n + C * d, md), md);
    const i64 c = mul_mod(mod_reduce(y, d), *mod_inverse(n, d), d);
    std::complex<double> rhs =
        eq_phase(mul_mod(mod_reduce(B, d), c, d), mod_reduce(m, d), d) *
        eq_phase(mul_mod(mod_reduce(B, m), mod_reduce(y, m), m),
                 mul_mod(d, mod_reduce(n + C * d, m), m), m);
    return std::abs(lhs - rhs) <= tol;
}

double SmoothCutoff::operator()(double t) const {
    double s = (t - shift) / scale;       // support [1, 2]
    double u = 2.0 * (s - 1.0) - 1.0;     // support (-1, 1)
    if (u <= -1.0 || u >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

i64 SmoothCutoff::support_begin() const {
    return static_cast<i64>(std::floor(shift + scale)) ;
}

i64 SmoothCutoff::support_end() const {
    return static_cast<i64>(std::ceil(shift + 2.0 * scale));
}

bool is_squarefree(i64 m) {
    if (m < 1) return false;
    for (i64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

double deligne_ratio(const DeligneInstance& inst) {
    const i64 m = inst.m;
    if (m < 1 || m > kDeligneDeskCap)
        throw std::invalid_argument("deligne_ratio: m outside [1, desk cap]");
    if (!is_squarefree(m)) throw std::invalid_argument("deligne_ratio: m not squarefree");

    // Inverse table mod m (-1 where not invertible) and phase table.
    std::vector<i64> inv(m, -1);
    std::vector<std::complex<double>> phase(m);
    for (i64 t = 0; t < m; ++t) {
        phase[t] = unit_phase(t, m);
        if (auto iv = mod_inverse(t, m)) inv[t] = *iv;
    }

    const i64 al = mul_mod(inst.A, inst.L, m);
    const i64 b = mod_reduce(inst.B, m);
    const i64 bl = mod_reduce(inst.B + inst.L, m);

    std::complex<double> sum{0.0, 0.0};
    const i64 d0 = inst.psi_delta.support_begin(), d1 = inst.psi_delta.support_end();
    const i64 n0 = inst.psi_n.support_begin(), n1 = inst.psi_n.support_end();
    for (i64 d = d0; d <= d1; ++d) {
        const double wd = inst.psi_delta(static_cast<double>(d));
        if (wd == 0.0) continue;
        const i64 bd = mul_mod(b, d, m);
        const i64 bld = mul_mod(bl, d, m);
        for (i64 n = n0; n <= n1; ++n) {
            const double wn = inst.psi_n(static_cast<double>(n));
            if (wn == 0.0) continue;
            const i64 den = mul_mod(mod_reduce(n + bd, m), mod_reduce(n + bld, m), m);
            const i64 iv = inv[den];
            if (iv < 0) continue;  // zero convention
            sum += (wd * wn) * phase[mul_mod(al, iv, m)];
        }
    }

    const double g = static_cast<double>(std::gcd(al == 0 ? m : al, m));
    const double sq = std::sqrt(static_cast<double>(m));
    const double denom = g * (inst.psi_n.scale / sq + sq) * (inst.psi_delta.scale / sq + sq);
    return std::abs(sum) / denom;
}

i64 gcd_sum(i64 A, i64 B, i64 m, double K, double T) {
    if (A == 0) throw std::invalid_argument("gcd_sum: A must be nonzero");
    if (T < K) throw std::invalid_argument("gcd_sum: requires T >= K");
    if (m < 1) throw std::invalid_argument("gcd_sum: m must be >= 1");
    const i64 kmax = static_cast<i64>(std::floor(K));
    i64 total = 0;
    for (i64 k = -kmax; k <= kmax; ++k) {
        i64 v = A * k + B;
        i64 g = (v == 0) ? m : std::gcd(std::abs(v), m);
        if (static_cast<double>(g) <= T) total += g;
    }
    return total;
}

PsiParams random_psi_params(std::mt19937_64& rng) {
    static const i64 pool[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
    std::vector<i64> primes(std::begin(pool), std::end(pool));
    auto pick = [&](i64 lo, i64 hi) {
        return std::uniform_int_distribution<i64>(lo, hi)(rng);
    };
    for (;;) {
        std::shuffle(primes.begin(), primes.end(), rng);
        PsiParams p;
        p.r1 = primes[0];
        p.q0 = primes[1];
        p.u1 = primes[2];
        p.q2 = primes[3];
        // v1, v2 may share primes[4]; the extra factors keep m squarefree.
        p.v1 = (pick(0, 1) ? primes[4] : 1) * (pick(0, 1) ? primes[5] : 1);
        p.v2 = (pick(0, 1) ? primes[4] : 1) * (pick(0, 1) ? primes[6] : 1);
        const i64 m = p.combined_modulus();
        auto coprime_to = [&](i64 modulus, i64 lo, i64 hi) {
            for (;;) {
                i64 c = pick(lo, hi);
                if (c != 0 && std::gcd(std::abs(c), modulus) == 1) return c;
            }
        };
        p.d = coprime_to(m, 1, 30);
        p.n = coprime_to(p.d * p.r1 * p.q0 * p.u1 * p.v1 * p.v2, 1, 60);
        p.a = coprime_to(m, 1, 100);
        p.b1 = coprime_to(m, 1, 100);
        p.b2 = coprime_to(m, 1, 100);
        p.h1 = pick(-20, 20);
        p.h2 = pick(-20, 20);
        p.ell = pick(-5, 5);
        if (psi_param_violations(p).empty()) return p;
    }
}

i64 divisor_count(i64 m) {
    i64 count = 1;
    for (i64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            i64 e = 0;
            while (m % p == 0) { m /= p; ++e; }
            count *= (e + 1);
        }
    }
    if (m > 1) count *= 2;
    return count;
}

}  // namespace ntv

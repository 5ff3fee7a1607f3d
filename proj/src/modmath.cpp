#include "ntverify/modmath.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ntv {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

i64 mod_reduce(i64 a, i64 q) {
    i64 r = a % q;
    return r < 0 ? r + q : r;
}

i64 mul_mod(i64 a, i64 b, i64 q) {
    return static_cast<i64>(static_cast<__int128>(mod_reduce(a, q)) * mod_reduce(b, q) % q);
}

std::optional<i64> mod_inverse(i64 a, i64 q) {
    if (q < 1) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
    if (q == 1) return 0;
    // Extended Euclid on (a mod q, q).
    i64 r0 = mod_reduce(a, q), r1 = q;
    i64 s0 = 1, s1 = 0;
    while (r1 != 0) {
        i64 t = r0 / r1;
        i64 r2 = r0 - t * r1;
        i64 s2 = s0 - t * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) return std::nullopt;
    return mod_reduce(s0, q);
}

std::complex<double> unit_phase(i64 c, i64 q) {
    if (q < 1) throw std::invalid_argument("unit_phase: modulus must be >= 1");
    double t = kTwoPi * static_cast<double>(mod_reduce(c, q)) / static_cast<double>(q);
    return {std::cos(t), std::sin(t)};
}

std::complex<double> eq_phase(i64 a, i64 b, i64 q) {
    auto inv = mod_inverse(b, q);
    if (!inv) return {0.0, 0.0};
    return unit_phase(mul_mod(a, *inv, q), q);
}

std::complex<double> crt_phase_product(i64 c, std::span<const i64> moduli) {
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] < 1) throw std::invalid_argument("crt_phase_product: modulus must be >= 1");
        for (std::size_t j = i + 1; j < moduli.size(); ++j) {
            if (std::gcd(moduli[i], moduli[j]) != 1) {
                throw std::invalid_argument(
                    "crt_phase_product: moduli not coprime: " + std::to_string(moduli[i]) +
                    " and " + std::to_string(moduli[j]));
            }
        }
    }
    std::complex<double> prod{1.0, 0.0};
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        i64 qi = moduli[i];
        i64 rest = 1;
        for (std::size_t j = 0; j < moduli.size(); ++j)
            if (j != i) rest = mul_mod(rest, moduli[j], qi);
        prod *= eq_phase(c, rest, qi);
    }
    return prod;
}

}  // namespace ntv

#include "ntverify/harman.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ntv {

double IteratedRegion::lower(std::size_t i, std::span<const double> x) const {
    double v = -1e300;
    for (const auto& f : dims[i].lowers) v = std::max(v, f.eval(x));
    return v;
}

double IteratedRegion::upper(std::size_t i, std::span<const double> x) const {
    double v = 1e300;
    for (const auto& f : dims[i].uppers) v = std::min(v, f.eval(x));
    return v;
}

bool IteratedRegion::contains(std::span<const double> x) const {
    for (std::size_t i = 0; i < dims.size(); ++i) {
        std::span<const double> prefix(x.data(), i);
        if (x[i] < lower(i, prefix) || x[i] > upper(i, prefix)) return false;
    }
    return true;
}

double deficiency_integrand(std::span<const double> x) {
    double prod = 1.0, sum = 0.0;
    for (double xi : x) {
        prod *= xi;
        sum += xi;
    }
    const double last = 1.0 - sum;
    if (prod <= 0.0 || last <= 0.0) {
        std::ostringstream os;
        os << "integrand denominator vanishes at (";
        for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
        os << ")";
        throw std::domain_error(os.str());
    }
    return 1.0 / (prod * last);
}

namespace {

QuadResult integrate_level(const IteratedRegion& region, std::size_t level,
                           std::vector<double>& pt, double level_tol) {
    std::span<const double> prefix(pt.data(), level);
    const double a = region.lower(level, prefix);
    const double b = region.upper(level, prefix);
    if (!(a < b)) return {0.0, 0.0};
    const bool innermost = level + 1 == region.dims.size();
    auto f = [&](double x) -> std::pair<double, double> {
        pt[level] = x;
        if (innermost)
            return {deficiency_integrand(std::span<const double>(pt.data(), level + 1)), 0.0};
        QuadResult inner = integrate_level(region, level + 1, pt, level_tol);
        return {inner.value, inner.err_est};
    };
    return adaptive_quad(f, a, b, level_tol);
}

}  // namespace

QuadResult integrate(const IteratedRegion& region, double rel_tol) {
    if (!(rel_tol > 1e-8 && rel_tol < 1e-1))
        throw std::invalid_argument("integrate: rel_tol must lie in (1e-8, 1e-1)");
    if (region.dims.empty()) throw std::invalid_argument("integrate: empty region");

    double level_tol = std::clamp(rel_tol / (2.0 * region.dims.size()), 1e-10, 0.05);
    std::vector<double> pt(region.dims.size(), 0.0);
    QuadResult r{};
    for (int attempt = 0; attempt < 4; ++attempt) {
        // Two refinement levels: the coarse/fine difference catches error the
        // per-panel |K15 - G7| estimate misses at min/max bound kinks.
        QuadResult coarse = integrate_level(region, 0, pt, level_tol);
        QuadResult fine = integrate_level(region, 0, pt, level_tol * 0.25);
        r = {fine.value, std::max(fine.err_est, std::abs(fine.value - coarse.value))};
        if (r.value == 0.0 || r.err_est <= rel_tol * std::abs(r.value)) break;
        level_tol *= 0.0625;
    }
    return r;
}

namespace {
constexpr double kLo = 0.19038;
constexpr double kHi = 0.40481;
}  // namespace

IteratedRegion five_prime_region() {
    IteratedRegion r;
    r.dims.resize(4);
    // a1 in [0.19038, 0.40481]
    r.dims[0].lowers = {{kLo, {}}};
    r.dims[0].uppers = {{kHi, {}}};
    // a2 in [0.19038, min{a1, 0.40481 - a1}]
    r.dims[1].lowers = {{kLo, {}}};
    r.dims[1].uppers = {{0.0, {1.0}}, {kHi, {-1.0}}};
    // a3 in [0.19038, a2]
    r.dims[2].lowers = {{kLo, {}}};
    r.dims[2].uppers = {{0.0, {0.0, 1.0}}};
    // a4 in [max{0.19038, 0.59519 - a2 - a3}, min{a3, (1 - a1 - a2 - a3)/2}]
    r.dims[3].lowers = {{kLo, {}}, {0.59519, {0.0, -1.0, -1.0}}};
    r.dims[3].uppers = {{0.0, {0.0, 0.0, 1.0}}, {0.5, {-0.5, -0.5, -0.5}}};
    return r;
}

IteratedRegion four_prime_region() {
    IteratedRegion r;
    r.dims.resize(4);
    const double cap = 0.23848;
    // a2 in [0.19038, 0.23848]
    r.dims[0].lowers = {{kLo, {}}};
    r.dims[0].uppers = {{cap, {}}};
    // a3 in [0.19038, min{0.23848, a2}]
    r.dims[1].lowers = {{kLo, {}}};
    r.dims[1].uppers = {{cap, {}}, {0.0, {1.0}}};
    // a4 in [max{a3, 0.19038}, min{0.23848, 0.40481 - a2}]
    r.dims[2].lowers = {{0.0, {0.0, 1.0}}, {kLo, {}}};
    r.dims[2].uppers = {{cap, {}}, {kHi, {-1.0}}};
    // a5 in [max{0.19038, 0.59519 - a3 - a4}, min{0.23848, (1 - a2 - a3 - a4)/2}]
    r.dims[3].lowers = {{kLo, {}}, {0.59519, {0.0, -1.0, -1.0}}};
    r.dims[3].uppers = {{cap, {}}, {0.5, {-0.5, -0.5, -0.5}}};
    return r;
}

QuadResult five_prime_deficiency(double rel_tol) {
    return integrate(five_prime_region(), rel_tol);
}

QuadResult four_prime_deficiency(double rel_tol) {
    return integrate(four_prime_region(), rel_tol);
}

QuadResult c1_total(double rel_tol) {
    QuadResult five = five_prime_deficiency(rel_tol);
    QuadResult four = four_prime_deficiency(rel_tol);
    return {five.value + four.value, five.err_est + four.err_est};
}

McResult mc_estimate(const IteratedRegion& region, std::uint64_t samples,
                     std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("mc_estimate: samples must be > 0");
    const std::size_t d = region.dims.size();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x(d);
    double sum = 0.0, sumsq = 0.0;
    std::uint64_t accepted = 0;
    // Sequential conditional sampling: draw each coordinate uniformly inside
    // its exact conditional interval and carry the product of widths as the
    // sample weight; empty slices reject the sample with weight 0. Unbiased,
    // and usable on regions far too thin for box rejection.
    for (std::uint64_t s = 0; s < samples; ++s) {
        double w = 1.0;
        bool inside = true;
        for (std::size_t i = 0; i < d; ++i) {
            std::span<const double> prefix(x.data(), i);
            const double lo = region.lower(i, prefix);
            const double hi = region.upper(i, prefix);
            if (!(lo < hi)) {
                inside = false;
                break;
            }
            x[i] = lo + (hi - lo) * unit(rng);
            w *= hi - lo;
        }
        double v = 0.0;
        if (inside) {
            v = w * deficiency_integrand(x);
            ++accepted;
        }
        sum += v;
        sumsq += v * v;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double var = std::max(0.0, sumsq / n - mean * mean);
    return {mean, std::sqrt(var / n), accepted};
}

}  // namespace ntv

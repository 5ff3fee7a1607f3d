#include "ntverify/tuples.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ntv {

namespace {

// Lemire fastmod for 32-bit operands.
struct FastMod {
    std::uint64_t magic;
    std::uint32_t d;
    explicit FastMod(std::uint32_t div) : magic(~0ULL / div + 1), d(div) {}
    std::uint32_t operator()(std::uint32_t x) const {
        std::uint64_t low = magic * x;
        return static_cast<std::uint32_t>((static_cast<unsigned __int128>(low) * d) >> 64);
    }
};

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> primes;
    if (n < 2) return primes;
    std::vector<bool> comp(n + 1, false);
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (!comp[i]) {
            primes.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= n; j += i)
                comp[j] = true;
        }
    }
    return primes;
}

}  // namespace

PrimeTuple parse_tuple(std::istream& in, ParseStats* stats) {
    std::vector<i64> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            i64 v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw TupleParseError("line " + std::to_string(lineno) +
                                      ": not an integer: '" + tok + "'");
            values.push_back(v);
        }
    }
    if (values.empty()) throw TupleParseError("empty input: no offsets found");
    std::size_t original = values.size();
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const i64 base = values.front();
    for (i64& v : values) v -= base;
    if (stats) {
        stats->original_count = original;
        stats->retained_count = values.size();
    }
    return PrimeTuple{std::move(values)};
}

PrimeTuple parse_tuple_file(const std::string& path, ParseStats* stats) {
    std::ifstream in(path);
    if (!in) throw TupleParseError("cannot open tuple file: " + path);
    return parse_tuple(in, stats);
}

AdmissibilityReport is_admissible(const PrimeTuple& t, unsigned workers) {
    const i64 k = t.k();
    if (k < 1) throw std::invalid_argument("is_admissible: empty tuple");
    if (k == 1) return {true, std::nullopt, 0};

    const auto primes = primes_up_to(static_cast<std::uint32_t>(k));
    std::vector<std::uint32_t> offs(t.offsets.begin(), t.offsets.end());

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, primes.size() ? primes.size() : 1);

    std::atomic<bool> cancelled{false};
    std::atomic<i64> best_witness{0};
    std::vector<i64> checked_per_worker(workers, 0);

    auto run = [&](unsigned wid) {
        const std::uint32_t max_p = primes.empty() ? 2 : primes.back();
        std::vector<std::uint32_t> stamp(max_p, 0);
        std::uint32_t epoch = 0;
        i64 checked = 0;
        for (std::size_t pi = wid; pi < primes.size(); pi += workers) {
            if (cancelled.load(std::memory_order_relaxed)) break;
            const std::uint32_t p = primes[pi];
            const FastMod fm(p);
            ++epoch;
            std::uint32_t marked = 0;
            bool covered = false;
            const std::size_t n = offs.size();
            for (std::size_t j = 0; j < n;) {
                std::size_t block_end = std::min(n, j + 256);
                for (; j < block_end; ++j) {
                    std::uint32_t r = fm(offs[j]);
                    if (stamp[r] != epoch) {
                        stamp[r] = epoch;
                        ++marked;
                    }
                }
                if (marked == p) { covered = true; break; }
                // Remaining offsets cannot cover the unmarked residues.
                if (static_cast<std::size_t>(p - marked) > n - j) break;
            }
            ++checked;
            if (covered) {
                // keep the smallest witness seen across workers
                i64 cur = best_witness.load();
                while ((cur == 0 || cur > static_cast<i64>(p)) &&
                       !best_witness.compare_exchange_weak(cur, static_cast<i64>(p))) {}
                cancelled.store(true, std::memory_order_relaxed);
                break;
            }
        }
        checked_per_worker[wid] = checked;
    };

    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    AdmissibilityReport rep;
    rep.primes_checked = std::accumulate(checked_per_worker.begin(), checked_per_worker.end(), i64{0});
    i64 w = best_witness.load();
    if (w != 0) {
        rep.admissible = false;
        rep.witness_prime = w;
    } else {
        rep.admissible = true;
    }
    return rep;
}

Window narrowest_window(const PrimeTuple& t, i64 k) {
    if (k < 1 || k > t.k())
        throw std::invalid_argument("narrowest_window: k must be in [1, tuple length]");
    const auto& h = t.offsets;
    std::size_t best_i = 0;
    i64 best_d = h[k - 1] - h[0];
    for (std::size_t i = 1; i + k <= h.size(); ++i) {
        i64 d = h[i + k - 1] - h[i];
        if (d < best_d) {
            best_d = d;
            best_i = i;
        }
    }
    return {best_i, best_d};
}

PrimeTuple baseline_tuple(i64 k) {
    if (k < 1) throw std::invalid_argument("baseline_tuple: k must be >= 1");
    // First k primes strictly greater than k. Grow the sieve until we have them.
    std::uint64_t bound = static_cast<std::uint64_t>(k) * 2 + 100;
    for (;;) {
        auto primes = primes_up_to(static_cast<std::uint32_t>(bound));
        std::vector<i64> sel;
        for (auto p : primes)
            if (static_cast<i64>(p) > k) sel.push_back(p);
        if (static_cast<i64>(sel.size()) >= k) {
            sel.resize(k);
            const i64 base = sel.front();
            for (i64& v : sel) v -= base;
            return PrimeTuple{std::move(sel)};
        }
        bound *= 2;
    }
}

}  // namespace ntv

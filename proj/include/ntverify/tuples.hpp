#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

// Admissible prime-tuple ingestion and verification, narrowest-sub-tuple
// extraction, and a self-contained baseline construction.
//
// A k-tuple of offsets h_1 < ... < h_k is admissible if for every prime
// p <= k the offsets miss at least one residue class mod p. Primes p > k
// can never be covered by k values, so they are skipped.

namespace ntv {

using i64 = std::int64_t;

struct PrimeTuple {
    std::vector<i64> offsets;  // strictly increasing, offsets[0] == 0

    i64 k() const { return static_cast<i64>(offsets.size()); }
    i64 diameter() const { return offsets.empty() ? 0 : offsets.back() - offsets.front(); }
};

struct ParseStats {
    std::size_t original_count = 0;
    std::size_t retained_count = 0;
};

struct TupleParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integers separated by newlines and/or commas; '#' starts a comment line.
// Sorted, deduplicated, normalized to start at 0. Throws TupleParseError
// with a line number on a non-integer token, or on empty input.
PrimeTuple parse_tuple(std::istream& in, ParseStats* stats = nullptr);
PrimeTuple parse_tuple_file(const std::string& path, ParseStats* stats = nullptr);

struct AdmissibilityReport {
    bool admissible = false;
    std::optional<i64> witness_prime;  // present iff not admissible
    i64 primes_checked = 0;
};

// workers = 0 picks std::thread::hardware_concurrency().
AdmissibilityReport is_admissible(const PrimeTuple& t, unsigned workers = 0);

struct Window {
    std::size_t start_index = 0;
    i64 diameter = 0;
};

// Minimizes offsets[i+k-1] - offsets[i]; ties broken by smallest i.
// Throws std::invalid_argument when k < 1 or k > t.k().
Window narrowest_window(const PrimeTuple& t, i64 k);

// The first k primes strictly greater than k, normalized to start at 0.
// Admissible by construction.
PrimeTuple baseline_tuple(i64 k);

}  // namespace ntv

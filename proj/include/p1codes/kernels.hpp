#ifndef P1CODES_KERNELS_HPP
#define P1CODES_KERNELS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "p1codes/config.hpp"
#include "p1codes/field.hpp"
#include "p1codes/projline.hpp"

namespace p1codes {

// The exhaustive scans below are pure per candidate, so each one comes in a
// serial reference version and an OpenMP version.  Results are deterministic
// and identical between the two (histogram merges are commutative sums,
// minima are associative, candidate lists are sorted before returning, and
// per-trial RNG streams are derived from (seed, trial) rather than from the
// schedule).  bench/bench_kernels.cpp compares the pair timings.

// Deterministic 64-bit generator (splitmix64), stable across platforms.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, n) by rejection
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lim = ~0ull - ~0ull % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= lim);
        return v % n;
    }
};

// --- codeword weight scan --------------------------------------------------
// Full enumeration of the q^k codewords of the code spanned by the k x n
// generator (full row rank assumed).  counts[w] = number of codewords of
// Hamming weight w; min_weight over the nonzero codewords (n+1 if k = 0).
struct WeightScanResult {
    std::vector<std::uint64_t> counts;
    std::size_t min_weight;
};
WeightScanResult weight_scan(const Field& f, std::size_t k, std::size_t n,
                             std::span<const std::uint32_t> generator,
                             ExecMode mode = ExecMode::Parallel);

// --- sampled k-column minors ------------------------------------------------
// `trials` pseudorandom k-subsets of the n columns; reports whether every
// sampled k x k minor was nonsingular, with the failing column set (by the
// smallest trial index) as witness otherwise.
struct MinorTrialResult {
    bool all_nonsingular;
    std::uint64_t trials;
    std::uint64_t seed;
    std::optional<std::vector<std::uint32_t>> witness_columns;
};
MinorTrialResult minor_sample_scan(const Field& f, std::size_t k, std::size_t n,
                                   std::span<const std::uint32_t> generator, std::uint64_t trials,
                                   std::uint64_t seed, ExecMode mode = ExecMode::Parallel);

// --- exhaustive S_n scan ----------------------------------------------------
// All permutations sigma of the n coordinates with every permuted generator
// row still inside the code (checked against the parity rows H).  Returned
// as 0-based image vectors in lexicographic rank order.
std::vector<std::vector<std::uint32_t>> sn_preserving_scan(const Field& f, std::size_t k, std::size_t n,
                                                           std::span<const std::uint32_t> generator,
                                                           std::span<const std::uint32_t> parity,
                                                           std::size_t parity_rows,
                                                           ExecMode mode = ExecMode::Parallel);

// --- exhaustive PGL(2, q) scan ----------------------------------------------
// All Moebius maps fixing both divisors, sorted canonically.
std::vector<MoebiusMap> pgl_stabilizer_scan(const Field& f, const Divisor& D, const Divisor& E,
                                            ExecMode mode = ExecMode::Parallel);

// --- orbit scan ---------------------------------------------------------------
// Point keys: 0 = infinity, 1 + canonical rank for affine points, so the key
// order is the canonical point order.  For every point of P^1(F), the minimal
// key in its orbit under the given group elements; points share a value iff
// they share an orbit.
std::vector<std::uint32_t> orbit_min_scan(const Field& f, std::span<const MoebiusMap> elements,
                                          ExecMode mode = ExecMode::Parallel);

std::uint32_t point_key(const P1Point& p);
P1Point point_from_key(const Field& f, std::uint32_t key);

}  // namespace p1codes

#endif

#include "p1codes/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace p1codes {

namespace {

std::uint64_t pow_u64(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return seed ^ (0xd1342543de82ef95ull * (trial + 1)) ^ 0x632be59bd9b4e019ull;
}

// weight histogram of the chunk [lo, hi) of the message space
void weight_scan_chunk(const Field& f, std::size_t k, std::size_t n,
                       std::span<const std::uint32_t> gen, std::uint64_t lo, std::uint64_t hi,
                       std::vector<std::uint64_t>& counts) {
    const std::uint64_t q = f.q();
    std::vector<std::uint32_t> cw(n);
    for (std::uint64_t m = lo; m < hi; ++m) {
        std::fill(cw.begin(), cw.end(), 0);
        std::uint64_t mm = m;
        for (std::size_t j = 0; j < k && mm; ++j, mm /= q) {
            std::uint32_t d = std::uint32_t(mm % q);
            if (d == 0) continue;
            const std::uint32_t* row = gen.data() + j * n;
            if (d == 1) {
                for (std::size_t i = 0; i < n; ++i) cw[i] = f.add(cw[i], row[i]);
            } else {
                for (std::size_t i = 0; i < n; ++i) cw[i] = f.add(cw[i], f.mul(d, row[i]));
            }
        }
        std::size_t w = 0;
        for (std::size_t i = 0; i < n; ++i) w += cw[i] != 0;
        ++counts[w];
    }
}

}  // namespace

std::uint32_t point_key(const P1Point& p) {
    return p.is_infinity() ? 0 : 1 + std::uint32_t(p.field().rank_of(p.value_index()));
}

P1Point point_from_key(const Field& f, std::uint32_t key) {
    return key == 0 ? P1Point::infinity(f) : P1Point::affine(FieldElement(f, f.element_at_rank(key - 1)));
}

WeightScanResult weight_scan(const Field& f, std::size_t k, std::size_t n,
                             std::span<const std::uint32_t> gen, ExecMode mode) {
    if (gen.size() != k * n) throw std::invalid_argument("weight_scan: generator size mismatch");
    WeightScanResult res;
    res.counts.assign(n + 1, 0);
    if (k == 0) {
        res.counts[0] = 1;
        res.min_weight = n + 1;
        return res;
    }
    const std::uint64_t total = pow_u64(f.q(), k);

    if (mode == ExecMode::Serial) {
        weight_scan_chunk(f, k, n, gen, 1, total, res.counts);
    } else {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<std::uint64_t> local(n + 1, 0);
            int nt = omp_get_num_threads();
            int id = omp_get_thread_num();
            std::uint64_t span = total - 1;
            std::uint64_t lo = 1 + span * id / nt;
            std::uint64_t hi = 1 + span * (id + 1) / nt;
            weight_scan_chunk(f, k, n, gen, lo, hi, local);
#pragma omp critical
            for (std::size_t w = 0; w <= n; ++w) res.counts[w] += local[w];
        }
#else
        weight_scan_chunk(f, k, n, gen, 1, total, res.counts);
#endif
    }
    res.counts[0] += 1;  // the zero codeword
    res.min_weight = n + 1;
    for (std::size_t w = 1; w <= n; ++w)
        if (res.counts[w]) {
            res.min_weight = w;
            break;
        }
    return res;
}

namespace {

// true iff the k x k column submatrix is nonsingular
bool minor_nonsingular(const Field& f, std::size_t k, std::size_t n,
                       std::span<const std::uint32_t> gen, const std::vector<std::uint32_t>& cols,
                       std::vector<std::uint32_t>& scratch) {
    scratch.resize(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) scratch[i * k + j] = gen[i * n + cols[j]];
    std::size_t row = 0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t sel = row;
        while (sel < k && scratch[sel * k + col] == 0) ++sel;
        if (sel == k) return false;
        if (sel != row)
            for (std::size_t j = col; j < k; ++j) std::swap(scratch[sel * k + j], scratch[row * k + j]);
        std::uint32_t inv = f.inv(scratch[row * k + col]);
        for (std::size_t i = row + 1; i < k; ++i) {
            std::uint32_t c = scratch[i * k + col];
            if (c == 0) continue;
            std::uint32_t factor = f.mul(c, inv);
            for (std::size_t j = col; j < k; ++j)
                scratch[i * k + j] = f.sub(scratch[i * k + j], f.mul(factor, scratch[row * k + j]));
        }
        ++row;
    }
    return true;
}

std::vector<std::uint32_t> sample_columns(std::size_t k, std::size_t n, SplitMix64& rng,
                                          std::vector<std::uint32_t>& pool) {
    pool.resize(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + std::size_t(rng.below(n - i));
        std::swap(pool[i], pool[j]);
    }
    std::vector<std::uint32_t> cols(pool.begin(), pool.begin() + k);
    std::sort(cols.begin(), cols.end());
    return cols;
}

}  // namespace

MinorTrialResult minor_sample_scan(const Field& f, std::size_t k, std::size_t n,
                                   std::span<const std::uint32_t> gen, std::uint64_t trials,
                                   std::uint64_t seed, ExecMode mode) {
    if (gen.size() != k * n || k == 0 || k > n) throw std::invalid_argument("minor_sample_scan: bad shape");
    MinorTrialResult res{true, trials, seed, std::nullopt};
    std::uint64_t worst_fail = ~0ull;
    std::vector<std::uint32_t> fail_cols;

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t& local_fail,
                         std::vector<std::uint32_t>& local_cols) {
        std::vector<std::uint32_t> scratch, pool;
        for (std::uint64_t t = lo; t < hi; ++t) {
            SplitMix64 rng(trial_seed(seed, t));
            auto cols = sample_columns(k, n, rng, pool);
            if (!minor_nonsingular(f, k, n, gen, cols, scratch)) {
                if (t < local_fail) {
                    local_fail = t;
                    local_cols = cols;
                }
            }
        }
    };

    if (mode == ExecMode::Serial) {
        run_range(0, trials, worst_fail, fail_cols);
    } else {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::uint64_t lf = ~0ull;
            std::vector<std::uint32_t> lc;
            int nt = omp_get_num_threads();
            int id = omp_get_thread_num();
            run_range(trials * id / nt, trials * (id + 1) / nt, lf, lc);
#pragma omp critical
            if (lf < worst_fail) {
                worst_fail = lf;
                fail_cols = lc;
            }
        }
#else
        run_range(0, trials, worst_fail, fail_cols);
#endif
    }
    if (worst_fail != ~0ull) {
        res.all_nonsingular = false;
        res.witness_columns = fail_cols;
    }
    return res;
}

namespace {

std::uint64_t factorial(std::size_t n) {
    std::uint64_t r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

// permutation of [0, n) with the given lexicographic rank
void unrank_permutation(std::uint64_t rank, std::size_t n, std::vector<std::uint32_t>& out) {
    std::vector<std::uint32_t> avail(n);
    std::iota(avail.begin(), avail.end(), 0);
    out.resize(n);
    std::uint64_t f = factorial(n);
    for (std::size_t i = 0; i < n; ++i) {
        f /= n - i;
        std::size_t d = std::size_t(rank / f);
        rank %= f;
        out[i] = avail[d];
        avail.erase(avail.begin() + std::ptrdiff_t(d));
    }
}

bool permutation_preserves(const Field& f, std::size_t k, std::size_t n,
                           std::span<const std::uint32_t> gen, std::span<const std::uint32_t> parity,
                           std::size_t parity_rows, const std::vector<std::uint32_t>& images) {
    for (std::size_t r = 0; r < k; ++r) {
        const std::uint32_t* row = gen.data() + r * n;
        for (std::size_t h = 0; h < parity_rows; ++h) {
            const std::uint32_t* hr = parity.data() + h * n;
            std::uint32_t acc = 0;
            for (std::size_t i = 0; i < n; ++i) acc = f.add(acc, f.mul(hr[i], row[images[i]]));
            if (acc != 0) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> sn_preserving_scan(const Field& f, std::size_t k, std::size_t n,
                                                           std::span<const std::uint32_t> gen,
                                                           std::span<const std::uint32_t> parity,
                                                           std::size_t parity_rows, ExecMode mode) {
    const std::uint64_t total = factorial(n);
    std::vector<std::uint64_t> hits;

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& local) {
        std::vector<std::uint32_t> images;
        if (lo >= hi) return;
        unrank_permutation(lo, n, images);
        for (std::uint64_t r = lo; r < hi; ++r) {
            if (permutation_preserves(f, k, n, gen, parity, parity_rows, images)) local.push_back(r);
            std::next_permutation(images.begin(), images.end());
        }
    };

    if (mode == ExecMode::Serial) {
        run_range(0, total, hits);
    } else {
#ifdef _OPENMP
        std::vector<std::vector<std::uint64_t>> per_thread;
#pragma omp parallel
        {
#pragma omp single
            per_thread.resize(std::size_t(omp_get_num_threads()));
            int nt = omp_get_num_threads();
            int id = omp_get_thread_num();
            run_range(total * id / nt, total * (id + 1) / nt, per_thread[std::size_t(id)]);
        }
        for (auto& v : per_thread) hits.insert(hits.end(), v.begin(), v.end());
        std::sort(hits.begin(), hits.end());
#else
        run_range(0, total, hits);
#endif
    }

    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(hits.size());
    std::vector<std::uint32_t> images;
    for (auto r : hits) {
        unrank_permutation(r, n, images);
        out.push_back(images);
    }
    return out;
}

std::vector<MoebiusMap> pgl_stabilizer_scan(const Field& f, const Divisor& D, const Divisor& E,
                                            ExecMode mode) {
    const std::uint64_t q = f.q();
    // canonical representatives: (1, b, c, d) with d != bc, and (0, 1, c, d) with c != 0
    const std::uint64_t shape_a = q * q * q;
    const std::uint64_t total = shape_a + q * q;

    auto candidate = [&](std::uint64_t idx) -> std::optional<MoebiusMap> {
        const Field& F = f;
        if (idx < shape_a) {
            std::uint32_t b = std::uint32_t(idx / (q * q));
            std::uint32_t c = std::uint32_t((idx / q) % q);
            std::uint32_t d = std::uint32_t(idx % q);
            if (d == F.mul(b, c)) return std::nullopt;
            return MoebiusMap(F.one(), FieldElement(F, b), FieldElement(F, c), FieldElement(F, d));
        }
        idx -= shape_a;
        std::uint32_t c = std::uint32_t(idx / q);
        std::uint32_t d = std::uint32_t(idx % q);
        if (c == 0) return std::nullopt;
        return MoebiusMap(F.zero(), F.one(), FieldElement(F, c), FieldElement(F, d));
    };

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<MoebiusMap>& local) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            auto g = candidate(i);
            if (!g) continue;
            if (divisor_apply(*g, D) == D && divisor_apply(*g, E) == E) local.push_back(*g);
        }
    };

    std::vector<MoebiusMap> found;
    if (mode == ExecMode::Serial) {
        run_range(0, total, found);
    } else {
#ifdef _OPENMP
        std::vector<std::vector<MoebiusMap>> per_thread;
#pragma omp parallel
        {
#pragma omp single
            per_thread.resize(std::size_t(omp_get_num_threads()));
            int nt = omp_get_num_threads();
            int id = omp_get_thread_num();
            run_range(total * id / nt, total * (id + 1) / nt, per_thread[std::size_t(id)]);
        }
        for (auto& v : per_thread) found.insert(found.end(), v.begin(), v.end());
#else
        run_range(0, total, found);
#endif
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<std::uint32_t> orbit_min_scan(const Field& f, std::span<const MoebiusMap> elements,
                                          ExecMode mode) {
    const std::int64_t npts = std::int64_t(f.q()) + 1;
    std::vector<std::uint32_t> out(static_cast<std::size_t>(npts), 0);

    auto body = [&](std::int64_t i) {
        P1Point p = point_from_key(f, std::uint32_t(i));
        std::uint32_t best = ~0u;
        for (const auto& g : elements) best = std::min(best, point_key(g.apply(p)));
        out[std::size_t(i)] = best;
    };

    if (mode == ExecMode::Serial) {
        for (std::int64_t i = 0; i < npts; ++i) body(i);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < npts; ++i) body(i);
#else
        for (std::int64_t i = 0; i < npts; ++i) body(i);
#endif
    }
    return out;
}

}  // namespace p1codes

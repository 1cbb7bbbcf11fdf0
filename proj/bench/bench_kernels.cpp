// Timing comparison of the serial reference kernels against their OpenMP
// versions, on representative instances.  Each pair is also checked for
// equal output, so a wrong parallelization shows up here as well as in the
// unit tests.

#include <cstdio>
#include <string>

#include "p1codes/kernels.hpp"
#include "p1codes/scenarios.hpp"

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
static double omp_get_wtime() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}
static int omp_get_max_threads() { return 1; }
#endif

using namespace p1codes;

namespace {

int failures = 0;

template <typename F>
double timed(F&& fn) {
    double t = omp_get_wtime();
    fn();
    return omp_get_wtime() - t;
}

void report(const std::string& name, double serial, double parallel, bool equal) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx  %s\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, equal ? "outputs equal" : "OUTPUTS DIFFER");
    if (!equal) ++failures;
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", omp_get_max_threads());
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        // weight scan: [12,6] generalized Reed-Solomon style code over GF(13)
        FieldPtr f = Field::make(13, 1);
        std::vector<P1Point> pts;
        std::vector<FieldElement> mult;
        for (int a = 0; a < 12; ++a) {
            pts.push_back(P1Point::affine_int(*f, a));
            mult.push_back(FieldElement(*f, f->from_int(1 + (a % 5))));
        }
        LinearCode c = grs_code(5, pts, mult);
        WeightScanResult rs, rp;
        double ts = timed([&] { rs = weight_scan(*f, c.k, c.n, c.gen, ExecMode::Serial); });
        double tp = timed([&] { rp = weight_scan(*f, c.k, c.n, c.gen, ExecMode::Parallel); });
        report("weight_scan 13^6", ts, tp, rs.counts == rp.counts && rs.min_weight == rp.min_weight);
    }

    {
        // sampled minors on the [42,21] code over GF(61)
        BuiltCode ex = build_ex41();
        MinorTrialResult rs, rp;
        double ts = timed([&] {
            rs = minor_sample_scan(*ex.field, ex.code.k, ex.code.n, ex.code.gen, 4000, 7, ExecMode::Serial);
        });
        double tp = timed([&] {
            rp = minor_sample_scan(*ex.field, ex.code.k, ex.code.n, ex.code.gen, 4000, 7, ExecMode::Parallel);
        });
        report("minor_sample 42x21 GF(61)", ts, tp,
               rs.all_nonsingular == rp.all_nonsingular && rs.witness_columns == rp.witness_columns);
    }

    {
        // exhaustive S_8 scan on an [8,2] code over GF(11)
        FieldPtr f = Field::make(11, 1);
        std::vector<P1Point> pts;
        std::vector<FieldElement> mult;
        for (int a = 0; a < 8; ++a) {
            pts.push_back(P1Point::affine_int(*f, a));
            mult.push_back(f->one());
        }
        LinearCode c = grs_code(1, pts, mult);
        Mat parity = null_space(c.generator_matrix());
        std::vector<std::vector<std::uint32_t>> rs, rp;
        double ts = timed([&] {
            rs = sn_preserving_scan(*f, c.k, c.n, c.gen, parity.data(), parity.rows(), ExecMode::Serial);
        });
        double tp = timed([&] {
            rp = sn_preserving_scan(*f, c.k, c.n, c.gen, parity.data(), parity.rows(), ExecMode::Parallel);
        });
        report("sn_scan 8!", ts, tp, rs == rp);
    }

    {
        // PGL(2,11) stabilizer scan
        FieldPtr f = Field::make(11, 1);
        Divisor D(*f);
        D.add_term(P1Point::affine_int(*f, 0), 1);
        D.add_term(P1Point::infinity(*f), 1);
        Divisor E(*f);
        for (int a = 1; a <= 10; ++a) E.add_term(P1Point::affine_int(*f, a), 1);
        std::vector<MoebiusMap> rs, rp;
        double ts = timed([&] { rs = pgl_stabilizer_scan(*f, D, E, ExecMode::Serial); });
        double tp = timed([&] { rp = pgl_stabilizer_scan(*f, D, E, ExecMode::Parallel); });
        report("pgl_scan q=11", ts, tp, rs == rp);
    }

    {
        // orbit scan of PSL(2,7) over GF(7^4)
        FieldPtr f = Field::make(7, 4);
        GroupOnP1 g = make_family(Family::PSL2, FamilyParams{0, 0, 1}, *f);
        std::vector<std::uint32_t> rs, rp;
        double ts = timed([&] { rs = orbit_min_scan(*f, g.elements(), ExecMode::Serial); });
        double tp = timed([&] { rp = orbit_min_scan(*f, g.elements(), ExecMode::Parallel); });
        report("orbit_scan PSL(2,7)/GF(7^4)", ts, tp, rs == rp);
    }

    return failures ? 1 : 0;
}

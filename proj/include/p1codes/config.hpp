#ifndef P1CODES_CONFIG_HPP
#define P1CODES_CONFIG_HPP

#include <cstdint>
#include <string>

namespace p1codes {

inline constexpr const char* kToolName = "p1codes";
inline constexpr const char* kToolVersion = "0.1.0";

enum class ExecMode { Serial, Parallel };

// Hard limits for the brute-force parts.  Every exhaustive loop checks its
// budget up front and throws budget_error instead of starting a scan that
// cannot finish at desk scale.
struct Budgets {
    std::uint64_t closure_bound = 100000;        // group closure element cap
    std::uint64_t enumeration_budget = 1000000;  // codeword / function space scans
    std::uint64_t sample_trials = 10000;         // randomized k-subset trials
    std::uint64_t sn_scan_max_n = 8;             // exhaustive S_n scan
    std::uint64_t pgl_scan_max_q = 11;           // exhaustive PGL(2,q) scan
    std::uint64_t field_order_budget = 1u << 21; // largest q = p^k we construct
};

struct RunConfig {
    std::uint64_t seed = 0;
    Budgets budgets;
    ExecMode exec = ExecMode::Parallel;
    std::string output_path;  // empty = stdout
};

}  // namespace p1codes

#endif

#ifndef P1CODES_SCENARIOS_HPP
#define P1CODES_SCENARIOS_HPP

#include <optional>
#include <string>
#include <vector>

#include "p1codes/json_io.hpp"

namespace p1codes {

// Named constructions used by the CLI and the acceptance suite.  Each result
// keeps its field alive alongside the objects referencing it.
struct BuiltCode {
    FieldPtr field;
    LinearCode code;
    std::optional<GroupOnP1> group;
    std::string scenario;
    std::vector<std::string> notes;
};

// [6,2] Reed-Solomon over GF(7): D = inf, E = 1..6; cyclic symmetry x -> 3x.
BuiltCode build_rs62();

// Cyclic order-3 instance over GF(7): D = (0) + (inf), E = the six nonzero
// affine points (two 3-orbits); n = 6 > 2 deg(D).
BuiltCode build_cyc3();

// The [42, 21] code with A5 symmetry over the smallest sufficient field:
// D = the size-20 special orbit, E = the union of the size-30 and size-12
// special orbits.
BuiltCode build_ex41(std::uint64_t qmax = 4096);

// Desk-scale analog of the PSL(2,q) family: PSL(2,7) acting over GF(7^6),
// D = 13 * (sum over P1(GF(7))), E = the 42-point short orbit plus one
// generic 168-point orbit, giving n = 210 = 2k.
BuiltCode build_ex42desk();

BuiltCode build_named(const std::string& name, const RunConfig& cfg);

// Report runners behind the CLI subcommands.  `all_ok` collects the asserted
// identities (not the reported findings).
json orbits_report(Family fam, const FamilyParams& params, std::uint64_t q, bool force,
                   const RunConfig& cfg, bool& all_ok);
json construct_report(const BuiltCode& built, const RunConfig& cfg);
json analyze_code(const LinearCode& code, const RunConfig& cfg, bool& all_ok);
json autos_report(const LinearCode& code, const GroupOnP1& group, const RunConfig& cfg, bool& all_ok);
json rep_report(const GroupOnP1& group, const Divisor& D, const RunConfig& cfg, bool& all_ok);
json search_field_report(Family fam, const FamilyParams& params, std::uint64_t qmax, const RunConfig& cfg);

// Divisor / point-list parsing for the CLI:
//   divisor  := term (('+'|'-') term)*          e.g. "2*0 + 1*inf - 3*[1,2]"
//   term     := [coeff '*'] point
//   point    := 'inf' | integer | '[' c0 ',' c1 ... ']'
Divisor parse_divisor(const Field& f, const std::string& text);
std::vector<P1Point> parse_points(const Field& f, const std::string& text);

}  // namespace p1codes

#endif

#ifndef P1CODES_JSON_IO_HPP
#define P1CODES_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "p1codes/agcode.hpp"
#include "p1codes/autgroup.hpp"
#include "p1codes/groupaction.hpp"

namespace p1codes {

using json = nlohmann::json;

// Wire formats: field elements are integer coefficient sequences (constant
// term first); points are "inf" or a coefficient sequence; divisors are
// ordered [point, coefficient] pairs in canonical point order; matrices are
// row-major arrays of elements; permutations are 1-indexed image sequences.

json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j, std::uint64_t order_budget = Budgets{}.field_order_budget);

json element_to_json(const FieldElement& e);
FieldElement element_from_json(const Field& f, const json& j);

json point_to_json(const P1Point& p);
P1Point point_from_json(const Field& f, const json& j);

json divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const Field& f, const json& j);

json poly_to_json(const Poly& p);
json ratfun_to_json(const RationalFunction& f);

json matrix_to_json(const Mat& m);
json matrix_rows_to_json(const Field& f, std::size_t n, const std::vector<std::uint32_t>& rows);

json spectrum_to_json(const Spectrum& s);  // decimal strings, exact

json permutation_to_json(const CoordinatePermutation& p);

json moebius_to_json(const MoebiusMap& g);
MoebiusMap moebius_from_json(const Field& f, const json& j);

json config_to_json(const RunConfig& cfg);

json code_artifact_to_json(const LinearCode& c, const RunConfig& cfg, const std::string& scenario,
                           const std::vector<std::string>& notes);
// Returns the field (artifact codes reference it) plus the rebuilt code.
struct LoadedCode {
    FieldPtr field;
    LinearCode code;
};
LoadedCode code_artifact_from_json(const json& j);

// Atomic file write (temp + rename); empty path writes to stdout.
void write_output(const json& j, const std::string& path);

}  // namespace p1codes

#endif

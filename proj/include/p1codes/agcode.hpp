#ifndef P1CODES_AGCODE_HPP
#define P1CODES_AGCODE_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "p1codes/config.hpp"
#include "p1codes/linalg.hpp"
#include "p1codes/rrspace.hpp"

namespace p1codes {

// Linear [n, k] code over GF(q) with a full-row-rank generator matrix.
// Codes built by evaluation carry their ordered evaluation points and the
// (D, E) divisor pair they came from.
struct LinearCode {
    const Field* field = nullptr;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::uint32_t> gen;  // k x n row-major element indices
    std::vector<P1Point> eval_points;
    std::optional<std::pair<Divisor, Divisor>> source;  // (D, E)

    std::uint32_t at(std::size_t i, std::size_t j) const { return gen[i * n + j]; }
    Mat generator_matrix() const;
};

// Validates row independence (k = rank).
LinearCode make_code(const Field& f, std::size_t n, std::vector<std::uint32_t> gen_rows);

// Row i, column j = basis_i(P_j), P_j running over supp(E) in canonical
// order.  E must be effective, multiplicity-free and disjoint from supp(D).
Mat evaluate_basis(const RRBasis& basis, const Divisor& E);

// The evaluation code C(D, E).  When the evaluation map is not injective the
// dependent rows are dropped and k = rank is recorded.
LinearCode ag_code(const Divisor& D, const Divisor& E);

// Evaluations of {1, x, ..., x^ell} at distinct affine points, scaled
// coordinatewise by nonzero multipliers.
LinearCode grs_code(std::size_t ell, std::span<const P1Point> points,
                    std::span<const FieldElement> multipliers);

// True iff eval_E restricted to L(D) is injective (rank = deg(D) + 1).
bool injectivity_check(const Divisor& D, const Divisor& E);

// Weight distribution A_0..A_n.  Exact integers (GMP) throughout so the
// closed-form values for large parameters stay exact.
struct Spectrum {
    std::vector<mpz_class> counts;
    bool operator==(const Spectrum& o) const { return counts == o.counts; }
    mpz_class total() const;
};

// Full-enumeration spectrum; requires q^k within the budget.
Spectrum spectrum_exact(const LinearCode& c, std::uint64_t budget = Budgets{}.enumeration_budget,
                        ExecMode mode = ExecMode::Parallel);

// Minimum Hamming weight over all nonzero codewords by full enumeration.
std::size_t min_distance_exact(const LinearCode& c, std::uint64_t budget = Budgets{}.enumeration_budget,
                               ExecMode mode = ExecMode::Parallel);

// Closed-form spectrum of an MDS code with d = n + 1 - k.
Spectrum spectrum_mds(std::size_t n, std::size_t k, std::size_t d, std::uint64_t q);

struct MDSCertificate {
    enum class Mode { Exact, Sampled } mode = Mode::Exact;
    std::uint64_t trials = 0;  // sampled mode
    std::uint64_t seed = 0;
    bool verdict = false;
    std::optional<std::vector<std::uint32_t>> witness_columns;  // failing column set
};

// Exact mode proves or disproves d = n+1-k (by codeword enumeration, or by
// checking all k-column minors when that is cheaper); sampled mode checks
// `trials` pseudorandom k-column minors.
MDSCertificate mds_certificate(const LinearCode& c, MDSCertificate::Mode mode, std::uint64_t trials,
                               std::uint64_t seed, std::uint64_t budget = Budgets{}.enumeration_budget,
                               ExecMode exec = ExecMode::Parallel);

// Generator of the dual code (null space basis); k + k' = n.
LinearCode dual_code(const LinearCode& c);

// Spectrum of C equals spectrum of the dual.  Uses exact enumeration within
// the budget, otherwise the MDS closed form once both sides are certified.
struct SelfDualityReport {
    bool formally_self_dual = false;
    std::string method;  // "exact" or "mds-formula"
};
SelfDualityReport formally_self_dual(const LinearCode& c, const Budgets& budgets, std::uint64_t seed,
                                     ExecMode exec = ExecMode::Parallel);

// The diagonal map onto the one-point code C(deg(D) inf, E): multipliers
// h(P_i) for h = prod (x - p)^{a_P} over the affine part of D.  `verified`
// records the rowspace identity diag(h) C(D,E) = C(deg(D) inf, E).
struct MonomialEquivalence {
    RationalFunction h;
    std::vector<FieldElement> multipliers;
    LinearCode target;
    bool verified = false;
};
MonomialEquivalence monomial_equiv_to_grs(const Divisor& D, const Divisor& E);

// A codeword of weight exactly n - deg(D), built from a function vanishing
// on the first deg(D) points of E.
struct WeightWitness {
    RationalFunction f;
    std::vector<std::uint32_t> codeword;
    std::size_t weight = 0;
};
WeightWitness weight_witness(const Divisor& D, const Divisor& E);

}  // namespace p1codes

#endif

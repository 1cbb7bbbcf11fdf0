#ifndef P1CODES_AUTGROUP_HPP
#define P1CODES_AUTGROUP_HPP

#include <map>
#include <string>
#include <vector>

#include "p1codes/agcode.hpp"
#include "p1codes/groupaction.hpp"

namespace p1codes {

// Permutation of n coordinates, stored 0-based as the image sequence.
// Acting on a vector: (sigma c)_i = c_sigma(i).  With that convention the
// coordinate permutations induced by a group on its stable evaluation points
// compose homomorphically: phi(gh) = phi(g) * phi(h).
class CoordinatePermutation {
  public:
    explicit CoordinatePermutation(std::vector<std::uint32_t> images);
    static CoordinatePermutation identity(std::size_t n);

    std::size_t size() const { return im_.size(); }
    const std::vector<std::uint32_t>& images() const { return im_; }
    std::uint32_t operator()(std::size_t i) const { return im_[i]; }
    bool is_identity() const;

    // (a * b) acts as a then... precisely: A(a * b) = A(a) o A(b)
    CoordinatePermutation operator*(const CoordinatePermutation& o) const;
    CoordinatePermutation inverse() const;
    template <typename T>
    std::vector<T> act(const std::vector<T>& v) const {
        std::vector<T> out(v.size());
        for (std::size_t i = 0; i < im_.size(); ++i) out[i] = v[im_[i]];
        return out;
    }

    bool operator==(const CoordinatePermutation& o) const { return im_ == o.im_; }
    bool operator<(const CoordinatePermutation& o) const { return im_ < o.im_; }

  private:
    std::vector<std::uint32_t> im_;
};

// The permutation of supp(E) induced by g: position i maps to the position
// of g^{-1}(P_i) in the canonical point order of E.  Requires g to stabilize
// supp(E) setwise.
CoordinatePermutation coordinate_perm(const MoebiusMap& g, const Divisor& E);

// sigma preserves the code iff every permuted generator row stays in the row
// space (checked against the dual parity rows).
bool preserves_code(const LinearCode& c, const CoordinatePermutation& sigma);
// Same check with the parity rows precomputed (null_space of the generator).
bool preserves_code(const LinearCode& c, const Mat& parity, const CoordinatePermutation& sigma);

// All of Perm(C) by exhaustive S_n scan (n <= budget).  The result is closed
// under composition.
std::vector<CoordinatePermutation> perm_group_exhaustive(const LinearCode& c,
                                                         const Budgets& budgets = Budgets{},
                                                         ExecMode exec = ExecMode::Parallel);

// All Moebius maps preserving both D and E, by scanning PGL(2, q); the
// result is verified to be a group.
GroupOnP1 aut_DE_scan(const Divisor& D, const Divisor& E, const Budgets& budgets = Budgets{},
                      ExecMode exec = ExecMode::Parallel);

// Cross-check of the lifting statement on P^1 (r = 2): when deg(D) > 0 and
// n > 2 deg(D), phi embeds Aut_{D,E} into Perm(C) and the two groups have
// the same order.
struct LiftReport {
    bool hypothesis_met = false;
    std::uint64_t perm_order = 0;
    std::uint64_t aut_order = 0;
    bool injective = false;
    bool image_contained = false;
    bool orders_equal = false;
    bool consistent() const { return hypothesis_met && injective && image_contained && orders_equal; }
};
LiftReport lift_consistency_check(const Divisor& D, const Divisor& E, const Budgets& budgets = Budgets{},
                                  ExecMode exec = ExecMode::Parallel);

// phi: G -> Perm(C) for a group stabilizing supp(E); faithful when distinct
// elements give distinct permutations.
struct PermActionTable {
    std::vector<CoordinatePermutation> perms;  // aligned with group.elements()
    bool faithful = false;
};
PermActionTable build_perm_action(const GroupOnP1& g, const Divisor& E);

// Matrix of f -> f o g^{-1} on L(D) in the rr_basis order, by evaluating the
// pulled-back basis at deg(D)+1 fresh points and solving the exact system.
// Requires g to stabilize D.
Mat rho_matrix(const MoebiusMap& g, const RRBasis& basis);

// rho over a whole group, with the homomorphism and invertibility checks.
struct RepMatrixTable {
    std::vector<Mat> matrices;  // aligned with group.elements()
    bool homomorphism = false;
    bool all_invertible = false;
};
RepMatrixTable build_rep_table(const GroupOnP1& g, const RRBasis& basis);

// Structural checks of the representation on L(D):
//  (i)   constants fixed,
//  (ii)  filtration triangularity over orbits with the top power moved to
//        m_{g(P)} alone,
//  (iii) per-element character comparison: trace rho(g) against
//        1 + sum_k a_k |Fix(g, S_k)| reduced into the prime field (reported,
//        not asserted),
//  (iv)  for non-effective D: L(D) embeds in L(D+) as a G-stable subspace.
struct CharacterRow {
    std::string element;
    std::uint32_t trace_index = 0;
    std::int64_t fixed_point_formula = 0;   // integer value of 1 + sum a_k |Fix|
    std::uint32_t formula_mod_p_index = 0;  // the same, reduced into the field
    bool equal = false;
};
struct RepCheckReport {
    bool effective_case = false;
    bool homomorphism = false;
    bool all_invertible = false;
    bool constants_fixed = false;     // (i), effective case
    bool triangular = false;          // (ii), effective case
    std::vector<CharacterRow> character;  // (iii), effective case
    std::size_t character_matches = 0;
    bool submodule_contained = false;  // (iv), non-effective case
};
RepCheckReport rep_structure_check(const GroupOnP1& g, const Divisor& D);

}  // namespace p1codes

#endif

#ifndef P1CODES_GROUPACTION_HPP
#define P1CODES_GROUPACTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "p1codes/config.hpp"
#include "p1codes/projline.hpp"

namespace p1codes {

// The finite subgroups of PGL(2, q) realized from explicit generators:
// cyclic and dihedral groups from a root of unity, the three exceptional
// rotation groups A4 / S4 / A5, semidirect products of translations with a
// multiplicative cyclic group, and PSL / PGL over a subfield.
enum class Family { Cyclic, Dihedral, A4, S4, A5, Semidirect, PSL2, PGL2, Custom };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// delta: cyclic/dihedral order parameter; t: subfield degree for
// semidirect/PSL/PGL; m: cyclic factor order for semidirect.
struct FamilyParams {
    std::uint64_t delta = 0;
    std::uint64_t m = 0;
    unsigned t = 0;
};

// Expected group order by the family formula.
std::uint64_t family_order(Family f, const FamilyParams& params, std::uint64_t p);

class GroupOnP1 {
  public:
    GroupOnP1(const Field& f, Family fam, FamilyParams params, std::vector<MoebiusMap> generators,
              std::vector<MoebiusMap> elements);

    const Field& field() const { return *f_; }
    Family family() const { return family_; }
    const FamilyParams& params() const { return params_; }
    const std::vector<MoebiusMap>& generators() const { return gens_; }
    const std::vector<MoebiusMap>& elements() const { return elems_; }
    std::uint64_t order() const { return elems_.size(); }
    bool contains(const MoebiusMap& g) const;

  private:
    const Field* f_;
    Family family_;
    FamilyParams params_;
    std::vector<MoebiusMap> gens_;
    std::vector<MoebiusMap> elems_;  // sorted canonically; closed; contains the identity
};

// Closure of the generators under composition; throws budget_error when the
// element count would pass `bound`.
GroupOnP1 group_closure(const Field& f, std::vector<MoebiusMap> gens, std::uint64_t bound,
                        Family fam = Family::Custom, FamilyParams params = {});

// Catalog construction.  The group order is verified against the family
// formula.  closure_bound = 0 means twice the expected order.
GroupOnP1 make_family(Family fam, const FamilyParams& params, const Field& f,
                      std::uint64_t closure_bound = 0);

std::vector<P1Point> orbit(const GroupOnP1& g, const P1Point& p);

struct OrbitDecomposition {
    std::vector<std::vector<P1Point>> orbits;  // each sorted; list ordered by (size, least point)
};

// Partition of a setwise G-stable point set into orbits; throws if some
// orbit leaves the set.
OrbitDecomposition orbit_decomposition(const GroupOnP1& g, std::span<const P1Point> pts);

// All orbits of G on P^1(F).
OrbitDecomposition all_orbits(const GroupOnP1& g, std::uint64_t scan_budget = Budgets{}.enumeration_budget,
                              ExecMode mode = ExecMode::Parallel);

// The orbits of size strictly less than |G|.  Rejects the trivial group.
OrbitDecomposition special_orbits(const GroupOnP1& g,
                                  std::uint64_t scan_budget = Budgets{}.enumeration_budget,
                                  ExecMode mode = ExecMode::Parallel);

// Multiset of ramification indices |G| / |short orbit|, ascending.
struct RamificationProfile {
    std::vector<std::uint64_t> indices;
    bool operator==(const RamificationProfile& o) const { return indices == o.indices; }
};

// Profile from the short orbits actually found over the group's own field.
// Meaningful when that field is sufficient for the family.
RamificationProfile short_orbit_profile(const GroupOnP1& g,
                                        std::uint64_t scan_budget = Budgets{}.enumeration_budget,
                                        ExecMode mode = ExecMode::Parallel);

// Builds the family group over Fbig (which must be sufficient) and reads the
// profile off the short orbits.
RamificationProfile ramification_profile(Family fam, const FamilyParams& params, const Field& fbig,
                                         std::uint64_t scan_budget = Budgets{}.enumeration_budget,
                                         ExecMode mode = ExecMode::Parallel);

// The ramification table row the family must reproduce.
RamificationProfile expected_profile(Family fam, const FamilyParams& params, std::uint64_t p);

// A special orbit described by a polynomial: the orbit is the root set of
// finite_part, together with 0 and/or infinity when flagged.  `note` records
// any correction applied to the catalog source text.
struct OrbitCatalogEntry {
    std::string label;
    Poly finite_part;
    bool add_zero = false;
    bool add_inf = false;
    std::string note;
};

// The special-orbit entries for the family, instantiated over F.  Throws
// std::invalid_argument when F lacks a required constant.
std::vector<OrbitCatalogEntry> orbit_catalog(Family fam, const FamilyParams& params, const Field& f);

// The generic-orbit polynomial B_a for an admissible parameter a.
OrbitCatalogEntry generic_orbit_entry(Family fam, const FamilyParams& params, const Field& f,
                                      const FieldElement& a);

// Catalog polynomial by label ("Binf", "B0", "B1", "B2", "B-", "B+", "B0*").
Poly orbit_polynomial(Family fam, const std::string& label, const FamilyParams& params, const Field& f);

struct OrbitVerify {
    bool ok = false;
    std::size_t orbit_count = 0;
    std::string detail;
};

// Checks the claimed point set against the group-closure orbit computation
// (the enumeration is the ground truth, the polynomial is the claim under
// test).  Throws on non-split polynomials.
OrbitVerify verify_orbit_polynomial(const GroupOnP1& g, const OrbitCatalogEntry& entry);
OrbitVerify verify_orbit_polynomial(const GroupOnP1& g, const Poly& f);
OrbitVerify verify_point_set_is_orbit_union(const GroupOnP1& g, std::span<const P1Point> pts);

struct SufficiencyReport {
    bool ok = false;
    std::vector<std::string> failures;
};

// True iff GF(q) hosts all constants the family generators need and every
// special-orbit catalog polynomial splits completely over GF(q).
SufficiencyReport field_sufficient(Family fam, const FamilyParams& params, std::uint64_t q,
                                   std::uint64_t field_budget = Budgets{}.field_order_budget);

// Smallest prime power q = p^k with p > 5 and field_sufficient, scanning
// upward; nullopt when none exists below qmax.
std::optional<std::uint64_t> find_sufficient_field(Family fam, const FamilyParams& params,
                                                   std::uint64_t qmax,
                                                   std::uint64_t field_budget = Budgets{}.field_order_budget);

// The image of GF(p^t) inside F (requires t | k), canonically sorted.
std::vector<FieldElement> subfield_elements(const Field& f, unsigned t);

}  // namespace p1codes

#endif

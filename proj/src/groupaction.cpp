#include "p1codes/groupaction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "p1codes/errors.hpp"
#include "p1codes/kernels.hpp"

namespace p1codes {

std::string family_name(Family f) {
    switch (f) {
        case Family::Cyclic: return "cyclic";
        case Family::Dihedral: return "dihedral";
        case Family::A4: return "a4";
        case Family::S4: return "s4";
        case Family::A5: return "a5";
        case Family::Semidirect: return "semidirect";
        case Family::PSL2: return "psl2";
        case Family::PGL2: return "pgl2";
        case Family::Custom: return "custom";
    }
    return "custom";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::Cyclic, Family::Dihedral, Family::A4, Family::S4, Family::A5,
                     Family::Semidirect, Family::PSL2, Family::PGL2, Family::Custom})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

std::uint64_t family_order(Family f, const FamilyParams& params, std::uint64_t p) {
    switch (f) {
        case Family::Cyclic: return params.delta;
        case Family::Dihedral: return 2 * params.delta;
        case Family::A4: return 12;
        case Family::S4: return 24;
        case Family::A5: return 60;
        case Family::Semidirect: return ipow(p, params.t) * params.m;
        case Family::PSL2: {
            std::uint64_t q0 = ipow(p, params.t);
            return q0 * (q0 * q0 - 1) / 2;
        }
        case Family::PGL2: {
            std::uint64_t q0 = ipow(p, params.t);
            return q0 * (q0 * q0 - 1);
        }
        case Family::Custom: return 0;
    }
    return 0;
}

GroupOnP1::GroupOnP1(const Field& f, Family fam, FamilyParams params, std::vector<MoebiusMap> generators,
                     std::vector<MoebiusMap> elements)
    : f_(&f), family_(fam), params_(params), gens_(std::move(generators)), elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
}

bool GroupOnP1::contains(const MoebiusMap& g) const {
    return std::binary_search(elems_.begin(), elems_.end(), g,
                              [](const MoebiusMap& a, const MoebiusMap& b) { return a < b; });
}

GroupOnP1 group_closure(const Field& f, std::vector<MoebiusMap> gens, std::uint64_t bound,
                        Family fam, FamilyParams params) {
    if (bound < 1) throw std::invalid_argument("group_closure: bound must be >= 1");
    std::vector<MoebiusMap> elems{MoebiusMap::identity(f)};
    std::unordered_set<std::uint64_t> seen{MoebiusKey::of(elems[0])};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens) {
            MoebiusMap n = g.compose(elems[i]);
            if (seen.insert(MoebiusKey::of(n)).second) {
                if (elems.size() + 1 > bound)
                    throw budget_error("group_closure: closure exceeds bound " + std::to_string(bound));
                elems.push_back(n);
            }
        }
    }
    return GroupOnP1(f, fam, params, std::move(gens), std::move(elems));
}

std::vector<FieldElement> subfield_elements(const Field& f, unsigned t) {
    if (t == 0 || f.k() % t != 0)
        throw std::invalid_argument("subfield: GF(p^" + std::to_string(t) + ") does not embed in GF(p^" +
                                    std::to_string(f.k()) + ")");
    std::uint64_t qt = ipow(f.p(), t);
    std::vector<FieldElement> out;
    out.reserve(qt);
    for (std::uint64_t r = 0; r < f.q(); ++r) {
        std::uint32_t a = f.element_at_rank(r);
        if (f.pow(a, qt) == a) out.emplace_back(f, a);
    }
    if (out.size() != qt) throw std::logic_error("subfield: wrong cardinality");
    return out;
}

namespace {

// smallest (canonical order) element of exact multiplicative order m in the set
std::optional<FieldElement> smallest_of_order(const Field& f, std::span<const FieldElement> set,
                                              std::uint64_t m) {
    for (const auto& e : set)
        if (!e.is_zero() && f.element_order(e.index()) == m) return e;
    return std::nullopt;
}

std::vector<MoebiusMap> a5_generators(const Field& f) {
    FieldElement xi0 = primitive_root_of_unity(f, 5);
    FieldElement i0 = sqrt_minus_one(f);
    // b depends on a compatible pairing of the two constants; try the
    // canonical choice first, then the remaining sign/power combinations.
    for (unsigned ipow5 = 1; ipow5 <= 4; ++ipow5) {
        FieldElement xi = xi0.pow(ipow5);
        for (int isign = 0; isign < 2; ++isign) {
            FieldElement ii = isign ? -i0 : i0;
            FieldElement b = -ii * (xi.pow(4) + xi);
            if ((b * b).index() == 1) continue;  // singular reflection
            std::vector<MoebiusMap> gens{
                MoebiusMap(xi, f.zero(), f.zero(), f.one()),
                MoebiusMap(-f.one(), -b, b, f.one()),
            };
            try {
                GroupOnP1 g = group_closure(f, gens, 130);
                if (g.order() == 60) return gens;
            } catch (const budget_error&) {
            }
        }
    }
    throw std::invalid_argument("a5: no generator pairing closes at order 60 over this field");
}

}  // namespace

GroupOnP1 make_family(Family fam, const FamilyParams& params, const Field& f, std::uint64_t closure_bound) {
    std::vector<MoebiusMap> gens;
    switch (fam) {
        case Family::Cyclic: {
            if (params.delta < 1) throw std::invalid_argument("cyclic: delta must be >= 1");
            FieldElement xi = primitive_root_of_unity(f, params.delta);
            if (params.delta > 1) gens.push_back(MoebiusMap(xi, f.zero(), f.zero(), f.one()));
            break;
        }
        case Family::Dihedral: {
            if (params.delta < 1) throw std::invalid_argument("dihedral: delta must be >= 1");
            FieldElement xi = primitive_root_of_unity(f, params.delta);
            if (params.delta > 1) gens.push_back(MoebiusMap(xi, f.zero(), f.zero(), f.one()));
            gens.push_back(MoebiusMap(f.zero(), f.one(), f.one(), f.zero()));  // 1/x
            break;
        }
        case Family::A4: {
            FieldElement i = sqrt_minus_one(f);
            gens.push_back(MoebiusMap(-f.one(), f.zero(), f.zero(), f.one()));  // -x
            gens.push_back(MoebiusMap(i, i, f.one(), -f.one()));                // i(x+1)/(x-1)
            break;
        }
        case Family::S4: {
            FieldElement i = sqrt_minus_one(f);
            gens.push_back(MoebiusMap(i, f.zero(), f.zero(), f.one()));  // ix
            gens.push_back(MoebiusMap(i, i, f.one(), -f.one()));
            break;
        }
        case Family::A5: {
            gens = a5_generators(f);
            break;
        }
        case Family::Semidirect: {
            if (params.t == 0) throw std::invalid_argument("semidirect: t must be >= 1");
            std::uint64_t qt = ipow(f.p(), params.t);
            if (params.m == 0 || (qt - 1) % params.m != 0)
                throw std::invalid_argument("semidirect: m must divide p^t - 1");
            auto sub = subfield_elements(f, params.t);
            // translations by an additive generating set of the subfield
            std::set<std::uint32_t> span{0};
            for (const auto& s : sub) {
                if (span.count(s.index())) continue;
                gens.push_back(MoebiusMap(f.one(), s, f.zero(), f.one()));
                std::set<std::uint32_t> next;
                for (auto w : span)
                    for (std::uint64_t j = 0; j < f.p(); ++j)
                        next.insert(f.add(w, f.mul(f.from_int(std::int64_t(j)), s.index())));
                span = std::move(next);
                if (span.size() == qt) break;
            }
            if (params.m > 1) {
                auto zeta = smallest_of_order(f, sub, params.m);
                if (!zeta) throw std::invalid_argument("semidirect: subfield has no element of order m");
                gens.push_back(MoebiusMap(*zeta, f.zero(), f.zero(), f.one()));
            }
            break;
        }
        case Family::PSL2: {
            if (f.p() == 2) throw std::invalid_argument("psl2: requires odd characteristic");
            if (params.t == 0) throw std::invalid_argument("psl2: t must be >= 1");
            std::uint64_t q0 = ipow(f.p(), params.t);
            auto sub = subfield_elements(f, params.t);
            auto xi = smallest_of_order(f, sub, q0 - 1);
            if (!xi) throw std::invalid_argument("psl2: subfield has no primitive element");
            gens.push_back(MoebiusMap(*xi * *xi, f.zero(), f.zero(), f.one()));   // xi^2 x
            gens.push_back(MoebiusMap(f.zero(), -f.one(), f.one(), f.zero()));    // -1/x
            gens.push_back(MoebiusMap(f.one(), f.one(), f.zero(), f.one()));      // x+1
            break;
        }
        case Family::PGL2: {
            if (params.t == 0) throw std::invalid_argument("pgl2: t must be >= 1");
            std::uint64_t q0 = ipow(f.p(), params.t);
            auto sub = subfield_elements(f, params.t);
            if (q0 > 2) {
                auto xi = smallest_of_order(f, sub, q0 - 1);
                if (!xi) throw std::invalid_argument("pgl2: subfield has no primitive element");
                gens.push_back(MoebiusMap(*xi, f.zero(), f.zero(), f.one()));  // xi x
            }
            gens.push_back(MoebiusMap(f.zero(), f.one(), f.one(), f.zero()));  // 1/x
            gens.push_back(MoebiusMap(f.one(), f.one(), f.zero(), f.one()));   // x+1
            break;
        }
        case Family::Custom: throw std::invalid_argument("make_family: custom has no generators");
    }

    std::uint64_t expected = family_order(fam, params, f.p());
    std::uint64_t bound = closure_bound ? closure_bound : 2 * expected;
    GroupOnP1 g = group_closure(f, std::move(gens), bound, fam, params);
    if (g.order() != expected)
        throw std::logic_error("make_family: " + family_name(fam) + " closed at order " +
                               std::to_string(g.order()) + ", expected " + std::to_string(expected));
    return g;
}

std::vector<P1Point> orbit(const GroupOnP1& g, const P1Point& p) {
    const auto& gens = g.generators().empty() ? g.elements() : g.generators();
    std::vector<P1Point> out{p};
    std::set<P1Point> seen{p};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& m : gens) {
            P1Point img = m.apply(out[i]);
            if (seen.insert(img).second) out.push_back(img);
        }
    }
    std::vector<P1Point> sorted(seen.begin(), seen.end());
    return sorted;
}

OrbitDecomposition orbit_decomposition(const GroupOnP1& g, std::span<const P1Point> pts) {
    std::set<P1Point> want(pts.begin(), pts.end());
    std::set<P1Point> done;
    OrbitDecomposition dec;
    for (const auto& p : want) {
        if (done.count(p)) continue;
        auto orb = orbit(g, p);
        for (const auto& x : orb) {
            if (!want.count(x))
                throw std::invalid_argument("orbit_decomposition: the point set is not closed under the group");
            done.insert(x);
        }
        dec.orbits.push_back(std::move(orb));
    }
    std::sort(dec.orbits.begin(), dec.orbits.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    return dec;
}

namespace {

OrbitDecomposition orbits_from_scan(const GroupOnP1& g, std::uint64_t scan_budget, ExecMode mode) {
    const Field& f = g.field();
    if ((f.q() + 1) * g.order() > scan_budget)
        throw budget_error("orbit scan: (q+1) * |G| exceeds the scan budget");
    auto keys = orbit_min_scan(f, g.elements(), mode);
    std::map<std::uint32_t, std::vector<P1Point>> buckets;
    for (std::uint32_t i = 0; i < keys.size(); ++i) buckets[keys[i]].push_back(point_from_key(f, i));
    OrbitDecomposition dec;
    for (auto& [key, pts] : buckets) dec.orbits.push_back(std::move(pts));
    std::sort(dec.orbits.begin(), dec.orbits.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    return dec;
}

}  // namespace

OrbitDecomposition all_orbits(const GroupOnP1& g, std::uint64_t scan_budget, ExecMode mode) {
    return orbits_from_scan(g, scan_budget, mode);
}

OrbitDecomposition special_orbits(const GroupOnP1& g, std::uint64_t scan_budget, ExecMode mode) {
    if (g.order() <= 1) throw std::invalid_argument("special_orbits: trivial group has only singletons");
    OrbitDecomposition dec = orbits_from_scan(g, scan_budget, mode);
    OrbitDecomposition out;
    for (auto& orb : dec.orbits)
        if (orb.size() < g.order()) out.orbits.push_back(std::move(orb));
    return out;
}

RamificationProfile short_orbit_profile(const GroupOnP1& g, std::uint64_t scan_budget, ExecMode mode) {
    OrbitDecomposition dec = special_orbits(g, scan_budget, mode);
    RamificationProfile prof;
    for (const auto& orb : dec.orbits) prof.indices.push_back(g.order() / orb.size());
    std::sort(prof.indices.begin(), prof.indices.end());
    return prof;
}

RamificationProfile ramification_profile(Family fam, const FamilyParams& params, const Field& fbig,
                                         std::uint64_t scan_budget, ExecMode mode) {
    SufficiencyReport rep = field_sufficient(fam, params, fbig.q());
    if (!rep.ok) {
        std::string msg = "ramification_profile: field is insufficient";
        for (const auto& s : rep.failures) msg += "; " + s;
        throw std::invalid_argument(msg);
    }
    GroupOnP1 g = make_family(fam, params, fbig);
    return short_orbit_profile(g, scan_budget, mode);
}

RamificationProfile expected_profile(Family fam, const FamilyParams& params, std::uint64_t p) {
    RamificationProfile prof;
    switch (fam) {
        case Family::Cyclic: prof.indices = {params.delta, params.delta}; break;
        case Family::Dihedral: prof.indices = {2, 2, params.delta}; break;
        case Family::A4: prof.indices = {2, 3, 3}; break;
        case Family::S4: prof.indices = {2, 3, 4}; break;
        case Family::A5: prof.indices = {2, 3, 5}; break;
        case Family::Semidirect: {
            std::uint64_t qt = ipow(p, params.t);
            if (params.m == 1)
                prof.indices = {qt};
            else
                prof.indices = {params.m, qt * params.m};
            break;
        }
        case Family::PSL2: {
            std::uint64_t q0 = ipow(p, params.t);
            prof.indices = {(q0 + 1) / 2, q0 * (q0 - 1) / 2};
            break;
        }
        case Family::PGL2: {
            std::uint64_t q0 = ipow(p, params.t);
            prof.indices = {q0 + 1, q0 * (q0 - 1)};
            break;
        }
        case Family::Custom: throw std::invalid_argument("expected_profile: no table row for custom groups");
    }
    std::sort(prof.indices.begin(), prof.indices.end());
    return prof;
}

namespace {

Poly x_power_minus_x(const Field& f, std::uint64_t e) {
    std::vector<std::uint32_t> c(e + 1, 0);
    c[1] = f.neg(1);
    c[e] = f.add(c[e], 1);  // e = 1 would cancel; callers use e = p^t >= 2
    return Poly(f, std::move(c));
}

Poly quartic(const Field& f, const FieldElement& mid) {
    return Poly(f, {1, 0, mid.index(), 0, 1});  // x^4 + mid x^2 + 1
}

}  // namespace

std::vector<OrbitCatalogEntry> orbit_catalog(Family fam, const FamilyParams& params, const Field& f) {
    std::vector<OrbitCatalogEntry> out;
    switch (fam) {
        case Family::Cyclic: {
            if (params.delta < 2) throw std::invalid_argument("catalog: cyclic needs delta >= 2");
            primitive_root_of_unity(f, params.delta);  // existence check
            out.push_back({"B0", Poly::x(f), false, false, ""});
            out.push_back({"Binf", Poly::one(f), false, true, ""});
            break;
        }
        case Family::Dihedral: {
            if (params.delta < 2) throw std::invalid_argument("catalog: dihedral needs delta >= 2");
            primitive_root_of_unity(f, params.delta);
            std::uint64_t d = params.delta;
            std::vector<std::uint32_t> minus(d + 1, 0), plus(d + 1, 0);
            minus[0] = f.neg(1);
            minus[d] = 1;
            plus[0] = 1;
            plus[d] = 1;
            out.push_back({"Binf", Poly::x(f), false, true, ""});
            out.push_back({"B-", Poly(f, std::move(minus)), false, false, ""});
            out.push_back({"B+", Poly(f, std::move(plus)), false, false, ""});
            break;
        }
        case Family::A4: {
            FieldElement i = sqrt_minus_one(f);
            FieldElement s3(f, 0);
            if (!try_sqrt(f, FieldElement(f, f.from_int(3)), s3))
                throw std::invalid_argument("catalog: a4 needs a square root of 3");
            FieldElement c = FieldElement(f, f.from_int(2)) * i * s3;
            out.push_back({"B0", Poly::from_ints(f, {0, -1, 0, 0, 0, 1}), false, true, ""});  // x^5 - x
            out.push_back({"B1", quartic(f, -c), false, false, ""});
            out.push_back({"B2", quartic(f, c), false, false,
                           "source prints B1 and B2 with the same middle sign; the sign is flipped here and "
                           "both candidates are checked against the orbit computation"});
            break;
        }
        case Family::S4: {
            sqrt_minus_one(f);
            out.push_back({"B0", Poly::from_ints(f, {0, -1, 0, 0, 0, 1}), false, true, ""});
            out.push_back({"B1", Poly::from_ints(f, {1, 0, 0, 0, 14, 0, 0, 0, 1}), false, false, ""});
            Poly b2 = Poly::from_ints(f, {1, 0, 0, 0, 1}) * Poly::from_ints(f, {1, 0, 0, 0, -34, 0, 0, 0, 1});
            out.push_back({"B2", b2, false, false, ""});
            break;
        }
        case Family::A5: {
            FieldElement i = sqrt_minus_one(f);
            primitive_root_of_unity(f, 5);
            auto with_i = [&](std::int64_t n) { return (FieldElement(f, f.from_int(n)) * i).index(); };
            Poly f0(f, {1, 0, 0, 0, 0, with_i(11), 0, 0, 0, 0, 1});
            std::vector<std::uint32_t> c1(21, 0);
            c1[0] = 1;
            c1[5] = with_i(-228);
            c1[10] = f.from_int(-494);
            c1[15] = with_i(-228);
            c1[20] = 1;
            std::vector<std::uint32_t> c2(31, 0);
            c2[0] = f.from_int(-1);
            c2[5] = with_i(-522);
            c2[10] = f.from_int(-10005);
            c2[20] = f.from_int(10005);
            c2[25] = with_i(522);
            c2[30] = 1;
            out.push_back({"Binf", f0, true, true, ""});
            out.push_back({"B0", Poly(f, std::move(c1)), false, false, ""});
            out.push_back({"B0*", Poly(f, std::move(c2)), false, false, ""});
            break;
        }
        case Family::Semidirect: {
            if (params.t == 0) throw std::invalid_argument("catalog: semidirect needs t >= 1");
            std::uint64_t qt = ipow(f.p(), params.t);
            if (params.m == 0 || (qt - 1) % params.m != 0)
                throw std::invalid_argument("catalog: semidirect needs m | p^t - 1");
            subfield_elements(f, params.t);  // existence check
            out.push_back({"Binf", Poly::one(f), false, true, ""});
            out.push_back({"B0", x_power_minus_x(f, qt), false, false,
                           "printed as x prod_j (x^m - b_j); expanded product over the subfield"});
            break;
        }
        case Family::PSL2:
        case Family::PGL2: {
            if (params.t == 0) throw std::invalid_argument("catalog: needs t >= 1");
            if (fam == Family::PSL2 && f.p() == 2)
                throw std::invalid_argument("catalog: psl2 requires odd characteristic");
            std::uint64_t q0 = ipow(f.p(), params.t);
            subfield_elements(f, params.t);
            Poly M = x_power_minus_x(f, q0);
            Poly N = M.pow(q0 - 1) + Poly::one(f);
            out.push_back({"Binf", M, false, true,
                           "printed as the roots of x^m - x with m = p^t - 1, which has the wrong count; "
                           "the invariant set is P1(GF(p^t))"});
            out.push_back({"B0", N, false, false,
                           "exponents fixed so the degree matches the orbit size q0(q0-1)"});
            break;
        }
        case Family::Custom: throw std::invalid_argument("catalog: no entries for custom groups");
    }
    return out;
}

OrbitCatalogEntry generic_orbit_entry(Family fam, const FamilyParams& params, const Field& f,
                                      const FieldElement& a) {
    switch (fam) {
        case Family::Cyclic: {
            if (a.is_zero()) throw std::invalid_argument("generic orbit: a must be nonzero");
            std::vector<std::uint32_t> c(params.delta + 1, 0);
            c[0] = f.neg(a.index());
            c[params.delta] = 1;
            return {"Ba", Poly(f, std::move(c)), false, false, ""};
        }
        case Family::Dihedral: {
            if (a.index() == f.from_int(2) || a.index() == f.from_int(-2))
                throw std::invalid_argument("generic orbit: a = +-2 degenerates");
            std::uint64_t d = params.delta;
            std::vector<std::uint32_t> c(2 * d + 1, 0);
            c[0] = 1;
            c[d] = a.index();
            c[2 * d] = 1;
            return {"Ba", Poly(f, std::move(c)), false, false,
                    "printed without the parameter: x^(2d) + x^d + 1; the middle coefficient is a"};
        }
        case Family::A4: {
            FieldElement i = sqrt_minus_one(f);
            FieldElement s3(f, 0);
            if (!try_sqrt(f, FieldElement(f, f.from_int(3)), s3))
                throw std::invalid_argument("generic orbit: a4 needs sqrt(3)");
            FieldElement two(f, f.from_int(2));
            FieldElement twelve(f, f.from_int(12));
            FieldElement c = two * i * s3;
            if (a == two || a == -two || a == c || a == -c)
                throw std::invalid_argument("generic orbit: a collides with a special orbit");
            FieldElement a2 = (two * a + twelve) / (two - a);
            FieldElement a3 = (two * a - twelve) / (two + a);
            return {"Ba", quartic(f, a) * quartic(f, a2) * quartic(f, a3), false, false, ""};
        }
        case Family::S4: {
            if (a.index() == f.from_int(108))
                throw std::invalid_argument("generic orbit: a = 108 degenerates");
            Poly b1 = Poly::from_ints(f, {1, 0, 0, 0, 14, 0, 0, 0, 1});
            Poly v = Poly::from_ints(f, {0, -1, 0, 0, 0, 1});  // x^5 - x
            return {"Ba", b1.pow(3) - v.pow(4).scaled(a), false, false, ""};
        }
        case Family::A5: {
            FieldElement i = sqrt_minus_one(f);
            if (a == FieldElement(f, f.from_int(-1728)) * i)
                throw std::invalid_argument("generic orbit: a = -1728i degenerates");
            auto entries = orbit_catalog(Family::A5, params, f);
            const Poly& f0 = entries[0].finite_part;
            const Poly& f1 = entries[1].finite_part;
            return {"Ba", f1.pow(3) - f0.pow(5).scaled(a), false, false, ""};
        }
        case Family::Semidirect: {
            std::uint64_t qt = ipow(f.p(), params.t);
            Poly f0 = x_power_minus_x(f, qt);
            if (f0.eval(a).is_zero())
                throw std::invalid_argument("generic orbit: a lies in the base orbit");
            return {"Ba", f0.pow(params.m) - Poly::constant(a), false, false, ""};
        }
        case Family::PSL2: {
            if (a.is_zero()) throw std::invalid_argument("generic orbit: a must be nonzero");
            std::uint64_t q0 = ipow(f.p(), params.t);
            Poly M = x_power_minus_x(f, q0);
            Poly N = M.pow(q0 - 1) + Poly::one(f);
            return {"Ba", N.pow((q0 + 1) / 2) - M.pow(q0 * (q0 - 1) / 2).scaled(a), false, false,
                    "printed exponent (m+1)/2 is non-integral for odd q0; exponents fixed so the degree is |G|"};
        }
        case Family::PGL2: {
            if (a.is_zero()) throw std::invalid_argument("generic orbit: a must be nonzero");
            std::uint64_t q0 = ipow(f.p(), params.t);
            Poly M = x_power_minus_x(f, q0);
            Poly N = M.pow(q0 - 1) + Poly::one(f);
            return {"Ba", N.pow(q0 + 1) - M.pow(q0 * (q0 - 1)).scaled(a), false, false, ""};
        }
        case Family::Custom: break;
    }
    throw std::invalid_argument("generic orbit: unsupported family");
}

Poly orbit_polynomial(Family fam, const std::string& label, const FamilyParams& params, const Field& f) {
    for (const auto& e : orbit_catalog(fam, params, f))
        if (e.label == label) return e.finite_part;
    throw std::invalid_argument("orbit_polynomial: no catalog entry labeled " + label);
}

OrbitVerify verify_point_set_is_orbit_union(const GroupOnP1& g, std::span<const P1Point> pts) {
    std::set<P1Point> set(pts.begin(), pts.end());
    OrbitVerify v;
    std::set<P1Point> done;
    for (const auto& p : set) {
        if (done.count(p)) continue;
        auto orb = orbit(g, p);
        for (const auto& x : orb) {
            if (!set.count(x)) {
                v.ok = false;
                v.detail = "orbit of a root leaves the root set";
                return v;
            }
            done.insert(x);
        }
        ++v.orbit_count;
    }
    v.ok = true;
    return v;
}

OrbitVerify verify_orbit_polynomial(const GroupOnP1& g, const OrbitCatalogEntry& entry) {
    RootScan scan = scan_roots(entry.finite_part);
    if (scan.nonsplit_degree != 0)
        throw std::domain_error("verify_orbit_polynomial: polynomial has a non-split factor of degree " +
                                std::to_string(scan.nonsplit_degree));
    std::vector<P1Point> pts;
    std::set<P1Point> uniq;
    for (const auto& r : scan.roots)
        if (!uniq.insert(P1Point::affine(r)).second)
            return {false, 0, "repeated root; not an orbit set"};
    if (entry.add_zero) uniq.insert(P1Point::affine(g.field().zero()));
    if (entry.add_inf) uniq.insert(P1Point::infinity(g.field()));
    pts.assign(uniq.begin(), uniq.end());
    return verify_point_set_is_orbit_union(g, pts);
}

OrbitVerify verify_orbit_polynomial(const GroupOnP1& g, const Poly& f) {
    return verify_orbit_polynomial(g, OrbitCatalogEntry{"", f, false, false, ""});
}

SufficiencyReport field_sufficient(Family fam, const FamilyParams& params, std::uint64_t q,
                                   std::uint64_t field_budget) {
    SufficiencyReport rep;
    std::uint64_t p;
    unsigned k;
    if (!prime_power_decompose(q, p, k)) {
        rep.failures.push_back("q = " + std::to_string(q) + " is not a prime power");
        return rep;
    }
    FieldPtr fp;
    try {
        fp = Field::make(p, k, field_budget);
    } catch (const std::exception& e) {
        rep.failures.push_back(e.what());
        return rep;
    }
    std::vector<OrbitCatalogEntry> entries;
    try {
        entries = orbit_catalog(fam, params, *fp);
    } catch (const std::exception& e) {
        rep.failures.push_back(e.what());
        return rep;
    }
    // counting bound first: the special orbits need this many rational points
    std::uint64_t need = 0;
    for (const auto& e : entries) {
        need += e.finite_part.is_zero() ? 0 : std::uint64_t(e.finite_part.degree());
        need += (e.add_zero ? 1 : 0) + (e.add_inf ? 1 : 0);
    }
    if (need > q + 1) {
        rep.failures.push_back("special orbits need " + std::to_string(need) +
                               " rational points but |P1(GF(q))| = " + std::to_string(q + 1));
        return rep;
    }
    for (const auto& e : entries) {
        if (e.finite_part.is_zero() || e.finite_part.degree() == 0) continue;
        RootScan scan = scan_roots(e.finite_part);
        if (scan.nonsplit_degree != 0)
            rep.failures.push_back("catalog polynomial " + e.label + " does not split over GF(" +
                                   std::to_string(q) + ")");
    }
    rep.ok = rep.failures.empty();
    return rep;
}

std::optional<std::uint64_t> find_sufficient_field(Family fam, const FamilyParams& params,
                                                   std::uint64_t qmax, std::uint64_t field_budget) {
    for (std::uint64_t q = 7; q <= qmax; ++q) {
        std::uint64_t p;
        unsigned k;
        if (!prime_power_decompose(q, p, k) || p <= 5) continue;
        if (field_sufficient(fam, params, q, field_budget).ok) return q;
    }
    return std::nullopt;
}

}  // namespace p1codes

#include "p1codes/autgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "p1codes/errors.hpp"
#include "p1codes/kernels.hpp"

namespace p1codes {

CoordinatePermutation::CoordinatePermutation(std::vector<std::uint32_t> images) : im_(std::move(images)) {
    std::vector<bool> seen(im_.size(), false);
    for (auto v : im_) {
        if (v >= im_.size() || seen[v]) throw std::invalid_argument("permutation: images are not a bijection");
        seen[v] = true;
    }
}

CoordinatePermutation CoordinatePermutation::identity(std::size_t n) {
    std::vector<std::uint32_t> im(n);
    for (std::size_t i = 0; i < n; ++i) im[i] = std::uint32_t(i);
    return CoordinatePermutation(std::move(im));
}

bool CoordinatePermutation::is_identity() const {
    for (std::size_t i = 0; i < im_.size(); ++i)
        if (im_[i] != i) return false;
    return true;
}

CoordinatePermutation CoordinatePermutation::operator*(const CoordinatePermutation& o) const {
    if (size() != o.size()) throw std::invalid_argument("permutation: size mismatch");
    // A(a*b) = A(a) o A(b): (a*b)(i) = b(a(i))
    std::vector<std::uint32_t> im(size());
    for (std::size_t i = 0; i < size(); ++i) im[i] = o.im_[im_[i]];
    return CoordinatePermutation(std::move(im));
}

CoordinatePermutation CoordinatePermutation::inverse() const {
    std::vector<std::uint32_t> im(size());
    for (std::size_t i = 0; i < size(); ++i) im[im_[i]] = std::uint32_t(i);
    return CoordinatePermutation(std::move(im));
}

CoordinatePermutation coordinate_perm(const MoebiusMap& g, const Divisor& E) {
    auto pts = E.support();
    MoebiusMap ginv = g.inverse();
    std::vector<std::uint32_t> im(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        P1Point target = ginv.apply(pts[i]);
        auto it = std::lower_bound(pts.begin(), pts.end(), target);
        if (it == pts.end() || *it != target)
            throw std::invalid_argument("coordinate_perm: the map moves a point of supp(E) outside supp(E)");
        im[i] = std::uint32_t(it - pts.begin());
    }
    return CoordinatePermutation(std::move(im));
}

bool preserves_code(const LinearCode& c, const Mat& parity, const CoordinatePermutation& sigma) {
    if (sigma.size() != c.n) throw std::invalid_argument("preserves_code: length mismatch");
    const Field& f = *c.field;
    for (std::size_t r = 0; r < c.k; ++r) {
        for (std::size_t h = 0; h < parity.rows(); ++h) {
            std::uint32_t acc = 0;
            for (std::size_t i = 0; i < c.n; ++i)
                acc = f.add(acc, f.mul(parity.at(h, i), c.at(r, sigma(i))));
            if (acc != 0) return false;
        }
    }
    return true;
}

bool preserves_code(const LinearCode& c, const CoordinatePermutation& sigma) {
    return preserves_code(c, null_space(c.generator_matrix()), sigma);
}

namespace {

void verify_is_permutation_group(const std::vector<CoordinatePermutation>& perms) {
    if (perms.empty()) throw std::logic_error("permutation scan: empty result (identity missing)");
    std::set<CoordinatePermutation> set(perms.begin(), perms.end());
    if (!set.count(CoordinatePermutation::identity(perms[0].size())))
        throw std::logic_error("permutation scan: identity missing");
    // full closure check when small, deterministic sample otherwise
    if (perms.size() <= 1000) {
        for (const auto& a : perms)
            for (const auto& b : perms)
                if (!set.count(a * b)) throw std::logic_error("permutation scan: not closed under composition");
    } else {
        SplitMix64 rng(0);
        for (int t = 0; t < 1000; ++t) {
            const auto& a = perms[rng.below(perms.size())];
            const auto& b = perms[rng.below(perms.size())];
            if (!set.count(a * b)) throw std::logic_error("permutation scan: not closed under composition");
        }
    }
}

}  // namespace

std::vector<CoordinatePermutation> perm_group_exhaustive(const LinearCode& c, const Budgets& budgets,
                                                         ExecMode exec) {
    if (c.n > budgets.sn_scan_max_n)
        throw budget_error("perm_group_exhaustive: n = " + std::to_string(c.n) + " exceeds the S_n scan budget");
    Mat parity = null_space(c.generator_matrix());
    auto raw = sn_preserving_scan(*c.field, c.k, c.n, c.gen, parity.data(), parity.rows(), exec);
    std::vector<CoordinatePermutation> out;
    out.reserve(raw.size());
    for (auto& im : raw) out.emplace_back(std::move(im));
    verify_is_permutation_group(out);
    return out;
}

GroupOnP1 aut_DE_scan(const Divisor& D, const Divisor& E, const Budgets& budgets, ExecMode exec) {
    const Field& f = D.field();
    if (f.q() > budgets.pgl_scan_max_q)
        throw budget_error("aut_DE_scan: q = " + std::to_string(f.q()) + " exceeds the PGL scan budget");
    auto elems = pgl_stabilizer_scan(f, D, E, exec);
    GroupOnP1 g(f, Family::Custom, FamilyParams{}, elems, elems);
    for (const auto& a : g.elements())
        for (const auto& b : g.elements())
            if (!g.contains(a.compose(b))) throw std::logic_error("aut_DE_scan: result is not closed");
    return g;
}

LiftReport lift_consistency_check(const Divisor& D, const Divisor& E, const Budgets& budgets,
                                  ExecMode exec) {
    LiftReport rep;
    std::int64_t degd = D.degree();
    std::int64_t n = std::int64_t(E.support_size());
    rep.hypothesis_met = degd > 0 && n > 2 * degd;
    if (!rep.hypothesis_met) return rep;

    LinearCode code = ag_code(D, E);
    auto perms = perm_group_exhaustive(code, budgets, exec);
    GroupOnP1 autg = aut_DE_scan(D, E, budgets, exec);
    rep.perm_order = perms.size();
    rep.aut_order = autg.order();

    std::set<CoordinatePermutation> image;
    for (const auto& g : autg.elements()) image.insert(coordinate_perm(g, E));
    rep.injective = image.size() == autg.order();
    std::set<CoordinatePermutation> pset(perms.begin(), perms.end());
    rep.image_contained = true;
    for (const auto& s : image)
        if (!pset.count(s)) rep.image_contained = false;
    rep.orders_equal = rep.perm_order == rep.aut_order;
    return rep;
}

PermActionTable build_perm_action(const GroupOnP1& g, const Divisor& E) {
    PermActionTable table;
    std::set<CoordinatePermutation> distinct;
    for (const auto& m : g.elements()) {
        table.perms.push_back(coordinate_perm(m, E));
        distinct.insert(table.perms.back());
    }
    table.faithful = distinct.size() == g.order();
    // homomorphism spot check is structural: phi(gh) = phi(g) * phi(h)
    for (std::size_t i = 0; i < g.elements().size(); ++i)
        for (std::size_t j = 0; j < g.elements().size(); ++j) {
            MoebiusMap prod = g.elements()[i].compose(g.elements()[j]);
            auto it = std::lower_bound(g.elements().begin(), g.elements().end(), prod);
            std::size_t idx = std::size_t(it - g.elements().begin());
            if (!(table.perms[i] * table.perms[j] == table.perms[idx]))
                throw std::logic_error("perm action: phi is not a homomorphism");
        }
    return table;
}

Mat rho_matrix(const MoebiusMap& g, const RRBasis& basis) {
    const Field& f = g.field();
    if (!stabilizes(g, basis.divisor)) throw std::invalid_argument("rho_matrix: g does not stabilize D");
    std::size_t m = basis.functions.size();
    if (m == 0) throw std::invalid_argument("rho_matrix: empty basis");
    auto pts = fresh_points(basis.divisor, m);

    Mat mt(f, m, m);  // mt[l][j] = b_j(x_l)
    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t j = 0; j < m; ++j) mt.at(l, j) = ratfun_eval(basis.functions[j], pts[l]).index();
    Mat w(f, m, m);  // w[l][i] = (b_i o g^{-1})(x_l)
    for (std::size_t i = 0; i < m; ++i) {
        RationalFunction pb = pullback(g, basis.functions[i]);
        for (std::size_t l = 0; l < m; ++l) w.at(l, i) = ratfun_eval(pb, pts[l]).index();
    }
    return solve(std::move(mt), std::move(w));  // column i = coordinates of rho(g) b_i
}

RepMatrixTable build_rep_table(const GroupOnP1& g, const RRBasis& basis) {
    RepMatrixTable table;
    table.matrices.reserve(g.order());
    for (const auto& m : g.elements()) table.matrices.push_back(rho_matrix(m, basis));
    table.all_invertible = true;
    for (const auto& r : table.matrices)
        if (!is_invertible(r)) table.all_invertible = false;
    table.homomorphism = true;
    for (std::size_t i = 0; i < g.elements().size() && table.homomorphism; ++i)
        for (std::size_t j = 0; j < g.elements().size(); ++j) {
            MoebiusMap prod = g.elements()[i].compose(g.elements()[j]);
            auto it = std::lower_bound(g.elements().begin(), g.elements().end(), prod);
            std::size_t idx = std::size_t(it - g.elements().begin());
            if (!(mat_mul(table.matrices[i], table.matrices[j]) == table.matrices[idx])) {
                table.homomorphism = false;
                break;
            }
        }
    return table;
}

namespace {

std::string moebius_label(const MoebiusMap& g) {
    return "[" + std::to_string(g.a().index()) + "," + std::to_string(g.b().index()) + "," +
           std::to_string(g.c().index()) + "," + std::to_string(g.d().index()) + "]";
}

}  // namespace

RepCheckReport rep_structure_check(const GroupOnP1& g, const Divisor& D) {
    const Field& f = g.field();
    if (!stabilized_by(D, g.elements()))
        throw std::invalid_argument("rep_structure_check: D is not stabilized by G");
    RepCheckReport rep;
    rep.effective_case = D.is_effective();
    RRBasis basis = rr_basis(D);
    RepMatrixTable table = build_rep_table(g, basis);
    rep.homomorphism = table.homomorphism;
    rep.all_invertible = table.all_invertible;

    if (rep.effective_case) {
        std::size_t m = basis.functions.size();

        // (i) the constant basis element spans a trivial summand
        rep.constants_fixed = true;
        for (const auto& r : table.matrices) {
            if (r.at(0, 0) != 1) rep.constants_fixed = false;
            for (std::size_t j = 1; j < m; ++j)
                if (r.at(j, 0) != 0) rep.constants_fixed = false;
        }

        // orbit index per support point
        auto support = D.support();
        OrbitDecomposition dec = orbit_decomposition(g, support);
        auto orbit_of = [&](const P1Point& p) -> std::size_t {
            for (std::size_t oi = 0; oi < dec.orbits.size(); ++oi)
                for (const auto& q : dec.orbits[oi])
                    if (q == p) return oi;
            throw std::logic_error("rep check: point not in any orbit");
        };

        // (ii) image of m_P^l sits in span{1, m_Q^j : Q in orbit(P), j <= l},
        // with the power-l part on m_{g(P)}^l alone
        rep.triangular = true;
        for (std::size_t gi = 0; gi < g.elements().size() && rep.triangular; ++gi) {
            const MoebiusMap& mm = g.elements()[gi];
            const Mat& r = table.matrices[gi];
            for (std::size_t i = 1; i < m && rep.triangular; ++i) {
                const BasisTag& ti = basis.tags[i];
                P1Point image_pt = mm.apply(*ti.point);
                std::size_t oi = orbit_of(*ti.point);
                for (std::size_t j = 0; j < m; ++j) {
                    if (r.at(j, i) == 0) continue;
                    const BasisTag& tj = basis.tags[j];
                    if (tj.kind == BasisTag::Constant) continue;
                    if (orbit_of(*tj.point) != oi || tj.power > ti.power) {
                        rep.triangular = false;
                        break;
                    }
                    if (tj.power == ti.power && !(*tj.point == image_pt)) {
                        rep.triangular = false;
                        break;
                    }
                }
            }
        }

        // (iii) character experiment, reported per element
        for (std::size_t gi = 0; gi < g.elements().size(); ++gi) {
            const MoebiusMap& mm = g.elements()[gi];
            CharacterRow row;
            row.element = moebius_label(mm);
            row.trace_index = mat_trace(table.matrices[gi]);
            std::int64_t formula = 1;
            for (const auto& orb : dec.orbits) {
                std::int64_t a_k = D.coefficient(orb.front());
                std::int64_t fixed = 0;
                for (const auto& p : orb)
                    if (mm.apply(p) == p) ++fixed;
                formula += a_k * fixed;
            }
            row.fixed_point_formula = formula;
            row.formula_mod_p_index = f.from_int(formula);
            row.equal = row.formula_mod_p_index == row.trace_index;
            if (row.equal) ++rep.character_matches;
            rep.character.push_back(std::move(row));
        }
        return rep;
    }

    // (iv) non-effective: L(D) is a stable subspace of L(D+)
    if (D.degree() <= 0) throw std::invalid_argument("rep_structure_check: non-effective case needs deg(D) > 0");
    Divisor dplus = D.positive_part();
    if (!stabilized_by(dplus, g.elements()))
        throw std::logic_error("rep check: D+ should inherit stability from D");
    RRBasis basis_plus = rr_basis(dplus);
    RepMatrixTable table_plus = build_rep_table(g, basis_plus);
    std::size_t mp = basis_plus.functions.size();
    std::size_t kd = basis.functions.size();

    rep.submodule_contained = true;
    for (const auto& fn : basis.functions)
        if (!verify_in_LD(fn, dplus)) rep.submodule_contained = false;

    // coordinates of the L(D) basis inside L(D+)
    auto pts = fresh_points(dplus + D.negative_part(), mp);
    Mat mt(f, mp, mp);
    for (std::size_t l = 0; l < mp; ++l)
        for (std::size_t j = 0; j < mp; ++j) mt.at(l, j) = ratfun_eval(basis_plus.functions[j], pts[l]).index();
    Mat w(f, mp, kd);
    for (std::size_t i = 0; i < kd; ++i)
        for (std::size_t l = 0; l < mp; ++l) w.at(l, i) = ratfun_eval(basis.functions[i], pts[l]).index();
    Mat coords = solve(std::move(mt), std::move(w));  // mp x kd, columns span the subspace

    Mat vrows = coords.transposed();  // kd x mp
    Mat vr = vrows;
    auto pivots = rref(vr);
    for (const auto& rp : table_plus.matrices) {
        Mat moved = mat_mul(rp, coords).transposed();  // kd x mp rows = images
        for (std::size_t i = 0; i < moved.rows(); ++i) {
            std::vector<std::uint32_t> row(moved.data().begin() + i * mp, moved.data().begin() + (i + 1) * mp);
            if (!rowspace_contains(vr, pivots, row)) rep.submodule_contained = false;
        }
    }
    return rep;
}

}  // namespace p1codes

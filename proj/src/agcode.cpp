#include "p1codes/agcode.hpp"

#include <algorithm>
#include <stdexcept>

#include "p1codes/errors.hpp"
#include "p1codes/kernels.hpp"

namespace p1codes {

namespace {

// q^k, saturating at cap+1 to keep budget tests overflow-safe
std::uint64_t pow_capped(std::uint64_t q, std::size_t k, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > cap / q) return cap + 1;
        r *= q;
    }
    return r;
}

}  // namespace

Mat LinearCode::generator_matrix() const {
    Mat m(*field, k, n);
    m.data() = gen;
    return m;
}

LinearCode make_code(const Field& f, std::size_t n, std::vector<std::uint32_t> gen_rows) {
    if (n == 0) throw std::invalid_argument("code: length must be positive");
    if (gen_rows.size() % n != 0) throw std::invalid_argument("code: generator is not k x n");
    LinearCode c;
    c.field = &f;
    c.n = n;
    c.k = gen_rows.size() / n;
    c.gen = std::move(gen_rows);
    if (c.k > 0 && rank(c.generator_matrix()) != c.k)
        throw std::invalid_argument("code: generator rows are dependent");
    return c;
}

Mat evaluate_basis(const RRBasis& basis, const Divisor& E) {
    const Field& f = E.field();
    if (!basis.divisor.field().same(f)) throw std::invalid_argument("evaluate_basis: mixed fields");
    if (!E.is_effective()) throw std::invalid_argument("evaluate_basis: E must be effective");
    for (const auto& [p, c] : E.terms()) {
        if (c != 1) throw std::invalid_argument("evaluate_basis: E must be multiplicity-free");
        if (basis.divisor.coefficient(p) != 0)
            throw std::invalid_argument("evaluate_basis: supp(D) and supp(E) overlap");
    }
    auto pts = E.support();
    Mat m(f, basis.functions.size(), pts.size());
    for (std::size_t i = 0; i < basis.functions.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            m.at(i, j) = ratfun_eval(basis.functions[i], pts[j]).index();
    return m;
}

LinearCode ag_code(const Divisor& D, const Divisor& E) {
    if (D.degree() < 0) throw std::invalid_argument("ag_code: deg(D) < 0");
    const Field& f = E.field();
    RRBasis basis = rr_basis(D);
    Mat eval = evaluate_basis(basis, E);
    std::size_t n = eval.cols();

    // keep the original rows that extend the rank, in order
    std::vector<std::uint32_t> kept;
    std::size_t cur_rank = 0;
    for (std::size_t i = 0; i < eval.rows(); ++i) {
        std::vector<std::uint32_t> cand = kept;
        cand.insert(cand.end(), eval.data().begin() + i * n, eval.data().begin() + (i + 1) * n);
        Mat m(f, cand.size() / n, n);
        m.data() = cand;
        if (rank(m) > cur_rank) {
            kept = std::move(cand);
            ++cur_rank;
        }
    }
    LinearCode c = make_code(f, n, std::move(kept));
    c.eval_points = E.support();
    c.source = std::make_pair(D, E);
    return c;
}

LinearCode grs_code(std::size_t ell, std::span<const P1Point> points,
                    std::span<const FieldElement> multipliers) {
    if (points.empty()) throw std::invalid_argument("grs_code: no evaluation points");
    if (points.size() != multipliers.size())
        throw std::invalid_argument("grs_code: points and multipliers differ in length");
    const Field& f = points[0].field();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].is_infinity()) throw std::invalid_argument("grs_code: points must be affine");
        if (multipliers[i].is_zero()) throw std::invalid_argument("grs_code: zero multiplier");
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw std::invalid_argument("grs_code: repeated point");
    }
    std::size_t n = points.size();
    std::vector<std::uint32_t> rows((ell + 1) * n);
    for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t x = points[j].value_index();
        std::uint32_t v = multipliers[j].index();
        for (std::size_t i = 0; i <= ell; ++i) {
            rows[i * n + j] = v;
            v = f.mul(v, x);
        }
    }
    // drop dependent rows (only happens when ell + 1 > n)
    if (ell + 1 > n) {
        Mat m(f, ell + 1, n);
        m.data() = rows;
        std::vector<std::uint32_t> kept;
        std::size_t cur_rank = 0;
        for (std::size_t i = 0; i <= ell; ++i) {
            std::vector<std::uint32_t> cand = kept;
            cand.insert(cand.end(), rows.begin() + i * n, rows.begin() + (i + 1) * n);
            Mat mm(f, cand.size() / n, n);
            mm.data() = cand;
            if (rank(mm) > cur_rank) {
                kept = std::move(cand);
                ++cur_rank;
            }
        }
        rows = std::move(kept);
    }
    LinearCode c = make_code(f, n, std::move(rows));
    c.eval_points.assign(points.begin(), points.end());
    return c;
}

bool injectivity_check(const Divisor& D, const Divisor& E) {
    if (D.degree() < 0) throw std::invalid_argument("injectivity_check: deg(D) < 0");
    RRBasis basis = rr_basis(D);
    Mat eval = evaluate_basis(basis, E);
    return rank(eval) == basis.functions.size();
}

mpz_class Spectrum::total() const {
    mpz_class t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

Spectrum spectrum_exact(const LinearCode& c, std::uint64_t budget, ExecMode mode) {
    if (pow_capped(c.field->q(), c.k, budget) > budget)
        throw budget_error("spectrum_exact: q^k exceeds the enumeration budget");
    auto scan = weight_scan(*c.field, c.k, c.n, c.gen, mode);
    Spectrum s;
    s.counts.reserve(scan.counts.size());
    for (auto v : scan.counts) s.counts.emplace_back(static_cast<unsigned long>(v));
    return s;
}

std::size_t min_distance_exact(const LinearCode& c, std::uint64_t budget, ExecMode mode) {
    if (c.k == 0) throw std::invalid_argument("min_distance_exact: zero-dimensional code has no nonzero codeword");
    if (pow_capped(c.field->q(), c.k, budget) > budget)
        throw budget_error("min_distance_exact: q^k exceeds the enumeration budget");
    return weight_scan(*c.field, c.k, c.n, c.gen, mode).min_weight;
}

Spectrum spectrum_mds(std::size_t n, std::size_t k, std::size_t d, std::uint64_t q) {
    if (d != n + 1 - k) throw std::invalid_argument("spectrum_mds: parameters are not MDS (d != n + 1 - k)");
    Spectrum s;
    s.counts.assign(n + 1, mpz_class(0));
    s.counts[0] = 1;
    for (std::size_t j = d; j <= n; ++j) {
        mpz_class inner = 0;
        mpz_class qpow;
        for (std::size_t i = 0; i + d <= j; ++i) {
            mpz_class bin;
            mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(j - 1), static_cast<unsigned long>(i));
            mpz_ui_pow_ui(qpow.get_mpz_t(), static_cast<unsigned long>(q),
                          static_cast<unsigned long>(j - d - i));
            if (i % 2 == 0)
                inner += bin * qpow;
            else
                inner -= bin * qpow;
        }
        mpz_class binnj;
        mpz_bin_uiui(binnj.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
        s.counts[j] = binnj * mpz_class(static_cast<unsigned long>(q - 1)) * inner;
    }
    return s;
}

namespace {

// all k-subsets nonsingular, by exhaustive combination enumeration
bool all_minors_nonsingular(const LinearCode& c, std::vector<std::uint32_t>* witness) {
    const Field& f = *c.field;
    std::vector<std::uint32_t> cols(c.k);
    for (std::size_t i = 0; i < c.k; ++i) cols[i] = std::uint32_t(i);
    while (true) {
        Mat m(f, c.k, c.k);
        for (std::size_t i = 0; i < c.k; ++i)
            for (std::size_t j = 0; j < c.k; ++j) m.at(i, j) = c.at(i, cols[j]);
        if (rank(m) != c.k) {
            if (witness) *witness = cols;
            return false;
        }
        // next combination
        std::size_t i = c.k;
        while (i > 0 && cols[i - 1] == c.n - c.k + i - 1) --i;
        if (i == 0) break;
        ++cols[i - 1];
        for (std::size_t j = i; j < c.k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return true;
}

std::uint64_t binomial_capped(std::size_t n, std::size_t k, std::uint64_t cap) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!b.fits_ulong_p()) return cap + 1;
    std::uint64_t v = b.get_ui();
    return v;
}

}  // namespace

MDSCertificate mds_certificate(const LinearCode& c, MDSCertificate::Mode mode, std::uint64_t trials,
                               std::uint64_t seed, std::uint64_t budget, ExecMode exec) {
    if (c.k == 0) throw std::invalid_argument("mds_certificate: zero-dimensional code");
    MDSCertificate cert;
    cert.mode = mode;
    cert.seed = seed;
    if (mode == MDSCertificate::Mode::Exact) {
        std::uint64_t words = pow_capped(c.field->q(), c.k, budget);
        std::uint64_t minors = binomial_capped(c.n, c.k, budget);
        if (words <= budget && words <= minors) {
            cert.verdict = min_distance_exact(c, budget, exec) == c.n + 1 - c.k;
            if (!cert.verdict && minors <= budget) {
                std::vector<std::uint32_t> w;
                all_minors_nonsingular(c, &w);
                cert.witness_columns = w;
            }
        } else if (minors <= budget) {
            std::vector<std::uint32_t> w;
            cert.verdict = all_minors_nonsingular(c, &w);
            if (!cert.verdict) cert.witness_columns = w;
        } else {
            throw budget_error("mds_certificate: both q^k and C(n,k) exceed the exact budget");
        }
        return cert;
    }
    cert.trials = trials;
    auto res = minor_sample_scan(*c.field, c.k, c.n, c.gen, trials, seed, exec);
    cert.verdict = res.all_nonsingular;
    cert.witness_columns = res.witness_columns;
    return cert;
}

LinearCode dual_code(const LinearCode& c) {
    Mat ns = null_space(c.generator_matrix());
    LinearCode d = make_code(*c.field, c.n, ns.data());
    d.eval_points = c.eval_points;
    return d;
}

SelfDualityReport formally_self_dual(const LinearCode& c, const Budgets& budgets, std::uint64_t seed,
                                     ExecMode exec) {
    SelfDualityReport rep;
    LinearCode dual = dual_code(c);
    std::uint64_t qk = pow_capped(c.field->q(), c.k, budgets.enumeration_budget);
    std::uint64_t qnk = pow_capped(c.field->q(), c.n - c.k, budgets.enumeration_budget);
    if (qk <= budgets.enumeration_budget && qnk <= budgets.enumeration_budget) {
        rep.method = "exact";
        rep.formally_self_dual =
            spectrum_exact(c, budgets.enumeration_budget, exec) == spectrum_exact(dual, budgets.enumeration_budget, exec);
        return rep;
    }
    if (c.k == 0 || c.k == c.n)
        throw budget_error("formally_self_dual: degenerate dimensions outside the exact budget");
    auto certify = [&](const LinearCode& code) {
        try {
            return mds_certificate(code, MDSCertificate::Mode::Exact, 0, seed, budgets.enumeration_budget, exec)
                .verdict;
        } catch (const budget_error&) {
            return mds_certificate(code, MDSCertificate::Mode::Sampled, budgets.sample_trials, seed,
                                   budgets.enumeration_budget, exec)
                .verdict;
        }
    };
    if (!certify(c) || !certify(dual))
        throw budget_error("formally_self_dual: spectra not enumerable and MDS certification failed");
    rep.method = "mds-formula";
    rep.formally_self_dual = spectrum_mds(c.n, c.k, c.n + 1 - c.k, c.field->q()) ==
                             spectrum_mds(dual.n, dual.k, dual.n + 1 - dual.k, dual.field->q());
    return rep;
}

MonomialEquivalence monomial_equiv_to_grs(const Divisor& D, const Divisor& E) {
    const Field& f = D.field();
    if (E.coefficient(P1Point::infinity(f)) != 0)
        throw std::invalid_argument("monomial_equiv_to_grs: infinity lies in supp(E)");
    for (const auto& [p, c] : E.terms())
        if (D.coefficient(p) != 0) throw std::invalid_argument("monomial_equiv_to_grs: supports overlap");

    // h = prod over affine P in supp(D) of (x - p)^(a_P); then
    // D = deg(D) inf + div(h) and f -> f h maps L(D) onto L(deg(D) inf)
    Poly num = Poly::one(f), den = Poly::one(f);
    for (const auto& [p, c] : D.terms()) {
        if (p.is_infinity()) continue;
        Poly lin = Poly::linear_root(p.value());
        if (c > 0)
            num = num * lin.pow(std::uint64_t(c));
        else
            den = den * lin.pow(std::uint64_t(-c));
    }
    MonomialEquivalence eq{RationalFunction(num, den), {}, LinearCode{}, false};

    LinearCode base = ag_code(D, E);
    Divisor dinf = Divisor::single(P1Point::infinity(f), D.degree());
    eq.target = ag_code(dinf, E);

    std::vector<std::uint32_t> scaled = base.gen;
    for (std::size_t j = 0; j < base.n; ++j) {
        FieldElement hv = ratfun_eval(eq.h, base.eval_points[j]);
        if (hv.is_zero()) throw std::logic_error("monomial_equiv_to_grs: vanishing multiplier");
        eq.multipliers.push_back(hv);
        for (std::size_t i = 0; i < base.k; ++i)
            scaled[i * base.n + j] = f.mul(scaled[i * base.n + j], hv.index());
    }
    Mat sm(f, base.k, base.n);
    sm.data() = scaled;
    eq.verified = rowspace_equal(sm, eq.target.generator_matrix());
    return eq;
}

WeightWitness weight_witness(const Divisor& D, const Divisor& E) {
    std::int64_t degd = D.degree();
    if (degd < 0) throw std::invalid_argument("weight_witness: deg(D) < 0");
    auto pts = E.support();
    if (degd >= std::int64_t(pts.size()))
        throw std::invalid_argument("weight_witness: requires deg(D) < n");
    Divisor ds = D;
    for (std::int64_t i = 0; i < degd; ++i) ds.add_term(pts[std::size_t(i)], -1);
    RRBasis basis = rr_basis(ds);  // deg 0, one-dimensional
    WeightWitness w{basis.functions.at(0), {}, 0};
    for (const auto& p : pts) {
        FieldElement v = ratfun_eval(w.f, p);
        w.codeword.push_back(v.index());
        if (!v.is_zero()) ++w.weight;
    }
    if (w.weight != pts.size() - std::size_t(degd))
        throw std::logic_error("weight_witness: unexpected weight");
    return w;
}

}  // namespace p1codes

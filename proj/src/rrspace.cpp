#include "p1codes/rrspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "p1codes/errors.hpp"
#include "p1codes/linalg.hpp"

namespace p1codes {

RationalFunction m_function(const P1Point& p) {
    const Field& f = p.field();
    if (p.is_infinity()) return RationalFunction(Poly::x(f), Poly::one(f));
    return RationalFunction(Poly::one(f), Poly::linear_root(p.value()));
}

RRSplit rr_split(const Divisor& d) {
    if (d.degree() < 0) throw std::invalid_argument("rr_split: deg(D) < 0");
    if (d.is_effective()) throw std::invalid_argument("rr_split: D is already effective");
    const Field& f = d.field();
    Divisor pos = d.positive_part();
    Divisor neg = d.negative_part();
    std::int64_t want = neg.degree();

    // E' <= D^+ of degree deg(D^-), greedy from the largest coefficients
    std::vector<std::pair<P1Point, std::int64_t>> by_coeff(pos.terms().begin(), pos.terms().end());
    std::sort(by_coeff.begin(), by_coeff.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    Divisor eprime(f);
    for (const auto& [p, c] : by_coeff) {
        if (want == 0) break;
        std::int64_t take = std::min(c, want);
        eprime.add_term(p, take);
        want -= take;
    }
    RRSplit out{d - (eprime - neg), eprime - neg, RationalFunction(f)};

    // q = prod over affine P in supp(D2) of (x - p)^(-c_P); the infinity
    // coefficient is forced by deg(D2) = 0
    Poly num = Poly::one(f), den = Poly::one(f);
    for (const auto& [p, c] : out.d2.terms()) {
        if (p.is_infinity()) continue;
        Poly lin = Poly::linear_root(p.value());
        if (c < 0)
            num = num * lin.pow(std::uint64_t(-c));
        else
            den = den * lin.pow(std::uint64_t(c));
    }
    out.q = RationalFunction(num, den);
    if (divisor_of(out.q) != -out.d2) throw std::logic_error("rr_split: div(q) != -D2");
    return out;
}

std::vector<P1Point> fresh_points(const Divisor& d, std::size_t count) {
    const Field& f = d.field();
    std::vector<P1Point> out;
    for (const auto& p : all_points(f)) {
        if (out.size() == count) break;
        if (d.coefficient(p) != 0) continue;
        out.push_back(p);
    }
    if (out.size() != count)
        throw std::invalid_argument("fresh_points: the field is too small for this divisor");
    return out;
}

RRBasis rr_basis(const Divisor& d) {
    const Field& f = d.field();
    RRBasis basis{d, {}, {}, std::nullopt};
    if (d.degree() < 0) return basis;

    Divisor d1(f);
    RationalFunction lead = RationalFunction::constant(f.one());
    if (d.is_effective()) {
        d1 = d;
    } else {
        RRSplit split = rr_split(d);
        d1 = split.d1;
        lead = split.q;
        basis.factor = split.q;
    }
    basis.functions.push_back(lead);
    basis.tags.push_back(BasisTag{BasisTag::Constant, std::nullopt, 0});
    for (const auto& [p, c] : d1.terms()) {
        RationalFunction m = m_function(p);
        RationalFunction acc = lead;
        for (std::int64_t l = 1; l <= c; ++l) {
            acc = acc * m;
            basis.functions.push_back(acc);
            basis.tags.push_back(BasisTag{BasisTag::PolePower, p, int(l)});
        }
    }
    if (basis.functions.size() != std::size_t(d.degree()) + 1)
        throw std::logic_error("rr_basis: dimension mismatch");

    for (const auto& fn : basis.functions)
        if (!verify_in_LD(fn, d)) throw std::logic_error("rr_basis: element outside L(D)");

    // independence certificate: full rank at deg(D)+1 fresh points
    std::size_t m = basis.functions.size();
    auto pts = fresh_points(d, m);
    Mat eval(f, m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) eval.at(i, j) = ratfun_eval(basis.functions[i], pts[j]).index();
    if (rank(eval) != m) throw std::logic_error("rr_basis: basis fails the rank certificate");
    return basis;
}

bool verify_in_LD(const RationalFunction& f, const Divisor& d) {
    if (f.is_zero()) return true;
    Divisor sum = divisor_of(f) + d;
    return sum.is_effective();
}

}  // namespace p1codes

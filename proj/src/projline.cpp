#include "p1codes/projline.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "p1codes/errors.hpp"

namespace p1codes {

std::vector<P1Point> all_points(const Field& f) {
    std::vector<P1Point> pts;
    pts.reserve(f.q() + 1);
    pts.push_back(P1Point::infinity(f));
    for (std::uint64_t r = 0; r < f.q(); ++r)
        pts.push_back(P1Point::affine(FieldElement(f, f.element_at_rank(r))));
    return pts;
}

Divisor Divisor::single(const P1Point& p, std::int64_t c) {
    Divisor d(p.field());
    d.add_term(p, c);
    return d;
}

Divisor Divisor::sum_of(std::span<const P1Point> pts, std::int64_t c) {
    if (pts.empty()) throw std::invalid_argument("divisor: empty point list has no field");
    Divisor d(pts[0].field());
    for (const auto& p : pts) d.add_term(p, c);
    return d;
}

void Divisor::add_term(const P1Point& p, std::int64_t c) {
    if (!p.field().same(*f_)) throw std::invalid_argument("divisor: point from another field");
    if (c == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
        return;
    }
    constexpr std::int64_t lim = std::numeric_limits<std::int64_t>::max() / 2;
    if ((it->second > lim && c > lim) || (it->second < -lim && c < -lim))
        throw std::overflow_error("divisor: coefficient overflow");
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

std::int64_t Divisor::coefficient(const P1Point& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

std::vector<P1Point> Divisor::support() const {
    std::vector<P1Point> s;
    s.reserve(terms_.size());
    for (const auto& [p, c] : terms_) s.push_back(p);
    return s;
}

std::int64_t Divisor::degree() const {
    std::int64_t deg = 0;
    for (const auto& [p, c] : terms_) {
        constexpr std::int64_t lim = std::numeric_limits<std::int64_t>::max() / 2;
        if (deg > lim || deg < -lim) throw std::overflow_error("divisor: degree overflow");
        deg += c;
    }
    return deg;
}

bool Divisor::is_effective() const {
    for (const auto& [p, c] : terms_)
        if (c < 0) return false;
    return true;
}

Divisor Divisor::positive_part() const {
    Divisor d(*f_);
    for (const auto& [p, c] : terms_)
        if (c > 0) d.add_term(p, c);
    return d;
}

Divisor Divisor::negative_part() const {
    Divisor d(*f_);
    for (const auto& [p, c] : terms_)
        if (c < 0) d.add_term(p, -c);
    return d;
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor d = *this;
    for (const auto& [p, c] : o.terms_) d.add_term(p, c);
    return d;
}

Divisor Divisor::operator-(const Divisor& o) const {
    Divisor d = *this;
    for (const auto& [p, c] : o.terms_) d.add_term(p, -c);
    return d;
}

Divisor Divisor::operator-() const {
    Divisor d(*f_);
    for (const auto& [p, c] : terms_) d.add_term(p, -c);
    return d;
}

Divisor Divisor::scaled(std::int64_t c) const {
    Divisor d(*f_);
    if (c == 0) return d;
    for (const auto& [p, k] : terms_) d.add_term(p, k * c);
    return d;
}

MoebiusMap::MoebiusMap(const Field& f, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d)
    : f_(&f), a_(a), b_(b), c_(c), d_(d) {
    canonicalize();
}

MoebiusMap::MoebiusMap(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                       const FieldElement& d)
    : f_(&a.field()), a_(a.index()), b_(b.index()), c_(c.index()), d_(d.index()) {
    if (!b.field().same(*f_) || !c.field().same(*f_) || !d.field().same(*f_))
        throw std::invalid_argument("moebius: entries from different fields");
    std::uint32_t det = f_->sub(f_->mul(a_, d_), f_->mul(b_, c_));
    if (det == 0) throw std::invalid_argument("moebius: singular matrix (ad - bc = 0)");
    canonicalize();
}

MoebiusMap MoebiusMap::identity(const Field& f) { return MoebiusMap(f, 1, 0, 0, 1); }

MoebiusMap MoebiusMap::from_ints(const Field& f, std::int64_t a, std::int64_t b, std::int64_t c,
                                 std::int64_t d) {
    return MoebiusMap(FieldElement(f, f.from_int(a)), FieldElement(f, f.from_int(b)),
                      FieldElement(f, f.from_int(c)), FieldElement(f, f.from_int(d)));
}

void MoebiusMap::canonicalize() {
    std::uint32_t lead = a_ ? a_ : b_ ? b_ : c_ ? c_ : d_;
    if (lead == 0 || lead == 1) return;
    std::uint32_t s = f_->inv(lead);
    a_ = f_->mul(a_, s);
    b_ = f_->mul(b_, s);
    c_ = f_->mul(c_, s);
    d_ = f_->mul(d_, s);
}

P1Point MoebiusMap::apply(const P1Point& p) const {
    const Field& f = *f_;
    if (p.is_infinity()) {
        if (c_ == 0) return P1Point::infinity(f);
        return P1Point::affine(FieldElement(f, f.div(a_, c_)));
    }
    std::uint32_t x = p.value_index();
    std::uint32_t denom = f.add(f.mul(c_, x), d_);
    if (denom == 0) return P1Point::infinity(f);
    std::uint32_t numer = f.add(f.mul(a_, x), b_);
    return P1Point::affine(FieldElement(f, f.div(numer, denom)));
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& o) const {
    if (!f_->same(*o.f_)) throw std::invalid_argument("moebius: compose across fields");
    const Field& f = *f_;
    return MoebiusMap(f, f.add(f.mul(a_, o.a_), f.mul(b_, o.c_)), f.add(f.mul(a_, o.b_), f.mul(b_, o.d_)),
                      f.add(f.mul(c_, o.a_), f.mul(d_, o.c_)), f.add(f.mul(c_, o.b_), f.mul(d_, o.d_)));
}

MoebiusMap MoebiusMap::inverse() const {
    const Field& f = *f_;
    return MoebiusMap(f, d_, f.neg(b_), f.neg(c_), a_);
}

bool MoebiusMap::operator<(const MoebiusMap& o) const {
    if (a_ != o.a_) return f_->less(a_, o.a_);
    if (b_ != o.b_) return f_->less(b_, o.b_);
    if (c_ != o.c_) return f_->less(c_, o.c_);
    return f_->less(d_, o.d_);
}

MoebiusMap moebius_make(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                        const FieldElement& d) {
    return MoebiusMap(a, b, c, d);
}

P1Point moebius_apply(const MoebiusMap& g, const P1Point& p) { return g.apply(p); }
MoebiusMap moebius_compose(const MoebiusMap& g, const MoebiusMap& h) { return g.compose(h); }
MoebiusMap moebius_inverse(const MoebiusMap& g) { return g.inverse(); }

RationalFunction pullback(const MoebiusMap& g, const RationalFunction& f) {
    if (f.is_zero()) return f;
    const Field& F = f.field();
    MoebiusMap h = g.inverse();
    Poly A(F, {h.b().index(), h.a().index()});  // a x + b
    Poly C(F, {h.d().index(), h.c().index()});  // c x + d
    int dn = f.num().degree(), dd = f.den().degree();
    int m = std::max(dn, dd);
    std::vector<Poly> Apow, Cpow;
    Apow.reserve(m + 1);
    Cpow.reserve(m + 1);
    Apow.push_back(Poly::one(F));
    Cpow.push_back(Poly::one(F));
    for (int i = 1; i <= m; ++i) {
        Apow.push_back(Apow.back() * A);
        Cpow.push_back(Cpow.back() * C);
    }
    auto substitute = [&](const Poly& P) {
        Poly acc(F);
        for (int i = 0; i <= P.degree(); ++i) {
            if (P.coeffs()[i] == 0) continue;
            acc = acc + (Apow[i] * Cpow[m - i]).scaled(P.coeff(i));
        }
        return acc;
    };
    return RationalFunction(substitute(f.num()), substitute(f.den()));
}

Divisor divisor_apply(const MoebiusMap& g, const Divisor& D) {
    Divisor out(D.field());
    for (const auto& [p, c] : D.terms()) out.add_term(g.apply(p), c);
    return out;
}

bool stabilizes(const MoebiusMap& g, const Divisor& D) { return divisor_apply(g, D) == D; }

bool stabilized_by(const Divisor& D, std::span<const MoebiusMap> group) {
    for (const auto& g : group)
        if (!stabilizes(g, D)) return false;
    return true;
}

Divisor divisor_of(const RationalFunction& f) {
    if (f.is_zero()) throw std::invalid_argument("divisor_of: the zero function has no divisor");
    const Field& F = f.field();
    Divisor D(F);
    RootScan zn = scan_roots(f.num());
    if (zn.nonsplit_degree != 0)
        throw std::domain_error("divisor_of: numerator has a non-split factor of degree " +
                                std::to_string(zn.nonsplit_degree));
    RootScan zd = scan_roots(f.den());
    if (zd.nonsplit_degree != 0)
        throw std::domain_error("divisor_of: denominator has a non-split factor of degree " +
                                std::to_string(zd.nonsplit_degree));
    for (const auto& r : zn.roots) D.add_term(P1Point::affine(r), 1);
    for (const auto& r : zd.roots) D.add_term(P1Point::affine(r), -1);
    int dn = f.num().degree(), dd = f.den().degree();
    D.add_term(P1Point::infinity(F), std::int64_t(dd) - dn);
    return D;
}

FieldElement ratfun_eval(const RationalFunction& f, const P1Point& p) {
    return p.is_infinity() ? f.at_infinity() : f.at_affine(p.value());
}

}  // namespace p1codes

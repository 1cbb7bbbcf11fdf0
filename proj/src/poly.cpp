#include "p1codes/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "p1codes/errors.hpp"

namespace p1codes {

Poly::Poly(const Field& f, std::vector<std::uint32_t> coeffs) : f_(&f), c_(std::move(coeffs)) {
    for (auto v : c_)
        if (v >= f.q()) throw std::invalid_argument("poly: coefficient index out of range");
    trim();
}

Poly Poly::constant(const FieldElement& c) {
    Poly r(c.field());
    if (!c.is_zero()) r.c_ = {c.index()};
    return r;
}

Poly Poly::linear_root(const FieldElement& a) {
    return Poly(a.field(), {a.field().neg(a.index()), 1});
}

Poly Poly::from_ints(const Field& f, std::initializer_list<std::int64_t> coeffs) {
    std::vector<std::uint32_t> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(f.from_int(v));
    return Poly(f, std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
    if (f_ != o.f_ && !f_->same(*o.f_)) throw std::invalid_argument("poly: operands from different fields");
}

int Poly::degree() const {
    if (c_.empty()) throw std::logic_error("poly: degree of the zero polynomial");
    return int(c_.size()) - 1;
}

FieldElement Poly::coeff(std::size_t i) const {
    return FieldElement(*f_, i < c_.size() ? c_[i] : 0);
}

FieldElement Poly::leading() const {
    if (c_.empty()) throw std::logic_error("poly: leading coefficient of the zero polynomial");
    return FieldElement(*f_, c_.back());
}

Poly Poly::operator+(const Poly& o) const {
    check_same(o);
    std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f_->add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    Poly out(*f_);
    out.c_ = std::move(r);
    out.trim();
    return out;
}

Poly Poly::operator-() const {
    Poly out(*f_);
    out.c_.reserve(c_.size());
    for (auto v : c_) out.c_.push_back(f_->neg(v));
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same(o);
    if (c_.empty() || o.c_.empty()) return Poly(*f_);
    std::vector<std::uint32_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
    }
    Poly out(*f_);
    out.c_ = std::move(r);
    out.trim();
    return out;
}

Poly Poly::scaled(const FieldElement& c) const {
    if (c.is_zero()) return Poly(*f_);
    Poly out(*f_);
    out.c_.reserve(c_.size());
    for (auto v : c_) out.c_.push_back(f_->mul(v, c.index()));
    return out;
}

Poly Poly::monic() const {
    if (c_.empty()) throw std::logic_error("poly: monic form of the zero polynomial");
    if (c_.back() == 1) return *this;
    return scaled(FieldElement(*f_, f_->inv(c_.back())));
}

Poly Poly::pow(std::uint64_t e) const {
    Poly r = Poly::one(*f_), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const { return f_->same(*o.f_) && c_ == o.c_; }

FieldElement Poly::eval(const FieldElement& x) const { return FieldElement(*f_, eval_idx(x.index())); }

std::uint32_t Poly::eval_idx(std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

void Poly::divmod(const Poly& a, const Poly& d, Poly& q, Poly& r) {
    a.check_same(d);
    if (d.is_zero()) throw std::domain_error("poly: division by the zero polynomial");
    const Field& f = a.field();
    q = Poly(f);
    r = a;
    if (r.is_zero() || r.c_.size() < d.c_.size()) return;
    std::vector<std::uint32_t> qc(r.c_.size() - d.c_.size() + 1, 0);
    std::uint32_t dinv = f.inv(d.c_.back());
    while (!r.c_.empty() && r.c_.size() >= d.c_.size()) {
        std::uint32_t c = f.mul(r.c_.back(), dinv);
        std::size_t shift = r.c_.size() - d.c_.size();
        qc[shift] = c;
        for (std::size_t i = 0; i < d.c_.size(); ++i)
            r.c_[i + shift] = f.sub(r.c_[i + shift], f.mul(c, d.c_[i]));
        r.trim();
    }
    q.c_ = std::move(qc);
    q.trim();
}

Poly Poly::operator/(const Poly& d) const {
    Poly q(*f_), r(*f_);
    divmod(*this, d, q, r);
    return q;
}

Poly Poly::operator%(const Poly& d) const {
    Poly q(*f_), r(*f_);
    divmod(*this, d, q, r);
    return r;
}

Poly Poly::gcd(Poly a, Poly b) {
    a.check_same(b);
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

RootScan scan_roots(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("roots: zero polynomial");
    const Field& F = f.field();
    RootScan out;
    Poly rem = f;
    // scan in index order (cheap exit once everything is divided out), then
    // order the multiset canonically
    for (std::uint64_t a = 0; a < F.q() && rem.degree() > 0; ++a) {
        while (rem.degree() > 0 && rem.eval_idx(std::uint32_t(a)) == 0) {
            out.roots.emplace_back(F, std::uint32_t(a));
            rem = rem / Poly::linear_root(FieldElement(F, std::uint32_t(a)));
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [&](const FieldElement& x, const FieldElement& y) { return F.less(x.index(), y.index()); });
    out.nonsplit_degree = rem.degree() == 0 ? 0 : rem.degree();
    return out;
}

std::vector<FieldElement> poly_roots_in_field(const Poly& f) { return scan_roots(f).roots; }

RationalFunction::RationalFunction(const Field& f) : num_(f), den_(Poly::one(f)) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function: zero denominator");
    if (!num_.field().same(den_.field())) throw std::invalid_argument("rational function: mixed fields");
    if (num_.is_zero()) {
        den_ = Poly::one(num_.field());
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_zero() && g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    FieldElement lc = den_.leading();
    if (lc.index() != 1) {
        FieldElement li = lc.inverse();
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

RationalFunction RationalFunction::constant(const FieldElement& c) {
    return RationalFunction(Poly::constant(c), Poly::one(c.field()));
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("rational function: division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElement RationalFunction::at_affine(const FieldElement& x) const {
    const Field& f = num_.field();
    std::uint32_t d = den_.eval_idx(x.index());
    if (d == 0) {
        // pole order = multiplicity of x in the denominator
        int ord = 0;
        Poly rem = den_;
        Poly lin = Poly::linear_root(x);
        while (!rem.is_zero() && rem.eval_idx(x.index()) == 0) {
            ++ord;
            rem = rem / lin;
        }
        throw pole_error("rational function: pole at affine point", ord);
    }
    return FieldElement(f, f.div(num_.eval_idx(x.index()), d));
}

FieldElement RationalFunction::at_infinity() const {
    const Field& f = num_.field();
    if (num_.is_zero()) return f.zero();
    int dn = num_.degree(), dd = den_.degree();
    if (dn < dd) return f.zero();
    if (dn == dd) return num_.leading() / den_.leading();
    throw pole_error("rational function: pole at infinity", dn - dd);
}

}  // namespace p1codes

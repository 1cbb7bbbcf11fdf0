#ifndef P1CODES_PROJLINE_HPP
#define P1CODES_PROJLINE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "p1codes/poly.hpp"

namespace p1codes {

// A point of P^1(F): infinity = [1:0] or affine a = [a:1].
// The canonical total order places infinity first, then affine points in the
// canonical element order; this fixes coordinate orders everywhere downstream.
class P1Point {
  public:
    static P1Point infinity(const Field& f) { return P1Point(f, true, 0); }
    static P1Point affine(const FieldElement& a) { return P1Point(a.field(), false, a.index()); }
    static P1Point affine_int(const Field& f, std::int64_t a) { return P1Point(f, false, f.from_int(a)); }

    const Field& field() const { return *f_; }
    bool is_infinity() const { return inf_; }
    FieldElement value() const { return FieldElement(*f_, v_); }
    std::uint32_t value_index() const { return v_; }

    bool operator==(const P1Point& o) const { return f_->same(*o.f_) && inf_ == o.inf_ && v_ == o.v_; }
    bool operator!=(const P1Point& o) const { return !(*this == o); }
    bool operator<(const P1Point& o) const {
        if (inf_ != o.inf_) return inf_;
        if (inf_) return false;
        return f_->less(v_, o.v_);
    }

  private:
    P1Point(const Field& f, bool inf, std::uint32_t v) : f_(&f), inf_(inf), v_(v) {}

    const Field* f_;
    bool inf_;
    std::uint32_t v_;
};

// All q+1 points in canonical order.
std::vector<P1Point> all_points(const Field& f);

// Finite formal integer combination of points; zero coefficients are never
// stored.  Degree arithmetic is checked 64-bit.
class Divisor {
  public:
    explicit Divisor(const Field& f) : f_(&f) {}

    static Divisor single(const P1Point& p, std::int64_t c = 1);
    static Divisor sum_of(std::span<const P1Point> pts, std::int64_t c = 1);

    const Field& field() const { return *f_; }
    void add_term(const P1Point& p, std::int64_t c);
    std::int64_t coefficient(const P1Point& p) const;
    const std::map<P1Point, std::int64_t>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    std::vector<P1Point> support() const;

    std::int64_t degree() const;
    bool is_effective() const;
    Divisor positive_part() const;
    Divisor negative_part() const;  // effective: D = positive_part - negative_part

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator-() const;
    Divisor scaled(std::int64_t c) const;
    bool operator==(const Divisor& o) const { return f_->same(*o.f_) && terms_ == o.terms_; }
    bool operator!=(const Divisor& o) const { return !(*this == o); }

  private:
    const Field* f_;
    std::map<P1Point, std::int64_t> terms_;
};

// PGL(2, F) element x -> (ax + b)/(cx + d), ad - bc != 0, kept in the
// canonical form where the first nonzero of (a, b, c, d) is 1.
class MoebiusMap {
  public:
    MoebiusMap(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d);
    static MoebiusMap identity(const Field& f);
    static MoebiusMap from_ints(const Field& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    const Field& field() const { return *f_; }
    FieldElement a() const { return FieldElement(*f_, a_); }
    FieldElement b() const { return FieldElement(*f_, b_); }
    FieldElement c() const { return FieldElement(*f_, c_); }
    FieldElement d() const { return FieldElement(*f_, d_); }

    P1Point apply(const P1Point& p) const;
    MoebiusMap compose(const MoebiusMap& o) const;  // (this o other)(P) = this(other(P))
    MoebiusMap inverse() const;
    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

    bool operator==(const MoebiusMap& o) const {
        return f_->same(*o.f_) && a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const MoebiusMap& o) const { return !(*this == o); }
    // deterministic order for group element lists
    bool operator<(const MoebiusMap& o) const;

  private:
    MoebiusMap(const Field& f, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d);
    void canonicalize();
    friend class MoebiusKey;

    const Field* f_;
    std::uint32_t a_, b_, c_, d_;
};

// Packed canonical key, handy for hashing/dedup in scans.
class MoebiusKey {
  public:
    static std::uint64_t of(const MoebiusMap& g) {
        std::uint64_t q = g.field().q();
        return ((std::uint64_t(g.a_) * q + g.b_) * q + g.c_) * q + g.d_;
    }
};

MoebiusMap moebius_make(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                        const FieldElement& d);
P1Point moebius_apply(const MoebiusMap& g, const P1Point& p);
MoebiusMap moebius_compose(const MoebiusMap& g, const MoebiusMap& h);
MoebiusMap moebius_inverse(const MoebiusMap& g);

// f composed with g^{-1}, reduced.  Satisfies div(pullback(g, f)) =
// divisor_apply(g, div(f)) and pullback(g o h, f) = pullback(g, pullback(h, f)).
RationalFunction pullback(const MoebiusMap& g, const RationalFunction& f);

// Transport of a divisor along g: coefficients move to the image points.
Divisor divisor_apply(const MoebiusMap& g, const Divisor& D);

bool stabilizes(const MoebiusMap& g, const Divisor& D);
bool stabilized_by(const Divisor& D, std::span<const MoebiusMap> group);

// Principal divisor of a nonzero rational function: zeros minus poles
// including infinity with multiplicity deg den - deg num.  Requires both
// numerator and denominator to split over F; the error names the degree of
// the offending non-split factor.
Divisor divisor_of(const RationalFunction& f);

// Value of f at a point of P^1; pole_error carries the pole order.
FieldElement ratfun_eval(const RationalFunction& f, const P1Point& p);

}  // namespace p1codes

#endif

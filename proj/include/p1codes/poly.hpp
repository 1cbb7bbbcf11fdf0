#ifndef P1CODES_POLY_HPP
#define P1CODES_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "p1codes/field.hpp"

namespace p1codes {

// Univariate polynomial over a Field.  Coefficients are element indices,
// constant term first, with no trailing zeros; the zero polynomial is the
// empty sequence.  degree() is only defined for nonzero polynomials (the
// zero polynomial plays the role of degree -infinity and is handled through
// is_zero() everywhere).
class Poly {
  public:
    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<std::uint32_t> coeffs);

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const FieldElement& c);
    static Poly one(const Field& f) { return Poly(f, {1}); }
    static Poly x(const Field& f) { return Poly(f, {0, 1}); }
    // x - a
    static Poly linear_root(const FieldElement& a);
    // coefficients given as integers, reduced into the prime subfield
    static Poly from_ints(const Field& f, std::initializer_list<std::int64_t> coeffs);

    const Field& field() const { return *f_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const;  // throws std::logic_error on the zero polynomial
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    FieldElement coeff(std::size_t i) const;
    FieldElement leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const FieldElement& c) const;
    Poly monic() const;  // nonzero only
    Poly pow(std::uint64_t e) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    FieldElement eval(const FieldElement& x) const;
    std::uint32_t eval_idx(std::uint32_t x) const;

    // this = q * d + r with r zero or deg r < deg d.
    static void divmod(const Poly& a, const Poly& d, Poly& q, Poly& r);
    Poly operator/(const Poly& d) const;  // exact or truncating division
    Poly operator%(const Poly& d) const;

    // Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);

  private:
    void trim();
    void check_same(const Poly& o) const;

    const Field* f_;
    std::vector<std::uint32_t> c_;
};

// All roots in the base field with multiplicity, canonically ordered.
// Exhaustive scan over the field plus repeated division.
std::vector<FieldElement> poly_roots_in_field(const Poly& f);

// Roots with multiplicity plus the degree that remains after dividing all
// linear root factors out (0 iff f splits completely).
struct RootScan {
    std::vector<FieldElement> roots;
    int nonsplit_degree = 0;
};
RootScan scan_roots(const Poly& f);

// Quotient of polynomials, kept reduced: gcd(num, den) = 1 and den monic.
// The zero function is num = 0, den = 1.  Equality is equality of the
// reduced representation.
class RationalFunction {
  public:
    explicit RationalFunction(const Field& f);
    RationalFunction(Poly num, Poly den);

    static RationalFunction constant(const FieldElement& c);
    static RationalFunction from_poly(const Poly& p) { return RationalFunction(p, Poly::one(p.field())); }

    const Field& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // Value at an affine point; throws pole_error with the pole order when
    // den vanishes (the reduced form rules out 0/0).
    FieldElement at_affine(const FieldElement& x) const;
    // Value at infinity: 0 if deg num < deg den, ratio of leading
    // coefficients if equal, pole_error otherwise.
    FieldElement at_infinity() const;

  private:
    Poly num_, den_;
};

}  // namespace p1codes

#endif

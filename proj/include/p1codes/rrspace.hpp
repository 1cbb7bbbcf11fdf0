#ifndef P1CODES_RRSPACE_HPP
#define P1CODES_RRSPACE_HPP

#include <optional>
#include <vector>

#include "p1codes/projline.hpp"

namespace p1codes {

// L(D) = { f : div(f) + D >= 0 } + {0} on P^1, of dimension deg(D)+1 when
// deg(D) >= 0.  Bases are assembled from the simple-pole functions
// m_P (x for P = infinity, 1/(x-p) otherwise).

// Function with a simple pole at P and no other pole.
RationalFunction m_function(const P1Point& p);

struct BasisTag {
    enum Kind { Constant, PolePower } kind = Constant;
    std::optional<P1Point> point;  // set for PolePower
    int power = 0;
};

// Basis of L(D), in the fixed order: the constant (or the degree-0 factor
// q(x) in the non-effective case) first, then points of the support in
// canonical order with pole powers ascending.  Empty when deg(D) < 0.
struct RRBasis {
    Divisor divisor;
    std::vector<RationalFunction> functions;
    std::vector<BasisTag> tags;
    std::optional<RationalFunction> factor;  // q(x), only for non-effective D

    std::size_t dimension() const { return functions.size(); }
};

// Decomposition D = D1 + D2 with D1 effective and deg(D2) = 0, together with
// a generator q of the line L(D2) (div(q) = -D2 exactly).  D2 is built as
// E' - D^- where E' takes deg(D^-) units greedily from the largest
// coefficients of D^+ (ties by canonical point order).  Requires deg(D) >= 0
// and D not effective.
struct RRSplit {
    Divisor d1;
    Divisor d2;
    RationalFunction q;
};
RRSplit rr_split(const Divisor& d);

// The basis of L(D); certified: every element passes verify_in_LD and the
// evaluation matrix at deg(D)+1 fresh points has full rank.
RRBasis rr_basis(const Divisor& d);

// div(f) + D >= 0; requires f (numerator and denominator) to split over F.
bool verify_in_LD(const RationalFunction& f, const Divisor& d);

// deg(D)+1 points outside supp(D), in canonical order, skipping `avoid`.
std::vector<P1Point> fresh_points(const Divisor& d, std::size_t count);

}  // namespace p1codes

#endif

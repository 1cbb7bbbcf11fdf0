#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "p1codes/errors.hpp"
#include "p1codes/field.hpp"
#include "p1codes/kernels.hpp"
#include "p1codes/poly.hpp"

using namespace p1codes;

namespace {

// order of a by direct repeated multiplication, independent of the table path
std::uint64_t order_by_exponentiation(const Field& f, std::uint32_t a) {
    std::uint32_t cur = a;
    std::uint64_t ord = 1;
    while (cur != 1) {
        cur = f.mul(cur, a);
        ++ord;
        REQUIRE(ord <= f.q());
    }
    return ord;
}

}  // namespace

TEST_CASE("field construction") {
    auto f7 = Field::make(7, 1);
    CHECK(f7->q() == 7);
    CHECK(f7->modulus() == std::vector<std::uint32_t>{0, 1});  // modulus x

    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(7, 12), budget_error);

    // oracle: enumerate the nine monic quadratics over Z_3 in lexicographic
    // order (constant term first) and take the first with no root
    std::vector<std::uint32_t> expected;
    for (std::uint32_t c0 = 0; c0 < 3 && expected.empty(); ++c0)
        for (std::uint32_t c1 = 0; c1 < 3 && expected.empty(); ++c1) {
            bool has_root = false;
            for (std::uint32_t x = 0; x < 3; ++x)
                if ((c0 + c1 * x + x * x) % 3 == 0) has_root = true;
            if (!has_root) expected = {c0, c1, 1};
        }
    auto f9 = Field::make(3, 2);
    CHECK(f9->modulus() == expected);
    CHECK(expected == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1

    CHECK_THROWS_AS(Field::with_modulus(3, 2, {0, 0, 1}), std::invalid_argument);  // x^2 reducible
    CHECK_THROWS_AS(Field::with_modulus(3, 2, {1, 0, 2}), std::invalid_argument);  // not monic
}

TEST_CASE("basic arithmetic examples") {
    auto f7 = Field::make(7, 1);
    CHECK(f7->mul(3, 5) == 1);
    CHECK_THROWS_AS(f7->inv(0), std::domain_error);
    CHECK(f7->add(4, 5) == 2);
    CHECK(f7->neg(3) == 4);

    auto f13 = Field::make(13, 1);
    CHECK(f13->element_order(5) == 4);
    CHECK(order_by_exponentiation(*f13, 5) == 4);

    auto a = f13->element(5), b = f13->element(8);
    CHECK((a * b).index() == f13->mul(5, 8));
    auto f7b = Field::make(7, 1);
    CHECK_THROWS_AS((void)(a + f7b->element(1)), std::invalid_argument);
}

TEST_CASE("full multiplicative-group laws across small fields") {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {5, 2}, {7, 2}, {11, 2}}) {
        auto f = Field::make(p, k);
        CAPTURE(f->q());
        for (std::uint32_t a = 0; a < f->q(); ++a) {
            if (a != 0) {
                CHECK(f->mul(a, f->inv(a)) == 1);
                CHECK(f->pow(a, f->q() - 1) == 1);
                CHECK((f->q() - 1) % f->element_order(a) == 0);
                CHECK(f->element_order(a) == order_by_exponentiation(*f, a));
            }
            for (std::uint32_t b = 0; b < f->q(); ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->sub(f->add(a, b), b) == a);
                CHECK(f->mul(a, b) == f->mul(b, a));
            }
        }
    }
}

TEST_CASE("distributivity and canonical ordering in an extension field") {
    auto f = Field::make(3, 2);
    for (std::uint32_t a = 0; a < 9; ++a)
        for (std::uint32_t b = 0; b < 9; ++b)
            for (std::uint32_t c = 0; c < 9; ++c)
                CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));

    // canonical order is lexicographic with the constant term first:
    // 0 < x < 2x < 1 < 1+x < ...
    CHECK(f->element_at_rank(0) == f->index_of({0, 0}));
    CHECK(f->element_at_rank(1) == f->index_of({0, 1}));
    CHECK(f->element_at_rank(3) == f->index_of({1, 0}));
    for (std::uint64_t r = 0; r + 1 < 9; ++r) {
        CHECK(f->less(f->element_at_rank(r), f->element_at_rank(r + 1)));
        CHECK(f->rank_of(f->element_at_rank(r)) == r);
    }
}

TEST_CASE("roots of unity and square roots of -1") {
    auto f13 = Field::make(13, 1);
    CHECK(primitive_root_of_unity(*f13, 4).index() == 5);
    CHECK(primitive_root_of_unity(*f13, 1).index() == 1);
    auto f7 = Field::make(7, 1);
    CHECK_THROWS_AS(primitive_root_of_unity(*f7, 4), std::invalid_argument);

    CHECK(sqrt_minus_one(*f13).index() == 5);
    CHECK(sqrt_minus_one(*Field::make(17, 1)).index() == 4);
    CHECK_THROWS_AS(sqrt_minus_one(*f7), std::invalid_argument);

    // x^m = 1 and x^d != 1 for every proper divisor d of m
    for (std::uint64_t m : {2, 3, 4, 6, 12}) {
        auto xi = primitive_root_of_unity(*f13, m);
        CHECK(xi.pow(m).index() == 1);
        for (std::uint64_t d = 1; d < m; ++d)
            if (m % d == 0) CHECK(xi.pow(d).index() != 1);
    }
}

TEST_CASE("polynomial arithmetic and roots") {
    auto f7 = Field::make(7, 1);
    Poly x2m1 = Poly::from_ints(*f7, {-1, 0, 1});
    auto roots = poly_roots_in_field(x2m1);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].index() == 1);
    CHECK(roots[1].index() == 6);

    CHECK(poly_roots_in_field(Poly::from_ints(*f7, {1, 0, 1})).empty());  // x^2 + 1, 7 = 3 mod 4

    Poly x3 = Poly::from_ints(*f7, {0, 0, 0, 1});
    auto triple = poly_roots_in_field(x3);
    REQUIRE(triple.size() == 3);
    for (const auto& r : triple) CHECK(r.is_zero());

    // f is divisible by prod (x - r); degree bounds the root count
    SplitMix64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint32_t> coeffs;
        for (int i = 0; i <= 5; ++i) coeffs.push_back(std::uint32_t(rng.below(7)));
        Poly f(*f7, coeffs);
        if (f.is_zero()) continue;
        auto rs = scan_roots(f);
        CHECK(std::int64_t(rs.roots.size()) + rs.nonsplit_degree <= std::max(f.degree(), 0) + rs.nonsplit_degree);
        Poly prod = Poly::one(*f7);
        for (const auto& r : rs.roots) prod = prod * Poly::linear_root(r);
        CHECK((f % prod).is_zero());
    }

    Poly q(*f7), r(*f7);
    Poly a = Poly::from_ints(*f7, {1, 2, 3, 4});
    Poly d = Poly::from_ints(*f7, {2, 1});
    Poly::divmod(a, d, q, r);
    CHECK(a == q * d + r);
}

TEST_CASE("zero polynomial degree is not an integer") {
    auto f7 = Field::make(7, 1);
    Poly z(*f7);
    CHECK(z.is_zero());
    CHECK_THROWS_AS(z.degree(), std::logic_error);
}

TEST_CASE("rational functions reduce at construction") {
    auto f7 = Field::make(7, 1);
    // 2x / 2 reduces to x / 1
    RationalFunction f(Poly::from_ints(*f7, {0, 2}), Poly::from_ints(*f7, {2}));
    CHECK(f == RationalFunction(Poly::x(*f7), Poly::one(*f7)));
    // (x^2 - 1)/(x - 1) = x + 1
    RationalFunction g(Poly::from_ints(*f7, {-1, 0, 1}), Poly::from_ints(*f7, {-1, 1}));
    CHECK(g == RationalFunction(Poly::from_ints(*f7, {1, 1}), Poly::one(*f7)));
    // 2x != x
    CHECK(RationalFunction(Poly::from_ints(*f7, {0, 2}), Poly::one(*f7)) !=
          RationalFunction(Poly::x(*f7), Poly::one(*f7)));

    // evaluation agrees between f and an unreduced representative
    SplitMix64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::uint32_t> nc, dc, sc;
        for (int i = 0; i < 3; ++i) nc.push_back(std::uint32_t(rng.below(7)));
        for (int i = 0; i < 3; ++i) dc.push_back(std::uint32_t(rng.below(7)));
        for (int i = 0; i < 2; ++i) sc.push_back(std::uint32_t(rng.below(7)));
        Poly num(*f7, nc), den(*f7, dc), scale(*f7, sc);
        if (den.is_zero() || scale.is_zero()) continue;
        RationalFunction reduced(num, den);
        RationalFunction padded(num * scale, den * scale);
        CHECK(reduced == padded);
        for (std::uint32_t x = 0; x < 7; ++x) {
            try {
                auto v1 = reduced.at_affine(f7->element(x));
                CHECK(v1 == padded.at_affine(f7->element(x)));
            } catch (const pole_error&) {
            }
        }
    }
}

TEST_CASE("evaluation at infinity") {
    auto f7 = Field::make(7, 1);
    RationalFunction inv_x(Poly::one(*f7), Poly::x(*f7));
    CHECK(inv_x.at_infinity().is_zero());

    // (2x + 1)/(x + 3) at infinity = 2
    RationalFunction g(Poly::from_ints(*f7, {1, 2}), Poly::from_ints(*f7, {3, 1}));
    CHECK(g.at_infinity().index() == 2);

    RationalFunction x(Poly::x(*f7), Poly::one(*f7));
    CHECK_THROWS_AS(x.at_infinity(), pole_error);
    try {
        x.at_infinity();
    } catch (const pole_error& e) {
        CHECK(e.order() == 1);
    }

    // pole order at an affine point
    RationalFunction h(Poly::one(*f7), Poly::from_ints(*f7, {0, 0, 1}));  // 1/x^2
    try {
        h.at_affine(f7->zero());
        CHECK(false);
    } catch (const pole_error& e) {
        CHECK(e.order() == 2);
    }
}

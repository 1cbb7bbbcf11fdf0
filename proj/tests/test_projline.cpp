#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "p1codes/kernels.hpp"
#include "p1codes/projline.hpp"

using namespace p1codes;

namespace {

// every canonical representative of PGL(2, q), by direct enumeration
std::vector<MoebiusMap> full_pgl(const Field& f) {
    std::vector<MoebiusMap> out;
    for (std::uint32_t b = 0; b < f.q(); ++b)
        for (std::uint32_t c = 0; c < f.q(); ++c)
            for (std::uint32_t d = 0; d < f.q(); ++d)
                if (d != f.mul(b, c))
                    out.push_back(MoebiusMap(f.one(), f.element(b), f.element(c), f.element(d)));
    for (std::uint32_t c = 1; c < f.q(); ++c)
        for (std::uint32_t d = 0; d < f.q(); ++d)
            out.push_back(MoebiusMap(f.zero(), f.one(), f.element(c), f.element(d)));
    return out;
}

RationalFunction ratfun_x(const Field& f) { return RationalFunction(Poly::x(f), Poly::one(f)); }

}  // namespace

TEST_CASE("moebius canonical form") {
    auto f7 = Field::make(7, 1);
    CHECK(MoebiusMap::from_ints(*f7, 1, 0, 0, 1).is_identity());
    CHECK(MoebiusMap::from_ints(*f7, 2, 0, 0, 2).is_identity());  // scalar matrices act trivially
    CHECK_THROWS_AS(MoebiusMap::from_ints(*f7, 1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("moebius application") {
    auto f7 = Field::make(7, 1);
    MoebiusMap tau = MoebiusMap::from_ints(*f7, 0, 1, 1, 0);  // 1/x
    CHECK(tau.apply(P1Point::affine_int(*f7, 0)) == P1Point::infinity(*f7));
    CHECK(tau.apply(P1Point::infinity(*f7)) == P1Point::affine_int(*f7, 0));

    MoebiusMap shift = MoebiusMap::from_ints(*f7, 1, 1, 0, 1);  // x + 1
    CHECK(shift.apply(P1Point::infinity(*f7)) == P1Point::infinity(*f7));
    CHECK(shift.apply(P1Point::affine_int(*f7, 6)) == P1Point::affine_int(*f7, 0));

    auto f17 = Field::make(17, 1);
    MoebiusMap scale = MoebiusMap::from_ints(*f17, 4, 0, 0, 1);
    CHECK(scale.apply(P1Point::affine_int(*f17, 2)) == P1Point::affine_int(*f17, 8));
}

TEST_CASE("compose and inverse") {
    auto f7 = Field::make(7, 1);
    MoebiusMap tau = MoebiusMap::from_ints(*f7, 0, 1, 1, 0);
    CHECK(tau.compose(tau).is_identity());
    MoebiusMap shift = MoebiusMap::from_ints(*f7, 1, 1, 0, 1);
    CHECK(shift.inverse() == MoebiusMap::from_ints(*f7, 1, -1, 0, 1));

    MoebiusMap sigma = MoebiusMap::from_ints(*f7, 3, 0, 0, 1);
    P1Point one = P1Point::affine_int(*f7, 1);
    CHECK(sigma.compose(tau).apply(one) == sigma.apply(tau.apply(one)));
}

TEST_CASE("group laws on all of PGL(2,7)") {
    auto f7 = Field::make(7, 1);
    auto all = full_pgl(*f7);
    REQUIRE(all.size() == 336);

    std::set<std::uint64_t> keys;
    for (const auto& g : all) keys.insert(MoebiusKey::of(g));
    CHECK(keys.size() == 336);

    for (const auto& g : all) {
        CHECK(g.compose(g.inverse()).is_identity());
        CHECK(g.inverse().compose(g).is_identity());
        CHECK(keys.count(MoebiusKey::of(g.inverse())) == 1);
    }
    // closure under composition
    for (const auto& g : all)
        for (const auto& h : all) CHECK(keys.count(MoebiusKey::of(g.compose(h))) == 1);
    // associativity on pseudorandom triples
    SplitMix64 rng(5);
    for (int t = 0; t < 20000; ++t) {
        const auto& a = all[rng.below(all.size())];
        const auto& b = all[rng.below(all.size())];
        const auto& c = all[rng.below(all.size())];
        CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    }
}

TEST_CASE("moebius application is a bijection on P1") {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{7, 1}, {3, 2}, {11, 2}}) {
        auto f = Field::make(p, k);
        SplitMix64 rng(p + k);
        for (int t = 0; t < 10; ++t) {
            std::uint32_t a, b, c, d;
            do {
                a = std::uint32_t(rng.below(f->q()));
                b = std::uint32_t(rng.below(f->q()));
                c = std::uint32_t(rng.below(f->q()));
                d = std::uint32_t(rng.below(f->q()));
            } while (f->sub(f->mul(a, d), f->mul(b, c)) == 0);
            MoebiusMap g(f->element(a), f->element(b), f->element(c), f->element(d));
            std::set<P1Point> images;
            for (const auto& pt : all_points(*f)) {
                CHECK(g.inverse().apply(g.apply(pt)) == pt);
                images.insert(g.apply(pt));
            }
            CHECK(images.size() == f->q() + 1);
        }
    }
}

TEST_CASE("divisor arithmetic") {
    auto f7 = Field::make(7, 1);
    P1Point zero = P1Point::affine_int(*f7, 0);
    P1Point inf = P1Point::infinity(*f7);

    Divisor d(*f7);
    d.add_term(zero, 1);
    d.add_term(inf, 2);
    CHECK(d.degree() == 3);

    Divisor e = Divisor::single(zero, 1) - Divisor::single(inf, 1);
    CHECK_FALSE(e.is_effective());
    CHECK(e.positive_part() == Divisor::single(zero, 1));
    CHECK(e.negative_part() == Divisor::single(inf, 1));
    CHECK(e + (-e) == Divisor(*f7));

    // cancellation removes the stored term
    Divisor c = Divisor::single(zero, 2);
    c.add_term(zero, -2);
    CHECK(c.empty());
}

TEST_CASE("divisor transport and stabilizers") {
    auto f7 = Field::make(7, 1);
    P1Point zero = P1Point::affine_int(*f7, 0);
    P1Point inf = P1Point::infinity(*f7);
    MoebiusMap tau = MoebiusMap::from_ints(*f7, 0, 1, 1, 0);

    Divisor d = Divisor::single(zero, 1) - Divisor::single(inf, 1);
    CHECK(divisor_apply(tau, d) == Divisor::single(inf, 1) - Divisor::single(zero, 1));
    CHECK(divisor_apply(MoebiusMap::identity(*f7), d) == d);
    CHECK(divisor_apply(MoebiusMap::from_ints(*f7, 1, 1, 0, 1), Divisor::single(P1Point::affine_int(*f7, 6), 2)) ==
          Divisor::single(zero, 2));

    // {0, inf} is stabilized by <xi x, 1/x>
    Divisor b = Divisor::single(zero, 1) + Divisor::single(inf, 1);
    std::vector<MoebiusMap> gens{MoebiusMap::from_ints(*f7, 3, 0, 0, 1), tau};
    CHECK(stabilized_by(b, gens));
    CHECK_FALSE(stabilized_by(b, std::vector<MoebiusMap>{MoebiusMap::from_ints(*f7, 1, 1, 0, 1)}));
}

TEST_CASE("principal divisors") {
    auto f7 = Field::make(7, 1);
    P1Point zero = P1Point::affine_int(*f7, 0);
    P1Point inf = P1Point::infinity(*f7);

    CHECK(divisor_of(ratfun_x(*f7)) == Divisor::single(zero, 1) - Divisor::single(inf, 1));

    RationalFunction g(Poly::one(*f7), Poly::from_ints(*f7, {-2, 1}));  // 1/(x-2)
    CHECK(divisor_of(g) == Divisor::single(inf, 1) - Divisor::single(P1Point::affine_int(*f7, 2), 1));

    // (x-1)^2/(x+1): 2(1) - (6) - (inf)
    RationalFunction h(Poly::from_ints(*f7, {-1, 1}) * Poly::from_ints(*f7, {-1, 1}),
                       Poly::from_ints(*f7, {1, 1}));
    Divisor expected = Divisor::single(P1Point::affine_int(*f7, 1), 2) -
                       Divisor::single(P1Point::affine_int(*f7, 6), 1) - Divisor::single(inf, 1);
    CHECK(divisor_of(h) == expected);

    // x^2 + 1 does not split over GF(7)
    CHECK_THROWS_AS(divisor_of(RationalFunction(Poly::from_ints(*f7, {1, 0, 1}), Poly::one(*f7))),
                    std::domain_error);
}

TEST_CASE("divisor_of is additive and degree zero") {
    auto f7 = Field::make(7, 1);
    SplitMix64 rng(11);
    for (int t = 0; t < 40; ++t) {
        // random split functions: products of linear factors over random points
        Poly num = Poly::one(*f7), den = Poly::one(*f7);
        for (int i = 0; i < 3; ++i) num = num * Poly::linear_root(f7->element(std::uint32_t(rng.below(7))));
        for (int i = 0; i < 2; ++i) den = den * Poly::linear_root(f7->element(std::uint32_t(rng.below(7))));
        RationalFunction a(num, den);
        Poly num2 = Poly::linear_root(f7->element(std::uint32_t(rng.below(7))));
        RationalFunction b(num2, Poly::one(*f7));
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(divisor_of(a).degree() == 0);
        CHECK(divisor_of(a * b) == divisor_of(a) + divisor_of(b));
    }
}

TEST_CASE("pullback examples") {
    auto f7 = Field::make(7, 1);
    RationalFunction x = ratfun_x(*f7);
    MoebiusMap shift = MoebiusMap::from_ints(*f7, 1, 1, 0, 1);
    CHECK(pullback(shift, x) == RationalFunction(Poly::from_ints(*f7, {-1, 1}), Poly::one(*f7)));

    MoebiusMap tau = MoebiusMap::from_ints(*f7, 0, 1, 1, 0);
    RationalFunction invx(Poly::one(*f7), Poly::x(*f7));
    CHECK(pullback(tau, invx) == x);

    // g: x -> 3x, f = 1/(x-1): div(f^g) = (inf) - (3)
    MoebiusMap scale = MoebiusMap::from_ints(*f7, 3, 0, 0, 1);
    RationalFunction f(Poly::one(*f7), Poly::from_ints(*f7, {-1, 1}));
    Divisor expected =
        Divisor::single(P1Point::infinity(*f7), 1) - Divisor::single(P1Point::affine_int(*f7, 3), 1);
    CHECK(divisor_of(pullback(scale, f)) == expected);
    CHECK(divisor_apply(scale, divisor_of(f)) == expected);
}

TEST_CASE("pullback composes through the group and transports divisors") {
    auto f17 = Field::make(17, 1);
    std::vector<MoebiusMap> group;
    // dihedral group of order 8 from 4x and 1/x, closed by hand
    MoebiusMap s = MoebiusMap::from_ints(*f17, 4, 0, 0, 1);
    MoebiusMap t = MoebiusMap::from_ints(*f17, 0, 1, 1, 0);
    group.push_back(MoebiusMap::identity(*f17));
    group.push_back(s);
    group.push_back(s.compose(s));
    group.push_back(s.compose(s).compose(s));
    for (int i = 0; i < 4; ++i) group.push_back(group[i].compose(t));

    SplitMix64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        Poly num = Poly::one(*f17), den = Poly::one(*f17);
        for (int i = 0; i < 2; ++i) num = num * Poly::linear_root(f17->element(std::uint32_t(rng.below(17))));
        den = den * Poly::linear_root(f17->element(std::uint32_t(1 + rng.below(16))));
        RationalFunction f(num, den);
        for (const auto& g : group)
            for (const auto& h : group) {
                CHECK(pullback(g.compose(h), f) == pullback(g, pullback(h, f)));
                CHECK(divisor_of(pullback(g, f)) == divisor_apply(g, divisor_of(f)));
            }
    }
}

TEST_CASE("point order puts infinity first") {
    auto f9 = Field::make(3, 2);
    auto pts = all_points(*f9);
    REQUIRE(pts.size() == 10);
    CHECK(pts[0].is_infinity());
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) CHECK(pts[i] < pts[i + 1]);
}

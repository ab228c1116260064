#include <doctest.h>

#include <random>

#include "gridconvex/geometry.hpp"

using namespace gridconvex;

namespace {

Point2 pt(long x, long y) { return Point2{Rational(x), Rational(y)}; }

Rational random_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 2001) - 1000;
    long den = static_cast<long>(rng() % 40) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    Rational a = parse_rational("7/21");
    CHECK(a.get_num() == 1);
    CHECK(a.get_den() == 3);
    CHECK(to_string(a) == "1/3");
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(parse_rational("42") == 42);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("zap"), std::invalid_argument);
}

TEST_CASE("orientation basic examples") {
    CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(1, 1)) == 1);
    CHECK(orientation(pt(0, 0), pt(1, 2), pt(2, 1)) == -1);
}

TEST_CASE("orientation is antisymmetric and translation invariant") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        Point2 p{random_rational(rng), random_rational(rng)};
        Point2 q{random_rational(rng), random_rational(rng)};
        Point2 r{random_rational(rng), random_rational(rng)};
        int o = orientation(p, q, r);
        CHECK(orientation(q, p, r) == -o);
        CHECK(orientation(p, r, q) == -o);
        CHECK(orientation(q, r, p) == o);
        Rational dx = random_rational(rng), dy = random_rational(rng);
        auto shift = [&](const Point2& a) { return Point2{a.x + dx, a.y + dy}; };
        CHECK(orientation(shift(p), shift(q), shift(r)) == o);
    }
}

TEST_CASE("slope_compare examples") {
    CHECK(slope_compare({pt(0, 0), pt(1, 2)}, {pt(0, 0), pt(1, 1)}) == 1);
    CHECK(slope_compare({pt(0, 0), pt(2, 1)}, {pt(1, 5), pt(3, 6)}) == 0);
    CHECK(slope_compare({pt(0, 0), pt(7, 273)}, {pt(0, 0), pt(1, 16)}) == 1);
    CHECK_THROWS_AS(slope_compare({pt(0, 0), pt(0, 1)}, {pt(0, 0), pt(1, 1)}),
                    std::invalid_argument);
}

TEST_CASE("slope_compare agrees with exact slope arithmetic") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 300; ++trial) {
        Point2 a{random_rational(rng), random_rational(rng)};
        Point2 b{random_rational(rng), random_rational(rng)};
        Point2 c{random_rational(rng), random_rational(rng)};
        Point2 d{random_rational(rng), random_rational(rng)};
        if (a.x == b.x || c.x == d.x) continue;
        Rational s1 = (b.y - a.y) / (b.x - a.x);
        Rational s2 = (d.y - c.y) / (d.x - c.x);
        CHECK(slope_compare({a, b}, {c, d}) == cmp(s1, s2));
    }
}

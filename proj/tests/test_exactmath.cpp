#include <doctest.h>

#include "hilbnef/fib.hpp"
#include "hilbnef/quad.hpp"

using namespace hilbnef;

TEST_CASE("Rat canonical form and parsing") {
    Rat r(Int(6), Int(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rat::parse("-3/2") == r);
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat::parse("7").is_integer());
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(-5, 10).str() == "-1/2");
    CHECK(Rat(2, 1).str() == "2");
}

TEST_CASE("quad_sign examples") {
    // 1 - sqrt(5) < 0
    CHECK(QuadNum(Int(5), Rat(1), Rat(-1)).sign() == -1);
    CHECK(QuadNum(Int(5), Rat(0), Rat(0)).sign() == 0);
    // alpha * beta = -1 at a = 1
    auto [alpha, beta] = quadratic_roots(1);
    CHECK((alpha * beta).sign() == -1);
    CHECK(alpha * beta == QuadNum(Int(5), Rat(-1), Rat(0)));
}

TEST_CASE("quad arithmetic examples") {
    for (long a : {1L, 2L, 3L, 5L}) {
        auto [alpha, beta] = quadratic_roots(a);
        QuadNum sum = alpha + beta;
        CHECK(sum.is_rational());
        CHECK(sum.rat_part() == Rat(a));
        // beta is a root of r^2 - a r - 1
        CHECK((beta * beta - beta * Rat(a) - Rat(1)).is_zero());
    }
    // beta^2 = beta + 1 at a = 1, i.e. (3 + sqrt(5))/2
    auto [alpha1, beta1] = quadratic_roots(1);
    CHECK(beta1 * beta1 == QuadNum(Int(5), Rat(3, 2), Rat(1, 2)));
    QuadNum x(Int(5), Rat(1), Rat(1));
    CHECK(x / x == QuadNum(Int(5), Rat(1), Rat(0)));
    CHECK_THROWS_AS(x + QuadNum(Int(10), Rat(1), Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(x / QuadNum(Int(5)), std::domain_error);
    CHECK_THROWS_AS(QuadNum(Int(9), Rat(1), Rat(1)), std::invalid_argument);  // square radicand
}

TEST_CASE("root_enclosure examples") {
    RatInterval perfect = root_enclosure(Int(4), Rat(1));
    CHECK(perfect.contains(Rat(2)));
    CHECK(perfect.width() <= Rat(1));

    RatInterval ten = root_enclosure(Int(10), Rat(1, 100));
    CHECK(ten.lo * ten.lo <= Rat(10));
    CHECK(Rat(10) <= ten.hi * ten.hi);
    CHECK(ten.width() <= Rat(1, 100));

    CHECK_THROWS_AS(root_enclosure(Int(0), Rat(1)), std::domain_error);
    CHECK_THROWS_AS(root_enclosure(Int(2), Rat(0)), std::domain_error);
}

TEST_CASE("I_0 endpoints at a = 1 enclosed to width 1/1000") {
    // (2a +- 2 sqrt(10))/(a^2+8) at a = 1
    RatInterval root = root_enclosure(Int(10), Rat(9, 2000));
    RatInterval lo = root.scaled(Rat(-2, 9)).shifted(Rat(2, 9));
    RatInterval hi = root.scaled(Rat(2, 9)).shifted(Rat(2, 9));
    CHECK(lo.width() <= Rat(1, 1000));
    CHECK(hi.width() <= Rat(1, 1000));
    CHECK(lo.hi < hi.lo);
}

TEST_CASE("interval arithmetic contains the true value") {
    RatInterval a(Rat(1, 3), Rat(1, 2));
    RatInterval b(Rat(-2), Rat(-1));
    RatInterval prod = a * b;
    CHECK(prod.contains(Rat(1, 3) * Rat(-2)));
    CHECK(prod.contains(Rat(1, 2) * Rat(-1)));
    CHECK_THROWS_AS(RatInterval(Rat(1), Rat(0)), std::invalid_argument);
}

TEST_CASE("mixed-radicand comparison separates distinct values") {
    auto [alpha, beta] = quadratic_roots(1);
    QuadNum sqrt10_scaled(Int(10), Rat(2, 9), Rat(2, 9));  // approx 0.925 < beta
    CHECK(compare_via_enclosure(sqrt10_scaled, beta) < 0);
    CHECK(compare_via_enclosure(beta, sqrt10_scaled) > 0);
    // Equal algebraic numbers over different radicands never separate.
    QuadNum two_a(Int(5), Rat(2), Rat(0));
    QuadNum two_b(Int(10), Rat(2), Rat(0));
    CHECK_THROWS_AS(compare_via_enclosure(two_a, two_b, 16), std::runtime_error);
}

TEST_CASE("QuadNum enclosure width") {
    auto [alpha, beta] = quadratic_roots(3);
    RatInterval iv = beta.enclosure(Rat(1, 1000000));
    CHECK(iv.width() <= Rat(1, 1000000));
    CHECK(iv.lo > Rat(3));   // beta(3) = (3 + sqrt(13))/2 > 3
    CHECK(iv.hi < Rat(17, 5));
}

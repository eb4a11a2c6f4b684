#include <doctest.h>

#include "hilbnef/fib.hpp"

using namespace hilbnef;

TEST_CASE("seeds and small values") {
    FibSeq classical(1);
    Int expect1[] = {0, 1, 1, 2, 3, 5};
    for (long m = 0; m <= 5; ++m) CHECK(classical.at(m) == expect1[m]);

    FibSeq pell(2);
    Int expect2[] = {0, 1, 2, 5, 12};
    for (long m = 0; m <= 4; ++m) CHECK(pell.at(m) == expect2[m]);

    CHECK_THROWS_AS(FibSeq(0), std::invalid_argument);
}

TEST_CASE("negative indices by the sign rule") {
    FibSeq s(1);
    CHECK(s.at(-3) == 2);   // (-1)^4 a_3
    CHECK(s.at(-2) == -1);  // (-1)^3 a_2
    CHECK(s.at(-1) == 1);
    CHECK(fib(3, -4) == -fib(3, 4));
}

TEST_CASE("roots alpha and beta") {
    auto [alpha, beta] = quadratic_roots(1);
    CHECK(alpha == QuadNum(Int(5), Rat(1, 2), Rat(-1, 2)));
    CHECK(beta == QuadNum(Int(5), Rat(1, 2), Rat(1, 2)));
    CHECK(alpha.sign() < 0);
    CHECK(beta.sign() > 0);
}

TEST_CASE("identity spot checks") {
    for (long a : {1L, 2L, 5L}) {
        FibSeq s(a);
        // addition at (m, n) = (7, -4)
        CHECK(s.at(3) == s.at(7) * s.at(-3) + s.at(6) * s.at(-4));
        // d'Ocagne at (m, n) = (4, 9)
        Int lhs = s.at(4) * s.at(10) - s.at(5) * s.at(9);
        CHECK(lhs == -s.at(-5));
    }
}

#include <doctest.h>

#include "hilbnef/hilbwalls.hpp"
#include "hilbnef/lattice.hpp"

using namespace hilbnef;

namespace {
const Params kCayley{1, 2};
}

TEST_CASE("bbf_q examples") {
    CHECK(bbf_q(e_class(kCayley)) == Rat(-2));
    CHECK(bbf_q(e_class(Params(1, 6))) == Rat(-10));  // -2(n-1)
    CHECK(bbf_q(DivClass{Rat(0), Rat(0), Rat(0), kCayley}) == Rat(0));
    // 4*49 + 4*14 - 4*4 - 2*4 = 228
    CHECK(bbf_q(DivClass{Rat(7), Rat(-2), Rat(2), kCayley}) == Rat(228));
}

TEST_CASE("bbf_pair examples") {
    CHECK(bbf_pair(h1_class(kCayley), h2_class(kCayley)) == Rat(2));
    CHECK(bbf_pair(e_class(kCayley), h1_class(kCayley)) == Rat(0));
    CHECK(bbf_pair(h1_class(kCayley), DivClass{Rat(2), Rat(-3), Rat(0), kCayley}) == Rat(8));
    CHECK_THROWS_AS(bbf_pair(h1_class(kCayley), h1_class(Params(2, 2))), std::invalid_argument);
    // Polarization instance
    DivClass p{Rat(1, 2), Rat(3), Rat(-2), kCayley};
    DivClass q{Rat(5), Rat(-1, 3), Rat(7), kCayley};
    CHECK(Rat(2) * bbf_pair(p, q) == bbf_q(p + q) - bbf_q(p) - bbf_q(q));
}

TEST_CASE("surf_pair examples") {
    CHECK(surf_self(h1_surf(kCayley)) == Rat(4));
    Params a2(2, 2);
    CHECK(surf_self(h1_surf(a2) + h2_surf(a2)) == Rat(8));
    for (long a : {1L, 2L, 3L}) {
        Params par(a, 2);
        CHECK(surf_pair(h1_surf(par), h2_surf(par)) == Rat(2 * a));
    }
}

TEST_CASE("curve_pair examples") {
    CHECK(curve_pair(e_class(kCayley), exceptional_curve(kCayley)) == Rat(-1));
    CHECK(curve_pair(h1_class(kCayley), exceptional_curve(kCayley)) == Rat(0));
    // D_{0,0} at a = 1, n = 6 is (8/5, -1, 4/5); it contracts (F_0)_[6].
    Params p16(1, 6);
    DivClass d00{Rat(8, 5), Rat(-1), Rat(4, 5), p16};
    CHECK(curve_pair(d00, moving_curve(Fk(p16, 0))) == Rat(0));
    CHECK(curve_pair(d00, moving_curve(Fk(p16, 1))) == Rat(0));
}

TEST_CASE("genus examples and errors") {
    Params p16(1, 6);
    CHECK(genus(Fk(p16, 2)) == 3);
    Params a2(2, 10);
    CHECK(genus(Ekt(a2, 0, 1)) == 5);  // 3 + 2at - 2t^2 at a=2, t=1
    CHECK_THROWS_AS(genus(SurfDiv{Rat(1, 2), Rat(0), a2}), std::invalid_argument);
    CHECK_THROWS_AS(genus(h2_surf(a2)), std::domain_error);  // square -4 < -2
}

TEST_CASE("positive cone membership") {
    CHECK(in_positive_cone(DivClass{Rat(7), Rat(-2), Rat(2), kCayley}));
    CHECK_FALSE(in_positive_cone(e_class(kCayley)));
    CHECK_FALSE(in_positive_cone(-reference_class(kCayley)));
    CHECK(in_positive_cone_closure(DivClass{Rat(0), Rat(0), Rat(0), kCayley}));
}

TEST_CASE("reference class selection") {
    CHECK(reference_class(kCayley) == DivClass{Rat(7), Rat(-2), Rat(2), kCayley});
    // Below the large-n bound: (1, -1/m, 0) with the largest valid 1/m.
    DivClass g0 = reference_class(Params(2, 2));
    CHECK(g0.x == Rat(1));
    CHECK(g0.z == Rat(0));
    CHECK(bbf_q(g0).sign() > 0);
    // At the bound: D_{0,0}.
    Params p16(1, 6);
    CHECK(reference_class(p16) == DivClass{Rat(8, 5), Rat(-1), Rat(4, 5), p16});
}

TEST_CASE("boundary rays have q = 0 and y = 0") {
    for (long a : {1L, 2L, 3L}) {
        Params par(a, 2);
        auto [ra, rb] = boundary_ray_classes(par);
        CHECK(bbf_q(ra).is_zero());
        CHECK(bbf_q(rb).is_zero());
        CHECK(ra.y.is_zero());
        CHECK(bbf_pair(ra, rb).sign() > 0);  // 2a^2 + 8
    }
}

TEST_CASE("params validation") {
    CHECK_THROWS_AS(Params(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(Params(1, 1), std::invalid_argument);
}

TEST_CASE("DivClassQ radicand consistency") {
    QuadNum five(Int(5), Rat(1), Rat(0));
    QuadNum ten(Int(10), Rat(1), Rat(0));
    CHECK_THROWS_AS(DivClassQ(five, ten, five, kCayley), std::invalid_argument);
}

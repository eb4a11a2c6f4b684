#include <doctest.h>

#include "hilbnef/fib.hpp"
#include "hilbnef/hilbwalls.hpp"

using namespace hilbnef;

TEST_CASE("F_k values and products") {
    Params p16(1, 6);
    CHECK(Fk(p16, 0) == SurfDiv{Rat(1), Rat(0), p16});  // a_{-1} = 1, a_0 = 0
    CHECK(Fk(p16, 1) == SurfDiv{Rat(1), Rat(1), p16});
    CHECK(surf_self(Fk(p16, 1)) == Rat(4));
    for (long a : {1L, 2L, 3L}) {
        Params par(a, minimal_large_n(a));
        for (long k = -4; k <= 4; ++k)
            CHECK(surf_pair(Fk(par, k), Fk(par, k + 1)) == Rat(2 * (a * a + 2)));
    }
}

TEST_CASE("E_kt endpoints and example") {
    Params p2(2, 10);
    CHECK(Ekt(p2, 3, 0) == Fk(p2, 3));
    CHECK(Ekt(p2, 3, 2) == Fk(p2, 4));
    SurfDiv e01 = Ekt(p2, 0, 1);
    CHECK(e01 == SurfDiv{Rat(1), Rat(1), p2});  // h1 + h2
    CHECK(surf_self(e01) == Rat(8));            // 4(1 + at - t^2)
    CHECK(surf_pair(e01, Fk(p2, 0)) == Rat(8)); // 4 + 2at
    CHECK_THROWS_AS(Ekt(p2, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Ekt(p2, 0, -1), std::invalid_argument);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(LargeNConfig(1, 5), std::invalid_argument);
    CHECK_NOTHROW(LargeNConfig(1, 5, 4, 5, /*allow_small_n=*/true));
    CHECK_NOTHROW(LargeNConfig(2, 10));
    CHECK(minimal_large_n(1) == 6);
    CHECK(minimal_large_n(2) == 10);
    CHECK(minimal_large_n(3) == 14);
}

TEST_CASE("H/D construction at a=1, n=6, t=0") {
    LargeNConfig cfg(1, 6);
    HDData hd = hd_construction(cfg, 0, 0);
    CHECK(hd.C == 4);
    // H = -2 F_0 + 8 F_1 = (6, 8)
    CHECK(hd.H == SurfDiv{Rat(6), Rat(8), cfg.par});
    CHECK(hd.D == SurfDiv{Rat(-1), Rat(0), cfg.par});
    CHECK(surf_self(hd.H).sign() > 0);
}

TEST_CASE("wall_center") {
    LargeNConfig cfg(1, 6);
    HDData hd = hd_construction(cfg, 0, 0);
    SurfDiv e = Ekt(cfg.par, 0, 0);
    // s_W = -(2n - E^2)/(2 H.E) when L = E, D = -E, w = 0
    Rat direct = wall_center({hd.H, hd.D, e, 0, 6});
    CHECK(direct == -(Rat(12) - surf_self(e)) / (Rat(2) * surf_pair(hd.H, e)));
    CHECK(direct == Rat(-1, 10));
    // w = n with L^2 = -2 D.L gives center 0.
    SurfDiv l = Ekt(cfg.par, 0, 1);
    SurfDiv half = l.scaled(Rat(-1, 2));
    CHECK(wall_center({hd.H, half, l, 6, 6}) == Rat(0));
    // H.L = 0 is an error: L = (a, -2) pairs to zero with h1.
    SurfDiv h1 = h1_surf(cfg.par);
    SurfDiv perp{Rat(1), Rat(-2), cfg.par};
    CHECK(surf_pair(h1, perp) == Rat(0));
    CHECK_THROWS_AS(wall_center({h1, hd.D, perp, 0, 6}), std::domain_error);
}

TEST_CASE("crdiv selects the adjacent pair") {
    LargeNConfig c16(1, 6);
    auto sel = crdiv(c16, 0, 0);
    REQUIRE(sel.size() == 2);
    CHECK(sel[0] == SurfDiv{Rat(1), Rat(0), c16.par});  // h1
    CHECK(sel[1] == SurfDiv{Rat(1), Rat(1), c16.par});  // h1 + h2
    LargeNConfig c210(2, 10);
    auto sel2 = crdiv(c210, 0, 0);
    REQUIRE(sel2.size() == 2);
    CHECK(sel2[0] == SurfDiv{Rat(1), Rat(0), c210.par});
    CHECK(sel2[1] == SurfDiv{Rat(1), Rat(1), c210.par});
}

TEST_CASE("D_kt example values") {
    LargeNConfig cfg(1, 6);
    DivClass d = Dkt(cfg, 0, 0);
    CHECK(d == DivClass{Rat(8, 5), Rat(-1), Rat(4, 5), cfg.par});
    for (long u : {0L, 1L}) CHECK(curve_pair(d, moving_curve(Ekt(cfg.par, 0, u))) == Rat(0));
    CHECK(curve_pair(d, exceptional_curve(cfg.par)) == Rat(1));
    CHECK_THROWS_AS(Dkt(cfg, 0, 1), std::invalid_argument);  // t > a-1
}

TEST_CASE("intersection law across u") {
    LargeNConfig cfg(3, 14, 3);
    for (long k : {-1L, 0L, 2L})
        for (long t = 0; t <= 2; ++t) {
            DivClass d = Dkt(cfg, k, t);
            for (long u = 0; u <= 3; ++u)
                CHECK(curve_pair(d, moving_curve(Ekt(cfg.par, k, u))) ==
                      Rat(2 * (u - t) * (u - t - 1)));
        }
}

TEST_CASE("limit rays") {
    LargeNConfig cfg(1, 6);
    LimitData lim = limit_rays(cfg);
    CHECK(bbf_q(lim.ray_alpha).is_zero());
    CHECK(bbf_q(lim.ray_beta).is_zero());
    CHECK(lim.ray_alpha.y.is_zero());
    CHECK(lim.ray_beta.y.is_zero());
    // Displayed functional at a = 1: (4+2b)x + (n+2)y + (2-4b)z.
    auto [alpha, beta] = quadratic_roots(1);
    CHECK(lim.func_beta[0] == QuadNum(Int(5), Rat(4), Rat(0)) + beta * Rat(2));
    CHECK(lim.func_beta[1] == QuadNum(Int(5), Rat(8), Rat(0)));
    CHECK(lim.func_beta[2] == QuadNum(Int(5), Rat(2), Rat(0)) - beta * Rat(4));
}

TEST_CASE("nef cone assembly and mori duality run their assertions") {
    for (auto [a, n] : std::initializer_list<std::pair<long, long>>{{1, 6}, {2, 10}}) {
        LargeNConfig cfg(a, n, 3);
        NefConeLargeN cone = nef_cone_large_n(cfg);
        CHECK(cone.walls.size() == static_cast<size_t>((2 * 3 + 1) * a + 3));
        CHECK(cone.rays.size() == static_cast<size_t>((2 * 3 - 1) * a + 2));
        MoriGenerators mori = mori_generators(cfg);
        CHECK(!mori.curves.empty());
    }
}

TEST_CASE("thresholds") {
    LargeNConfig cfg(2, 10);
    for (long t : {0L, 1L}) {
        ThresholdReport rep = thresholds(cfg, t);
        CHECK(rep.all_at_config());
        CHECK(rep.master_implies_all);
    }
    CHECK_THROWS_AS(thresholds(cfg, 2), std::invalid_argument);
}

TEST_CASE("det M_k") {
    for (long k = -5; k <= 5; ++k) {
        CHECK(fk_matrix_det(1, k) == 1);
        CHECK(fk_matrix_det(4, k) == 4);
    }
}

TEST_CASE("P-equivariance of the edge chain") {
    Params par(2, 10);
    Isometry p = shift_P(2, 10);
    for (long k : {-2L, 0L, 1L})
        for (long t = 0; t <= 2; ++t) {
            SurfDiv e = Ekt(par, k, t);
            DivClass img = p.apply(DivClass{e.u, Rat(0), e.v, par});
            SurfDiv next = Ekt(par, k + 1, t);
            CHECK(img.x == next.u);
            CHECK(img.z == next.v);
        }
}

#include <doctest.h>

#include "hilbnef/fundomain.hpp"
#include "hilbnef/nefcone2.hpp"

using namespace hilbnef;

namespace {
const Params kCayley{1, 2};

DivClass dc(long x, long y, long z) { return {Rat(x), Rat(y), Rat(z), kCayley}; }
}  // namespace

TEST_CASE("classify") {
    CHECK(classify(dc(7, -2, 2)) == Region::R4);
    CHECK(classify(dc(9, -11, -1)) == Region::R2);
    CHECK(classify(dc(0, 1, 0)) == Region::R4);  // region test, not Pi membership
    CHECK(classify(dc(1, 0, 2)) == Region::R1);
    CHECK(classify(dc(1, -2, 0)) == Region::R3);
}

TEST_CASE("f_energy") {
    CHECK(f_energy(dc(1, 0, 0)) == Rat(2));
    CHECK(f_energy(dc(9, -11, -1)) == Rat(7));
}

TEST_CASE("reduce fixed examples") {
    ReductionResult id = reduce(dc(1, 0, 0));
    CHECK(id.word.empty());
    CHECK(id.reduced == dc(1, 0, 0));

    ReductionResult one = reduce(dc(9, -11, -1));
    CHECK(one.word == Word({2}));
    CHECK(one.reduced == dc(3, -1, 1));
    CHECK(one.trace.size() == 2);
    CHECK(one.trace[1].f < one.trace[0].f);
    CHECK(bbf_q(one.trace[0].point) == bbf_q(one.trace[1].point));
}

TEST_CASE("reduce inverts generated words") {
    std::uint64_t st = 42;
    for (int i = 0; i < 25; ++i) {
        Word w = random_reduced_word(static_cast<int>(i % 7), st);
        DivClass p0 = random_interior_pi_point(st);
        ReductionResult res = reduce(apply_word(w, p0));
        CHECK(res.word == w.reversed());
        CHECK(res.reduced == p0);
        // The reversed word carries the point back (involutive generators).
        CHECK(apply_word(res.word.reversed(), res.reduced) == apply_word(w, p0));
    }
}

TEST_CASE("reduce rejects bad inputs") {
    CHECK_THROWS_AS(reduce(dc(0, 1, 0)), std::domain_error);   // q < 0
    CHECK_THROWS_AS(reduce(dc(7, 2, 2)), std::domain_error);   // q > 0 but not nef
    CHECK_THROWS_AS(reduce(DivClass{Rat(1), Rat(0), Rat(0), Params(2, 2)}),
                    std::invalid_argument);
}

TEST_CASE("tiling report at small depth") {
    TilingReport rep = tiling_report(1, 25, 7);
    CHECK(rep.translates == 4);  // id, A1, A2, A3
    CHECK(rep.disjoint);
    CHECK(rep.covered_exactly_once == rep.samples);

    TilingReport trivial = tiling_report(0, 0, 0);
    CHECK(trivial.translates == 1);
    CHECK(trivial.disjoint);
}

TEST_CASE("interior point sampler stays strictly inside Pi") {
    std::uint64_t st = 99;
    for (int i = 0; i < 50; ++i) {
        DivClass p = random_interior_pi_point(st);
        CHECK(pi_cone().contains(p, true));
    }
}

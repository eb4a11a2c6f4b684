#include <doctest.h>

#include "hilbnef/hilbwalls.hpp"
#include "hilbnef/isometry.hpp"

using namespace hilbnef;

namespace {
const Params kCayley{1, 2};

DivClass dc(long x, long y, long z) { return {Rat(x), Rat(y), Rat(z), kCayley}; }
}  // namespace

TEST_CASE("beauville_reflection gives the iota_0 matrix") {
    for (long a : {1L, 2L, 3L}) {
        Params par(a, 2);
        Isometry i0 = beauville_reflection(h1_class(par) - e_class(par));
        // columns (3,-4,0), (2,-3,0), (2a,-2a,-1)
        CHECK(i0.matrix()(0, 0) == Rat(3));
        CHECK(i0.matrix()(1, 0) == Rat(-4));
        CHECK(i0.matrix()(2, 0) == Rat(0));
        CHECK(i0.matrix()(0, 1) == Rat(2));
        CHECK(i0.matrix()(1, 1) == Rat(-3));
        CHECK(i0.matrix()(0, 2) == Rat(2 * a));
        CHECK(i0.matrix()(2, 2) == Rat(-1));
    }
    Isometry i0 = beauville_reflection(dc(1, -1, 0));
    CHECK(i0.apply(dc(1, -1, 0)) == dc(1, -1, 0));           // fixes D
    CHECK(i0.apply(e_class(kCayley)) == dc(2, -3, 0));       // -e + 2D
    CHECK_THROWS_AS(beauville_reflection(h1_class(kCayley)), std::invalid_argument);  // q = 4
    CHECK_THROWS_AS(beauville_reflection(dc(1, -1, 0).scaled(Rat(1, 2))),
                    std::invalid_argument);
}

TEST_CASE("shift P") {
    Isometry p = shift_P(1, 2);
    CHECK(p.apply(dc(0, 0, 1)) == dc(1, 0, 2));
    CHECK(p.apply(e_class(kCayley)) == e_class(kCayley));
    CHECK(is_isometry(p.matrix(), kCayley));
    for (long n : {2L, 6L, 10L}) CHECK(is_isometry(shift_P(3, n).matrix(), Params(3, n)));
}

TEST_CASE("iota_k conjugates") {
    CHECK(iota_k(1, 0) == beauville_reflection(dc(1, -1, 0)));
    // iota_1 acts by (5x+2y-2z, -6x-3y+2z, 6x+2y-3z)
    Isometry i1 = iota_k(1, 1);
    CHECK(i1.apply(dc(1, 0, 0)) == dc(5, -6, 6));
    CHECK(i1.apply(dc(0, 1, 0)) == dc(2, -3, 2));
    CHECK(i1.apply(dc(0, 0, 1)) == dc(-2, 2, -3));
    for (long k : {-3L, 2L, 5L})
        CHECK(iota_k(1, k).compose(iota_k(1, k)).matrix() == Mat3r::identity());
}

TEST_CASE("generators A1 A2 A3") {
    const GeneratorsA& g = generators_A(1);
    CHECK(g.A2.apply(dc(1, 1, 1)) == dc(7, -9, -1));   // (3x+2y+2z, -4x-3y-2z, -z)
    CHECK(g.A3.apply(dc(1, 1, 1)) == dc(31, -49, 15)); // (19x+12y, -30x-19y, 10x+6y-z)
    CHECK(g.A3.matrix() ==
          g.A1.compose(iota_k(1, 2)).compose(g.A1).matrix());  // A3 = i1 i2 i1
    CHECK_THROWS_AS(generators_A(2), std::invalid_argument);
}

TEST_CASE("words") {
    CHECK(apply_word(Word{}, dc(3, -1, 1)) == dc(3, -1, 1));
    CHECK(apply_word(Word({2}), dc(3, -1, 1)) == dc(9, -11, -1));
    CHECK_THROWS_AS(Word({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Word({0}), std::invalid_argument);
    const int raw[] = {1, 3, 3, 1, 2};
    CHECK(Word::reduced(raw) == Word({2}));
    CHECK(Word({1, 2, 3}).reversed() == Word({3, 2, 1}));
    CHECK(Word({1, 2, 3}).str() == "A1.A2.A3");
    CHECK(Word{}.str() == "id");
    // apply_word reads left to right: first letter acts first.
    DivClass p = dc(3, -1, 1);
    CHECK(apply_word(Word({2, 1}), p) == generators_A(1).A1.apply(generators_A(1).A2.apply(p)));
    CHECK(reduced_words_of_length(3).size() == 12);
}

TEST_CASE("is_isometry") {
    CHECK(is_isometry(Mat3r::identity(), kCayley));
    CHECK(is_isometry(iota_k(1, 0).matrix(), kCayley));
    Mat3r twice = Mat3r::identity();
    for (int i = 0; i < 3; ++i) twice(i, i) = Rat(2);
    CHECK_FALSE(is_isometry(twice, kCayley));
}

TEST_CASE("isometry construction and powers") {
    CHECK_THROWS_AS(Isometry(Mat3r::from_rows({Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(0)},
                                              {Rat(0), Rat(0), Rat(1)}),
                             kCayley),
                    std::invalid_argument);
    Isometry p = shift_P(1, 2);
    CHECK(p.power(0).matrix() == Mat3r::identity());
    CHECK(p.power(-2).compose(p.power(2)).matrix() == Mat3r::identity());
    CHECK(p.power(3) == p.compose(p).compose(p));
    // Acting on quadratic-coordinate classes.
    auto [ra, rb] = boundary_ray_classes(kCayley);
    DivClassQ img = p.apply(rb);
    CHECK(bbf_q(img).is_zero());
}

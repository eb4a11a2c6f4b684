#include "hilbnef/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hilbnef/fib.hpp"

namespace hilbnef::verify {

namespace {

using Key = std::array<Int, 3>;

Key key_of(const DivClass& v) { return {v.x.to_int(), v.y.to_int(), v.z.to_int()}; }

DivClass div_from_vec(const Vec3z& v, const Params& par) {
    return {Rat(v[0]), Rat(v[1]), Rat(v[2]), par};
}

/// Runs a check that passes unless the body throws or returns a failure
/// message. A return value starting with "note:" passes and keeps the
/// rest as the detail.
template <typename F>
void check_fn(SuiteResult& suite, const std::string& name, F&& body) {
    try {
        std::string err = body();
        if (err.rfind("note:", 0) == 0)
            suite.checks.push_back({name, true, err.substr(5)});
        else
            suite.checks.push_back({name, err.empty(), err});
    } catch (const std::exception& e) {
        suite.checks.push_back({name, false, std::string("exception: ") + e.what()});
    }
}

}  // namespace

std::uint64_t next_rand(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Rat random_rat(std::uint64_t& state, long box, long max_den) {
    long den = static_cast<long>(next_rand(state) % max_den) + 1;
    long span = 2 * box * den + 1;
    long num = static_cast<long>(next_rand(state) % span) - box * den;
    return {Int(num), Int(den)};
}

// ---------------------------------------------------------------------------
// exactmath
// ---------------------------------------------------------------------------

SuiteResult run_exactmath_suite(const ExactMathOptions& opts) {
    SuiteResult suite{"exactmath", {}};
    std::uint64_t st = opts.seed;
    const Int ds[] = {Int(5), Int(8), Int(13), Int(29)};

    check_fn(suite, "quad_sign.involution_and_zero", [&]() -> std::string {
        for (long i = 0; i < opts.samples; ++i) {
            const Int& d = ds[next_rand(st) % 4];
            QuadNum x(d, random_rat(st, 10, 6), random_rat(st, 10, 6));
            int s = x.sign(), sm = (-x).sign();
            if (s * sm != -(s * s)) return "sign involution failed at " + x.str();
            if ((s == 0) != x.is_zero()) return "zero sign mismatch at " + x.str();
        }
        return "";
    });

    check_fn(suite, "quad_sign.antisymmetry", [&]() -> std::string {
        for (long i = 0; i < opts.samples; ++i) {
            const Int& d = ds[next_rand(st) % 4];
            QuadNum x(d, random_rat(st, 10, 6), random_rat(st, 10, 6));
            QuadNum y(d, random_rat(st, 10, 6), random_rat(st, 10, 6));
            if ((x - y).sign() > 0 && !((y - x).sign() < 0))
                return "antisymmetry failed at " + x.str() + ", " + y.str();
        }
        return "";
    });

    check_fn(suite, "quad.field_axioms", [&]() -> std::string {
        for (long i = 0; i < opts.samples; ++i) {
            const Int& d = ds[next_rand(st) % 4];
            QuadNum a(d, random_rat(st, 10, 6), random_rat(st, 10, 6));
            QuadNum b(d, random_rat(st, 10, 6), random_rat(st, 10, 6));
            QuadNum c(d, random_rat(st, 10, 6), random_rat(st, 10, 6));
            if (!((a + b) + c == a + (b + c))) return "associativity(+) failed";
            if (!((a * b) * c == a * (b * c))) return "associativity(*) failed";
            if (!(a * (b + c) == a * b + a * c)) return "distributivity failed";
            if (!b.is_zero() && !((a / b) * b == a)) return "division roundtrip failed";
        }
        return "";
    });

    check_fn(suite, "root_enclosure.postcondition", [&]() -> std::string {
        for (long m : {2L, 4L, 10L, 12L, 16L, 26L, 1000003L}) {
            for (const Rat& w : {Rat(1), Rat(1, 100), Rat(1, 1000)}) {
                RatInterval iv = root_enclosure(Int(m), w);
                if (!(iv.lo * iv.lo <= Rat(m) && Rat(m) <= iv.hi * iv.hi))
                    return "enclosure bounds failed for m = " + std::to_string(m);
                if (iv.width() > w) return "width exceeded for m = " + std::to_string(m);
            }
        }
        return "";
    });

    // I_0 = [(2a - 2 sqrt(2a^2+8))/(a^2+8), (2a + 2 sqrt(2a^2+8))/(a^2+8)]
    // sits strictly inside (alpha, beta). The radicand 2a^2+8 lies outside
    // Q(sqrt(a^2+4)) (and is even a perfect square at a = 2), so the
    // endpoints are located through certified rational enclosures.
    check_fn(suite, "interval.i0_inside_alpha_beta", [&]() -> std::string {
        for (long a : {1L, 2L}) {
            Int m = 2 * Int(a) * a + 8;
            auto [alpha, beta] = quadratic_roots(a);
            Rat den(Int(a) * a + 8);
            RatInterval root = root_enclosure(m, den * Rat(1, 2000));
            RatInterval lo_end = root.scaled(Rat(-2) / den).shifted(Rat(2 * a) / den);
            RatInterval hi_end = root.scaled(Rat(2) / den).shifted(Rat(2 * a) / den);
            if (lo_end.width() > Rat(1, 1000) || hi_end.width() > Rat(1, 1000))
                return "I_0 endpoint enclosure too wide";
            // true endpoint >= lo_end.lo, so lo_end.lo > alpha certifies it.
            QuadNum lo_bound(alpha.radicand(), lo_end.lo, Rat(0));
            QuadNum hi_bound(alpha.radicand(), hi_end.hi, Rat(0));
            if (!((lo_bound - alpha).sign() > 0)) return "I_0 lower end <= alpha";
            if (!((beta - hi_bound).sign() > 0)) return "I_0 upper end >= beta";
        }
        // Mixed-radicand comparison path (non-square radicands only).
        QuadNum i0_hi(Int(10), Rat(2, 9), Rat(2, 9));  // (2 + 2 sqrt(10))/9 at a = 1
        auto [alpha1, beta1] = quadratic_roots(1);
        if (compare_via_enclosure(i0_hi, beta1) >= 0) return "mixed comparison failed";
        return "";
    });

    return suite;
}

// ---------------------------------------------------------------------------
// lattice
// ---------------------------------------------------------------------------

SuiteResult run_lattice_suite(const LatticeOptions& opts) {
    SuiteResult suite{"lattice", {}};
    std::uint64_t st = opts.seed;
    const std::vector<Params> grid = {Params(1, 2), Params(2, 2), Params(3, 2),
                                      Params(1, 6), Params(2, 10), Params(3, 14)};

    check_fn(suite, "bbf.polarization", [&]() -> std::string {
        for (const Params& par : grid) {
            for (long i = 0; i < opts.samples / 6 + 1; ++i) {
                DivClass p{random_rat(st, 9, 4), random_rat(st, 9, 4), random_rat(st, 9, 4), par};
                DivClass q{random_rat(st, 9, 4), random_rat(st, 9, 4), random_rat(st, 9, 4), par};
                if (!(Rat(2) * bbf_pair(p, q) == bbf_q(p + q) - bbf_q(p) - bbf_q(q)))
                    return "polarization failed at " + p.str() + ", " + q.str();
            }
        }
        return "";
    });

    check_fn(suite, "bbf.restricts_to_surface", [&]() -> std::string {
        for (const Params& par : grid) {
            for (long i = 0; i < opts.samples / 6 + 1; ++i) {
                DivClass p{random_rat(st, 9, 4), Rat(0), random_rat(st, 9, 4), par};
                DivClass q{random_rat(st, 9, 4), Rat(0), random_rat(st, 9, 4), par};
                if (!(bbf_pair(p, q) == surf_pair(p.surface_part(), q.surface_part())))
                    return "restriction failed at " + p.str();
            }
        }
        return "";
    });

    check_fn(suite, "bbf.even_on_integral", [&]() -> std::string {
        for (const Params& par : grid) {
            for (long i = 0; i < opts.samples / 6 + 1; ++i) {
                DivClass p{Rat(static_cast<long>(next_rand(st) % 41) - 20),
                           Rat(static_cast<long>(next_rand(st) % 41) - 20),
                           Rat(static_cast<long>(next_rand(st) % 41) - 20), par};
                Int v = bbf_q(p).to_int();
                if (v % 2 != 0) return "odd value " + v.get_str() + " at " + p.str();
            }
        }
        return "";
    });

    check_fn(suite, "gram.signature_1_2", [&]() -> std::string {
        for (const Params& par : grid) {
            Mat3r g = gram_matrix(par);
            Rat d1 = g(0, 0);
            Rat d2 = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
            Rat d3 = g.det();
            // Leading principal minors (+, -, +) give one positive and two
            // negative eigenvalues.
            if (!(d1.sign() > 0 && d2.sign() < 0 && d3.sign() > 0))
                return "minor signs wrong for a = " + std::to_string(par.a);
        }
        return "";
    });

    check_fn(suite, "curve_pair.exceptional_row", [&]() -> std::string {
        for (const Params& par : grid) {
            DivClass e = e_class(par);
            if (!(curve_pair(e, exceptional_curve(par)) == Rat(-1))) return "e . C_0 != -1";
            if (!(curve_pair(h1_class(par), exceptional_curve(par)) == Rat(0)))
                return "h1 . C_0 != 0";
        }
        return "";
    });

    check_fn(suite, "curve_pair.B_row_is_2g_minus_2_plus_2n", [&]() -> std::string {
        for (const Params& par : grid) {
            DivClass b{Rat(0), Rat(2), Rat(0), par};
            for (long k = -3; k <= 3; ++k) {
                CurveOnHilb c = moving_curve(Fk(par, k));
                Rat expected = Rat(2) * Rat(std::get<MovingCurve>(c).genus) - Rat(2) +
                               Rat(2 * par.n);
                if (!(curve_pair(b, c) == expected)) return "B row failed at k = " + std::to_string(k);
            }
        }
        return "";
    });

    check_fn(suite, "reference_class.matches_D00", [&]() -> std::string {
        for (long a : {1L, 2L, 3L}) {
            long n = minimal_large_n(a);
            LargeNConfig cfg(a, n);
            if (!(reference_class(Params(a, n)) == Dkt(cfg, 0, 0)))
                return "g0 != D_{0,0} at a = " + std::to_string(a);
        }
        return "";
    });

    check_fn(suite, "genus.examples_and_errors", [&]() -> std::string {
        Params par(2, 2);
        if (!(genus(Ekt(par, 0, 1)) == 5)) return "genus(E_{0,1}) != 5 at a = 2";
        // A (-2)-curve has genus 0: h2 on S_a has square -4... use e-part
        // free classes: (0, 1) has square -4; take C with C^2 = -2 via a = 1
        // is impossible on the surface lattice (even, values 4u^2+4uv-4v^2),
        // so exercise the error paths instead.
        try {
            genus(SurfDiv{Rat(1, 2), Rat(0), par});
            return "genus accepted a non-integral class";
        } catch (const std::invalid_argument&) {
        }
        try {
            genus(SurfDiv{Rat(0), Rat(1), par});  // square -4 < -2
            return "genus accepted C^2 < -2";
        } catch (const std::domain_error&) {
        }
        return "";
    });

    return suite;
}

// ---------------------------------------------------------------------------
// fibgen
// ---------------------------------------------------------------------------

SuiteResult run_fib_suite(const FibOptions& opts) {
    SuiteResult suite{"fib", {}};

    check_fn(suite, "fib.seeds_and_recursion", [&]() -> std::string {
        for (long a : opts.as) {
            FibSeq s(a);
            if (s.at(0) != 0 || s.at(1) != 1) return "seeds wrong for a = " + std::to_string(a);
            for (long m = -opts.range; m + 2 <= opts.range; ++m)
                if (s.at(m + 2) != Int(a) * s.at(m + 1) + s.at(m))
                    return "recursion failed at a = " + std::to_string(a) +
                           ", m = " + std::to_string(m);
        }
        return "";
    });

    check_fn(suite, "fib.negative_index_backward_oracle", [&]() -> std::string {
        for (long a : opts.as) {
            FibSeq s(a);
            // Oracle: run the recursion backwards, a_m = a_{m+2} - a a_{m+1}.
            Int hi = s.at(1), lo = s.at(0);  // (a_1, a_0)
            for (long m = -1; m >= -opts.range; --m) {
                Int prev = hi - Int(a) * lo;  // a_m
                hi = lo;
                lo = prev;
                if (s.at(m) != prev)
                    return "sign rule disagrees with backward recursion at a = " +
                           std::to_string(a) + ", m = " + std::to_string(m);
            }
        }
        return "";
    });

    check_fn(suite, "fib.addition_subtraction", [&]() -> std::string {
        for (long a : opts.as) {
            FibSeq s(a);
            for (long m = -opts.range; m <= opts.range; ++m)
                for (long n = -opts.range; n <= opts.range; ++n) {
                    if (s.at(m + n) != s.at(m) * s.at(n + 1) + s.at(m - 1) * s.at(n))
                        return "addition formula failed at (" + std::to_string(m) + ", " +
                               std::to_string(n) + "), a = " + std::to_string(a);
                    // Subtraction: a_{m-n} = (-1)^n (a_m a_{n-1} - a_{m-1} a_n).
                    // The sign factor is forced by det [[a,1],[1,0]] = -1
                    // (without it the identity already fails at m=5, n=3).
                    Int sign = (n % 2 == 0) ? 1 : -1;
                    if (s.at(m - n) != sign * (s.at(m) * s.at(n - 1) - s.at(m - 1) * s.at(n)))
                        return "subtraction formula failed at (" + std::to_string(m) + ", " +
                               std::to_string(n) + "), a = " + std::to_string(a);
                }
        }
        return "";
    });

    check_fn(suite, "fib.docagne", [&]() -> std::string {
        for (long a : opts.as) {
            FibSeq s(a);
            for (long m = -opts.range; m <= opts.range; ++m)
                for (long n = -opts.range; n <= opts.range; ++n) {
                    Int sign = (n % 2 == 0) ? 1 : -1;
                    if (s.at(m) * s.at(n + 1) - s.at(m + 1) * s.at(n) != sign * s.at(m - n))
                        return "d'Ocagne failed at (" + std::to_string(m) + ", " +
                               std::to_string(n) + "), a = " + std::to_string(a);
                }
        }
        return "";
    });

    check_fn(suite, "fib.ratio_monotone_toward_beta", [&]() -> std::string {
        for (long a : opts.as) {
            FibSeq s(a);
            auto [alpha, beta] = quadratic_roots(a);
            Rat prev(0);
            bool have_prev = false;
            for (long k = 1; k <= 10; ++k) {
                Rat r = Rat(s.at(2 * k)) / Rat(s.at(2 * k - 1));
                QuadNum rq(beta.radicand(), r, Rat(0));
                if (!((beta - rq).sign() > 0))
                    return "ratio not below beta at k = " + std::to_string(k);
                if (have_prev && !(r > prev))
                    return "ratios not strictly increasing at k = " + std::to_string(k);
                prev = r;
                have_prev = true;
            }
        }
        return "";
    });

    check_fn(suite, "fib.roots_identities", [&]() -> std::string {
        for (long a : opts.as) {
            auto [alpha, beta] = quadratic_roots(a);
            if (!(alpha + beta == QuadNum(alpha.radicand(), Rat(a), Rat(0))))
                return "alpha + beta != a";
            if (!(alpha * beta == QuadNum(alpha.radicand(), Rat(-1), Rat(0))))
                return "alpha * beta != -1";
            if (!((beta * beta - beta * Rat(a) - Rat(1)).is_zero()))
                return "beta^2 - a beta - 1 != 0";
        }
        return "";
    });

    return suite;
}

// ---------------------------------------------------------------------------
// isometry
// ---------------------------------------------------------------------------

SuiteResult run_isometry_suite(const IsometryOptions& opts) {
    SuiteResult suite{"isometry", {}};
    std::uint64_t st = opts.seed;

    check_fn(suite, "iota0.matrix_display", [&]() -> std::string {
        for (long a : {1L, 2L, 3L}) {
            Params par(a, 2);
            Isometry i0 = beauville_reflection(h1_class(par) - e_class(par));
            Mat3r expect = Mat3r::from_rows({Rat(3), Rat(2), Rat(2 * a)},
                                            {Rat(-4), Rat(-3), Rat(-2 * a)},
                                            {Rat(0), Rat(0), Rat(-1)});
            if (!(i0.matrix() == expect)) return "iota_0 display mismatch at a = " + std::to_string(a);
        }
        return "";
    });

    check_fn(suite, "shift_P.preserves_gram", [&]() -> std::string {
        for (long a : {1L, 2L, 3L})
            for (long n : {2L, 6L, 10L})
                if (!is_isometry(shift_P(a, n).matrix(), Params(a, n)))
                    return "P^T G P != G at (a, n) = (" + std::to_string(a) + ", " +
                           std::to_string(n) + ")";
        return "";
    });

    check_fn(suite, "iota_k.matches_beauville_reflection", [&]() -> std::string {
        Params par(1, 2);
        for (long k = -6; k <= 6; ++k) {
            SurfDiv f = Fk(par, k);
            DivClass d{f.u, Rat(-1), f.v, par};
            if (!(iota_k(1, k) == beauville_reflection(d)))
                return "conjugation coherence failed at k = " + std::to_string(k);
        }
        return "";
    });

    check_fn(suite, "generators.displayed_actions", [&]() -> std::string {
        const GeneratorsA& g = generators_A(1);
        Params par(1, 2);
        auto action_matches = [&](const Isometry& m, std::array<std::array<long, 3>, 3> rows) {
            Mat3r expect;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) expect(i, j) = Rat(rows[i][j]);
            return m.matrix() == expect;
        };
        if (!action_matches(g.A1, {{{5, 2, -2}, {-6, -3, 2}, {6, 2, -3}}}))
            return "A1 display mismatch";
        if (!action_matches(g.A2, {{{3, 2, 2}, {-4, -3, -2}, {0, 0, -1}}}))
            return "A2 display mismatch";
        if (!action_matches(g.A3, {{{19, 12, 0}, {-30, -19, 0}, {10, 6, -1}}}))
            return "A3 display mismatch";
        Mat3r id = Mat3r::identity();
        for (const Isometry* m : {&g.A1, &g.A2, &g.A3})
            if (!(m->compose(*m).matrix() == id)) return "generator is not an involution";
        (void)par;
        return "";
    });

    check_fn(suite, "index_shift.coefficient_identity", [&]() -> std::string {
        // L_k(x + a z, a x + (a^2+1) z) = L_{k-1}(x, z) as linear forms,
        // with L_k = (2 a_{2k-1} + a a_{2k}) x + (a a_{2k-1} - 2 a_{2k}) z.
        for (long a : {1L, 2L, 3L}) {
            FibSeq s(a);
            for (long k = -6; k <= 6; ++k) {
                Int cx = 2 * s.at(2 * k - 1) + Int(a) * s.at(2 * k);
                Int cz = Int(a) * s.at(2 * k - 1) - 2 * s.at(2 * k);
                Int cx_shift = cx + Int(a) * cz;              // coeff of x after P
                Int cz_shift = Int(a) * cx + (Int(a) * a + 1) * cz;  // coeff of z after P
                Int cx_prev = 2 * s.at(2 * k - 3) + Int(a) * s.at(2 * k - 2);
                Int cz_prev = Int(a) * s.at(2 * k - 3) - 2 * s.at(2 * k - 2);
                if (cx_shift != cx_prev || cz_shift != cz_prev)
                    return "index shift failed at (a, k) = (" + std::to_string(a) + ", " +
                           std::to_string(k) + ")";
            }
        }
        return "";
    });

    check_fn(suite, "shift_P.moebius_on_ratio", [&]() -> std::string {
        for (long a : {1L, 2L, 3L}) {
            Isometry p = shift_P(a, 2);
            for (long i = 0; i < opts.samples; ++i) {
                Rat x = random_rat(st, 9, 4), z = random_rat(st, 9, 4);
                if (x.is_zero()) continue;
                Rat r = z / x;
                if ((Rat(1) + Rat(a) * r).is_zero()) continue;
                DivClass v{x, Rat(0), z, Params(a, 2)};
                DivClass pv = p.apply(v);
                if (pv.x.is_zero()) continue;
                if (!(pv.z / pv.x == mobius_f(a, r))) return "Moebius conjugacy failed";
            }
        }
        return "";
    });

    check_fn(suite, "word.construction_rules", [&]() -> std::string {
        try {
            Word w({2, 2});
            return "unreduced word accepted";
        } catch (const std::invalid_argument&) {
        }
        const int raw[] = {2, 2, 1};
        if (!(Word::reduced(raw).letters() == std::vector<int>{1}))
            return "cancellation failed";
        DivClass p{Rat(3), Rat(-1), Rat(1), Params(1, 2)};
        if (!(apply_word(Word{}, p) == p)) return "empty word is not the identity";
        DivClass img = apply_word(Word({2}), p);
        if (!(img == DivClass{Rat(9), Rat(-11), Rat(-1), Params(1, 2)}))
            return "A2 action mismatch on (3,-1,1)";
        return "";
    });

    check_fn(suite, "is_isometry.examples", [&]() -> std::string {
        Params par(1, 2);
        if (!is_isometry(Mat3r::identity(), par)) return "identity rejected";
        Mat3r twice = Mat3r::identity();
        for (int i = 0; i < 3; ++i) twice(i, i) = Rat(2);
        if (is_isometry(twice, par)) return "2*identity accepted";
        return "";
    });

    return suite;
}

// ---------------------------------------------------------------------------
// conegeom
// ---------------------------------------------------------------------------

SuiteResult run_cone_suite(const ConeOptions& opts) {
    SuiteResult suite{"conegeom", {}};
    std::uint64_t st = opts.seed;

    check_fn(suite, "cone.first_octant", [&]() -> std::string {
        Cone3 c = Cone3::from_halfspaces({Vec3z{1, 0, 0}, Vec3z{0, 1, 0}, Vec3z{0, 0, 1}});
        if (c.rays() != std::vector<Vec3z>{Vec3z{0, 0, 1}, Vec3z{0, 1, 0}, Vec3z{1, 0, 0}})
            return "octant rays wrong";
        return "";
    });

    check_fn(suite, "cone.non_pointed_flag", [&]() -> std::string {
        Cone3 c = Cone3::from_halfspaces({Vec3z{1, 0, 0}, Vec3z{-1, 0, 0}, Vec3z{0, 1, 0}});
        if (c.pointed()) return "line-containing cone not flagged";
        try {
            c.rays();
            return "rays returned for a non-pointed cone";
        } catch (const std::domain_error&) {
        }
        return "";
    });

    check_fn(suite, "cone.roundtrip_and_extremality", [&]() -> std::string {
        std::vector<std::vector<Vec3z>> normal_sets = {
            {Vec3z{1, 0, -1}, Vec3z{0, 0, 1}, Vec3z{3, 2, 0}, Vec3z{8, 6, 4}, Vec3z{12, 6, -4},
             Vec3z{0, -1, 0}},
            {Vec3z{1, 0, 0}, Vec3z{0, 1, 0}, Vec3z{0, 0, 1}},
            {Vec3z{2, 1, 0}, Vec3z{0, 3, 1}, Vec3z{1, 0, 2}, Vec3z{1, 1, 1}},
        };
        for (long trial = 0; trial < 8; ++trial) {
            std::vector<Vec3z> ns;
            for (int i = 0; i < 4; ++i)
                ns.push_back(Vec3z{Int(static_cast<long>(next_rand(st) % 9) - 4),
                                   Int(static_cast<long>(next_rand(st) % 9) - 4),
                                   Int(static_cast<long>(next_rand(st) % 9) - 4)});
            normal_sets.push_back(ns);
        }
        for (const auto& ns : normal_sets) {
            Cone3 c = Cone3::from_halfspaces(ns);
            if (!c.pointed() || c.rays().empty()) continue;
            for (const auto& r : c.rays()) {
                // Every extremal ray satisfies all facets and lies on two
                // independent active ones.
                std::vector<Vec3z> active;
                for (const auto& n : c.facets()) {
                    Int d = dot(n, r);
                    if (d < 0) return "extremal ray violates a facet";
                    if (d == 0) active.push_back(n);
                }
                bool independent = false;
                for (size_t i = 0; i < active.size() && !independent; ++i)
                    for (size_t j = i + 1; j < active.size(); ++j) {
                        Vec3z cr = cross(active[i], active[j]);
                        if (!(cr[0] == 0 && cr[1] == 0 && cr[2] == 0)) {
                            independent = true;
                            break;
                        }
                    }
                if (!independent) return "extremal ray with rank < 2 active set";
            }
            Cone3 dual_round = Cone3::from_rays(c.rays());
            Cone3 back = Cone3::from_halfspaces(dual_round.facets());
            if (back.rays() != c.rays()) return "roundtrip changed the ray set";
        }
        return "";
    });

    check_fn(suite, "interiors_disjoint.examples_and_symmetry", [&]() -> std::string {
        const Cone3& pi = pi_cone();
        if (!interiors_disjoint(Cone3::from_halfspaces({Vec3z{1, 0, 0}, Vec3z{0, 1, 0},
                                                        Vec3z{0, 0, 1}}),
                                Cone3::from_halfspaces({Vec3z{-1, 0, 0}, Vec3z{0, -1, 0},
                                                        Vec3z{0, 0, -1}})))
            return "octant vs -octant not disjoint";
        if (interiors_disjoint(pi, pi)) return "Pi vs Pi reported disjoint";
        Cone3 a2pi = transformed(pi, generators_A(1).A2.matrix());
        if (!interiors_disjoint(pi, a2pi)) return "Pi vs A2(Pi) not disjoint";
        if (interiors_disjoint(pi, a2pi) != interiors_disjoint(a2pi, pi))
            return "interiors_disjoint not symmetric";
        return "";
    });

    return suite;
}

// ---------------------------------------------------------------------------
// fundomain
// ---------------------------------------------------------------------------

namespace {

/// Quadratic forms agree everywhere iff they agree on the six probes
/// e_i and e_i + e_j (the polarization determines the Gram matrix).
bool quadratic_forms_equal(const std::function<Rat(const Vec3r&)>& f,
                           const std::function<Rat(const Vec3r&)>& g) {
    std::vector<Vec3r> probes = {
        {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)},
        {Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}};
    for (const auto& p : probes)
        if (!(f(p) == g(p))) return false;
    return true;
}

}  // namespace

SuiteResult run_fundomain_suite(const FundomainOptions& opts) {
    SuiteResult suite{"fundomain", {}};
    std::uint64_t st = opts.seed;
    Params par(1, 2);

    check_fn(suite, "f_energy.difference_displays", [&]() -> std::string {
        // Linear identities: check on the basis vectors.
        const GeneratorsA& g = generators_A(1);
        std::vector<DivClass> basis = {h1_class(par), e_class(par), h2_class(par)};
        for (const DivClass& b : basis) {
            Rat d1 = f_energy(g.A1.apply(b)) - f_energy(b);
            if (!(d1 == Rat(2) * (b.x - b.z))) return "A1 difference mismatch";
            Rat d2 = f_energy(g.A2.apply(b)) - f_energy(b);
            if (!(d2 == Rat(2) * b.z)) return "A2 difference mismatch";
            Rat d3 = f_energy(g.A3.apply(b)) - f_energy(b);
            if (!(d3 == Rat(2) * (Rat(3) * b.x + Rat(2) * b.y))) return "A3 difference mismatch";
        }
        return "";
    });

    check_fn(suite, "q.decomposition_identity", [&]() -> std::string {
        auto lhs = [&](const Vec3r& v) {
            return bbf_q(DivClass{v[0], v[1], v[2], par});
        };
        auto rhs = [&](const Vec3r& v) {
            Rat A = v[0] - v[2], B = v[2], C = Rat(3) * v[0] + Rat(2) * v[1];
            return Rat(3) * (A * B + A * C + B * C) -
                   (A * A + B * B + C * C) / Rat(2);
        };
        if (!quadratic_forms_equal(lhs, rhs)) return "q-decomposition identity failed";
        return "";
    });

    check_fn(suite, "pi.examples", [&]() -> std::string {
        const Cone3& pi = pi_cone();
        if (!pi.contains(DivClass{Rat(7), Rat(-2), Rat(2), par}, true))
            return "(7,-2,2) not strictly inside Pi";
        if (!pi.contains(h1_class(par), false) || pi.contains(h1_class(par), true))
            return "h1 not exactly on the boundary of Pi";
        if (pi.contains(e_class(par), false)) return "e inside Pi";
        if (classify(DivClass{Rat(9), Rat(-11), Rat(-1), par}) != Region::R2)
            return "(9,-11,-1) not in region 2";
        if (classify(e_class(par)) != Region::R4) return "e not classified R4";
        return "";
    });

    check_fn(suite, "pi.rays_are_nef", [&]() -> std::string {
        for (const auto& r : pi_cone().rays())
            if (!is_nef(div_from_vec(r, par), 10)) return "Pi ray fails the nef test";
        return "";
    });

    check_fn(suite, "reduce.inverts_words", [&]() -> std::string {
        long exclusivity_violations = 0;
        for (long i = 0; i < opts.samples; ++i) {
            int len = static_cast<int>(next_rand(st) % (opts.max_word_len + 1));
            Word w = random_reduced_word(len, st);
            DivClass p0 = random_interior_pi_point(st);
            DivClass p = apply_word(w, p0);

            // Region exclusivity on nef points: at most one strict condition.
            int strict = 0;
            if ((p.x - p.z).sign() < 0) ++strict;
            if (p.z.sign() < 0) ++strict;
            if ((Rat(3) * p.x + Rat(2) * p.y).sign() < 0) ++strict;
            if (strict > 1) ++exclusivity_violations;

            ReductionResult res = reduce(p);
            if (!(res.word == w.reversed()))
                return "word mismatch at sample " + std::to_string(i) + ": got " +
                       res.word.str() + ", expected " + w.reversed().str();
            if (!(res.reduced == p0)) return "reduced point differs from the seed point";
            Rat q0 = bbf_q(p);
            for (size_t s = 0; s + 1 < res.trace.size(); ++s) {
                if (!(res.trace[s + 1].f < res.trace[s].f)) return "f did not strictly decrease";
                if (!(bbf_q(res.trace[s].point) == q0)) return "q not constant along the trace";
            }
        }
        if (exclusivity_violations > 0)
            return std::to_string(exclusivity_violations) + " region-exclusivity violations";
        return "";
    });

    check_fn(suite, "reduce.bfs_oracle", [&]() -> std::string {
        // Independent oracle: locate the unique translate of Pi containing
        // the point by searching all reduced words up to the length bound.
        std::vector<Word> words;
        for (int l = 0; l <= opts.max_word_len; ++l)
            for (auto& w : reduced_words_of_length(l)) words.push_back(std::move(w));
        std::vector<Cone3> cones;
        cones.reserve(words.size());
        for (const auto& w : words)
            cones.push_back(transformed(pi_cone(), word_isometry(w).matrix()));
        for (long i = 0; i < 50; ++i) {
            int len = static_cast<int>(next_rand(st) % (opts.max_word_len + 1));
            Word w = random_reduced_word(len, st);
            DivClass p = apply_word(w, random_interior_pi_point(st));
            long found = -1;
            for (size_t c = 0; c < cones.size(); ++c) {
                if (cones[c].contains(p, true)) {
                    if (found >= 0) return "point strictly inside two translates";
                    found = static_cast<long>(c);
                }
            }
            if (found < 0) return "point in no translate";
            if (!(words[found] == w)) return "oracle word disagrees with the generating word";
            if (!(reduce(p).word == w.reversed())) return "reduce disagrees with the oracle";
        }
        return "";
    });

    check_fn(suite, "reduce.precondition_errors", [&]() -> std::string {
        try {
            reduce(e_class(par));
            return "reduce accepted a class outside the positive cone";
        } catch (const std::domain_error&) {
        }
        // q > 0 but on the wrong side of the e-wall: not nef.
        try {
            reduce(DivClass{Rat(7), Rat(2), Rat(2), par});
            return "reduce accepted a non-nef class";
        } catch (const std::domain_error&) {
        }
        return "";
    });

    check_fn(suite, "words.count_3_times_2_pow", [&]() -> std::string {
        for (int l = 1; l <= 7; ++l) {
            size_t expect = 3u << (l - 1);
            if (reduced_words_of_length(l).size() != expect)
                return "word count wrong at length " + std::to_string(l);
        }
        return "";
    });

    check_fn(suite, "tiling.disjoint_and_covering", [&]() -> std::string {
        TilingReport rep = tiling_report(opts.tiling_len, opts.tiling_samples, opts.seed);
        if (!rep.disjoint) return "translates not pairwise interior-disjoint";
        if (rep.covered_exactly_once != rep.samples)
            return "some sampled point not covered exactly once";
        return "";
    });

    check_fn(suite, "y_leq_0.equivalent_to_C0_pairing", [&]() -> std::string {
        // curve_pair(p, C_0) = -y, so nef (hence C_0-nonnegative) forces
        // y <= 0; spot-check the equivalence and nef samples.
        for (long i = 0; i < 50; ++i) {
            DivClass p{random_rat(st, 9, 4), random_rat(st, 9, 4), random_rat(st, 9, 4), par};
            bool pair_ok = curve_pair(p, exceptional_curve(par)).sign() >= 0;
            if (pair_ok != (p.y.sign() <= 0)) return "C_0 pairing / y sign mismatch";
        }
        for (long i = 0; i < 50; ++i) {
            Word w = random_reduced_word(static_cast<int>(next_rand(st) % 5), st);
            DivClass p = apply_word(w, random_interior_pi_point(st));
            if (p.y.sign() > 0) return "nef sample with y > 0";
        }
        return "";
    });

    return suite;
}

// ---------------------------------------------------------------------------
// nefcone2
// ---------------------------------------------------------------------------

std::string nef_oracle_equivalence(long samples, long box, long B, int K, std::uint64_t seed) {
    Params par(1, 2);
    DivClass g0 = reference_class(par);
    std::vector<DivClass> classes = minus_d_classes(1, 2, B);
    std::uint64_t st = seed;
    long done = 0;
    while (done < samples) {
        DivClass p{random_rat(st, box, 4), random_rat(st, box, 4), random_rat(st, box, 4), par};
        if (bbf_q(p).sign() <= 0) continue;
        ++done;
        bool lhs = is_nef(p, K);
        bool rhs = bbf_pair(p, g0).sign() > 0;  // positive-cone component
        if (rhs) {
            for (const auto& rho : classes) {
                if (bbf_pair(g0, rho).sign() <= 0) continue;
                if (bbf_pair(p, rho).sign() < 0) {
                    rhs = false;
                    break;
                }
            }
        }
        if (lhs != rhs)
            return "nef tests disagree at " + p.str() + " (orbit: " + (lhs ? "nef" : "not nef") +
                   ", Hassett-Tschinkel: " + (rhs ? "nef" : "not nef") + ")";
    }
    return "";
}

std::vector<DivClass> supporting_walls_from_box(long a, long B) {
    // A wall rho supports the cut-out iff the plane rho-perp meets it in a
    // point with q > 0. Adjacent wall planes intersect outside the positive
    // cone (the facets are separated by round q = 0 arcs), so the witness
    // is sought in the 2-dimensional cone C = {p in rho-perp : all other
    // walls >= 0, (g0, p) >= 0}: either an extremal ray of C has q > 0, or
    // a pair of rays spans a q > 0 direction (signature (1,1) on the
    // plane: the pair (r, s) works iff (r,s) > 0 and (r,s)^2 > q(r)q(s)).
    Params par(a, 2);
    DivClass g0 = reference_class(par);
    std::vector<DivClass> classes = minus_d_classes(a, 2, B);
    std::vector<Vec3z> funcs;
    funcs.reserve(classes.size());
    for (const auto& c : classes) funcs.push_back(pairing_functional(c));
    Vec3z g0f = pairing_functional(g0);

    std::vector<DivClass> supporting;
    for (size_t i = 0; i < classes.size(); ++i) {
        std::set<Key> seen;
        std::vector<DivClass> rays;
        bool found = false;
        auto consider = [&](const Vec3z& other) {
            Vec3z c = cross(funcs[i], other);
            if (c[0] == 0 && c[1] == 0 && c[2] == 0) return;
            for (int s : {1, -1}) {
                Vec3z v = primitive(Vec3z{c[0] * s, c[1] * s, c[2] * s});
                if (dot(g0f, v) < 0) continue;
                bool feasible = true;
                for (const auto& f : funcs)
                    if (dot(f, v) < 0) {
                        feasible = false;
                        break;
                    }
                if (!feasible) continue;
                DivClass vd = div_from_vec(v, par);
                if (bbf_q(vd).sign() > 0) {
                    found = true;
                    return;
                }
                if (seen.insert(key_of(vd)).second) rays.push_back(vd);
            }
        };
        consider(g0f);
        for (size_t j = 0; j < classes.size() && !found; ++j)
            if (j != i) consider(funcs[j]);
        for (size_t r = 0; r < rays.size() && !found; ++r)
            for (size_t s = r + 1; s < rays.size() && !found; ++s) {
                Rat p = bbf_pair(rays[r], rays[s]);
                if (p.sign() > 0 && p * p > bbf_q(rays[r]) * bbf_q(rays[s])) found = true;
            }
        if (found) supporting.push_back(classes[i]);
    }
    return supporting;
}

SuiteResult run_nef2_suite(const Nef2Options& opts) {
    SuiteResult suite{"nef2", {}};
    std::uint64_t st = opts.seed;
    Params par(1, 2);

    check_fn(suite, "orbit.depth1_contents_and_functionals", [&]() -> std::string {
        OrbitWallSet ows = orbit_walls(1, 1);
        std::set<Key> keys;
        for (const auto& w : ows.walls) keys.insert(key_of(w.rational_normal()));
        for (const auto& expect :
             {Key{0, 1, 0}, Key{2, -3, 0}, Key{2, -3, 2}})
            if (!keys.count(expect)) return "depth-1 orbit misses an expected class";
        // The stored functionals are primitive representatives of the
        // displayed 8x+6y+4z and 12x+6y-4z.
        if (pairing_functional(DivClass{Rat(2), Rat(-3), Rat(0), par}) !=
            primitive(Vec3z{8, 6, 4}))
            return "(2,-3,0) functional not proportional to 8x+6y+4z";
        if (pairing_functional(DivClass{Rat(2), Rat(-3), Rat(2), par}) !=
            primitive(Vec3z{12, 6, -4}))
            return "(2,-3,2) functional not proportional to 12x+6y-4z";
        return "";
    });

    check_fn(suite, "is_nef.examples", [&]() -> std::string {
        if (!is_nef(DivClass{Rat(7), Rat(-2), Rat(2), par}, 8)) return "(7,-2,2) not nef";
        if (is_nef(e_class(par), 8)) return "e reported nef";
        if (!is_nef(h1_class(par), 8)) return "h1 not nef (boundary case)";
        return "";
    });

    check_fn(suite, "nef.oracle_equivalence", [&]() -> std::string {
        return nef_oracle_equivalence(opts.samples, opts.box, opts.B, opts.K, opts.seed);
    });

    check_fn(suite, "nef.supporting_walls_in_orbit", [&]() -> std::string {
        std::set<Key> orbit_keys;
        for (const auto& w : orbit_walls(1, opts.ident_depth).walls)
            orbit_keys.insert(key_of(w.rational_normal()));
        auto supporting = supporting_walls_from_box(1, opts.B);
        if (supporting.empty()) return "no supporting walls found (test is vacuous)";
        for (const auto& s : supporting)
            if (!orbit_keys.count(key_of(s)))
                return "supporting wall " + s.str() + " not in the orbit at depth " +
                       std::to_string(opts.ident_depth);
        return "";
    });

    check_fn(suite, "is_nef.stable_in_depth", [&]() -> std::string {
        std::uint64_t local = opts.seed ^ 0xabcdu;
        long done = 0;
        while (done < std::min<long>(opts.samples, 200)) {
            DivClass p{random_rat(local, opts.box, 4), random_rat(local, opts.box, 4),
                       random_rat(local, opts.box, 4), par};
            if (bbf_q(p).sign() <= 0) continue;
            ++done;
            if (is_nef(p, opts.K) != is_nef(p, opts.K + 2))
                return "decision changed between K and K+2 at " + p.str();
        }
        return "";
    });

    check_fn(suite, "ht_oracle.examples", [&]() -> std::string {
        DivClass g0 = reference_class(par);
        if (!ht_ample_oracle(g0, g0, 50).ample) return "g0 not ample";
        if (ht_ample_oracle(h1_class(par), g0, 50).ample) return "h1 reported ample";
        if (ht_ample_oracle(e_class(par), g0, 50).ample) return "e reported ample";
        return "";
    });

    check_fn(suite, "minus_d.examples", [&]() -> std::string {
        auto small = minus_d_classes(1, 2, 2);
        std::set<Key> keys;
        for (const auto& v : small) {
            keys.insert(key_of(v));
            if (!(bbf_q(v) == Rat(-2))) return "class with q != -2 in the enumeration";
        }
        for (const auto& expect : {Key{0, 1, 0}, Key{2, -3, 0}, Key{2, -3, 2}})
            if (!keys.count(expect)) return "expected (-2)-class missing from box 2";
        bool found = false;
        for (const auto& v : minus_d_classes(2, 10, 5)) {
            if (v.y.abs() == Rat(1)) found = true;
            if (!(bbf_q(v) == Rat(-10))) return "class with q != -10 in the enumeration";
        }
        if (!found) return "no (q = -10, |y| = 1) class in box 5 at a = 2";
        return "";
    });

    check_fn(suite, "lemma31.range", [&]() -> std::string {
        for (long a : {1L, 2L})
            if (!lemma_range_check(a, opts.B))
                return "ratio outside (alpha, beta) at a = " + std::to_string(a);
        return "";
    });

    check_fn(suite, "psi.conjugation", [&]() -> std::string {
        for (long a : {1L, 2L, 3L, 5L}) {
            auto [alpha, beta] = quadratic_roots(a);
            std::vector<Rat> samples;
            samples.push_back(Rat(0));
            while (samples.size() < 100) {
                Rat r = random_rat(st, a + 1, 16);
                QuadNum rq(alpha.radicand(), r, Rat(0));
                if ((rq - alpha).sign() > 0 && (beta - rq).sign() > 0) samples.push_back(r);
            }
            if (!mobius_psi_suite(a, samples)) return "psi(f(r)) != beta^4 psi(r)";
        }
        return "";
    });

    check_fn(suite, "remark_a2.product", [&]() -> std::string {
        if (!remark_a2_check(opts.B)) return "pairing product != -64";
        // Algebraic cross-check: the product equals 32(x^2 + 2xz - z^2).
        auto [ray_a, ray_b] = boundary_ray_classes(Params(2, 2));
        for (const auto& v : minus_d_classes(2, 10, 10)) {
            if (!(v.y.abs() == Rat(1))) continue;
            QuadNum prod = bbf_pair(v, ray_a) * bbf_pair(v, ray_b);
            Rat expect = Rat(32) * (v.x * v.x + Rat(2) * v.x * v.z - v.z * v.z);
            if (!prod.is_rational() || !(prod.rat_part() == expect))
                return "product != 32(x^2+2xz-z^2) at " + v.str();
        }
        return "";
    });

    check_fn(suite, "eff_cone.rays", [&]() -> std::string {
        EffConeRays eff = eff_cone_rays(1);
        const auto& rays = eff.cone.rays();
        if (std::find(rays.begin(), rays.end(), Vec3z{0, 1, 0}) == rays.end())
            return "e not a generator of the effective cone";
        for (const auto& r : rays)
            if (!(bbf_q(div_from_vec(r, par)) == Rat(-2))) return "generator with q != -2";
        Cone3 with_facets = Cone3::from_rays(rays, true);
        if (!with_facets.contains(DivClass{Rat(2), Rat(-2), Rat(0), par}, false))
            return "(2,-3,0) + e not inside the depth-1 cone";
        return "";
    });

    check_fn(suite, "orbit.ratio_window_monotone", [&]() -> std::string {
        OrbitWallSet ows = orbit_walls(1, 6);
        if (ows.max_ratio_by_depth.size() < 2) return "ratio window not recorded";
        // Construction already asserts monotonicity; confirm the recorded
        // extremes stay inside (alpha, beta).
        auto [alpha, beta] = quadratic_roots(1);
        QuadNum mx(alpha.radicand(), ows.max_ratio_by_depth.back(), Rat(0));
        QuadNum mn(alpha.radicand(), ows.min_ratio_by_depth.back(), Rat(0));
        if (!((beta - mx).sign() > 0 && (mn - alpha).sign() > 0))
            return "ratio window escapes (alpha, beta)";
        return "";
    });

    return suite;
}

// ---------------------------------------------------------------------------
// hilbwalls (large n)
// ---------------------------------------------------------------------------

SuiteResult run_large_n_suite(const LargeNOptions& opts) {
    SuiteResult suite{"large-n", {}};
    LargeNConfig cfg(opts.a, opts.n, opts.K);
    long a = opts.a;
    Params par = cfg.par;
    FibSeq seq(a);

    check_fn(suite, "Fk.products", [&]() -> std::string {
        for (long k = -cfg.K - 1; k <= cfg.K + 1; ++k) {
            SurfDiv f = Fk(par, k), f1 = Fk(par, k + 1);
            if (!(surf_self(f) == Rat(4))) return "F_k^2 != 4";
            if (!(surf_pair(f, f1) == Rat(2 * (a * a + 2)))) return "F_k . F_{k+1} != 2(a^2+2)";
        }
        return "";
    });

    check_fn(suite, "Ekt.integral_with_closed_form", [&]() -> std::string {
        for (long k = -cfg.K - 1; k <= cfg.K; ++k)
            for (long t = 0; t <= a; ++t) {
                SurfDiv e = Ekt(par, k, t);
                if (!e.is_integral()) return "E_{k,t} not integral";
                // Independent closed form from the recursion.
                Rat u(seq.at(2 * k - 1) + Int(t) * seq.at(2 * k));
                Rat v(seq.at(2 * k) + Int(t) * seq.at(2 * k + 1));
                if (!(e.u == u && e.v == v)) return "E_{k,t} differs from the closed form";
            }
        return "";
    });

    check_fn(suite, "Ekt.integral_grid_a_up_to_6", [&]() -> std::string {
        for (long aa = 1; aa <= 6; ++aa) {
            Params p(aa, minimal_large_n(aa));
            for (long k = -6; k <= 6; ++k)
                for (long t = 0; t <= aa; ++t)
                    if (!Ekt(p, k, t).is_integral()) return "non-integral E on the grid";
        }
        return "";
    });

    check_fn(suite, "det_Mk.absolute_value_and_sign", [&]() -> std::string {
        std::string signs;
        for (long aa = 1; aa <= 6; ++aa)
            for (long k = -10; k <= 10; ++k) {
                Int d = fk_matrix_det(aa, k);
                if (abs(d) != aa) return "|det M_k| != a";
                if (d != aa) return "det M_k sign deviates from +a at (a, k) = (" +
                                     std::to_string(aa) + ", " + std::to_string(k) + ")";
            }
        return "note:sign pattern: +a for all sampled (a, k)";
    });

    check_fn(suite, "crdiv.selects_adjacent_pair", [&]() -> std::string {
        for (long k = -2; k <= 2; ++k)
            for (long t = 0; t <= a - 1; ++t) {
                auto sel = crdiv(cfg, k, t);
                if (sel.size() != 2) return "CrDiv size != 2";
                if (!(sel[0] == Ekt(par, k, t) && sel[1] == Ekt(par, k, t + 1)))
                    return "CrDiv != {E_{k,t}, E_{k,t+1}}";
            }
        return "";
    });

    check_fn(suite, "crdiv.center_gap_formula", [&]() -> std::string {
        // s(E_{k,s}) - s(E_{k,t}) = (s-t)(s-t-1) / (a(a^2+4)(A - 2(s-t)))
        // with A = n + 2t^2 - 2at - 2; >= 0 with equality iff s in {t, t+1}.
        for (long k = -1; k <= 1; ++k)
            for (long t = 0; t <= a - 1; ++t) {
                HDData hd = hd_construction(cfg, k, t);
                Rat st_center = wall_center({hd.H, hd.D, Ekt(par, k, t), 0, par.n});
                Rat bigA = Rat(par.n) + Rat(2 * t * t) - Rat(2 * a * t) - Rat(2);
                for (long s = 0; s <= a; ++s) {
                    Rat ss = wall_center({hd.H, hd.D, Ekt(par, k, s), 0, par.n});
                    Rat gap = ss - st_center;
                    Rat expect = Rat((s - t) * (s - t - 1)) /
                                 (Rat(a) * Rat(a * a + 4) * (bigA - Rat(2 * (s - t))));
                    if (!(gap == expect)) return "center gap formula failed";
                    if (gap.sign() < 0) return "center gap negative";
                    if ((gap.sign() == 0) != (s == t || s == t + 1))
                        return "equality cases wrong in the center gap";
                }
            }
        return "";
    });

    check_fn(suite, "wall_center.universal_value", [&]() -> std::string {
        Rat expect = Rat(-1) / Rat(2 * Int(a) * (Int(a) * a + 4));
        for (long k = -cfg.K + 1; k <= cfg.K - 1; ++k)
            for (long t = 0; t <= a - 1; ++t) {
                HDData hd = hd_construction(cfg, k, t);
                for (long u : {t, t + 1}) {
                    Rat c = wall_center({hd.H, hd.D, Ekt(par, k, u), 0, par.n});
                    if (!(c == expect)) return "s_W != -1/(2a(a^2+4))";
                }
            }
        return "";
    });

    check_fn(suite, "Dkt.intersection_law", [&]() -> std::string {
        for (long k = -cfg.K + 1; k <= cfg.K - 1; ++k)
            for (long t = 0; t <= a - 1; ++t) {
                DivClass d = Dkt(cfg, k, t);
                for (long u = 0; u <= a; ++u) {
                    Rat expect(2 * (u - t) * (u - t - 1));
                    if (!(curve_pair(d, moving_curve(Ekt(par, k, u))) == expect))
                        return "D_{k,t} . (E_{k,u})_[n] != 2(u-t)(u-t-1)";
                }
                if (!(curve_pair(d, exceptional_curve(par)) == Rat(1)))
                    return "D_{k,t} . C_0 != 1";
            }
        return "";
    });

    check_fn(suite, "nef_cone.assembly_and_duality", [&]() -> std::string {
        NefConeLargeN cone = nef_cone_large_n(cfg);  // asserts internally
        size_t expect_walls = static_cast<size_t>(2 * cfg.K + 1) * a + 3;
        if (cone.walls.size() != expect_walls) return "unexpected wall count";
        MoriGenerators mori = mori_generators(cfg);  // asserts duality
        if (mori.curves.empty()) return "no Mori generators";
        return "";
    });

    check_fn(suite, "walls.interleaved_and_distinct", [&]() -> std::string {
        // Edge-chain ratios v/u strictly increase along (k, t) order.
        std::optional<Rat> prev;
        for (long k = -cfg.K; k <= cfg.K; ++k)
            for (long t = 0; t <= a - 1; ++t) {
                SurfDiv e = Ekt(par, k, t);
                if (e.u.sign() <= 0) return "edge-chain class with u <= 0";
                Rat r = e.v / e.u;
                if (prev && !(r > *prev)) return "edge-chain ratios not increasing";
                prev = r;
            }
        std::set<Key> funcs;
        for (long k = -cfg.K; k <= cfg.K; ++k)
            for (long t = 0; t <= a - 1; ++t) {
                SurfDiv e = Ekt(par, k, t);
                Int g = genus(e);
                Vec3z f = primitive_from_rational(
                    {surf_pair(h1_surf(par), e), Rat(Int(par.n) + g - 1),
                     surf_pair(h2_surf(par), e)});
                if (!funcs.insert(Key{f[0], f[1], f[2]}).second)
                    return "two walls share a functional";
            }
        return "";
    });

    check_fn(suite, "walls.P_equivariance", [&]() -> std::string {
        Isometry p = shift_P(a, par.n);
        for (long k = -cfg.K; k <= cfg.K - 1; ++k)
            for (long t = 0; t <= a; ++t) {
                SurfDiv e = Ekt(par, k, t);
                DivClass lifted{e.u, Rat(0), e.v, par};
                SurfDiv next = Ekt(par, k + 1, t);
                DivClass img = p.apply(lifted);
                if (!(img.x == next.u && img.z == next.v))
                    return "P does not shift E_{k,t} to E_{k+1,t}";
            }
        return "";
    });

    check_fn(suite, "limit.rays_and_functionals", [&]() -> std::string {
        LimitData lim = limit_rays(cfg);
        if (bbf_q(lim.ray_alpha).sign() != 0 || bbf_q(lim.ray_beta).sign() != 0)
            return "limit ray with q != 0";
        if (lim.ray_alpha.y.sign() != 0 || lim.ray_beta.y.sign() != 0)
            return "limit ray off C_0^perp";
        auto [alpha, beta] = quadratic_roots(a);
        if (!(lim.func_beta[0] == QuadNum(beta.radicand(), Rat(4), Rat(0)) + beta * Rat(2 * a)) ||
            !(lim.func_beta[1] == QuadNum(beta.radicand(), Rat(Int(par.n) + 2), Rat(0))) ||
            !(lim.func_beta[2] == QuadNum(beta.radicand(), Rat(2 * a), Rat(0)) - beta * Rat(4)))
            return "displayed functional coefficients wrong";
        // Pairing against the ray class is the y-free part of the
        // displayed functional (the supporting tangent plane).
        std::uint64_t st = 0x5eed0007;
        for (int i = 0; i < 20; ++i) {
            DivClass v{random_rat(st, 9, 4), random_rat(st, 9, 4), random_rat(st, 9, 4), par};
            QuadNum via_ray = bbf_pair(v, lim.ray_beta);
            QuadNum via_func = lim.func_beta[0] * v.x + lim.func_beta[2] * v.z;
            if (!(via_ray == via_func)) return "ray pairing differs from the y-free functional";
        }
        return "";
    });

    check_fn(suite, "thresholds.master_bound", [&]() -> std::string {
        for (long t = 0; t <= a - 1; ++t) {
            ThresholdReport rep = thresholds(cfg, t);
            if (!rep.all_at_config()) return "a threshold fails at the configuration";
            if (!rep.master_implies_all) return "master bound does not imply the thresholds";
        }
        if (minimal_large_n(1) != 6 || minimal_large_n(2) != 10 || minimal_large_n(3) != 14)
            return "minimal n values differ from {6, 10, 14}";
        return "";
    });

    if (a == 1) {
        check_fn(suite, "example.Dk0_closed_form", [&]() -> std::string {
            for (long k = -cfg.K + 1; k <= cfg.K - 1; ++k) {
                SurfDiv sum = Fk(par, k) + Fk(par, k + 1);
                Rat c(Int(par.n) + 2, Int(10));
                DivClass expect{sum.u * c, Rat(-1), sum.v * c, par};
                if (!(Dkt(cfg, k, 0) == expect))
                    return "D_{k,0} != ((n+2)/10)(F_k + F_{k+1}) - e";
            }
            return "";
        });
    }

    return suite;
}

std::vector<SuiteResult> run_all() {
    return {run_exactmath_suite(), run_lattice_suite(),  run_fib_suite(),
            run_isometry_suite(),  run_cone_suite(),     run_fundomain_suite(),
            run_nef2_suite(),      run_large_n_suite({1, 6, 4})};
}

}  // namespace hilbnef::verify

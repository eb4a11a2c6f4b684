#include "hilbnef/lattice.hpp"

#include "hilbnef/fib.hpp"

namespace hilbnef {

namespace {

void check_params(const Params& p, const Params& q, const char* what) {
    if (!(p == q))
        throw std::invalid_argument(std::string(what) + ": parameter mismatch (a,n)");
}

}  // namespace

SurfDiv SurfDiv::operator+(const SurfDiv& o) const {
    check_params(par, o.par, "SurfDiv::+");
    return {u + o.u, v + o.v, par};
}
SurfDiv SurfDiv::operator-(const SurfDiv& o) const {
    check_params(par, o.par, "SurfDiv::-");
    return {u - o.u, v - o.v, par};
}

DivClass DivClass::operator+(const DivClass& o) const {
    check_params(par, o.par, "DivClass::+");
    return {x + o.x, y + o.y, z + o.z, par};
}
DivClass DivClass::operator-(const DivClass& o) const {
    check_params(par, o.par, "DivClass::-");
    return {x - o.x, y - o.y, z - o.z, par};
}

DivClassQ::DivClassQ(QuadNum x_, QuadNum y_, QuadNum z_, Params p)
    : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)), par(p) {
    if (x.radicand() != y.radicand() || x.radicand() != z.radicand())
        throw std::invalid_argument("DivClassQ: coordinates must share one radicand");
}

Rat surf_pair(const SurfDiv& c, const SurfDiv& d) {
    check_params(c.par, d.par, "surf_pair");
    Rat a2(2 * c.par.a);
    return Rat(4) * c.u * d.u + a2 * (c.u * d.v + c.v * d.u) - Rat(4) * c.v * d.v;
}

Rat surf_self(const SurfDiv& c) { return surf_pair(c, c); }

Rat bbf_q(const DivClass& p) {
    Rat fourA(4 * p.par.a), two_n1(2 * (p.par.n - 1));
    return Rat(4) * p.x * p.x + fourA * p.x * p.z - Rat(4) * p.z * p.z - two_n1 * p.y * p.y;
}

QuadNum bbf_q(const DivClassQ& p) {
    Rat fourA(4 * p.par.a), two_n1(2 * (p.par.n - 1));
    return p.x * p.x * Rat(4) + p.x * p.z * fourA - p.z * p.z * Rat(4) - p.y * p.y * two_n1;
}

Rat bbf_pair(const DivClass& p, const DivClass& q) {
    check_params(p.par, q.par, "bbf_pair");
    Rat a2(2 * p.par.a), two_n1(2 * (p.par.n - 1));
    return Rat(4) * p.x * q.x + a2 * (p.x * q.z + p.z * q.x) - Rat(4) * p.z * q.z -
           two_n1 * p.y * q.y;
}

QuadNum bbf_pair(const DivClass& p, const DivClassQ& q) {
    check_params(p.par, q.par, "bbf_pair");
    Rat a2(2 * p.par.a), two_n1(2 * (p.par.n - 1));
    return q.x * (Rat(4) * p.x) + (q.z * p.x + q.x * p.z) * a2 - q.z * (Rat(4) * p.z) -
           q.y * (two_n1 * p.y);
}

QuadNum bbf_pair(const DivClassQ& p, const DivClassQ& q) {
    check_params(p.par, q.par, "bbf_pair");
    Rat a2(2 * p.par.a), two_n1(2 * (p.par.n - 1));
    return p.x * q.x * Rat(4) + (p.x * q.z + p.z * q.x) * a2 - p.z * q.z * Rat(4) -
           p.y * q.y * two_n1;
}

Mat3r gram_matrix(const Params& par) {
    Mat3r g;
    g(0, 0) = Rat(4);
    g(0, 2) = Rat(2 * par.a);
    g(1, 1) = Rat(-2 * (par.n - 1));
    g(2, 0) = Rat(2 * par.a);
    g(2, 2) = Rat(-4);
    return g;
}

Rat curve_pair(const DivClass& d, const CurveOnHilb& c) {
    if (const auto* mc = std::get_if<MovingCurve>(&c)) {
        check_params(d.par, mc->cls.par, "curve_pair");
        Rat weight(Int(d.par.n) + mc->genus - 1);
        return surf_pair(d.surface_part(), mc->cls) + d.y * weight;
    }
    const auto& exc = std::get<ExceptionalCurve>(c);
    check_params(d.par, exc.par, "curve_pair");
    return -d.y;
}

QuadNum curve_pair(const DivClassQ& d, const CurveOnHilb& c) {
    if (const auto* mc = std::get_if<MovingCurve>(&c)) {
        check_params(d.par, mc->cls.par, "curve_pair");
        Rat a2(2 * d.par.a);
        // Surface pairing of the (x, z) part against mc->cls, in QuadNum.
        QuadNum sp = d.x * (Rat(4) * mc->cls.u + a2 * mc->cls.v) +
                     d.z * (a2 * mc->cls.u - Rat(4) * mc->cls.v);
        Rat weight(Int(d.par.n) + mc->genus - 1);
        return sp + d.y * weight;
    }
    const auto& exc = std::get<ExceptionalCurve>(c);
    check_params(d.par, exc.par, "curve_pair");
    return -d.y;
}

Int genus(const SurfDiv& c) {
    if (!c.is_integral())
        throw std::invalid_argument("genus: non-integral class " + c.str());
    Rat sq = surf_self(c);
    Int s = sq.to_int();
    if (s < -2) throw std::domain_error("genus: C^2 < -2");
    if (s % 2 != 0) throw std::logic_error("genus: odd self-intersection on an even lattice");
    return s / 2 + 1;
}

CurveOnHilb moving_curve(const SurfDiv& c) { return MovingCurve{c, genus(c)}; }

CurveOnHilb exceptional_curve(const Params& par) { return ExceptionalCurve{par}; }

long minimal_large_n(long a) {
    long num = a * a + 4 * a + 7;
    return (num + 1) / 2;  // ceil(num/2)
}

DivClass reference_class(const Params& par) {
    if (par.a == 1 && par.n == 2) return {Rat(7), Rat(-2), Rat(2), par};
    if (par.n >= minimal_large_n(par.a)) {
        // D_{0,0} = c1 F_0 + c2 F_1 - e with F_0 = h1 and F_1 = h1 + a h2.
        long a = par.a;
        Rat c(Int(a) * (par.n - 2));
        Rat denom(Int(2 * a) * (Int(a) * a + 4));
        Rat c1 = (c - Rat(2 * a * a + 4)) / denom + Rat(1);
        Rat c2 = (c + Rat(4)) / denom;
        DivClass g0{c1 + c2, Rat(-1), c2 * Rat(a), par};
        if (bbf_q(g0).sign() <= 0)
            throw std::logic_error("reference_class: D_{0,0} not in the positive cone");
        return g0;
    }
    for (long m = 1; m <= 100; ++m) {
        DivClass g0{Rat(1), Rat(Int(-1), Int(m)), Rat(0), par};
        if (bbf_q(g0).sign() > 0) return g0;
    }
    throw std::domain_error("reference_class: no 1/m reference for these parameters");
}

bool in_positive_cone(const DivClass& p) {
    if (bbf_q(p).sign() <= 0) return false;
    return bbf_pair(p, reference_class(p.par)).sign() > 0;
}

bool in_positive_cone_closure(const DivClass& p) {
    int qs = bbf_q(p).sign();
    if (qs < 0) return false;
    int ps = bbf_pair(p, reference_class(p.par)).sign();
    return qs > 0 ? ps > 0 : ps >= 0;
}

std::pair<DivClassQ, DivClassQ> boundary_ray_classes(const Params& par) {
    auto [alpha, beta] = quadratic_roots(par.a);
    QuadNum one(alpha.radicand(), Rat(1), Rat(0));
    QuadNum zero(alpha.radicand());
    DivClassQ ra{one, zero, alpha, par};
    DivClassQ rb{one, zero, beta, par};
    if (bbf_q(ra).sign() != 0 || bbf_q(rb).sign() != 0)
        throw std::logic_error("boundary_ray_classes: rays must satisfy q = 0");
    return {ra, rb};
}

DivClass h1_class(const Params& par) { return {Rat(1), Rat(0), Rat(0), par}; }
DivClass h2_class(const Params& par) { return {Rat(0), Rat(0), Rat(1), par}; }
DivClass e_class(const Params& par) { return {Rat(0), Rat(1), Rat(0), par}; }
SurfDiv h1_surf(const Params& par) { return {Rat(1), Rat(0), par}; }
SurfDiv h2_surf(const Params& par) { return {Rat(0), Rat(1), par}; }

}  // namespace hilbnef

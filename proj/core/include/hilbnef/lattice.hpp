#pragma once

#include <variant>

#include "hilbnef/mat.hpp"
#include "hilbnef/quad.hpp"

namespace hilbnef {

/// Surface/Hilbert-scheme parameters: S_a with intersection form
/// [[4, 2a], [2a, -4]] on the basis (h1, h2), and the Hilbert scheme of
/// n points S_a^[n].
struct Params {
    long a;
    long n;

    Params(long a_, long n_) : a(a_), n(n_) {
        if (a < 1) throw std::invalid_argument("Params: a must be >= 1");
        if (n < 2) throw std::invalid_argument("Params: n must be >= 2");
    }
    bool operator==(const Params&) const = default;
};

/// Divisor class u*h1 + v*h2 on the surface S_a. Fractional coordinates
/// are legal intermediates.
struct SurfDiv {
    Rat u, v;
    Params par;

    SurfDiv(Rat u_, Rat v_, Params p) : u(std::move(u_)), v(std::move(v_)), par(p) {}
    bool is_integral() const { return u.is_integer() && v.is_integer(); }
    SurfDiv operator+(const SurfDiv& o) const;
    SurfDiv operator-(const SurfDiv& o) const;
    SurfDiv scaled(const Rat& c) const { return {u * c, v * c, par}; }
    bool operator==(const SurfDiv&) const = default;
    std::string str() const { return "(" + u.str() + ", " + v.str() + ")"; }
};

/// Divisor class x*h1 + y*e + z*h2 on S_a^[n], exact rational coordinates.
struct DivClass {
    Rat x, y, z;
    Params par;

    DivClass(Rat x_, Rat y_, Rat z_, Params p)
        : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)), par(p) {}
    bool is_integral() const { return x.is_integer() && y.is_integer() && z.is_integer(); }
    Vec3r coords() const { return {x, y, z}; }
    SurfDiv surface_part() const { return {x, z, par}; }
    DivClass operator+(const DivClass& o) const;
    DivClass operator-(const DivClass& o) const;
    DivClass operator-() const { return {-x, -y, -z, par}; }
    DivClass scaled(const Rat& c) const { return {x * c, y * c, z * c, par}; }
    bool operator==(const DivClass&) const = default;
    std::string str() const { return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")"; }
};

/// Divisor class with coordinates in Q(sqrt(a^2+4)); carrier for the
/// irrational limit rays and limit wall functionals.
struct DivClassQ {
    QuadNum x, y, z;
    Params par;

    DivClassQ(QuadNum x_, QuadNum y_, QuadNum z_, Params p);
    std::string str() const { return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")"; }
};

/// Curve class on S_a^[n]: either the n-point curve C_[n] induced by a
/// curve C on the surface (with its genus), or the exceptional curve C_0
/// contracted by the Hilbert-Chow morphism.
struct MovingCurve {
    SurfDiv cls;
    Int genus;
};
struct ExceptionalCurve {
    Params par;
};
using CurveOnHilb = std::variant<MovingCurve, ExceptionalCurve>;

// -- Pairings ---------------------------------------------------------------

/// Surface intersection pairing: 4 u u' + 2a (u v' + v u') - 4 v v'.
Rat surf_pair(const SurfDiv& c, const SurfDiv& d);
Rat surf_self(const SurfDiv& c);

/// BBF quadratic form: 4x^2 + 4axz - 4z^2 - 2(n-1)y^2.
Rat bbf_q(const DivClass& p);
QuadNum bbf_q(const DivClassQ& p);

/// BBF bilinear pairing, the polarization of bbf_q.
Rat bbf_pair(const DivClass& p, const DivClass& q);
QuadNum bbf_pair(const DivClass& p, const DivClassQ& q);
QuadNum bbf_pair(const DivClassQ& p, const DivClassQ& q);

/// Gram matrix of the BBF form in the basis (h1, e, h2).
Mat3r gram_matrix(const Params& par);

/// Divisor-curve intersection: for C_[n] it is
/// (x h1 + z h2).C + y (n + g(C) - 1); for C_0 it is -y.
Rat curve_pair(const DivClass& d, const CurveOnHilb& c);
QuadNum curve_pair(const DivClassQ& d, const CurveOnHilb& c);

/// Adjunction genus C^2/2 + 1 of an integral curve class with C^2 >= -2.
Int genus(const SurfDiv& c);

/// Builds the moving-curve class C_[n] with the adjunction genus.
CurveOnHilb moving_curve(const SurfDiv& c);
CurveOnHilb exceptional_curve(const Params& par);

// -- Positive cone ----------------------------------------------------------

/// Fixed reference class selecting the positive-cone component that
/// contains the ample classes. For (a, n) = (1, 2) this is (7, -2, 2);
/// for n meeting the large-n bound it is the extremal nef class D_{0,0};
/// otherwise (1, -1/m, 0) with the largest 1/m, m <= 100, of positive
/// square.
DivClass reference_class(const Params& par);

/// Strict membership: bbf_q(p) > 0 and (p, g0) > 0.
bool in_positive_cone(const DivClass& p);

/// Membership in the closure of the same component.
bool in_positive_cone_closure(const DivClass& p);

// -- Standard classes -------------------------------------------------------

DivClass h1_class(const Params& par);
DivClass h2_class(const Params& par);
DivClass e_class(const Params& par);
SurfDiv h1_surf(const Params& par);
SurfDiv h2_surf(const Params& par);

/// Smallest n allowed by the large-n theorem: ceil((a^2 + 4a + 7)/2).
long minimal_large_n(long a);

/// The irrational boundary rays h1 + alpha h2 and h1 + beta h2 of the
/// positive cone in the y = 0 plane; both satisfy q = 0 exactly.
std::pair<DivClassQ, DivClassQ> boundary_ray_classes(const Params& par);

}  // namespace hilbnef

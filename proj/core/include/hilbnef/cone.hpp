#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hilbnef/isometry.hpp"

namespace hilbnef {

/// Divides out the gcd, preserving orientation. Zero stays zero.
Vec3z primitive(Vec3z v);

/// Primitive with the first nonzero coordinate made positive.
Vec3z primitive_sign_fixed(Vec3z v);

/// Clears denominators of a rational vector into a primitive integer one.
Vec3z primitive_from_rational(const Vec3r& v);

/// Rational polyhedral cone in rank 3, carried by primitive integer
/// extremal rays and/or primitive integer inward facet normals. All
/// computations are exact; the double description is special-cased to
/// rank 3 (pairwise facet intersections).
class Cone3 {
public:
    /// Intersection of the halfspaces {p : <n, p> >= 0}. Extremal rays are
    /// computed eagerly; a cone that is not pointed is flagged, not fatal.
    static Cone3 from_halfspaces(std::vector<Vec3z> normals);

    /// Conical hull of the given rays. Facets are computed eagerly unless
    /// `compute_facets` is false (useful for large generator-only cones).
    static Cone3 from_rays(std::vector<Vec3z> rays, bool compute_facets = true);

    bool pointed() const { return pointed_; }
    bool has_rays() const { return has_rays_; }
    bool has_facets() const { return has_facets_; }

    /// Throws if the cone was flagged not pointed (rays were demanded).
    const std::vector<Vec3z>& rays() const;
    const std::vector<Vec3z>& facets() const;

    bool contains(const Vec3r& p, bool strict) const;
    bool contains(const Vec3z& p, bool strict) const;
    bool contains(const DivClass& p, bool strict) const { return contains(p.coords(), strict); }

private:
    std::vector<Vec3z> rays_, facets_;
    bool has_rays_ = false, has_facets_ = false, pointed_ = true;
};

/// Exact test that the interiors of two 3-dimensional pointed cones are
/// disjoint: the intersection over the combined facet lists is full-
/// dimensional iff the sum of its extremal rays is strictly interior to
/// both cones.
bool interiors_disjoint(const Cone3& c1, const Cone3& c2);

/// Image cone under an invertible rational matrix: rays map by M, facet
/// normals by the inverse transpose.
Cone3 transformed(const Cone3& c, const Mat3r& m);

// -- Wall provenance --------------------------------------------------------

struct ProvOrbitOfE {
    std::string word;  // generator word applied to e (sign-normalized class)
};
struct ProvEkt {
    long k, t;
};
struct ProvC0 {};
struct ProvLimitRay {
    int dir;  // +1: ratio beta end, -1: ratio alpha end
};
using Provenance = std::variant<ProvOrbitOfE, ProvEkt, ProvC0, ProvLimitRay>;

std::string provenance_str(const Provenance& p);

/// A wall of a cone: the class whose BBF-pairing functional supports the
/// cone, plus where it came from. Rational normals are primitive.
struct WallSpec {
    std::variant<DivClass, DivClassQ> normal;
    Provenance prov;

    bool is_rational() const { return normal.index() == 0; }
    const DivClass& rational_normal() const { return std::get<DivClass>(normal); }
    const DivClassQ& quad_normal() const { return std::get<DivClassQ>(normal); }
};

/// The coordinate functional of pairing against rho, scaled primitive:
/// p -> <G rho, p> up to a positive factor.
Vec3z pairing_functional(const DivClass& rho);

}  // namespace hilbnef

#include "hilbnef/cone.hpp"

#include <algorithm>

namespace hilbnef {

namespace {

bool is_zero(const Vec3z& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

bool lex_less(const Vec3z& a, const Vec3z& b) {
    for (int i = 0; i < 3; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

void sort_dedup(std::vector<Vec3z>& v) {
    std::sort(v.begin(), v.end(), lex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

int rank_of(const std::vector<Vec3z>& vs) {
    // Incremental rank over Q via cross products and a determinant.
    const Vec3z* first = nullptr;
    for (const auto& v : vs)
        if (!is_zero(v)) {
            first = &v;
            break;
        }
    if (!first) return 0;
    const Vec3z* second = nullptr;
    for (const auto& v : vs)
        if (!is_zero(cross(*first, v))) {
            second = &v;
            break;
        }
    if (!second) return 1;
    Vec3z normal = cross(*first, *second);
    for (const auto& v : vs)
        if (dot(normal, v) != 0) return 3;
    return 2;
}

/// Rays of {p : <n, p> >= 0 for all n in normals}, assuming rank 3.
std::vector<Vec3z> rays_from_normals(const std::vector<Vec3z>& normals) {
    std::vector<Vec3z> rays;
    for (size_t i = 0; i < normals.size(); ++i) {
        for (size_t j = i + 1; j < normals.size(); ++j) {
            Vec3z c = cross(normals[i], normals[j]);
            if (is_zero(c)) continue;
            for (int s : {1, -1}) {
                Vec3z v{c[0] * s, c[1] * s, c[2] * s};
                bool ok = true;
                for (const auto& n : normals)
                    if (dot(n, v) < 0) {
                        ok = false;
                        break;
                    }
                if (ok) rays.push_back(primitive(v));
            }
        }
    }
    sort_dedup(rays);
    return rays;
}

}  // namespace

Vec3z primitive(Vec3z v) {
    Int g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]));
    if (g == 0) return v;
    for (auto& c : v) c /= g;
    return v;
}

Vec3z primitive_sign_fixed(Vec3z v) {
    v = primitive(std::move(v));
    for (int i = 0; i < 3; ++i) {
        if (v[i] != 0) {
            if (v[i] < 0)
                for (auto& c : v) c = -c;
            break;
        }
    }
    return v;
}

Vec3z primitive_from_rational(const Vec3r& v) {
    Int l = lcm(lcm(v[0].den(), v[1].den()), v[2].den());
    Vec3z w;
    for (int i = 0; i < 3; ++i) w[i] = v[i].num() * (l / v[i].den());
    return primitive(std::move(w));
}

Cone3 Cone3::from_halfspaces(std::vector<Vec3z> normals) {
    if (normals.empty()) throw std::invalid_argument("Cone3: empty halfspace list");
    for (auto& n : normals) n = primitive(std::move(n));
    sort_dedup(normals);
    Cone3 c;
    c.facets_ = std::move(normals);
    c.has_facets_ = true;
    if (rank_of(c.facets_) < 3) {
        c.pointed_ = false;  // contains a line; extremal rays not defined
        return c;
    }
    c.rays_ = rays_from_normals(c.facets_);
    c.has_rays_ = true;
    return c;
}

Cone3 Cone3::from_rays(std::vector<Vec3z> rays, bool compute_facets) {
    if (rays.empty()) throw std::invalid_argument("Cone3: empty ray list");
    for (auto& r : rays) r = primitive(std::move(r));
    sort_dedup(rays);
    Cone3 c;
    c.rays_ = std::move(rays);
    c.has_rays_ = true;
    if (compute_facets) {
        if (rank_of(c.rays_) < 3)
            throw std::invalid_argument("Cone3::from_rays: rays do not span rank 3");
        // Facet normals of the primal are the extremal rays of the dual.
        c.facets_ = rays_from_normals(c.rays_);
        c.has_facets_ = true;
    }
    return c;
}

const std::vector<Vec3z>& Cone3::rays() const {
    if (!pointed_) throw std::domain_error("Cone3: extremal rays demanded of a non-pointed cone");
    if (!has_rays_) throw std::logic_error("Cone3: rays not computed");
    return rays_;
}

const std::vector<Vec3z>& Cone3::facets() const {
    if (!has_facets_) throw std::logic_error("Cone3: facets not computed");
    return facets_;
}

bool Cone3::contains(const Vec3r& p, bool strict) const {
    for (const auto& n : facets()) {
        Rat d = Rat(n[0]) * p[0] + Rat(n[1]) * p[1] + Rat(n[2]) * p[2];
        if (strict ? d.sign() <= 0 : d.sign() < 0) return false;
    }
    return true;
}

bool Cone3::contains(const Vec3z& p, bool strict) const {
    for (const auto& n : facets()) {
        Int d = dot(n, p);
        if (strict ? d <= 0 : d < 0) return false;
    }
    return true;
}

bool interiors_disjoint(const Cone3& c1, const Cone3& c2) {
    const auto& f1 = c1.facets();
    const auto& f2 = c2.facets();

    // Quick separating-facet certificate: all rays of one cone weakly on
    // the far side of a facet of the other.
    auto separated_by_facet = [](const std::vector<Vec3z>& facets, const Cone3& other) {
        if (!other.has_rays() || !other.pointed()) return false;
        for (const auto& n : facets) {
            bool sep = true;
            for (const auto& r : other.rays())
                if (dot(n, r) > 0) {
                    sep = false;
                    break;
                }
            if (sep) return true;
        }
        return false;
    };
    if (separated_by_facet(f1, c2) || separated_by_facet(f2, c1)) return true;

    std::vector<Vec3z> combined = f1;
    combined.insert(combined.end(), f2.begin(), f2.end());
    sort_dedup(combined);

    std::vector<Vec3z> meet = rays_from_normals(combined);
    if (meet.empty()) return true;
    Vec3r s{Rat(0), Rat(0), Rat(0)};
    for (const auto& r : meet)
        for (int i = 0; i < 3; ++i) s[i] += Rat(r[i]);
    for (const auto& n : combined) {
        Rat d = Rat(n[0]) * s[0] + Rat(n[1]) * s[1] + Rat(n[2]) * s[2];
        if (d.sign() <= 0) return true;  // meet is lower-dimensional
    }
    return false;
}

Cone3 transformed(const Cone3& c, const Mat3r& m) {
    Mat3r minv_t = m.inverse().transpose();
    std::vector<Vec3z> facets;
    facets.reserve(c.facets().size());
    for (const auto& n : c.facets()) {
        Vec3r nr{Rat(n[0]), Rat(n[1]), Rat(n[2])};
        facets.push_back(primitive_from_rational(minv_t * nr));
    }
    // Rays are recomputed from the transformed facets, keeping the two
    // representations cross-checked by construction.
    return Cone3::from_halfspaces(std::move(facets));
}

std::string provenance_str(const Provenance& p) {
    if (const auto* o = std::get_if<ProvOrbitOfE>(&p))
        return "orbit:" + (o->word.empty() ? std::string("id") : o->word);
    if (const auto* e = std::get_if<ProvEkt>(&p))
        return "E(" + std::to_string(e->k) + "," + std::to_string(e->t) + ")";
    if (std::holds_alternative<ProvC0>(p)) return "C0";
    return std::get<ProvLimitRay>(p).dir > 0 ? "limit:beta" : "limit:alpha";
}

Vec3z pairing_functional(const DivClass& rho) {
    Mat3r g = gram_matrix(rho.par);
    return primitive_from_rational(g * rho.coords());
}

}  // namespace hilbnef

#include "wall_rows.hpp"

#include <algorithm>

namespace hilbnef::cli {

namespace {

const Rat kEnclosureWidth(1, 1000000);

std::string enc_str(const QuadNum& v) {
    if (v.is_rational()) return v.rat_part().str();
    RatInterval iv = v.enclosure(kEnclosureWidth);
    return "enc[" + iv.lo.str() + ";" + iv.hi.str() + "]";
}

WallRow row_from_rational(const DivClass& normal, const Provenance& prov) {
    WallRow row;
    row.prov = provenance_str(prov);
    if (const auto* o = std::get_if<ProvOrbitOfE>(&prov)) {
        row.kind_rank = 0;
        row.word = o->word;
    } else if (const auto* e = std::get_if<ProvEkt>(&prov)) {
        row.kind_rank = 1;
        row.k = e->k;
        row.t = e->t;
    } else if (std::holds_alternative<ProvC0>(prov)) {
        row.kind_rank = 2;
    } else {
        row.kind_rank = 3;
        row.k = std::get<ProvLimitRay>(prov).dir;
    }
    row.normal = {normal.x.str(), normal.y.str(), normal.z.str()};
    row.q = bbf_q(normal).str();
    Vec3z f = pairing_functional(normal);
    row.func = {Rat(f[0]), Rat(f[1]), Rat(f[2])};
    row.func_str = {Rat(f[0]).str(), Rat(f[1]).str(), Rat(f[2]).str()};
    return row;
}

WallRow row_from_quad(const DivClassQ& normal, const std::array<QuadNum, 3>& func,
                      const Provenance& prov) {
    WallRow row;
    row.kind_rank = 3;
    row.k = std::get<ProvLimitRay>(prov).dir;
    row.prov = provenance_str(prov);
    row.normal = {enc_str(normal.x), enc_str(normal.y), enc_str(normal.z)};
    row.q = enc_str(bbf_q(normal));
    row.exact_functional = false;
    for (int i = 0; i < 3; ++i) {
        row.func[i] = func[i].enclosure(kEnclosureWidth).mid();
        row.func_str[i] = enc_str(func[i]);
    }
    return row;
}

void sort_rows(std::vector<WallRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const WallRow& a, const WallRow& b) {
        if (a.kind_rank != b.kind_rank) return a.kind_rank < b.kind_rank;
        if (a.word != b.word) return a.word < b.word;
        if (a.k != b.k) return a.k < b.k;
        if (a.t != b.t) return a.t < b.t;
        return a.normal < b.normal;
    });
}

}  // namespace

std::vector<WallRow> build_wall_rows(long a, long n, int K) {
    std::vector<WallRow> rows;
    if (n == 2) {
        OrbitWallSet ows = orbit_walls(a, K);
        rows.reserve(ows.walls.size());
        for (const auto& w : ows.walls) rows.push_back(row_from_rational(w.rational_normal(), w.prov));
    } else {
        LargeNConfig cfg(a, n, K);
        NefConeLargeN cone = nef_cone_large_n(cfg);
        for (const auto& w : cone.walls) {
            if (w.is_rational()) {
                rows.push_back(row_from_rational(w.rational_normal(), w.prov));
            } else {
                // Supporting tangent functional: pairing against the ray.
                const DivClassQ& ray = w.quad_normal();
                std::array<QuadNum, 3> func{ray.x * Rat(4) + ray.z * Rat(2 * a),
                                            QuadNum(ray.x.radicand()),
                                            ray.x * Rat(2 * a) - ray.z * Rat(4)};
                rows.push_back(row_from_quad(ray, func, w.prov));
            }
        }
    }
    sort_rows(rows);
    return rows;
}

std::string rows_to_csv(const std::vector<WallRow>& rows, bool with_functional) {
    std::string out = "provenance,x,y,z,q";
    if (with_functional) out += ",fx,fy,fz";
    out += "\n";
    for (const auto& r : rows) {
        out += r.prov + "," + r.normal[0] + "," + r.normal[1] + "," + r.normal[2] + "," + r.q;
        if (with_functional) out += "," + r.func_str[0] + "," + r.func_str[1] + "," + r.func_str[2];
        out += "\n";
    }
    return out;
}

}  // namespace hilbnef::cli

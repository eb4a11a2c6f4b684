#include "hilbnef/nefcone2.hpp"

#include <map>
#include <mutex>
#include <set>

#include "hilbnef/fib.hpp"

namespace hilbnef {

namespace {

using Key = std::array<Int, 3>;

Key key_of(const DivClass& v) {
    return {v.x.to_int(), v.y.to_int(), v.z.to_int()};
}

/// Sign-normalized representative with positive pairing against g0;
/// nullopt would mean an orthogonal class, which cannot happen for orbit
/// elements when g0 is strictly interior.
DivClass normalize_against(const DivClass& v, const DivClass& g0) {
    int s = bbf_pair(g0, v).sign();
    if (s > 0) return v;
    if (s < 0) return -v;
    throw std::logic_error("orbit wall orthogonal to the reference class");
}

struct OrbitEntry {
    DivClass cls;
    std::string word;
    int depth;
};

std::vector<OrbitEntry> orbit_of_e(long a, int K) {
    Params par(a, 2);
    DivClass g0 = reference_class(par);
    DivClass e = e_class(par);

    std::vector<Isometry> gens;
    std::vector<std::string> gen_names;
    if (a == 1) {
        const GeneratorsA& g = generators_A(1);
        gens = {g.A1, g.A2, g.A3};
        gen_names = {"A1", "A2", "A3"};
    } else if (a == 2) {
        for (long k = -K; k <= K; ++k) {
            gens.push_back(iota_k(a, k));
            gen_names.push_back("i[" + std::to_string(k) + "]");
        }
    } else {
        throw std::invalid_argument("orbit_walls: supported for a in {1, 2}");
    }

    std::vector<OrbitEntry> out;
    std::set<Key> seen;
    DivClass start = normalize_against(e, g0);
    seen.insert(key_of(start));
    out.push_back({start, "", 0});
    size_t frontier_begin = 0;
    for (int d = 1; d <= K; ++d) {
        size_t frontier_end = out.size();
        for (size_t i = frontier_begin; i < frontier_end; ++i) {
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                DivClass img = normalize_against(gens[gi].apply(out[i].cls), g0);
                if (seen.insert(key_of(img)).second) {
                    std::string w = out[i].word.empty()
                                        ? gen_names[gi]
                                        : out[i].word + "." + gen_names[gi];
                    out.push_back({img, std::move(w), d});
                }
            }
        }
        frontier_begin = frontier_end;
    }
    return out;
}

const OrbitWallSet& cached_orbit_walls(long a, int K) {
    static std::map<std::pair<long, int>, OrbitWallSet> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({a, K});
    if (it == cache.end()) it = cache.emplace(std::make_pair(a, K), orbit_walls(a, K)).first;
    return it->second;
}

}  // namespace

OrbitWallSet orbit_walls(long a, int K) {
    if (K < 0) throw std::invalid_argument("orbit_walls: negative depth");
    auto [alpha, beta] = quadratic_roots(a);
    auto entries = orbit_of_e(a, K);

    OrbitWallSet set;
    set.a = a;
    set.depth = K;
    bool have_window = false;
    Rat mx(0), mn(0);
    size_t i = 0;
    for (int d = 0; d <= K; ++d) {
        for (; i < entries.size() && entries[i].depth == d; ++i) {
            const auto& ent = entries[i];
            if (!(bbf_q(ent.cls) == Rat(-2)))
                throw std::logic_error("orbit_walls: orbit class with q != -2");
            if (!ent.cls.x.is_zero()) {
                Rat r = ent.cls.z / ent.cls.x;
                // Lemma: orbit ratios stay strictly inside (alpha, beta).
                QuadNum rq(alpha.radicand(), r, Rat(0));
                if (!((rq - alpha).sign() > 0 && (beta - rq).sign() > 0))
                    throw std::logic_error("orbit_walls: ratio outside (alpha, beta)");
                if (!have_window) {
                    mx = mn = r;
                    have_window = true;
                } else {
                    if (r > mx) mx = r;
                    if (r < mn) mn = r;
                }
            }
            set.walls.push_back(WallSpec{ent.cls, ProvOrbitOfE{ent.word}});
        }
        if (d >= 1 && have_window) {
            set.max_ratio_by_depth.push_back(mx);
            set.min_ratio_by_depth.push_back(mn);
        }
    }
    // Angular monotonicity: the ratio window never shrinks, and it grows
    // strictly on both ends at least every second depth (the extreme
    // classes 2F_k - 3e enter the orbit at alternating word lengths),
    // marching toward the limit ratios.
    for (size_t d = 1; d < set.max_ratio_by_depth.size(); ++d) {
        if (set.max_ratio_by_depth[d] < set.max_ratio_by_depth[d - 1] ||
            set.min_ratio_by_depth[d] > set.min_ratio_by_depth[d - 1])
            throw std::logic_error("orbit_walls: ratio window shrank at depth " +
                                   std::to_string(d + 1));
    }
    for (size_t d = 2; d < set.max_ratio_by_depth.size(); ++d) {
        if (!(set.max_ratio_by_depth[d] > set.max_ratio_by_depth[d - 2]) ||
            !(set.min_ratio_by_depth[d] < set.min_ratio_by_depth[d - 2]))
            throw std::logic_error("orbit_walls: angular monotonicity failed at depth " +
                                   std::to_string(d + 1));
    }
    return set;
}

bool is_nef(const DivClass& p, int K) {
    if (p.par.n != 2) throw std::invalid_argument("is_nef: defined on Hilbert squares (n = 2)");
    if (!in_positive_cone_closure(p)) return false;
    const OrbitWallSet& walls = cached_orbit_walls(p.par.a, K);
    for (const auto& w : walls.walls)
        if (bbf_pair(p, w.rational_normal()).sign() < 0) return false;
    auto [ray_a, ray_b] = boundary_ray_classes(p.par);
    if (bbf_pair(p, ray_a).sign() < 0) return false;
    if (bbf_pair(p, ray_b).sign() < 0) return false;
    return true;
}

std::vector<DivClass> minus_d_classes(long a, long dval, long B) {
    if (B < 1) throw std::invalid_argument("minus_d_classes: B must be >= 1");
    if (dval != 2 && dval != 10)
        throw std::invalid_argument("minus_d_classes: dval must be 2 or 10");
    Params par(a, 2);
    DivClass g0 = reference_class(par);
    std::set<Key> seen;
    std::vector<DivClass> out;
    for (long x = -B; x <= B; ++x) {
        for (long z = -B; z <= B; ++z) {
            // q = -dval  <=>  y^2 = (4x^2 + 4axz - 4z^2 + dval)/2
            Int num = 4 * Int(x) * x + 4 * Int(a) * x * z - 4 * Int(z) * z + dval;
            if (num < 0 || num % 2 != 0) continue;
            Int y2 = num / 2;
            if (!is_perfect_square(y2)) continue;
            Int y = isqrt_floor(y2);
            for (int s : {1, -1}) {
                if (y == 0 && s < 0) continue;
                DivClass v{Rat(x), Rat(Int(s) * y), Rat(z), par};
                if (!(bbf_q(v) == Rat(-dval)))
                    throw std::logic_error("minus_d_classes: constructed class has wrong square");
                int sg = bbf_pair(g0, v).sign();
                DivClass norm = sg < 0 ? -v : (sg > 0 ? v : DivClass{v});
                if (sg == 0) {
                    // Orthogonal to g0: fix the sign lexicographically.
                    Vec3z k{norm.x.to_int(), norm.y.to_int(), norm.z.to_int()};
                    Vec3z f = primitive_sign_fixed(k);
                    norm = DivClass{Rat(f[0]), Rat(f[1]), Rat(f[2]), par};
                }
                if (seen.insert(key_of(norm)).second) out.push_back(norm);
            }
        }
    }
    return out;
}

AmpleOracleResult ht_ample_oracle(const DivClass& h, const DivClass& g, long B) {
    if (h.par.n != 2 || !(h.par == g.par))
        throw std::invalid_argument("ht_ample_oracle: needs matching parameters with n = 2");
    const int validate_depth = 10;
    if (!is_nef(g, validate_depth) || bbf_q(g).sign() <= 0)
        throw std::invalid_argument("ht_ample_oracle: reference g is not strictly interior");
    for (const auto& w : cached_orbit_walls(g.par.a, validate_depth).walls)
        if (bbf_pair(g, w.rational_normal()).sign() <= 0)
            throw std::invalid_argument("ht_ample_oracle: reference g lies on a wall");

    AmpleOracleResult res;
    res.box = B;
    // The oracle is complete only for walls inside the box; testing a class
    // at or beyond the box edge is flagged.
    auto beyond_box = [&](const DivClass& v) {
        Vec3z prim = primitive_from_rational(v.coords());
        return abs(prim[0]) >= B || abs(prim[2]) >= B;
    };
    if (beyond_box(h)) res.advisory = "bound_too_small";

    res.ample = true;
    for (const auto& v : minus_d_classes(h.par.a, 2, B)) {
        for (int s : {1, -1}) {
            DivClass rho = s > 0 ? v : -v;
            if (bbf_pair(g, rho).sign() <= 0) continue;
            if (bbf_pair(h, rho).sign() <= 0) {
                res.ample = false;
                return res;
            }
        }
    }
    if (h.par.a == 2) {
        // (-10)-classes with |y| = 1: excluded because their pairing
        // product against the two boundary rays is negative (no wall).
        auto [ray_a, ray_b] = boundary_ray_classes(h.par);
        for (const auto& v : minus_d_classes(2, 10, B)) {
            if (!(v.y.abs() == Rat(1))) continue;
            QuadNum prod = bbf_pair(v, ray_a) * bbf_pair(v, ray_b);
            if (prod.sign() >= 0)
                throw std::logic_error("ht_ample_oracle: (-10)-class defines a wall");
        }
    }
    return res;
}

bool lemma_range_check(long a, long B) {
    auto [alpha, beta] = quadratic_roots(a);
    for (const auto& v : minus_d_classes(a, 2, B)) {
        if (v.x.is_zero()) continue;  // the lemma assumes x > 0
        DivClass w = v.x.sign() > 0 ? v : -v;
        QuadNum r(alpha.radicand(), w.z / w.x, Rat(0));
        if (!((r - alpha).sign() > 0 && (beta - r).sign() > 0)) return false;
    }
    return true;
}

Rat mobius_f(long a, const Rat& r) {
    Rat den = Rat(1) + Rat(a) * r;
    if (den.is_zero()) throw std::domain_error("mobius_f: pole at r = -1/a");
    return (Rat(a) + Rat(a * a + 1) * r) / den;
}

QuadNum psi_of(long a, const Rat& r) {
    auto [alpha, beta] = quadratic_roots(a);
    QuadNum rq(alpha.radicand(), r, Rat(0));
    if (!((rq - alpha).sign() > 0 && (beta - rq).sign() > 0))
        throw std::domain_error("psi_of: r outside (alpha, beta)");
    return (rq - alpha) / (beta - rq);
}

bool mobius_psi_suite(long a, const std::vector<Rat>& samples) {
    auto [alpha, beta] = quadratic_roots(a);
    QuadNum beta4 = beta.pow(4);
    for (const Rat& r : samples) {
        QuadNum lhs = psi_of(a, mobius_f(a, r));
        QuadNum rhs = beta4 * psi_of(a, r);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool remark_a2_check(long B) {
    Params par(2, 2);
    auto [ray_a, ray_b] = boundary_ray_classes(par);
    Rat expected(-8 * (2 * 2 + 4));  // -8(a^2+4) = -64
    bool any = false;
    for (const auto& v : minus_d_classes(2, 10, B)) {
        if (!(v.y.abs() == Rat(1))) continue;
        any = true;
        QuadNum prod = bbf_pair(v, ray_a) * bbf_pair(v, ray_b);
        if (!prod.is_rational() || !(prod.rat_part() == expected)) return false;
    }
    return any;  // an empty enumeration would make the check vacuous
}

EffConeRays eff_cone_rays(int K) {
    const OrbitWallSet& walls = cached_orbit_walls(1, K);
    std::vector<Vec3z> rays;
    rays.reserve(walls.walls.size());
    for (const auto& w : walls.walls) {
        const DivClass& v = w.rational_normal();
        rays.push_back(Vec3z{v.x.to_int(), v.y.to_int(), v.z.to_int()});
    }
    return {Cone3::from_rays(std::move(rays), /*compute_facets=*/false), K};
}

}  // namespace hilbnef

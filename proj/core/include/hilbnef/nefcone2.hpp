#pragma once

#include "hilbnef/cone.hpp"

namespace hilbnef {

/// Orbit-of-e wall set for the Hilbert square, up to word depth K.
/// Every normal is a primitive integral (-2)-class, sign-normalized so
/// that its pairing with the reference class is positive. The set carries
/// the per-depth ratio extremes backing the angular-monotonicity check.
struct OrbitWallSet {
    long a = 1;
    int depth = 0;
    std::vector<WallSpec> walls;
    std::vector<Rat> max_ratio_by_depth;  // of z/x over walls of depth <= d, d >= 1
    std::vector<Rat> min_ratio_by_depth;
};

/// Images of e under reduced words of length <= K: the generators are
/// A1, A2, A3 for a = 1 and the Beauville involutions iota_k, |k| <= K,
/// for a = 2. Asserts the (-2) invariant and angular monotonicity of the
/// ratio window toward (alpha, beta).
OrbitWallSet orbit_walls(long a, int K);

/// Depth-K nef test on the Hilbert square: membership in the closed
/// positive-cone component of g0, nonnegative pairing with every orbit
/// wall up to depth K, and the two limit-ray inequalities in Q(sqrt(a^2+4)).
bool is_nef(const DivClass& p, int K);

struct AmpleOracleResult {
    bool ample = false;
    long box = 0;
    std::optional<std::string> advisory;  // "bound_too_small" when attached
    explicit operator bool() const { return ample; }
};

/// Brute-force Hassett-Tschinkel ampleness check on the rank-3 lattice:
/// (h, rho) > 0 for every enumerated rho with q(rho) = -2, |x|,|z| <= B
/// and (g, rho) > 0. The (-10) branch is handled per the a = 2 remark;
/// for a = 1 no (-10)-classes occur. Sound relative to the box.
AmpleOracleResult ht_ample_oracle(const DivClass& h, const DivClass& g, long B);

/// All integral classes with q = -dval, |x| <= B, |z| <= B on the Hilbert
/// square of S_a (y solved from the quadric), sign-normalized to positive
/// pairing with g0 where that pairing is nonzero.
std::vector<DivClass> minus_d_classes(long a, long dval, long B);

/// Every enumerated (-2)-class with x > 0 has z/x strictly between alpha
/// and beta (exact quadratic signs).
bool lemma_range_check(long a, long B);

/// The Moebius transformation r -> (a + (a^2+1) r)/(1 + a r) induced by P
/// on the ratio z/x. Throws at the pole.
Rat mobius_f(long a, const Rat& r);

/// psi(r) = (r - alpha)/(beta - r), mapping (alpha, beta) onto (0, inf).
QuadNum psi_of(long a, const Rat& r);

/// Checks psi(f(r)) = beta^4 psi(r) exactly for every sample; each r must
/// lie strictly in (alpha, beta).
bool mobius_psi_suite(long a, const std::vector<Rat>& samples);

/// For a = 2: every enumerated class with q = -10 and |y| = 1 pairs with
/// the two boundary rays h1 + alpha h2, h1 + beta h2 with product exactly
/// -8(a^2+4) = -64, hence defines no wall.
bool remark_a2_check(long B);

struct EffConeRays {
    Cone3 cone;  // generators only; the true Eff is the closure over all K
    int depth = 0;
};

/// Cone spanned by the orbit-of-e classes up to depth K (a = 1).
EffConeRays eff_cone_rays(int K);

}  // namespace hilbnef

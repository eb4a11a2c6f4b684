#pragma once

#include "hilbnef/cone.hpp"

namespace hilbnef {

/// Configuration for the large-n wall machinery on S_a^[n]: n must meet
/// the bound n >= ceil((a^2+4a+7)/2) unless `allow_small_n` is set, in
/// which case theorem-backed assertions are downgraded to exploration.
struct LargeNConfig {
    Params par;
    int K = 4;       // index window |k| <= K
    long B_cr = 5;   // CrDiv enumeration bound on x + y
    bool allow_small_n = false;

    LargeNConfig(long a, long n, int K_ = 4, long B_cr_ = 5, bool allow_small_n_ = false);
};

/// F_k = a_{2k-1} h1 + a_{2k} h2; integral with F_k^2 = 4 (asserted).
SurfDiv Fk(const Params& par, long k);

/// E_{k,t} = ((a-t)/a) F_k + (t/a) F_{k+1} for 0 <= t <= a; integrality
/// and the three displayed products are asserted.
SurfDiv Ekt(const Params& par, long k, long t);

/// det of the matrix of (F_k, F_{k+1}) in the basis (h1, h2).
Int fk_matrix_det(long a, long k);

struct HDData {
    SurfDiv H;
    SurfDiv D;
    Int C;  // C = an + 2a(t^2+t-1) - 2a^2 t
};

/// The polarization/twist pair H = (C-2a^2-4) F_k + (C+4) F_{k+1},
/// D = -E_{k,t}; requires 0 <= t <= a-1 and the ample and discriminant
/// thresholds (checked via exact quadratic signs).
HDData hd_construction(const LargeNConfig& cfg, long k, long t);

struct WallCenterInput {
    SurfDiv H, D, L;
    long w = 0;  // length of Z'
    long n;
};

/// Wall center s_W = -(2(n-w) + L^2 + 2 D.L) / (2 H.L); requires H.L != 0.
Rat wall_center(const WallCenterInput& inp);

/// Enumerates critical divisors x F_k + y F_{k+1} (x, y >= 0 with integral
/// image, 1 <= x+y <= B_cr) plus -D, selects those whose wall center is
/// minimal (the largest wall), and asserts the result is
/// {E_{k,t}, E_{k,t+1}}, returned in that order.
std::vector<SurfDiv> crdiv(const LargeNConfig& cfg, long k, long t);

/// The extremal nef class D_{k,t} = -s_W H - D - e (the canonical class
/// contributes 0); vanishes on (E_{k,t})_[n] and (E_{k,t+1})_[n]
/// (asserted).
DivClass Dkt(const LargeNConfig& cfg, long k, long t);

struct LimitData {
    DivClassQ ray_alpha, ray_beta;  // h1 + alpha h2, h1 + beta h2 (q = 0)
    // Normalized-limit functional coefficients on (x, y, z):
    // (4 + 2 a r) x + (n + 2) y + (2a - 4 r) z for r = alpha, beta.
    // The supporting hyperplane of the nef cone at the limit ray is the
    // tangent plane of the positive cone there, i.e. pairing against the
    // ray itself (the y coefficient of the normalized limit tends to 0).
    std::array<QuadNum, 3> func_alpha, func_beta;
};

/// Limit rays and limiting hyperplane functionals of the wall chain.
LimitData limit_rays(const LargeNConfig& cfg);

struct NefRay {
    std::variant<DivClass, DivClassQ> cls;
    Provenance prov;
};

struct NefConeLargeN {
    std::vector<WallSpec> walls;  // (E_{k,t})^perp, C_0^perp, two limit walls
    std::vector<NefRay> rays;     // D_{k,t} for |k| <= K-1 plus two limit rays
};

/// Assembles the wall and extremal-ray description of Nef(S_a^[n]) in the
/// index window; asserts every ray is >= 0 against every wall and = 0
/// exactly against its two defining walls.
NefConeLargeN nef_cone_large_n(const LargeNConfig& cfg);

struct MoriGenerators {
    std::vector<std::pair<CurveOnHilb, Provenance>> curves;  // (E_{k,t})_[n] and C_0
    DivClassQ c_plus, c_minus;  // normalized limits of (F_k)_[n] as k -> +-inf
};

/// Generators of the Mori cone in the window; asserts duality: every nef
/// ray pairs >= 0 with every generator.
MoriGenerators mori_generators(const LargeNConfig& cfg);

struct ThresholdReport {
    bool h_square_positive;  // n > (2t+1)a - 2t(t+1) + 2 + sqrt(a^2+4)
    bool discriminant;       // 2n > E_{k,t}^2
    bool crdiv_reduction;    // n >= 2 + 2(a-t)(t+2)
    bool brill_noether;      // n >= (5 + 2at - 2t^2)/2
    bool master_implies_all; // all four hold at n = ceil((a^2+4a+7)/2), t = floor((a-1)/2)

    bool all_at_config() const {
        return h_square_positive && discriminant && crdiv_reduction && brill_noether;
    }
};

/// Evaluates the four numerical conditions of the large-n theorem at the
/// configuration and confirms the master bound implies them.
ThresholdReport thresholds(const LargeNConfig& cfg, long t);

}  // namespace hilbnef

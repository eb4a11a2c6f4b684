#pragma once

#include <cstdint>

#include "hilbnef/cone.hpp"

namespace hilbnef {

/// The four sign regions of the nef-effective cone of S_1^[2], tested in
/// the fixed order R1: x-z < 0, then R2: z < 0, then R3: 3x+2y < 0;
/// R4 is the complement (all three >= 0).
enum class Region { R1 = 1, R2 = 2, R3 = 3, R4 = 4 };

struct TraceStep {
    DivClass point;
    Region region;
    Rat f;  // value of 2x + y before the step
};

struct ReductionResult {
    DivClass reduced;       // lies in Pi (non-strict)
    Word word;              // letters in order of application
    std::vector<TraceStep> trace;
};

/// The rational polyhedral cone Pi bounded by x-z >= 0, z >= 0,
/// 3x+2y >= 0, 8x+6y+4z >= 0, 12x+6y-4z >= 0 and y <= 0.
const Cone3& pi_cone();

Region classify(const DivClass& p);

/// The strictly decreasing energy 2x + y of the reduction.
Rat f_energy(const DivClass& p);

struct ReduceOptions {
    int nef_depth = 10;          // orbit-wall depth for the precondition check
    long max_iter = 1'000'000;   // termination is proven; the cap flags bugs
    bool validate = true;        // positive-cone and nef precondition checks
};

/// Moves p into Pi by applying A1/A2/A3 according to its region, recording
/// the word and the full trace. Requires q(p) > 0 and p nef.
ReductionResult reduce(const DivClass& p, const ReduceOptions& opts = {});

struct TilingReport {
    int max_len = 0;
    long translates = 0;
    bool disjoint = false;        // all pairs of translates interior-disjoint
    long samples = 0;
    long covered_exactly_once = 0;
    std::vector<Word> words;
};

/// Enumerates all reduced words up to length max_len, forms the translates
/// of Pi, and checks pairwise interior-disjointness exactly. Optionally
/// samples random interior points of translates and confirms each lies in
/// exactly one closed translate.
TilingReport tiling_report(int max_len, long samples = 0, std::uint64_t seed = 0);

/// Random strictly interior rational point of Pi (positive combination of
/// its extremal rays), for property suites.
DivClass random_interior_pi_point(std::uint64_t& state);

/// Random reduced word of the given length.
Word random_reduced_word(int len, std::uint64_t& state);

}  // namespace hilbnef

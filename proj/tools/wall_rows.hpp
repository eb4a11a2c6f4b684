#pragma once

#include <string>
#include <vector>

#include "hilbnef/hilbwalls.hpp"
#include "hilbnef/nefcone2.hpp"

namespace hilbnef::cli {

/// One wall as emitted by the listing commands and the slice figure.
/// Normal coordinates and q are exact rational strings, or explicitly
/// tagged enclosures (enc[lo;hi]) for the irrational limit walls. The
/// functional is the coordinate form of pairing against the normal,
/// used for drawing the slice line.
struct WallRow {
    int kind_rank = 0;  // orbit < Ekt < C0 < limit
    long k = 0, t = 0;
    std::string word;
    std::string prov;
    std::array<std::string, 3> normal;
    std::string q;
    bool exact_functional = true;
    Vec3r func{Rat(0), Rat(0), Rat(0)};  // exact, or enclosure midpoints
    std::array<std::string, 3> func_str;
};

/// Walls of Nef(S_a^[n]) as rows: the orbit walls for n = 2, the E/C0/
/// limit walls for large n. Deterministically sorted by provenance,
/// then lexicographic normal.
std::vector<WallRow> build_wall_rows(long a, long n, int K);

std::string rows_to_csv(const std::vector<WallRow>& rows, bool with_functional);

}  // namespace hilbnef::cli

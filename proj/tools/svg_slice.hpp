#pragma once

#include "wall_rows.hpp"

namespace hilbnef::cli {

struct SliceWindow {
    Rat z_lo, z_hi, y_lo, y_hi;
};

/// Deterministic SVG of the x = 1 slice: one line per wall (clipped to
/// the window exactly, rounded only at emission), the q = 0 conic, and
/// for n = 2 the facets of the fundamental domain Pi. Identical inputs
/// produce byte-identical output.
std::string render_slice_svg(long a, long n, int K, const std::vector<WallRow>& rows,
                             const SliceWindow& win);

}  // namespace hilbnef::cli

#include "svg_slice.hpp"

#include <algorithm>

#include "hilbnef/fundomain.hpp"

namespace hilbnef::cli {

namespace {

constexpr int kSize = 900;
constexpr int kMargin = 60;

/// Decimal string with exactly six places, computed from the exact
/// rational (round half away from zero). No floating point anywhere, so
/// output bytes are platform-independent.
std::string fixed6(const Rat& v) {
    Int n = v.num() * 1000000;
    Int d = v.den();
    Int units = n / d;  // truncated; remainder carries the sign of n
    Int r = n % d;
    if (2 * abs(r) >= d) units += (sgn(n) >= 0 ? 1 : -1);
    bool neg = units < 0;
    Int a = abs(units);
    Int whole = a / 1000000, frac = a % 1000000;
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), 6 - fs.size(), '0');
    return (neg ? "-" : "") + whole.get_str() + "." + fs;
}

struct Mapper {
    SliceWindow win;
    Rat px(const Rat& z) const {
        return Rat(kMargin) + (z - win.z_lo) / (win.z_hi - win.z_lo) * Rat(kSize - 2 * kMargin);
    }
    Rat py(const Rat& y) const {
        return Rat(kMargin) + (win.y_hi - y) / (win.y_hi - win.y_lo) * Rat(kSize - 2 * kMargin);
    }
};

using PointZY = std::pair<Rat, Rat>;

/// Exact intersection of the line f0 + fy*y + fz*z = 0 with the window
/// rectangle; returns the clipped segment endpoints if the line meets it.
std::vector<PointZY> clip_line(const Vec3r& f, const SliceWindow& w) {
    const Rat &f0 = f[0], &fy = f[1], &fz = f[2];
    std::vector<PointZY> pts;
    auto push = [&](const Rat& z, const Rat& y) {
        if (z < w.z_lo || z > w.z_hi || y < w.y_lo || y > w.y_hi) return;
        PointZY p{z, y};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    };
    if (!fy.is_zero()) {
        push(w.z_lo, -(f0 + fz * w.z_lo) / fy);
        push(w.z_hi, -(f0 + fz * w.z_hi) / fy);
    }
    if (!fz.is_zero()) {
        push(-(f0 + fy * w.y_lo) / fz, w.y_lo);
        push(-(f0 + fy * w.y_hi) / fz, w.y_hi);
    }
    std::sort(pts.begin(), pts.end());
    if (pts.size() > 2) pts = {pts.front(), pts.back()};
    return pts;
}

void emit_line(std::string& out, const Mapper& m, const Vec3r& f, const char* stroke,
               const char* dash) {
    auto pts = clip_line(f, m.win);
    if (pts.size() < 2) return;
    out += "  <line x1=\"" + fixed6(m.px(pts[0].first)) + "\" y1=\"" + fixed6(m.py(pts[0].second)) +
           "\" x2=\"" + fixed6(m.px(pts[1].first)) + "\" y2=\"" + fixed6(m.py(pts[1].second)) +
           "\" stroke=\"" + stroke + "\" stroke-width=\"1\"";
    if (dash[0] != '\0') out += " stroke-dasharray=\"" + std::string(dash) + "\"";
    out += "/>\n";
}

/// Exact enclosure midpoint of sqrt(p/q) for nonnegative rational input.
Rat sqrt_mid(const Rat& v) {
    if (v.sign() < 0) throw std::domain_error("sqrt_mid: negative");
    if (v.is_zero()) return Rat(0);
    Int pq = v.num() * v.den();
    RatInterval root = root_enclosure(pq, Rat(1, 1000000) * Rat(v.den()));
    return root.mid() / Rat(v.den());
}

void emit_conic(std::string& out, const Mapper& m, long a, long n) {
    // q(1, y, z) = 0: y^2 = (4 + 4az - 4z^2)/(2(n-1)), sampled exactly.
    const int steps = 256;
    Rat span = m.win.z_hi - m.win.z_lo;
    for (int branch : {1, -1}) {
        std::string path;
        bool open = false;
        for (int i = 0; i <= steps; ++i) {
            Rat z = m.win.z_lo + span * Rat(i) / Rat(steps);
            Rat num = Rat(4) + Rat(4 * a) * z - Rat(4) * z * z;
            if (num.sign() < 0) {
                open = false;
                continue;
            }
            Rat y = sqrt_mid(num / Rat(2 * (n - 1))) * Rat(branch);
            if (y < m.win.y_lo || y > m.win.y_hi) {
                open = false;
                continue;
            }
            path += (open ? " L " : " M ") + fixed6(m.px(z)) + " " + fixed6(m.py(y));
            open = true;
        }
        if (!path.empty())
            out += "  <path d=\"" + path + "\" fill=\"none\" stroke=\"#b8b8b8\" "
                   "stroke-width=\"1\"/>\n";
    }
}

}  // namespace

std::string render_slice_svg(long a, long n, int K, const std::vector<WallRow>& rows,
                             const SliceWindow& win) {
    Mapper m{win};
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kSize) +
           "\" height=\"" + std::to_string(kSize) + "\" viewBox=\"0 0 " + std::to_string(kSize) +
           " " + std::to_string(kSize) + "\">\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "  <!-- slice of Nef(S_" + std::to_string(a) + "^[" + std::to_string(n) +
           "]) at x = 1; depth K = " + std::to_string(K) + "; axes: z right, y up -->\n";

    emit_conic(out, m, a, n);
    for (const auto& r : rows) {
        const char* stroke = "#555555";
        const char* dash = "";
        if (r.kind_rank == 2) stroke = "#b03030";
        if (r.kind_rank == 3) {
            stroke = "#2e8b57";
            dash = "6 3";
        }
        emit_line(out, m, r.func, stroke, dash);
    }
    if (n == 2) {
        for (const auto& f : pi_cone().facets())
            emit_line(out, m, Vec3r{Rat(f[0]), Rat(f[1]), Rat(f[2])}, "#3060c0", "2 2");
    }

    int ty = 20;
    auto legend = [&](const std::string& text, const char* color) {
        out += "  <text x=\"12\" y=\"" + std::to_string(ty) + "\" font-size=\"13\" fill=\"" +
               color + "\">" + text + "</text>\n";
        ty += 16;
    };
    legend("slice x = 1, a = " + std::to_string(a) + ", n = " + std::to_string(n) +
               ", K = " + std::to_string(K),
           "#000000");
    legend("z: h2 coefficient (right), y: e coefficient (up)", "#000000");
    legend("q = 0 boundary", "#b8b8b8");
    if (n == 2) {
        legend("orbit walls (g e)^perp", "#555555");
        legend("fundamental domain facets", "#3060c0");
    } else {
        legend("(E_{k,t})_[n]^perp walls", "#555555");
        legend("C_0^perp", "#b03030");
        legend("limit walls", "#2e8b57");
    }
    out += "</svg>\n";
    return out;
}

}  // namespace hilbnef::cli

#pragma once

#include <array>

#include "hilbnef/rat.hpp"

namespace hilbnef {

using Vec3r = std::array<Rat, 3>;
using Vec3z = std::array<Int, 3>;

inline Rat dot(const Vec3r& a, const Vec3r& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Int dot(const Vec3z& a, const Vec3z& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3z cross(const Vec3z& a, const Vec3z& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// 3x3 matrix of exact rationals acting on coordinate column vectors.
struct Mat3r {
    std::array<std::array<Rat, 3>, 3> m{};

    static Mat3r identity() {
        Mat3r r;
        for (int i = 0; i < 3; ++i) r.m[i][i] = Rat(1);
        return r;
    }
    static Mat3r from_rows(const Vec3r& r0, const Vec3r& r1, const Vec3r& r2) {
        Mat3r r;
        r.m = {std::array<Rat, 3>{r0[0], r0[1], r0[2]},
               std::array<Rat, 3>{r1[0], r1[1], r1[2]},
               std::array<Rat, 3>{r2[0], r2[1], r2[2]}};
        return r;
    }

    const Rat& operator()(int i, int j) const { return m[i][j]; }
    Rat& operator()(int i, int j) { return m[i][j]; }

    Mat3r operator*(const Mat3r& o) const {
        Mat3r r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
        return r;
    }
    Vec3r operator*(const Vec3r& v) const {
        return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
                m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
                m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
    }

    Mat3r transpose() const {
        Mat3r r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }

    Rat det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    Mat3r inverse() const {
        Rat d = det();
        if (d.is_zero()) throw std::domain_error("Mat3r: singular matrix");
        Mat3r adj;
        adj.m[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
        adj.m[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
        adj.m[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
        adj.m[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
        adj.m[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
        adj.m[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
        adj.m[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
        adj.m[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
        adj.m[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        for (auto& row : adj.m)
            for (auto& x : row) x /= d;
        return adj;
    }

    bool operator==(const Mat3r& o) const { return m == o.m; }
};

}  // namespace hilbnef

#pragma once

// Reference computations for the tests. None of these call into the library
// routine they check.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

/// Distance by integrating the metric 2|dz|/(1-|z|^2) along the geodesic,
/// after moving p to the origin with an explicit Möbius map (radial integral).
inline double disk_distance(Complex p, Complex q) {
    const Complex w = (q - p) / (1.0 - std::conj(p) * q);
    const double r = std::abs(w);
    // midpoint rule on int_0^r 2/(1-s^2) ds, refined until stable
    double prev = -1.0;
    for (int n = 1 << 10; n <= (1 << 22); n <<= 2) {
        const double h = r / n;
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double s = (i + 0.5) * h;
            acc += 2.0 / (1.0 - s * s);
        }
        acc *= h;
        if (std::abs(acc - prev) < 1e-12) return acc;
        prev = acc;
    }
    return prev;
}

/// Attracting fixed angle by iterating the map from the origin.
inline double iterate_to_attractor(Complex a, Complex b, int steps = 400) {
    Complex z(0.0, 0.0);
    for (int i = 0; i < steps; ++i) z = (a * z + b) / (std::conj(b) * z + std::conj(a));
    return std::arg(z);
}

/// Brute-force O(n^2) diameter.
inline double brute_diameter(const std::vector<Complex>& pts) {
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, std::abs(pts[i] - pts[j]));
    return best;
}

/// Largest circular gap by sorting a copy and scanning.
inline double brute_max_gap(std::vector<double> angles) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (double& a : angles) {
        a = std::fmod(a, two_pi);
        if (a < 0) a += two_pi;
    }
    std::sort(angles.begin(), angles.end());
    if (angles.size() == 1) return two_pi;
    double best = angles.front() + two_pi - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i) best = std::max(best, angles[i] - angles[i - 1]);
    return best;
}

/// Number of freely reduced words of length exactly i by brute force over all
/// (2k)^i letter strings.
inline std::uint64_t brute_reduced_count(int rank, int i) {
    const int letters = 2 * rank;
    std::uint64_t total = 1;
    for (int k = 0; k < i; ++k) total *= letters;
    std::uint64_t count = 0;
    std::vector<int> w(i);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int k = 0; k < i; ++k) {
            w[k] = static_cast<int>(c % letters);
            c /= letters;
        }
        bool ok = true;
        for (int k = 1; k < i && ok; ++k) ok = !(w[k] / 2 == w[k - 1] / 2 && w[k] != w[k - 1]);
        count += ok;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Right-angled hexagon solver in the hyperboloid model.
//
// A geodesic in H^2 = {x : <x,x> = -1, x3 > 0} with <x,y> = x1 y1 + x2 y2 - x3 y3
// is the zero set of <n, .> for a spacelike unit normal n. Two geodesics are
// orthogonal iff <n, n'> = 0, and the distance between disjoint ones is
// acosh |<n, n'>|. A right-angled hexagon is fixed by three pairwise disjoint
// lines (sides 2, 4, 6); sides 1, 3, 5 are their common perpendiculars.

using Vec3 = std::array<double, 3>;

inline double lorentz(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] - x[2] * y[2]; }

/// Lorentz cross product: the unique direction Lorentz-orthogonal to x and y.
inline Vec3 lorentz_cross(const Vec3& x, const Vec3& y) {
    const Vec3 e{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
    return {e[0], e[1], -e[2]};
}

inline Vec3 normalize_spacelike(Vec3 v) {
    const double n = std::sqrt(lorentz(v, v));
    return {v[0] / n, v[1] / n, v[2] / n};
}

/// The hexagon with alternate sides of lengths p1, p3, p5 (sides 1, 3, 5).
/// Returns the lengths of the opposite alternate sides (2, 4, 6), where side
/// 2 joins sides 1 and 3, side 4 joins 3 and 5, side 6 joins 5 and 1.
inline std::array<double, 3> hexagon_opposite_sides(double p1, double p3, double p5) {
    // Lines of sides 2, 4, 6 are pairwise disjoint with distances p3, p5, p1:
    // side 3 is the common perpendicular of lines 2 and 4, and so on.
    // Build normals n2, n4, n6 with |<n2,n4>| = cosh p3, |<n4,n6>| = cosh p5, |<n6,n2>| = cosh p1.
    const double A = std::cosh(p3), B = std::cosh(p5), C = std::cosh(p1);
    const Vec3 n2{1.0, 0.0, 0.0};
    const Vec3 n4{-A, 0.0, std::sqrt(A * A - 1.0)};
    // n6 = (-C, y, t): <n2,n6> = -C, <n4,n6> = A C - t sqrt(A^2-1) = -B
    const double t = (A * C + B) / std::sqrt(A * A - 1.0);
    const double y = std::sqrt(1.0 + t * t - C * C);
    const Vec3 n6{-C, y, t};
    // side 1 is the perpendicular between lines 6 and 2, side 3 between 2 and 4, side 5 between 4 and 6
    const Vec3 m1 = normalize_spacelike(lorentz_cross(n6, n2));
    const Vec3 m3 = normalize_spacelike(lorentz_cross(n2, n4));
    const Vec3 m5 = normalize_spacelike(lorentz_cross(n4, n6));
    return {std::acosh(std::abs(lorentz(m1, m3))), std::acosh(std::abs(lorentz(m3, m5))),
            std::acosh(std::abs(lorentz(m5, m1)))};
}

/// Seams (d12, d23, d31) of the pants with cuffs x1, x2, x3, by Newton
/// iteration on hexagon_opposite_sides.
inline std::array<double, 3> pants_seams(double x1, double x2, double x3) {
    // sides 1, 3, 5 are the seams d31, d12, d23 and sides 2, 4, 6 the half cuffs 1, 2, 3
    const std::array<double, 3> target{x1 / 2.0, x2 / 2.0, x3 / 2.0};
    std::array<double, 3> s{1.0, 1.0, 1.0};  // (side1, side3, side5)
    auto f = [&](const std::array<double, 3>& v) {
        const auto o = hexagon_opposite_sides(v[0], v[1], v[2]);
        return std::array<double, 3>{o[0] - target[0], o[1] - target[1], o[2] - target[2]};
    };
    for (int iter = 0; iter < 100; ++iter) {
        const auto r = f(s);
        if (std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])}) < 1e-14) break;
        double J[3][3];
        for (int k = 0; k < 3; ++k) {
            auto sp = s;
            const double h = 1e-7 * std::max(1.0, s[k]);
            sp[k] += h;
            auto sm = s;
            sm[k] -= h;
            const auto rp = f(sp), rm = f(sm);
            for (int i = 0; i < 3; ++i) J[i][k] = (rp[i] - rm[i]) / (2 * h);
        }
        // solve J d = -r by Cramer's rule
        auto det3 = [](double M[3][3]) {
            return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                   M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        };
        const double D = det3(J);
        std::array<double, 3> d{};
        for (int k = 0; k < 3; ++k) {
            double M[3][3];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) M[i][j] = (j == k) ? -r[i] : J[i][j];
            d[k] = det3(M) / D;
        }
        for (int k = 0; k < 3; ++k) s[k] = std::max(1e-6, s[k] + d[k]);
    }
    // side 3 = d12, side 5 = d23, side 1 = d31
    return {s[1], s[2], s[0]};
}

}  // namespace oracle

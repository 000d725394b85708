#pragma once

// Geometry of the Poincare disk: interior points, ideal points on the circle at
// infinity, geodesics, half planes and disk isometries in SU(1,1) form.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "hypsurf/error.hpp"

namespace hypsurf {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default tolerances shared by the whole library.
struct Tolerances {
    static constexpr double matrix = 1e-12;  // |a|^2 - |b|^2 drift, identity detection
    static constexpr double classify = 1e-9; // band around |Re a| = 1
    static constexpr double angle = 1e-9;    // ideal point equality / deduplication
};

/// Reduces an angle to [0, 2pi).
inline double reduce_angle(double theta) noexcept {
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

/// Counterclockwise arc length travelled from `from` to `to`, in [0, 2pi).
inline double ccw_distance(double from, double to) noexcept { return reduce_angle(to - from); }

/// Shortest arc length between two angles, in [0, pi].
inline double angular_distance(double x, double y) noexcept {
    double d = ccw_distance(x, y);
    return std::min(d, kTwoPi - d);
}

class DiskPoint {
public:
    explicit DiskPoint(Complex z) : z_(z) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) >= 1.0) {
            throw Error(ErrorCode::InvalidDiskPoint,
                        "point must lie in the open unit disk, got |z| = " + std::to_string(std::abs(z)));
        }
    }
    DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

    static DiskPoint origin() { return DiskPoint(Complex(0.0, 0.0)); }

    Complex z() const noexcept { return z_; }
    double re() const noexcept { return z_.real(); }
    double im() const noexcept { return z_.imag(); }

private:
    Complex z_;
};

/// A point of the circle at infinity, stored as an angle in [0, 2pi).
class IdealPoint {
public:
    explicit IdealPoint(double theta) : theta_(reduce_angle(theta)) {
        if (!std::isfinite(theta)) throw Error(ErrorCode::NumericFailure, "non-finite angle");
    }

    static IdealPoint from_complex(Complex w) {
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || w == Complex(0.0, 0.0)) {
            throw Error(ErrorCode::NumericFailure, "cannot take the direction of a degenerate vector");
        }
        return IdealPoint(std::arg(w));
    }

    double theta() const noexcept { return theta_; }
    Complex unit() const noexcept { return std::polar(1.0, theta_); }

    bool approx_equal(IdealPoint other, double tol = Tolerances::angle) const noexcept {
        return angular_distance(theta_, other.theta_) <= tol;
    }

private:
    double theta_;
};

using DiskOrIdeal = std::variant<DiskPoint, IdealPoint>;

inline Complex position(const DiskOrIdeal& p) {
    return std::visit([](const auto& q) -> Complex {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, DiskPoint>) return q.z();
        else return q.unit();
    }, p);
}

/// Geodesic given by its two ideal endpoints. The pair is stored with a
/// direction (start -> end) but equality ignores it.
class Geodesic {
public:
    Geodesic(IdealPoint start, IdealPoint end) : start_(start), end_(end) {
        if (start.approx_equal(end)) {
            throw Error(ErrorCode::CoincidentPoints, "geodesic endpoints coincide");
        }
    }
    Geodesic(double start_theta, double end_theta) : Geodesic(IdealPoint(start_theta), IdealPoint(end_theta)) {}

    IdealPoint start() const noexcept { return start_; }
    IdealPoint end() const noexcept { return end_; }
    Geodesic reversed() const { return Geodesic(end_, start_); }

    bool same_as(const Geodesic& other, double tol = Tolerances::angle) const noexcept {
        return (start_.approx_equal(other.start_, tol) && end_.approx_equal(other.end_, tol)) ||
               (start_.approx_equal(other.end_, tol) && end_.approx_equal(other.start_, tol));
    }

    /// Euclidean distance from z to the circle (or diameter) carrying the geodesic.
    double euclidean_offset(Complex z) const noexcept {
        const Complex e1 = start_.unit();
        const Complex e2 = end_.unit();
        const double half = 0.5 * angular_distance(start_.theta(), end_.theta());
        if (std::abs(half - 0.5 * std::numbers::pi) < 1e-12) {
            // diameter: distance to the line through e1 and -e1
            return std::abs((std::conj(e1) * z).imag());
        }
        const Complex mid = (e1 + e2) / std::abs(e1 + e2);
        const Complex centre = mid / std::cos(half);
        const double radius = std::tan(half);
        return std::abs(std::abs(z - centre) - radius);
    }

private:
    IdealPoint start_;
    IdealPoint end_;
};

enum class IsometryClass { Identity, Elliptic, Parabolic, Hyperbolic };

inline std::string to_string(IsometryClass c) {
    switch (c) {
    case IsometryClass::Identity: return "identity";
    case IsometryClass::Elliptic: return "elliptic";
    case IsometryClass::Parabolic: return "parabolic";
    case IsometryClass::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

/// Isometry of the disk, z -> (a w + b) / (conj(b) w + conj(a)) with
/// w = z or w = conj(z) when the orientation flag is set.
class MobiusIsometry {
public:
    MobiusIsometry() = default;

    /// Builds from raw entries; the matrix is rescaled so that |a|^2 - |b|^2 = 1.
    MobiusIsometry(Complex a, Complex b, bool reverses_orientation = false)
        : a_(a), b_(b), reverses_(reverses_orientation) {
        const double na = std::norm(a);
        const double det = na - std::norm(b);
        if (std::isfinite(na) && na > kRenormalizeLimit) {
            // entries this large are taken as already normalized
            if (std::abs(b) > std::abs(a)) throw Error(ErrorCode::InvalidInput, "entries must satisfy |b| <= |a|");
            renormalize();
            return;
        }
        if (!std::isfinite(det) || det <= 0.0) {
            throw Error(ErrorCode::InvalidInput, "entries must satisfy |a|^2 - |b|^2 > 0");
        }
        const double s = std::sqrt(det);
        a_ /= s;
        b_ /= s;
    }

    static MobiusIsometry identity() { return MobiusIsometry(); }

    static MobiusIsometry rotation(double angle) {
        return MobiusIsometry(std::polar(1.0, 0.5 * angle), Complex(0.0, 0.0));
    }

    /// Hyperbolic translation of length t along the real diameter, towards +1.
    static MobiusIsometry real_translation(double t) {
        return MobiusIsometry(Complex(std::cosh(0.5 * t), 0.0), Complex(std::sinh(0.5 * t), 0.0));
    }

    /// The isometry z -> (z + p) / (1 + conj(p) z), carrying 0 to p.
    static MobiusIsometry moving_origin_to(DiskPoint p) {
        const double s = std::sqrt(1.0 - std::norm(p.z()));
        return MobiusIsometry(Complex(1.0 / s, 0.0), p.z() / s);
    }

    /// Complex conjugation z -> conj(z).
    static MobiusIsometry reflection() { return MobiusIsometry(Complex(1.0, 0.0), Complex(0.0, 0.0), true); }

    /// Adapter from a real matrix [[p, q], [r, s]] acting on the upper half
    /// plane (ps - qr = 1), conjugated by the Cayley map z -> (z - i)/(z + i).
    static MobiusIsometry from_upper_half_plane(double p, double q, double r, double s) {
        return MobiusIsometry(Complex(0.5 * (p + s), 0.5 * (q - r)), Complex(0.5 * (p - s), -0.5 * (q + r)));
    }

    Complex a() const noexcept { return a_; }
    Complex b() const noexcept { return b_; }
    bool reverses_orientation() const noexcept { return reverses_; }

    /// Half trace; hyperbolic iff |re_a| > 1.
    double trace_half() const noexcept { return a_.real(); }

    MobiusIsometry inverse() const {
        MobiusIsometry m;
        if (reverses_) {
            m.a_ = a_;
            m.b_ = -std::conj(b_);
        } else {
            m.a_ = std::conj(a_);
            m.b_ = -b_;
        }
        m.reverses_ = reverses_;
        return m;
    }

    /// Composition: (lhs * rhs)(z) = lhs(rhs(z)).
    friend MobiusIsometry operator*(const MobiusIsometry& lhs, const MobiusIsometry& rhs) {
        const Complex a2 = lhs.reverses_ ? std::conj(rhs.a_) : rhs.a_;
        const Complex b2 = lhs.reverses_ ? std::conj(rhs.b_) : rhs.b_;
        MobiusIsometry m;
        m.a_ = lhs.a_ * a2 + lhs.b_ * std::conj(b2);
        m.b_ = lhs.a_ * b2 + lhs.b_ * std::conj(a2);
        m.reverses_ = lhs.reverses_ != rhs.reverses_;
        m.renormalize();
        return m;
    }

    /// Raw action on a complex number of the closed disk.
    Complex act(Complex z) const {
        const Complex w = reverses_ ? std::conj(z) : z;
        const Complex num = a_ * w + b_;
        const Complex den = std::conj(b_) * w + std::conj(a_);
        const Complex r = num / den;
        if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
            throw Error(ErrorCode::NumericFailure, "isometry action overflowed");
        }
        return r;
    }

    /// |f'(z)| at a point of the circle at infinity (arc-length scaling factor).
    double boundary_derivative(IdealPoint p) const {
        const Complex u = p.unit();
        const Complex w = reverses_ ? std::conj(u) : u;
        return 1.0 / std::norm(std::conj(b_) * w + std::conj(a_));
    }

    /// Entrywise distance to another isometry, up to the sign ambiguity of the matrix.
    double entry_distance(const MobiusIsometry& other) const noexcept {
        if (reverses_ != other.reverses_) return std::numeric_limits<double>::infinity();
        const double plus = std::max(std::abs(a_ - other.a_), std::abs(b_ - other.b_));
        const double minus = std::max(std::abs(a_ + other.a_), std::abs(b_ + other.b_));
        return std::min(plus, minus);
    }

    /// True when the map is the identity within `tol` (matrix equal to +/- I).
    bool is_identity(double tol = Tolerances::matrix) const noexcept {
        return !reverses_ && entry_distance(MobiusIsometry()) <= tol;
    }

private:
    static constexpr double kRenormalizeLimit = 1e12;
    static constexpr double kDriftTolerance = 1e-12;

    // |a|^2 - |b|^2 is only known to about eps |a|^2, so drift below that is left alone;
    // rescaling by a noisy determinant would do more harm than the drift.
    void renormalize() {
        if (!std::isfinite(a_.real()) || !std::isfinite(a_.imag()) || !std::isfinite(b_.real()) ||
            !std::isfinite(b_.imag()) || std::abs(a_) > 1e150) {
            throw Error(ErrorCode::NumericFailure, "isometry matrix overflowed");
        }
        const double na = std::norm(a_);
        const double det = na - std::norm(b_);
        const double noise = 8.0 * std::numeric_limits<double>::epsilon() * na;
        if (std::abs(det - 1.0) <= std::max(kDriftTolerance, noise)) return;
        if (det <= 0.0) throw Error(ErrorCode::NumericFailure, "isometry matrix lost normalization");
        const double s = std::sqrt(det);
        a_ /= s;
        b_ /= s;
    }

    Complex a_{1.0, 0.0};
    Complex b_{0.0, 0.0};
    bool reverses_ = false;
};

// ---------------------------------------------------------------------------
// Distances and actions

/// Hyperbolic distance for the metric 2|dz| / (1 - |z|^2).
inline double hyp_distance(DiskPoint p, DiskPoint q) {
    const double num = std::abs(p.z() - q.z());
    const double den = std::abs(1.0 - std::conj(p.z()) * q.z());
    return 2.0 * std::atanh(std::min(num / den, 1.0));
}

inline DiskPoint apply(const MobiusIsometry& m, DiskPoint p) {
    const Complex w = m.act(p.z());
    if (std::abs(w) >= 1.0) {
        throw Error(ErrorCode::NumericFailure, "image point rounded onto the circle at infinity");
    }
    return DiskPoint(w);
}

inline IdealPoint apply(const MobiusIsometry& m, IdealPoint p) { return IdealPoint::from_complex(m.act(p.unit())); }

inline Geodesic apply(const MobiusIsometry& m, const Geodesic& g) {
    return Geodesic(apply(m, g.start()), apply(m, g.end()));
}

/// Conjugate g m g^-1.
inline MobiusIsometry conjugate(const MobiusIsometry& g, const MobiusIsometry& m) { return g * m * g.inverse(); }

// ---------------------------------------------------------------------------
// Classification

/// Classification of the orientation-preserving part; nullopt inside the
/// ambiguity band (|Re a| near 1 but not clearly parabolic).
inline std::optional<IsometryClass> try_classify(const MobiusIsometry& m) noexcept {
    // a parabolic in the band has |b| = |Im a|; a near-trivial elliptic has b close to 0
    constexpr double kParabolicFloor = 1e-4;
    const Complex a = m.a();
    const Complex b = m.b();
    const double half_trace = std::abs(a.real());
    if (std::abs(b) <= Tolerances::matrix && std::abs(a.imag()) <= Tolerances::matrix &&
        std::abs(half_trace - 1.0) <= Tolerances::matrix) {
        return IsometryClass::Identity;
    }
    if (half_trace > 1.0 + Tolerances::classify) return IsometryClass::Hyperbolic;
    if (half_trace < 1.0 - Tolerances::classify) return IsometryClass::Elliptic;
    if (std::abs(b) >= kParabolicFloor) return IsometryClass::Parabolic;
    return std::nullopt;
}

/// Classifies the orientation-preserving part of m; the orientation flag is
/// reported separately by m.reverses_orientation().
inline IsometryClass classify(const MobiusIsometry& m) {
    if (auto c = try_classify(m)) return *c;
    throw Error(ErrorCode::AmbiguousClass,
                "|Re a| = " + std::to_string(std::abs(m.a().real())) + " lies in the tolerance band");
}

inline bool is_hyperbolic(const MobiusIsometry& m) noexcept {
    return std::abs(m.a().real()) > 1.0 + Tolerances::classify;
}

/// Translation length 2 arccosh |Re a| of a hyperbolic isometry.
inline double translation_length(const MobiusIsometry& m) {
    if (!is_hyperbolic(m)) throw Error(ErrorCode::NotHyperbolic, "translation length needs a hyperbolic isometry");
    return 2.0 * std::acosh(std::abs(m.a().real()));
}

/// Ideal fixed points. Hyperbolic: {attracting, repelling}; parabolic: one
/// point; elliptic: none.
inline std::vector<IdealPoint> fixed_points(const MobiusIsometry& m) {
    if (m.reverses_orientation()) {
        throw Error(ErrorCode::OrientationReversing, "fixed points are computed for orientation-preserving maps");
    }
    const IsometryClass c = classify(m);
    const Complex a = m.a();
    const Complex b = m.b();
    switch (c) {
    case IsometryClass::Identity:
        throw Error(ErrorCode::IdentityInput, "every point is fixed by the identity");
    case IsometryClass::Elliptic:
        return {};
    case IsometryClass::Parabolic:
        return {IdealPoint::from_complex(Complex(0.0, a.imag()) / std::conj(b))};
    case IsometryClass::Hyperbolic: break;
    }
    // roots of conj(b) z^2 - 2i Im(a) z - b = 0
    const double t = std::abs(a.real());
    const double r = std::sqrt((t - 1.0) * (t + 1.0));
    const Complex z1 = Complex(r, a.imag()) / std::conj(b);
    const Complex z2 = Complex(-r, a.imag()) / std::conj(b);
    const IdealPoint p1 = IdealPoint::from_complex(z1);
    const IdealPoint p2 = IdealPoint::from_complex(z2);
    // attracting iff |f'| < 1 there
    if (m.boundary_derivative(p1) < m.boundary_derivative(p2)) return {p1, p2};
    return {p2, p1};
}

/// Attracting fixed point of a hyperbolic isometry, or nullopt otherwise.
inline std::optional<IdealPoint> attracting_fixed_point(const MobiusIsometry& m) {
    if (m.reverses_orientation() || !is_hyperbolic(m)) return std::nullopt;
    return fixed_points(m).front();
}

/// Axis of a hyperbolic isometry, directed from the repelling to the attracting point.
inline Geodesic axis(const MobiusIsometry& m) {
    if (m.reverses_orientation() || try_classify(m) != IsometryClass::Hyperbolic) {
        throw Error(ErrorCode::NotHyperbolic, "only hyperbolic isometries have an axis");
    }
    const auto fp = fixed_points(m);
    return Geodesic(fp[1], fp[0]);
}

// ---------------------------------------------------------------------------
// Geodesic constructions

/// An isometry carrying the real diameter (-1 -> +1) onto g (start -> end).
inline MobiusIsometry standard_frame(const Geodesic& g) {
    const double ts = g.start().theta();
    const double te = g.end().theta();
    // M(1) = e^{i te} needs arg(a + b) = te/2, M(-1) = e^{i ts} needs arg(a - b) = (ts - pi)/2
    const double s = std::cos(0.5 * (te - ts + std::numbers::pi));
    const double p = 1.0 / std::sqrt(std::abs(s));
    const double q = (s < 0.0 ? -1.0 : 1.0) * p;
    const Complex sum = std::polar(p, 0.5 * te);
    const Complex diff = std::polar(q, 0.5 * (ts - std::numbers::pi));
    return MobiusIsometry(0.5 * (sum + diff), 0.5 * (sum - diff));
}

/// Hyperbolic translation by `length` along g, moving points towards g.end().
inline MobiusIsometry translation_along(const Geodesic& g, double length) {
    if (!(length > 0.0)) throw Error(ErrorCode::NonpositiveLength, "translation length must be positive");
    const MobiusIsometry frame = standard_frame(g);
    return conjugate(frame, MobiusIsometry::real_translation(length));
}

/// The geodesic through x and y, directed from x towards y.
inline Geodesic geodesic_through(const DiskOrIdeal& x, const DiskOrIdeal& y) {
    const bool x_ideal = std::holds_alternative<IdealPoint>(x);
    const bool y_ideal = std::holds_alternative<IdealPoint>(y);
    if (x_ideal && y_ideal) return Geodesic(std::get<IdealPoint>(x), std::get<IdealPoint>(y));
    if (x_ideal) {
        // y is interior: send it to the origin, the geodesic becomes a diameter
        const MobiusIsometry to_origin = MobiusIsometry::moving_origin_to(std::get<DiskPoint>(y)).inverse();
        const IdealPoint back = apply(to_origin, std::get<IdealPoint>(x));
        const IdealPoint forward(back.theta() + std::numbers::pi);
        return Geodesic(std::get<IdealPoint>(x), apply(to_origin.inverse(), forward));
    }
    const MobiusIsometry to_origin = MobiusIsometry::moving_origin_to(std::get<DiskPoint>(x)).inverse();
    const Complex w = to_origin.act(position(y));
    if (std::abs(w) <= 1e-15) throw Error(ErrorCode::CoincidentPoints, "geodesic needs two distinct points");
    const IdealPoint forward = IdealPoint::from_complex(w);
    const IdealPoint backward(forward.theta() + std::numbers::pi);
    const MobiusIsometry from_origin = to_origin.inverse();
    return Geodesic(apply(from_origin, backward), y_ideal ? std::get<IdealPoint>(y) : apply(from_origin, forward));
}

enum class Side { Left, Right };

/// A geodesic together with one of the two components of its complement.
/// Left is taken with respect to the direction start -> end.
class HalfPlane {
public:
    HalfPlane(Geodesic boundary, Side side) : boundary_(boundary), side_(side) {}

    const Geodesic& boundary() const noexcept { return boundary_; }
    Side side() const noexcept { return side_; }

    /// Side of the boundary on which p lies; nullopt when p is on the geodesic.
    static std::optional<Side> side_of(const Geodesic& g, DiskPoint p, double tol = 1e-12) {
        const Complex w = standard_frame(g).inverse().act(p.z());
        if (std::abs(w.imag()) <= tol) return std::nullopt;
        return w.imag() > 0.0 ? Side::Left : Side::Right;
    }

    bool contains(DiskPoint p) const { return side_of(boundary_, p) == side_; }

private:
    Geodesic boundary_;
    Side side_;
};

// ---------------------------------------------------------------------------

/// Largest pairwise Euclidean distance, computed on the convex hull.
inline double euclidean_diameter(std::span<const DiskOrIdeal> points) {
    if (points.empty()) throw Error(ErrorCode::EmptySet, "diameter of an empty set");
    std::vector<Complex> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back(position(p));
    auto less = [](Complex u, Complex v) { return u.real() < v.real() || (u.real() == v.real() && u.imag() < v.imag()); };
    std::sort(pts.begin(), pts.end(), less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return 0.0;
    auto cross = [](Complex o, Complex u, Complex v) { return ((u - o) * std::conj(v - o)).imag() * -1.0; };
    // Andrew's monotone chain
    std::vector<Complex> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    double best = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i)
        for (std::size_t j = i + 1; j < hull.size(); ++j) best = std::max(best, std::abs(hull[i] - hull[j]));
    if (hull.size() < 2) best = std::abs(pts.front() - pts.back());
    return best;
}

}  // namespace hypsurf

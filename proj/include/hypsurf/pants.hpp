#pragma once

// Generalized pairs of pants from cuff lengths, and pants decompositions of
// finite-type surfaces with negative Euler characteristic.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypsurf/error.hpp"
#include "hypsurf/surface.hpp"

namespace hypsurf {

/// Cuff lengths of a generalized pair of pants; 0 is a cusp.
struct CuffLengths {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    double operator[](std::size_t i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
    double& operator[](std::size_t i) { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
    bool has_cusp() const noexcept { return x1 == 0.0 || x2 == 0.0 || x3 == 0.0; }

    friend bool operator==(const CuffLengths&, const CuffLengths&) = default;
};

/// Length of a seam; a seam running into a cusp is infinite.
class SeamLength {
public:
    explicit SeamLength(double v) : value_(v) {}
    static SeamLength infinite() { return SeamLength(); }

    bool is_infinite() const noexcept { return infinite_; }
    double value() const {
        if (infinite_) throw Error(ErrorCode::InvalidInput, "seam runs into a cusp and has no finite length");
        return value_;
    }

    friend bool operator==(const SeamLength&, const SeamLength&) = default;

private:
    SeamLength() : infinite_(true) {}
    double value_ = 0.0;
    bool infinite_ = false;
};

inline constexpr double kDefaultHorocycleLength = 2.0;

struct PantsGeometry {
    CuffLengths cuffs;
    std::array<SeamLength, 3> seams{SeamLength(0), SeamLength(0), SeamLength(0)};  // d12, d23, d31
    double area = 2.0 * std::numbers::pi;
    double horocycle_length = kDefaultHorocycleLength;  // cut-off length at each cusp

    /// Seam between cuffs i and j (0-based, i != j).
    const SeamLength& seam(std::size_t i, std::size_t j) const {
        if (i > 2 || j > 2 || i == j) throw Error(ErrorCode::IndexOutOfRange, "seam needs two distinct cuffs in 0..2");
        if (i > j) std::swap(i, j);
        if (i == 0 && j == 1) return seams[0];
        if (i == 1 && j == 2) return seams[1];
        return seams[2];
    }
};

/// Length of the common perpendicular between cuffs i and j of the right-angled
/// hexagon with alternate sides xi/2, xj/2, xk/2.
inline double seam_length(double xi, double xj, double xk) {
    const double hi = xi / 2.0, hj = xj / 2.0;
    const double c = (std::cosh(hi) * std::cosh(hj) + std::cosh(xk / 2.0)) / (std::sinh(hi) * std::sinh(hj));
    return std::acosh(c);
}

inline PantsGeometry build_pants(const CuffLengths& x, double horocycle_length = kDefaultHorocycleLength) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (!(x[i] >= 0.0) || !std::isfinite(x[i])) {
            throw Error(ErrorCode::NegativeLength, "cuff lengths must be finite and nonnegative");
        }
    }
    if (!(horocycle_length > 0.0)) throw Error(ErrorCode::NonpositiveLength, "horocycle length must be positive");
    PantsGeometry p;
    p.cuffs = x;
    p.horocycle_length = horocycle_length;
    constexpr std::array<std::array<std::size_t, 3>, 3> kIdx{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
    for (std::size_t s = 0; s < 3; ++s) {
        const auto [i, j, k] = kIdx[s];
        p.seams[s] = (x[i] == 0.0 || x[j] == 0.0) ? SeamLength::infinite()
                                                  : SeamLength(seam_length(x[i], x[j], x[k]));
    }
    return p;
}

/// Largest violation of the dual hexagon law
/// cosh(xk/2) = (cosh d_ki cosh d_kj + cosh d_ij) / (sinh d_ki sinh d_kj), relative to cosh(xk/2).
/// Only defined when every cuff is positive.
inline double hexagon_residual(const PantsGeometry& p) {
    if (p.cuffs.has_cusp()) throw Error(ErrorCode::InvalidInput, "hexagon residual needs three positive cuffs");
    double worst = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
        const double dki = p.seam(k, i).value(), dkj = p.seam(k, j).value(), dij = p.seam(i, j).value();
        const double lhs = std::cosh(p.cuffs[k] / 2.0);
        const double rhs = (std::cosh(dki) * std::cosh(dkj) + std::cosh(dij)) / (std::sinh(dki) * std::sinh(dkj));
        worst = std::max(worst, std::abs(lhs - rhs) / lhs);
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Decomposition plans

/// Cuff k of pants p; the slot id is 3p + k.
struct CuffSlot {
    std::size_t pants = 0;
    std::uint8_t cuff = 0;

    constexpr std::size_t id() const noexcept { return 3 * pants + cuff; }
    static constexpr CuffSlot from_id(std::size_t id) noexcept {
        return CuffSlot{id / 3, static_cast<std::uint8_t>(id % 3)};
    }
    friend constexpr bool operator==(CuffSlot, CuffSlot) = default;
};

enum class GluingKind { Internal, Handle };

inline std::string_view to_string(GluingKind k) noexcept { return k == GluingKind::Handle ? "handle" : "internal"; }

struct Gluing {
    CuffSlot from;
    CuffSlot to;
    double length = 1.0;
    double twist = 0.0;  // carried, never interpreted
    GluingKind kind = GluingKind::Internal;
};

/// A cuff closed up by the antipodal map (a crosscap).
struct CrosscapGluing {
    CuffSlot slot;
    double length = 1.0;
    bool orientation_reversing = true;
};

struct BoundarySlot {
    CuffSlot slot;
    std::size_t label = 0;  // index into the boundary length list
    double length = 0.0;
};

struct CuspSlot {
    CuffSlot slot;
};

struct PantsNode {
    std::size_t id = 0;
    CuffLengths cuffs;
};

struct PantsDecompositionPlan {
    Signature signature;
    std::vector<PantsNode> pants;
    std::vector<Gluing> gluings;
    std::vector<CrosscapGluing> crosscaps;
    std::vector<BoundarySlot> boundary;
    std::vector<CuspSlot> cusps;

    double& cuff_length(CuffSlot s) {
        if (s.pants >= pants.size() || s.cuff > 2) throw Error(ErrorCode::IndexOutOfRange, "cuff slot out of range");
        return pants[s.pants].cuffs[s.cuff];
    }
    double cuff_length(CuffSlot s) const {
        if (s.pants >= pants.size() || s.cuff > 2) throw Error(ErrorCode::IndexOutOfRange, "cuff slot out of range");
        return pants[s.pants].cuffs[s.cuff];
    }

    /// Changes the length of gluing i on both of its cuffs.
    void set_gluing_length(std::size_t i, double length) {
        if (i >= gluings.size()) throw Error(ErrorCode::IndexOutOfRange, "gluing index out of range");
        if (!(length > 0.0)) throw Error(ErrorCode::NonpositiveLength, "gluing length must be positive");
        gluings[i].length = length;
        cuff_length(gluings[i].from) = length;
        cuff_length(gluings[i].to) = length;
    }
};

struct PlanOptions {
    double internal_length = 1.0;
    double twist = 0.0;
};

/// Cuts each handle along one curve (two holes) and each crosscap along one
/// curve (one hole), leaving a sphere with H = 2g + c + b + a holes, then
/// chains H - 2 pants along H - 3 internal curves.
inline PantsDecompositionPlan plan_decomposition(const Signature& s, const std::vector<double>& boundary_lengths,
                                                 const PlanOptions& options = {}) {
    const std::int64_t chi = s.euler_characteristic();
    if (chi >= 0) {
        throw Error(ErrorCode::NotHyperbolizable,
                    "chi = " + std::to_string(chi) + " admits no pants decomposition");
    }
    if (boundary_lengths.size() != s.b) {
        throw Error(ErrorCode::LengthCountMismatch, "expected " + std::to_string(s.b) + " boundary lengths, got " +
                                                        std::to_string(boundary_lengths.size()));
    }
    for (double x : boundary_lengths) {
        if (!(x > 0.0) || !std::isfinite(x)) throw Error(ErrorCode::NonpositiveLength, "boundary lengths must be positive");
    }
    if (!(options.internal_length > 0.0)) throw Error(ErrorCode::NonpositiveLength, "internal length must be positive");

    const std::size_t holes = 2 * std::size_t{s.g} + s.c + s.b + s.a;
    const std::size_t count = holes - 2;  // = -chi
    PantsDecompositionPlan plan;
    plan.signature = s;
    plan.pants.resize(count);
    for (std::size_t p = 0; p < count; ++p) plan.pants[p].id = p;

    // hole h sits on this slot; internal curve i joins pants i (cuff 2) to pants i+1 (cuff 0)
    std::vector<CuffSlot> hole_slot(holes);
    if (count == 1) {
        for (std::size_t h = 0; h < 3; ++h) hole_slot[h] = CuffSlot{0, static_cast<std::uint8_t>(h)};
    } else {
        hole_slot[0] = CuffSlot{0, 0};
        hole_slot[1] = CuffSlot{0, 1};
        for (std::size_t p = 1; p + 1 < count; ++p) hole_slot[p + 1] = CuffSlot{p, 1};
        hole_slot[holes - 2] = CuffSlot{count - 1, 1};
        hole_slot[holes - 1] = CuffSlot{count - 1, 2};
        for (std::size_t i = 0; i + 1 < count; ++i) {
            plan.gluings.push_back(Gluing{CuffSlot{i, 2}, CuffSlot{i + 1, 0}, options.internal_length, options.twist,
                                          GluingKind::Internal});
        }
    }

    std::size_t h = 0;
    for (std::uint32_t k = 0; k < s.g; ++k, h += 2) {
        plan.gluings.push_back(Gluing{hole_slot[h], hole_slot[h + 1], options.internal_length, options.twist,
                                      GluingKind::Handle});
    }
    for (std::uint32_t k = 0; k < s.c; ++k, ++h) {
        plan.crosscaps.push_back(CrosscapGluing{hole_slot[h], options.internal_length, true});
    }
    for (std::uint32_t k = 0; k < s.b; ++k, ++h) {
        plan.boundary.push_back(BoundarySlot{hole_slot[h], k, boundary_lengths[k]});
    }
    for (std::uint32_t k = 0; k < s.a; ++k, ++h) plan.cusps.push_back(CuspSlot{hole_slot[h]});

    std::sort(plan.gluings.begin(), plan.gluings.end(),
              [](const Gluing& x, const Gluing& y) { return x.from.id() < y.from.id(); });

    for (const auto& g : plan.gluings) plan.cuff_length(g.from) = plan.cuff_length(g.to) = g.length;
    for (const auto& c : plan.crosscaps) plan.cuff_length(c.slot) = c.length;
    for (const auto& b : plan.boundary) plan.cuff_length(b.slot) = b.length;
    for (const auto& c : plan.cusps) plan.cuff_length(c.slot) = 0.0;
    return plan;
}

struct RealizedMetric {
    double total_area = 0.0;
    std::vector<double> cuff_lengths;  // indexed by slot id
    std::vector<PantsGeometry> pants;
    bool valid = false;
};

/// Checks the plan's bookkeeping and builds every pants.
inline RealizedMetric realize(const PantsDecompositionPlan& plan) {
    if (plan.pants.empty()) throw Error(ErrorCode::InvalidPlan, "plan has no pants");
    const std::size_t slots = 3 * plan.pants.size();
    std::vector<int> uses(slots, 0);
    auto use = [&](CuffSlot s) {
        if (s.pants >= plan.pants.size() || s.cuff > 2) {
            throw Error(ErrorCode::InvalidPlan, "cuff slot " + std::to_string(s.id()) + " is out of range");
        }
        ++uses[s.id()];
    };
    for (std::size_t i = 0; i < plan.pants.size(); ++i) {
        if (plan.pants[i].id != i) throw Error(ErrorCode::InvalidPlan, "pants ids must be 0..n-1 in order");
    }
    for (const auto& g : plan.gluings) {
        use(g.from);
        use(g.to);
    }
    for (const auto& c : plan.crosscaps) use(c.slot);
    for (const auto& b : plan.boundary) use(b.slot);
    for (const auto& c : plan.cusps) use(c.slot);
    for (std::size_t id = 0; id < slots; ++id) {
        if (uses[id] != 1) {
            throw Error(ErrorCode::InvalidPlan, "cuff slot " + std::to_string(id) + " is used " +
                                                    std::to_string(uses[id]) + " times");
        }
    }

    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < plan.gluings.size(); ++i) {
        const auto& g = plan.gluings[i];
        if (plan.cuff_length(g.from) != g.length || plan.cuff_length(g.to) != g.length || !(g.length > 0.0)) {
            bad.push_back(i);
        }
    }
    if (!bad.empty()) {
        std::string list;
        for (std::size_t i : bad) list += (list.empty() ? "" : ",") + std::to_string(i);
        throw LengthMismatchError(bad, "glued cuffs disagree at gluings [" + list + "]");
    }
    for (const auto& c : plan.crosscaps) {
        if (!(c.length > 0.0) || plan.cuff_length(c.slot) != c.length) {
            throw Error(ErrorCode::InvalidPlan, "crosscap slot " + std::to_string(c.slot.id()) + " has a bad length");
        }
    }
    for (const auto& b : plan.boundary) {
        if (!(b.length > 0.0) || plan.cuff_length(b.slot) != b.length) {
            throw Error(ErrorCode::InvalidPlan, "boundary slot " + std::to_string(b.slot.id()) + " has a bad length");
        }
    }
    for (const auto& c : plan.cusps) {
        if (plan.cuff_length(c.slot) != 0.0) {
            throw Error(ErrorCode::InvalidPlan, "cusp slot " + std::to_string(c.slot.id()) + " has nonzero length");
        }
    }

    RealizedMetric out;
    out.cuff_lengths.reserve(slots);
    for (const auto& node : plan.pants) {
        out.pants.push_back(build_pants(node.cuffs));
        for (std::size_t k = 0; k < 3; ++k) out.cuff_lengths.push_back(node.cuffs[k]);
    }
    out.total_area = 2.0 * std::numbers::pi * static_cast<double>(plan.pants.size());
    out.valid = true;
    return out;
}

}  // namespace hypsurf

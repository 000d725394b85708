#pragma once

// Topological bookkeeping for surfaces: Euler characteristic, Dyck
// canonical form, doubling along the boundary, and the standard /
// nonstandard classifier with its catalog of thirteen exceptions.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypsurf/error.hpp"

namespace hypsurf {

/// g handles, c crosscaps, b compact boundary circles, a annular ends.
struct Signature {
    std::uint32_t g = 0;
    std::uint32_t c = 0;
    std::uint32_t b = 0;
    std::uint32_t a = 0;

    bool orientable() const noexcept { return c == 0; }
    std::int64_t euler_characteristic() const noexcept {
        return 2 - 2 * std::int64_t{g} - std::int64_t{c} - std::int64_t{b} - std::int64_t{a};
    }
    friend constexpr auto operator<=>(const Signature&, const Signature&) = default;
};

/// A Signature with no handle/crosscap mixing (g > 0 implies c = 0).
class CanonicalSignature {
public:
    const Signature& signature() const noexcept { return sig_; }
    std::int64_t euler_characteristic() const noexcept { return sig_.euler_characteristic(); }
    friend constexpr bool operator==(const CanonicalSignature&, const CanonicalSignature&) = default;

private:
    explicit CanonicalSignature(Signature s) : sig_(s) {}
    friend CanonicalSignature canonicalize(Signature s);

    Signature sig_;
};

/// Trades every handle for two crosscaps once a crosscap is present
/// (one handle plus one crosscap is three crosscaps).
inline CanonicalSignature canonicalize(Signature s) {
    if (s.c > 0) {
        s.c += 2 * s.g;
        s.g = 0;
    }
    return CanonicalSignature(s);
}

struct FiniteType {
    Signature signature;
    friend constexpr bool operator==(const FiniteType&, const FiniteType&) = default;
};
/// R x [0, inf).
struct HalfPlaneSurface {
    friend constexpr bool operator==(const HalfPlaneSurface&, const HalfPlaneSurface&) = default;
};
/// [0,1] x R.
struct DoublyInfiniteStrip {
    friend constexpr bool operator==(const DoublyInfiniteStrip&, const DoublyInfiniteStrip&) = default;
};
/// Infinitely many boundary components and/or infinite first Betti number.
struct InfiniteType {
    bool infinite_boundary = false;
    bool infinite_chi = false;
    friend constexpr bool operator==(const InfiniteType&, const InfiniteType&) = default;
};

class SurfaceDescription {
public:
    using Variant = std::variant<FiniteType, HalfPlaneSurface, DoublyInfiniteStrip, InfiniteType>;

    SurfaceDescription(Variant v) : v_(v) {  // NOLINT(google-explicit-constructor)
        if (auto* inf = std::get_if<InfiniteType>(&v_); inf && !inf->infinite_boundary && !inf->infinite_chi) {
            throw Error(ErrorCode::InvalidInput, "an infinite-type surface needs at least one infinite flag");
        }
    }

    static SurfaceDescription finite(std::uint32_t g, std::uint32_t c, std::uint32_t b, std::uint32_t a) {
        return SurfaceDescription(FiniteType{Signature{g, c, b, a}});
    }
    static SurfaceDescription finite(Signature s) { return SurfaceDescription(FiniteType{s}); }
    static SurfaceDescription half_plane() { return SurfaceDescription(HalfPlaneSurface{}); }
    static SurfaceDescription strip() { return SurfaceDescription(DoublyInfiniteStrip{}); }
    static SurfaceDescription infinite(bool infinite_boundary, bool infinite_chi) {
        return SurfaceDescription(InfiniteType{infinite_boundary, infinite_chi});
    }

    const Variant& variant() const noexcept { return v_; }
    bool is_finite_type() const noexcept { return std::holds_alternative<FiniteType>(v_); }
    const Signature* signature() const noexcept {
        const auto* f = std::get_if<FiniteType>(&v_);
        return f ? &f->signature : nullptr;
    }

    /// Number of noncompact boundary lines.
    std::uint32_t noncompact_boundary() const noexcept {
        if (std::holds_alternative<HalfPlaneSurface>(v_)) return 1;
        if (std::holds_alternative<DoublyInfiniteStrip>(v_)) return 2;
        return 0;
    }

    friend bool operator==(const SurfaceDescription&, const SurfaceDescription&) = default;

private:
    Variant v_;
};

/// An integer or -infinity.
class EulerCharacteristic {
public:
    constexpr explicit EulerCharacteristic(std::int64_t v) : value_(v) {}
    static constexpr EulerCharacteristic minus_infinity() { return EulerCharacteristic(); }

    constexpr bool is_finite() const noexcept { return value_.has_value(); }
    std::int64_t value() const {
        if (!value_) throw Error(ErrorCode::InvalidInput, "Euler characteristic is -infinity");
        return *value_;
    }
    std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

    friend constexpr bool operator==(const EulerCharacteristic&, const EulerCharacteristic&) = default;

private:
    constexpr EulerCharacteristic() = default;
    std::optional<std::int64_t> value_;
};

inline EulerCharacteristic euler_characteristic(const SurfaceDescription& d) {
    struct Visitor {
        EulerCharacteristic operator()(const FiniteType& f) const {
            return EulerCharacteristic(f.signature.euler_characteristic());
        }
        // contractible: b1 = 0 and chi = 1 - b1
        EulerCharacteristic operator()(const HalfPlaneSurface&) const { return EulerCharacteristic(1); }
        EulerCharacteristic operator()(const DoublyInfiniteStrip&) const { return EulerCharacteristic(1); }
        EulerCharacteristic operator()(const InfiniteType& i) const {
            if (i.infinite_chi) return EulerCharacteristic::minus_infinity();
            throw Error(ErrorCode::UnderdeterminedChi,
                        "infinitely many boundary components alone do not determine chi");
        }
    };
    return std::visit(Visitor{}, d.variant());
}

// ---------------------------------------------------------------------------
// Doubling

/// The double of a nonorientable surface is not built, but its chi is still known.
class NonorientableDoubleError : public Error {
public:
    explicit NonorientableDoubleError(std::int64_t chi_double)
        : Error(ErrorCode::NonorientableDoubleUnsupported,
                "nonorientable doubles are not modelled; chi(2L) = " + std::to_string(chi_double)),
          chi_double_(chi_double) {}

    std::int64_t chi_double() const noexcept { return chi_double_; }

private:
    std::int64_t chi_double_;
};

struct Doubling {
    SurfaceDescription surface;       // 2L
    std::optional<EulerCharacteristic> chi_source;  // chi(L), empty when undetermined
    EulerCharacteristic chi_double;   // chi(2L) read off the doubled description
    std::uint32_t noncompact_boundary = 0;  // r
    /// 2 chi(L) - r, the form consistent with the Betti-number definition of chi.
    std::optional<std::int64_t> chi_minus_r;
    /// 2 chi(L) + r, the sign as printed in the classical Mayer-Vietoris statement; kept for reference.
    std::optional<std::int64_t> chi_plus_r;
};

/// The double 2L of a surface with nonempty boundary. Supported: orientable
/// finite type with b > 0, the half plane, the strip, and infinite type with
/// infinitely many boundary components.
inline Doubling double_surface(const SurfaceDescription& d) {
    const std::uint32_t r = d.noncompact_boundary();
    if (const Signature* s = d.signature()) {
        if (s->b == 0) throw Error(ErrorCode::NoBoundary, "the surface has no boundary to double along");
        const std::int64_t chi = s->euler_characteristic();
        if (!s->orientable()) throw NonorientableDoubleError(2 * chi);
        const auto doubled = SurfaceDescription::finite(2 * s->g + s->b - 1, 0, 0, 2 * s->a);
        Doubling out{doubled, EulerCharacteristic(chi), euler_characteristic(doubled), 0, 2 * chi, 2 * chi};
        if (out.chi_double.value() != *out.chi_minus_r) {
            throw Error(ErrorCode::NumericFailure, "doubling bookkeeping disagrees with chi(2L) = 2 chi(L) - r");
        }
        return out;
    }
    if (std::holds_alternative<HalfPlaneSurface>(d.variant()) ||
        std::holds_alternative<DoublyInfiniteStrip>(d.variant())) {
        // half plane -> open disk, strip -> open annulus
        const auto doubled = SurfaceDescription::finite(0, 0, 0, r);
        const std::int64_t chi = 1;
        Doubling out{doubled, EulerCharacteristic(chi), euler_characteristic(doubled), r,
                     2 * chi - static_cast<std::int64_t>(r), 2 * chi + static_cast<std::int64_t>(r)};
        if (out.chi_double.value() != *out.chi_minus_r) {
            throw Error(ErrorCode::NumericFailure, "doubling bookkeeping disagrees with chi(2L) = 2 chi(L) - r");
        }
        return out;
    }
    const auto& inf = std::get<InfiniteType>(d.variant());
    if (!inf.infinite_boundary) {
        throw Error(ErrorCode::NoBoundary, "boundary of this infinite-type description is unspecified");
    }
    // every compact boundary circle becomes a handle of 2L: infinite genus
    const auto doubled = SurfaceDescription::infinite(false, true);
    return Doubling{doubled,
                    inf.infinite_chi ? std::optional(EulerCharacteristic::minus_infinity()) : std::nullopt,
                    EulerCharacteristic::minus_infinity(),
                    0,
                    std::nullopt,
                    std::nullopt};
}

// ---------------------------------------------------------------------------
// Classification

enum class VerdictReason { NegativeChi, InThirteenList, InfiniteTypeRule };

inline std::string_view to_string(VerdictReason r) noexcept {
    switch (r) {
    case VerdictReason::NegativeChi: return "NegativeChi";
    case VerdictReason::InThirteenList: return "InThirteenList";
    case VerdictReason::InfiniteTypeRule: return "InfiniteTypeRule";
    }
    return "Unknown";
}

struct StandardnessVerdict {
    bool standard = false;
    VerdictReason reason = VerdictReason::NegativeChi;
    std::optional<EulerCharacteristic> chi;  // empty when chi is not determined by the description
    std::optional<std::string> name;         // set iff nonstandard
};

struct NamedSurface {
    std::string_view name;
    SurfaceDescription description;
};

/// The thirteen surfaces admitting no standard hyperbolic metric.
inline std::vector<NamedSurface> thirteen_list() {
    using S = SurfaceDescription;
    return {
        {"open disk", S::finite(0, 0, 0, 1)},
        {"closed disk", S::finite(0, 0, 1, 0)},
        {"open annulus", S::finite(0, 0, 0, 2)},
        {"half open annulus", S::finite(0, 0, 1, 1)},
        {"closed annulus", S::finite(0, 0, 2, 0)},
        {"open Möbius band", S::finite(0, 1, 0, 1)},
        {"closed Möbius band", S::finite(0, 1, 1, 0)},
        {"half plane", S::half_plane()},
        {"doubly infinite strip", S::strip()},
        {"sphere", S::finite(0, 0, 0, 0)},
        {"projective plane", S::finite(0, 1, 0, 0)},
        {"torus", S::finite(1, 0, 0, 0)},
        {"Klein bottle", S::finite(0, 2, 0, 0)},
    };
}

namespace detail {

/// Name of a finite-type surface with chi >= 0, matched in canonical form
/// against the closed-or-compact-boundary cases (2g + c + b + a <= 2).
inline std::string_view nonnegative_chi_name(Signature s) {
    const Signature c = canonicalize(s).signature();
    static constexpr std::array<std::pair<Signature, std::string_view>, 11> kTable{{
        {{0, 0, 0, 0}, "sphere"},
        {{1, 0, 0, 0}, "torus"},
        {{0, 1, 0, 0}, "projective plane"},
        {{0, 2, 0, 0}, "Klein bottle"},
        {{0, 0, 1, 0}, "closed disk"},
        {{0, 0, 2, 0}, "closed annulus"},
        {{0, 0, 0, 1}, "open disk"},
        {{0, 0, 0, 2}, "open annulus"},
        {{0, 1, 1, 0}, "closed Möbius band"},
        {{0, 1, 0, 1}, "open Möbius band"},
        {{0, 0, 1, 1}, "half open annulus"},
    }};
    for (const auto& [sig, name] : kTable)
        if (sig == c) return name;
    throw Error(ErrorCode::NumericFailure, "nonnegative chi signature missing from the catalog");
}

}  // namespace detail

inline StandardnessVerdict is_standard(const SurfaceDescription& d) {
    if (const auto* inf = std::get_if<InfiniteType>(&d.variant())) {
        StandardnessVerdict v{true, VerdictReason::InfiniteTypeRule, std::nullopt, std::nullopt};
        if (inf->infinite_chi) v.chi = EulerCharacteristic::minus_infinity();
        return v;
    }
    if (std::holds_alternative<HalfPlaneSurface>(d.variant())) {
        return {false, VerdictReason::InThirteenList, EulerCharacteristic(1), "half plane"};
    }
    if (std::holds_alternative<DoublyInfiniteStrip>(d.variant())) {
        return {false, VerdictReason::InThirteenList, EulerCharacteristic(1), "doubly infinite strip"};
    }
    const Signature& s = *d.signature();
    const std::int64_t chi = s.euler_characteristic();
    if (chi < 0) return {true, VerdictReason::NegativeChi, EulerCharacteristic(chi), std::nullopt};
    return {false, VerdictReason::InThirteenList, EulerCharacteristic(chi),
            std::string(detail::nonnegative_chi_name(s))};
}

}  // namespace hypsurf

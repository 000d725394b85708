#pragma once

// Finitely generated groups of disk isometries: word evaluation, orbits and
// finite samples of the limit set together with gap statistics.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypsurf/error.hpp"
#include "hypsurf/poincare.hpp"
#include "hypsurf/word.hpp"

namespace hypsurf {

struct GroupRep {
    std::vector<MobiusIsometry> generators;
    std::vector<GroupWord> relators;
    std::string label;

    std::size_t rank() const noexcept { return generators.size(); }
};

inline MobiusIsometry letter_value(const GroupRep& rep, Letter l) {
    if (l.generator >= rep.generators.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(l.generator) + " not in a group of rank " +
                                                    std::to_string(rep.generators.size()));
    }
    const MobiusIsometry& g = rep.generators[l.generator];
    return l.inverse ? g.inverse() : g;
}

/// The isometry represented by w; evaluate(uv) = evaluate(u) * evaluate(v).
inline MobiusIsometry evaluate(const GroupRep& rep, const GroupWord& w) {
    MobiusIsometry m;
    for (Letter l : w.letters()) m = m * letter_value(rep, l);
    return m;
}

/// Largest entrywise deviation of a relator from +/- identity.
inline double relator_residual(const GroupRep& rep, const GroupWord& relator) {
    return evaluate(rep, relator).entry_distance(MobiusIsometry::identity());
}

/// Checks the GroupRep invariants: at least one generator, relators trivial within tol.
inline void validate(const GroupRep& rep, double tol = 1e-6) {
    if (rep.generators.empty()) throw Error(ErrorCode::InvalidInput, "a group needs at least one generator");
    if (rep.generators.size() > kMaxGenerators) throw Error(ErrorCode::InvalidInput, "at most 26 generators");
    for (const auto& r : rep.relators) {
        const double res = relator_residual(rep, r);
        if (!(res <= tol)) {
            throw Error(ErrorCode::InvalidInput,
                        "relator " + r.to_string() + " has residual " + std::to_string(res));
        }
    }
}

/// The representation g rep g^-1.
inline GroupRep conjugated(const GroupRep& rep, const MobiusIsometry& g) {
    GroupRep out = rep;
    for (auto& m : out.generators) m = conjugate(g, m);
    return out;
}

// ---------------------------------------------------------------------------
// Word enumeration

inline constexpr std::size_t kDefaultWordCap = 5'000'000;

/// Number of freely reduced words of length exactly i in a free group of the given rank.
inline std::uint64_t reduced_words_of_length(std::size_t rank, int i) {
    if (i == 0) return 1;
    std::uint64_t count = 2 * rank;
    for (int k = 1; k < i; ++k) {
        if (count > std::numeric_limits<std::uint64_t>::max() / (2 * rank)) return std::numeric_limits<std::uint64_t>::max();
        count *= (2 * rank - 1);
    }
    return count;
}

/// Number of freely reduced words of length at most n (identity included), saturating.
inline std::uint64_t reduced_word_count(std::size_t rank, int n) {
    std::uint64_t total = 0;
    for (int i = 0; i <= n; ++i) {
        const std::uint64_t c = reduced_words_of_length(rank, i);
        if (c > std::numeric_limits<std::uint64_t>::max() - total) return std::numeric_limits<std::uint64_t>::max();
        total += c;
    }
    return total;
}

namespace detail {

inline void check_word_budget(std::size_t rank, int n, std::size_t cap) {
    if (n < 0) throw Error(ErrorCode::InvalidInput, "word length must be nonnegative");
    if (rank == 0) throw Error(ErrorCode::InvalidInput, "a group needs at least one generator");
    const std::uint64_t count = reduced_word_count(rank, n);
    if (count > cap) {
        throw Error(ErrorCode::BudgetExceeded, std::to_string(count) + " words of length <= " + std::to_string(n) +
                                                   " exceed the cap of " + std::to_string(cap));
    }
}

/// Depth-first walk over all nonempty reduced words of length <= n, passing
/// each word and its value. Visiting order is lexicographic.
template <class Visitor>
void for_each_word(const GroupRep& rep, int n, Visitor&& visit) {
    const std::size_t letters = 2 * rep.rank();
    std::vector<MobiusIsometry> values(letters);
    for (unsigned i = 0; i < letters; ++i) values[i] = letter_value(rep, Letter::from_index(i));

    std::vector<Letter> word;
    std::vector<MobiusIsometry> prefix{MobiusIsometry::identity()};
    std::vector<unsigned> next{0};
    word.reserve(static_cast<std::size_t>(n));
    while (!next.empty()) {
        unsigned& cursor = next.back();
        if (cursor >= letters || static_cast<int>(word.size()) >= n) {
            next.pop_back();
            prefix.pop_back();
            if (!word.empty()) word.pop_back();
            continue;
        }
        const Letter l = Letter::from_index(cursor++);
        if (!word.empty() && word.back().cancels(l)) continue;
        word.push_back(l);
        prefix.push_back(prefix.back() * values[l.index()]);
        visit(std::span<const Letter>(word), prefix.back());
        next.push_back(0);
    }
}

}  // namespace detail

/// All freely reduced words of length <= n in shortlex order, identity first.
inline std::vector<GroupWord> enumerate_words(std::size_t rank, int n, std::size_t cap = kDefaultWordCap) {
    detail::check_word_budget(rank, n, cap);
    std::vector<GroupWord> out;
    out.reserve(static_cast<std::size_t>(reduced_word_count(rank, n)));
    out.emplace_back();
    std::size_t level_begin = 0;
    for (int len = 1; len <= n; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (unsigned idx = 0; idx < 2 * rank; ++idx) {
                const Letter l = Letter::from_index(idx);
                const auto prev = out[i].letters();
                if (!prev.empty() && prev.back().cancels(l)) continue;
                std::vector<Letter> letters(prev.begin(), prev.end());
                letters.push_back(l);
                out.emplace_back(letters);
            }
        }
        level_begin = level_end;
    }
    return out;
}

inline std::vector<GroupWord> enumerate_words(const GroupRep& rep, int n, std::size_t cap = kDefaultWordCap) {
    return enumerate_words(rep.rank(), n, cap);
}

// ---------------------------------------------------------------------------
// Orbits and limit samples

struct OrbitPoint {
    GroupWord word;
    DiskPoint point;
};

struct OrbitSample {
    DiskPoint basepoint;
    int max_word_length = 0;
    std::vector<OrbitPoint> points;  // shortlex order of the words
};

inline OrbitSample orbit(const GroupRep& rep, DiskPoint base, int n, std::size_t cap = kDefaultWordCap) {
    detail::check_word_budget(rep.rank(), n, cap);
    OrbitSample s{base, n, {}};
    s.points.push_back({GroupWord(), base});
    detail::for_each_word(rep, n, [&](std::span<const Letter> w, const MobiusIsometry& m) {
        s.points.push_back({GroupWord(w), apply(m, base)});
    });
    std::sort(s.points.begin(), s.points.end(), [](const OrbitPoint& x, const OrbitPoint& y) { return x.word < y.word; });
    return s;
}

enum class SampleMode { OrbitProjection, AxisEndpoints };

struct SampledAngle {
    IdealPoint angle;
    GroupWord word;
};

struct EndpointSample {
    SampleMode mode = SampleMode::AxisEndpoints;
    std::vector<SampledAngle> angles;  // strictly increasing in [0, 2pi)

    std::size_t size() const noexcept { return angles.size(); }
};

struct LimitSampleOptions {
    double delta = 0.2;                      // OrbitProjection keeps points with |z| > 1 - delta
    double tol_angle = Tolerances::angle;    // deduplication tolerance
    std::size_t word_cap = kDefaultWordCap;
};

namespace detail {

/// Angles with provenance words stored in one flat letter buffer.
class AngleCollector {
public:
    void add(double theta, std::span<const Letter> word) {
        entries_.push_back({reduce_angle(theta), static_cast<std::uint32_t>(letters_.size()),
                            static_cast<std::uint32_t>(word.size())});
        letters_.insert(letters_.end(), word.begin(), word.end());
    }

    bool empty() const noexcept { return entries_.empty(); }

    /// Sorts, merges clusters closer than tol (wrapping around 2pi) and keeps
    /// the shortlex-least word of each cluster.
    std::vector<SampledAngle> finish(double tol) {
        std::sort(entries_.begin(), entries_.end(), [&](const Entry& x, const Entry& y) {
            if (x.theta != y.theta) return x.theta < y.theta;
            return word_less(x, y);
        });
        std::vector<std::pair<std::size_t, std::size_t>> clusters;  // [begin, end)
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (!clusters.empty() && entries_[i].theta - entries_[i - 1].theta <= tol) clusters.back().second = i + 1;
            else clusters.emplace_back(i, i + 1);
        }
        std::vector<std::size_t> reps;
        reps.reserve(clusters.size());
        for (auto [b, e] : clusters) reps.push_back(best_in(b, e));
        if (clusters.size() > 1 &&
            entries_[clusters.front().first].theta + kTwoPi - entries_[clusters.back().second - 1].theta <= tol) {
            const std::size_t head = reps.front();
            const std::size_t tail = reps.back();
            if (word_less(entries_[tail], entries_[head])) reps.erase(reps.begin());
            else reps.pop_back();
        }
        std::vector<SampledAngle> out;
        out.reserve(reps.size());
        for (std::size_t r : reps) {
            const Entry& e = entries_[r];
            out.push_back({IdealPoint(e.theta), GroupWord(std::span<const Letter>(letters_).subspan(e.offset, e.length))});
        }
        return out;
    }

private:
    struct Entry {
        double theta;
        std::uint32_t offset;
        std::uint32_t length;
    };

    bool word_less(const Entry& x, const Entry& y) const {
        if (x.length != y.length) return x.length < y.length;
        return std::lexicographical_compare(letters_.begin() + x.offset, letters_.begin() + x.offset + x.length,
                                            letters_.begin() + y.offset, letters_.begin() + y.offset + y.length);
    }

    std::size_t best_in(std::size_t b, std::size_t e) const {
        std::size_t best = b;
        for (std::size_t i = b + 1; i < e; ++i)
            if (word_less(entries_[i], entries_[best])) best = i;
        return best;
    }

    std::vector<Entry> entries_;
    std::vector<Letter> letters_;
};

}  // namespace detail

/// Finite sample of the limit set.
///  - OrbitProjection: orbit points of `base` under words of length <= n with
///    |z| > 1 - delta, projected radially onto the circle.
///  - AxisEndpoints: both fixed points of every hyperbolic evaluate(w), w
///    cyclically reduced of length 1..n (points of the fixed-point set X).
inline EndpointSample limit_sample(const GroupRep& rep, DiskPoint base, int n, SampleMode mode,
                                   const LimitSampleOptions& options = {}) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "limit samples need n >= 1");
    if (!(options.delta > 0.0 && options.delta < 1.0)) throw Error(ErrorCode::InvalidInput, "delta must lie in (0, 1)");
    detail::check_word_budget(rep.rank(), n, options.word_cap);

    detail::AngleCollector collector;
    if (mode == SampleMode::OrbitProjection) {
        const double threshold = 1.0 - options.delta;
        if (std::abs(base.z()) > threshold) collector.add(std::arg(base.z()), {});
        detail::for_each_word(rep, n, [&](std::span<const Letter> w, const MobiusIsometry& m) {
            const DiskPoint p = apply(m, base);
            if (std::abs(p.z()) > threshold) collector.add(std::arg(p.z()), w);
        });
    } else {
        detail::for_each_word(rep, n, [&](std::span<const Letter> w, const MobiusIsometry& m) {
            if (w.size() >= 2 && w.front().cancels(w.back())) return;
            if (!is_hyperbolic(m)) return;
            for (IdealPoint p : fixed_points(m)) collector.add(p.theta(), w);
        });
    }
    if (collector.empty()) {
        throw Error(ErrorCode::EmptySample, "no word qualified; increase n or delta");
    }
    return EndpointSample{mode, collector.finish(options.tol_angle)};
}

/// Circular gaps between consecutive angles (any order accepted), in sorted-angle order.
inline std::vector<double> circular_gaps(std::vector<double> angles) {
    if (angles.empty()) throw Error(ErrorCode::EmptySample, "gaps of an empty sample");
    for (double& a : angles) a = reduce_angle(a);
    std::sort(angles.begin(), angles.end());
    std::vector<double> gaps;
    gaps.reserve(angles.size());
    for (std::size_t i = 0; i + 1 < angles.size(); ++i) gaps.push_back(angles[i + 1] - angles[i]);
    gaps.push_back(angles.front() + kTwoPi - angles.back());
    return gaps;
}

inline std::vector<double> sample_angles(const EndpointSample& s) {
    std::vector<double> out;
    out.reserve(s.size());
    for (const auto& a : s.angles) out.push_back(a.angle.theta());
    return out;
}

/// Largest circular gap; 2pi for a single point.
inline double max_angular_gap(const EndpointSample& s) {
    const auto gaps = circular_gaps(sample_angles(s));
    return *std::max_element(gaps.begin(), gaps.end());
}

/// All circular gaps in descending order.
inline std::vector<double> gap_profile(const EndpointSample& s) {
    auto gaps = circular_gaps(sample_angles(s));
    std::sort(gaps.begin(), gaps.end(), std::greater<>());
    return gaps;
}

// ---------------------------------------------------------------------------
// Concrete groups

/// Genus-2 surface group: the four hyperbolic translations pairing opposite
/// sides of the regular octagon with interior angles pi/4 (side midpoints at
/// angles k pi/4). Relator: A b C d a B c D.
inline GroupRep octagon_group() {
    // centre-to-side distance r with cosh r = cot(pi/8) = 1 + sqrt 2; generators translate by 2r
    const double ch = 1.0 + std::numbers::sqrt2;
    const double sh = std::sqrt(ch * ch - 1.0);
    GroupRep rep;
    rep.label = "octagon";
    for (int k = 0; k < 4; ++k) {
        rep.generators.emplace_back(Complex(ch, 0.0), std::polar(sh, k * std::numbers::pi / 4.0));
    }
    rep.relators.push_back(GroupWord::parse("AbCdaBcD"));
    return rep;
}

/// Words X, Y, Z, W in the octagon generators with [X,Y][Z,W] = 1, forming a
/// free basis (obtained from the side-pairing relator by a Whitehead automorphism).
inline std::array<GroupWord, 4> octagon_commutator_basis() {
    return {GroupWord::parse("A"), GroupWord::parse("ad"), GroupWord::parse("adB"), GroupWord::parse("cDA")};
}

/// Isometric circle |conj(b) z + conj(a)| = 1 of a non-rotation.
struct IsometricCircle {
    Complex centre;
    double radius;
};

inline IsometricCircle isometric_circle(const MobiusIsometry& m) {
    if (std::abs(m.b()) == 0.0) throw Error(ErrorCode::InvalidInput, "rotations about 0 have no isometric circle");
    return {-std::conj(m.a()) / std::conj(m.b()), 1.0 / std::abs(m.b())};
}

/// Classical Schottky group on two translations of length `separation`, one
/// along the real and one along the imaginary diameter. The four isometric
/// circles must be pairwise disjoint (ping-pong).
inline GroupRep schottky_rank2(double separation) {
    if (!(separation > 0.0)) throw Error(ErrorCode::NonpositiveLength, "separation must be positive");
    const double ch = std::cosh(0.5 * separation);
    const double sh = std::sinh(0.5 * separation);
    GroupRep rep;
    rep.label = "schottky";
    rep.generators.emplace_back(Complex(ch, 0.0), Complex(sh, 0.0));
    rep.generators.emplace_back(Complex(ch, 0.0), Complex(0.0, sh));
    std::vector<IsometricCircle> circles;
    for (const auto& g : rep.generators) {
        circles.push_back(isometric_circle(g));
        circles.push_back(isometric_circle(g.inverse()));
    }
    for (std::size_t i = 0; i < circles.size(); ++i) {
        for (std::size_t j = i + 1; j < circles.size(); ++j) {
            if (std::abs(circles[i].centre - circles[j].centre) <= circles[i].radius + circles[j].radius) {
                throw Error(ErrorCode::CirclesOverlap,
                            "isometric circles intersect; separation must exceed 2 arccosh(sqrt 2)");
            }
        }
    }
    return rep;
}

/// Once-punctured torus group: the commutator subgroup generators
/// [[1,1],[1,2]] and [[1,-1],[-1,2]] of SL(2,Z), moved to the disk. [A,B] is parabolic.
inline GroupRep cusped_torus_group() {
    GroupRep rep;
    rep.label = "cusped-torus";
    rep.generators.push_back(MobiusIsometry::from_upper_half_plane(1.0, 1.0, 1.0, 2.0));
    rep.generators.push_back(MobiusIsometry::from_upper_half_plane(1.0, -1.0, -1.0, 2.0));
    return rep;
}

}  // namespace hypsurf

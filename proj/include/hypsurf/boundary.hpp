#pragma once

// Free-group automorphisms and the maps they induce on fixed points at
// infinity: sampling, cyclic-order checks, continuity moduli and the search
// for a deck transformation that makes the boundary map the identity.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypsurf/error.hpp"
#include "hypsurf/fuchsian.hpp"
#include "hypsurf/poincare.hpp"
#include "hypsurf/word.hpp"

namespace hypsurf {

class FreeAutomorphism {
public:
    /// Takes both directions explicitly and checks that they are mutually inverse.
    FreeAutomorphism(std::vector<GroupWord> images, std::vector<GroupWord> inverse_images)
        : images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
        if (images_.empty() || images_.size() > kMaxGenerators || images_.size() != inverse_images_.size()) {
            throw Error(ErrorCode::InvalidInput, "automorphism needs matching image lists of rank 1..26");
        }
        for (const auto* list : {&images_, &inverse_images_}) {
            for (const auto& w : *list) {
                if (w.generator_span() > images_.size()) {
                    throw Error(ErrorCode::IndexOutOfRange, "image " + w.to_string() + " uses a generator beyond the rank");
                }
            }
        }
        for (std::size_t i = 0; i < rank(); ++i) {
            const GroupWord x = GroupWord::generator(static_cast<unsigned>(i));
            if (substitute(images_, inverse_images_[i]) != x || substitute(inverse_images_, images_[i]) != x) {
                throw Error(ErrorCode::NotAutomorphism, "image and inverse image lists are not mutually inverse");
            }
        }
    }

    static FreeAutomorphism identity(std::size_t rank) {
        std::vector<GroupWord> gens;
        for (std::size_t i = 0; i < rank; ++i) gens.push_back(GroupWord::generator(static_cast<unsigned>(i)));
        return FreeAutomorphism(gens, gens);
    }

    /// x -> g x g^-1.
    static FreeAutomorphism inner(std::size_t rank, const GroupWord& g) {
        std::vector<GroupWord> fwd, back;
        for (std::size_t i = 0; i < rank; ++i) {
            const GroupWord x = GroupWord::generator(static_cast<unsigned>(i));
            fwd.push_back(g * x * g.inverse());
            back.push_back(g.inverse() * x * g);
        }
        return FreeAutomorphism(fwd, back);
    }

    /// Nielsen transvection x_i -> x_i x_j^e (right) or x_j^e x_i (left), e = -1 if inverse.
    static FreeAutomorphism transvection(std::size_t rank, std::size_t i, std::size_t j, bool right, bool inverse) {
        if (i >= rank || j >= rank || i == j) throw Error(ErrorCode::IndexOutOfRange, "transvection needs i != j < rank");
        auto fwd = identity(rank).images_;
        auto back = fwd;
        const GroupWord xj = GroupWord::generator(static_cast<unsigned>(j), inverse);
        fwd[i] = right ? fwd[i] * xj : xj * fwd[i];
        back[i] = right ? back[i] * xj.inverse() : xj.inverse() * back[i];
        return FreeAutomorphism(fwd, back);
    }

    /// Builds the inverse by Nielsen reduction of the image tuple.
    static FreeAutomorphism from_images(std::vector<GroupWord> images) {
        if (images.empty() || images.size() > kMaxGenerators) {
            throw Error(ErrorCode::InvalidInput, "automorphism rank must be 1..26");
        }
        auto inv = nielsen_inverse(images);
        if (!inv) throw Error(ErrorCode::NotAutomorphism, "image tuple does not Nielsen-reduce to a basis");
        return FreeAutomorphism(std::move(images), std::move(*inv));
    }

    /// Parses "A=AB,B=B" (unlisted generators are fixed), "id", or "inner:w".
    static FreeAutomorphism parse(std::string_view spec, std::size_t rank) {
        if (rank == 0 || rank > kMaxGenerators) throw Error(ErrorCode::InvalidInput, "automorphism rank must be 1..26");
        if (spec == "id" || spec == "identity") return identity(rank);
        if (spec.starts_with("inner:")) return inner(rank, checked_word(spec.substr(6), rank));
        std::vector<GroupWord> images = identity(rank).images_;
        std::vector<bool> seen(rank, false);
        while (!spec.empty()) {
            const std::size_t comma = spec.find(',');
            const std::string_view item = spec.substr(0, comma);
            spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
            const std::size_t eq = item.find('=');
            if (eq != 1 || item[0] < 'A' || item[0] > 'Z') {
                throw Error(ErrorCode::InvalidInput, "expected X=word in automorphism spec, got '" + std::string(item) + "'");
            }
            const auto g = static_cast<std::size_t>(item[0] - 'A');
            if (g >= rank) throw Error(ErrorCode::IndexOutOfRange, "generator " + std::string(1, item[0]) + " exceeds rank");
            if (seen[g]) throw Error(ErrorCode::InvalidInput, "generator " + std::string(1, item[0]) + " given twice");
            seen[g] = true;
            images[g] = checked_word(item.substr(2), rank);
        }
        return from_images(std::move(images));
    }

    std::size_t rank() const noexcept { return images_.size(); }
    const std::vector<GroupWord>& images() const noexcept { return images_; }
    const std::vector<GroupWord>& inverse_images() const noexcept { return inverse_images_; }

    GroupWord apply(const GroupWord& w) const { return substitute(images_, w); }
    GroupWord operator()(const GroupWord& w) const { return apply(w); }

    FreeAutomorphism inverse() const { return FreeAutomorphism(inverse_images_, images_); }

    /// (phi * psi)(w) = phi(psi(w)).
    friend FreeAutomorphism operator*(const FreeAutomorphism& phi, const FreeAutomorphism& psi) {
        if (phi.rank() != psi.rank()) throw Error(ErrorCode::InvalidInput, "composing automorphisms of different rank");
        std::vector<GroupWord> fwd, back;
        for (std::size_t i = 0; i < phi.rank(); ++i) {
            fwd.push_back(phi.apply(psi.images_[i]));
            back.push_back(substitute(psi.inverse_images_, phi.inverse_images_[i]));
        }
        return FreeAutomorphism(fwd, back);
    }

    /// "A=..,B=.." with every generator listed.
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rank(); ++i) {
            if (i) s += ',';
            s += static_cast<char>('A' + i);
            s += '=';
            s += images_[i].to_string();
        }
        return s;
    }

private:
    static GroupWord substitute(const std::vector<GroupWord>& images, const GroupWord& w) {
        GroupWord out;
        for (Letter l : w.letters()) {
            if (l.generator >= images.size()) {
                throw Error(ErrorCode::IndexOutOfRange, "word " + w.to_string() + " exceeds the automorphism rank");
            }
            out *= l.inverse ? images[l.generator].inverse() : images[l.generator];
        }
        return out;
    }

    static GroupWord checked_word(std::string_view text, std::size_t rank) {
        GroupWord w = GroupWord::parse(text);
        if (w.generator_span() > rank) {
            throw Error(ErrorCode::IndexOutOfRange, "word " + std::string(text) + " exceeds rank " + std::to_string(rank));
        }
        return w;
    }

    // Elementary move on a tuple: t_i -> t_i t_j^e or t_j^e t_i.
    struct Move {
        std::size_t i, j;
        bool right, inverse;
    };

    static void apply_move(std::vector<GroupWord>& t, const Move& m) {
        const GroupWord tj = m.inverse ? t[m.j].inverse() : t[m.j];
        t[m.i] = m.right ? t[m.i] * tj : tj * t[m.i];
    }

    static std::size_t total_length(const std::vector<GroupWord>& t) {
        std::size_t n = 0;
        for (const auto& w : t) n += w.size();
        return n;
    }

    // Best single move by resulting total length (first in move order on ties).
    static std::optional<std::pair<Move, std::size_t>> best_move(const std::vector<GroupWord>& t) {
        std::optional<std::pair<Move, std::size_t>> best;
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t j = 0; j < t.size(); ++j) {
                if (i == j) continue;
                for (int k = 0; k < 4; ++k) {
                    const Move m{i, j, (k & 1) == 0, (k & 2) != 0};
                    const GroupWord tj = m.inverse ? t[j].inverse() : t[j];
                    const std::size_t len = total_length(t) - t[i].size() + (m.right ? t[i] * tj : tj * t[i]).size();
                    if (!best || len < best->second) best = std::pair{m, len};
                }
            }
        }
        return best;
    }

    static bool is_signed_permutation(const std::vector<GroupWord>& t) {
        std::vector<bool> hit(t.size(), false);
        for (const auto& w : t) {
            if (w.size() != 1 || hit[w[0].generator]) return false;
            hit[w[0].generator] = true;
        }
        return true;
    }

    // Tracks t = phi(q) while Nielsen-reducing t; once t is a signed
    // permutation of the generators, q holds the inverse images.
    static std::optional<std::vector<GroupWord>> nielsen_inverse(const std::vector<GroupWord>& images) {
        const std::size_t n = images.size();
        for (const auto& w : images) {
            if (w.generator_span() > n) throw Error(ErrorCode::IndexOutOfRange, "image exceeds the automorphism rank");
        }
        std::vector<GroupWord> t = images;
        std::vector<GroupWord> q = identity(n).images_;
        const std::size_t max_steps = 64 * (total_length(images) + n);
        for (std::size_t step = 0; step < max_steps && !is_signed_permutation(t); ++step) {
            const std::size_t now = total_length(t);
            if (auto m = best_move(t); m && m->second < now) {
                apply_move(t, m->first);
                apply_move(q, m->first);
                continue;
            }
            // two-move lookahead through a length-preserving first move
            bool progressed = false;
            for (std::size_t i = 0; i < n && !progressed; ++i) {
                for (std::size_t j = 0; j < n && !progressed; ++j) {
                    if (i == j) continue;
                    for (int k = 0; k < 4 && !progressed; ++k) {
                        const Move m{i, j, (k & 1) == 0, (k & 2) != 0};
                        auto t2 = t;
                        apply_move(t2, m);
                        if (total_length(t2) > now) continue;
                        if (auto m2 = best_move(t2); m2 && m2->second < now) {
                            apply_move(t, m);
                            apply_move(q, m);
                            apply_move(t, m2->first);
                            apply_move(q, m2->first);
                            progressed = true;
                        }
                    }
                }
            }
            if (!progressed) return std::nullopt;
        }
        if (!is_signed_permutation(t)) return std::nullopt;
        std::vector<GroupWord> inv(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Letter l = t[i][0];
            inv[l.generator] = l.inverse ? q[i].inverse() : q[i];
        }
        return inv;
    }

    std::vector<GroupWord> images_;
    std::vector<GroupWord> inverse_images_;
};

/// Product of `moves` random Nielsen transvections. Transvections act on
/// the abelianization with determinant 1, so the result preserves orientation.
inline FreeAutomorphism random_nielsen_automorphism(std::size_t rank, int moves, std::mt19937_64& rng) {
    if (rank < 2) throw Error(ErrorCode::InvalidInput, "transvections need rank >= 2");
    if (moves < 0) throw Error(ErrorCode::InvalidInput, "move count must be nonnegative");
    FreeAutomorphism phi = FreeAutomorphism::identity(rank);
    for (int k = 0; k < moves; ++k) {
        // raw modular draws keep the sequence identical across standard libraries
        const std::size_t i = rng() % rank;
        const std::size_t j = (i + 1 + rng() % (rank - 1)) % rank;
        const auto bits = rng() % 4;
        phi = FreeAutomorphism::transvection(rank, i, j, (bits & 1) == 0, (bits & 2) != 0) * phi;
    }
    return phi;
}

// ---------------------------------------------------------------------------
// Circle-map samples

struct CirclePair {
    IdealPoint theta_in;
    IdealPoint theta_out;
    GroupWord provenance;
};

struct CircleMapSample {
    std::vector<CirclePair> pairs;  // sorted by theta_in
    std::size_t considered = 0;     // words examined
    std::size_t skipped = 0;        // words whose own or image isometry is not hyperbolic

    std::size_t size() const noexcept { return pairs.size(); }
};

struct BoundarySampleOptions {
    bool one_per_class = true;
    double max_skip_fraction = 0.5;
    double tol_angle = Tolerances::angle;
    bool check_order = true;
    std::size_t word_cap = kDefaultWordCap;
};

/// (attracting point of w, attracting point of phi(w)), or nullopt when either isometry is not hyperbolic.
/// Attracting fixed point of u c u^-1 as u(fix c), c cyclically reduced; the
/// trace of a long conjugate is lost to cancellation, that of c is not.
inline std::optional<IdealPoint> attracting_point_of(const GroupRep& rep, const GroupWord& w) {
    const auto l = w.letters();
    std::size_t i = 0, j = l.size();
    while (j - i >= 2 && l[i].cancels(l[j - 1])) {
        ++i;
        --j;
    }
    const GroupWord core(l.subspan(i, j - i));
    const auto fp = attracting_fixed_point(evaluate(rep, core));
    if (!fp || i == 0) return fp;
    return apply(evaluate(rep, GroupWord(l.first(i))), *fp);
}

inline std::optional<CirclePair> boundary_pair(const GroupRep& rep, const FreeAutomorphism& phi, const GroupWord& w) {
    const auto in = attracting_point_of(rep, w);
    if (!in) return std::nullopt;
    const auto out = attracting_point_of(rep, phi.apply(w));
    if (!out) return std::nullopt;
    return CirclePair{*in, *out, w};
}

enum class Orientation { Preserving, Reversing, Violation };

inline std::string_view to_string(Orientation o) noexcept {
    switch (o) {
    case Orientation::Preserving: return "Preserving";
    case Orientation::Reversing: return "Reversing";
    case Orientation::Violation: return "Violation";
    }
    return "Unknown";
}

struct OrderVerdict {
    Orientation orientation = Orientation::Preserving;
    std::array<std::size_t, 3> triple{0, 0, 0};  // offending sample indices on Violation
    std::size_t refined = 0;                     // triples settled by conjugating the image words
};

namespace detail {

// +1 when o0, o1, o2 are in counterclockwise order, -1 clockwise, 0 when too close to call
inline int turn_of(double o0, double o1, double o2, double tol) {
    const double d1 = ccw_distance(o0, o1);
    const double d2 = ccw_distance(o0, o2);
    if (d1 <= tol || d2 <= tol || std::abs(d1 - d2) <= tol) return 0;
    return d1 < d2 ? 1 : -1;
}

template <class Resolve>
OrderVerdict order_scan(const CircleMapSample& s, double tol, Resolve&& resolve) {
    const std::size_t n = s.pairs.size();
    if (n < 3) throw Error(ErrorCode::TooFewPoints, "order check needs at least 3 pairs");
    auto out = [&](std::size_t i) { return s.pairs[i % n].theta_out.theta(); };
    OrderVerdict v;
    int first = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int t = turn_of(out(i), out(i + 1), out(i + 2), tol);
        if (t == 0) {
            t = resolve(i % n, (i + 1) % n, (i + 2) % n);
            v.refined += t != 0;
        }
        if (i == 0) first = t;
        if (t == 0 || t != first) return {Orientation::Violation, {i, (i + 1) % n, (i + 2) % n}, v.refined};
    }
    // total turning of the outputs in the detected direction must be one full turn
    double wound = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        // neighbours closer than tol were ordered by the triple scan
        if (angular_distance(out(i), out(i + 1)) <= tol) continue;
        wound += first > 0 ? ccw_distance(out(i), out(i + 1)) : ccw_distance(out(i + 1), out(i));
        if (wound > kTwoPi + 1e-6) return {Orientation::Violation, {i, (i + 1) % n, (i + 2) % n}, v.refined};
    }
    v.orientation = first > 0 ? Orientation::Preserving : Orientation::Reversing;
    return v;
}

// Boundary ray of the attracting fixed point of w = U C U^-1: the infinite word U C C C ...
struct Ray {
    std::vector<Letter> stem;
    std::vector<Letter> period;

    Letter at(std::size_t k) const {
        return k < stem.size() ? stem[k] : period[(k - stem.size()) % period.size()];
    }
};

inline Ray ray_of(const GroupWord& w) {
    const auto l = w.letters();
    std::size_t i = 0, j = l.size();
    while (j - i >= 2 && l[i].cancels(l[j - 1])) {
        ++i;
        --j;
    }
    return Ray{{l.begin(), l.begin() + static_cast<std::ptrdiff_t>(i)},
               {l.begin() + static_cast<std::ptrdiff_t>(i), l.begin() + static_cast<std::ptrdiff_t>(j)}};
}

inline std::size_t common_prefix(const Ray& x, const Ray& y, std::size_t cap) {
    std::size_t k = 0;
    while (k < cap && x.at(k) == y.at(k)) ++k;
    return k;
}

inline constexpr std::size_t kRayCap = 2048;

/// Orders three image points that sit closer than tol. They share a long
/// boundary ray prefix P; conjugating every word by P applies the
/// orientation-preserving isometry P^-1, which pulls them apart.
inline int resolve_by_conjugation(const GroupRep& rep, std::array<GroupWord, 3> words, double tol) {
    for (int round = 0; round < 8; ++round) {
        std::array<Ray, 3> rays{ray_of(words[0]), ray_of(words[1]), ray_of(words[2])};
        std::size_t best = 0, owner = 0;
        for (std::size_t a = 0; a < 3; ++a) {
            const std::size_t k = common_prefix(rays[a], rays[(a + 1) % 3], kRayCap);
            if (k > best) {
                best = k;
                owner = a;
            }
        }
        if (best == 0 || best == kRayCap) return 0;
        std::vector<Letter> prefix;
        for (std::size_t k = 0; k < best; ++k) prefix.push_back(rays[owner].at(k));
        const GroupWord p(prefix);
        try {
            std::array<double, 3> o{};
            for (std::size_t a = 0; a < 3; ++a) {
                words[a] = p.inverse() * words[a] * p;
                const auto fp = attracting_point_of(rep, words[a]);
                if (!fp) return 0;
                o[a] = fp->theta();
            }
            if (const int t = turn_of(o[0], o[1], o[2], tol); t != 0) {
                return evaluate(rep, p).reverses_orientation() ? -t : t;
            }
        } catch (const Error&) {
            return 0;
        }
    }
    return 0;
}

}  // namespace detail

/// Scans consecutive cyclic triples of outputs for a consistent turning
/// direction, then checks that the outputs wind exactly once.
inline OrderVerdict order_check(const CircleMapSample& s, double tol = Tolerances::angle) {
    return detail::order_scan(s, tol, [](std::size_t, std::size_t, std::size_t) { return 0; });
}

/// As above, but output triples closer than tol are re-examined on the
/// image words after moving them apart with the group action.
inline OrderVerdict order_check(const CircleMapSample& s, const GroupRep& rep, const FreeAutomorphism& phi,
                                double tol = Tolerances::angle) {
    return detail::order_scan(s, tol, [&](std::size_t i, std::size_t j, std::size_t k) {
        return detail::resolve_by_conjugation(
            rep, {phi(s.pairs[i].provenance), phi(s.pairs[j].provenance), phi(s.pairs[k].provenance)}, tol);
    });
}

/// Pairs the attracting fixed point of w with that of phi(w) over cyclically
/// reduced words of length 1..n (one per conjugacy class by default).
inline CircleMapSample induced_boundary_sample(const GroupRep& rep, const FreeAutomorphism& phi, int n,
                                               const BoundarySampleOptions& options = {}) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "word length bound must be at least 1");
    if (phi.rank() != rep.rank()) throw Error(ErrorCode::InvalidInput, "automorphism rank differs from group rank");
    CircleMapSample s;
    for (const GroupWord& w : enumerate_words(rep, n, options.word_cap)) {
        if (w.empty() || !w.is_cyclically_reduced()) continue;
        if (options.one_per_class && w.conjugacy_representative() != w) continue;
        ++s.considered;
        if (auto p = boundary_pair(rep, phi, w)) s.pairs.push_back(std::move(*p));
        else ++s.skipped;
    }
    if (s.considered > 0 &&
        static_cast<double>(s.skipped) > options.max_skip_fraction * static_cast<double>(s.considered)) {
        throw Error(ErrorCode::SkipFractionExceeded, std::to_string(s.skipped) + " of " +
                                                         std::to_string(s.considered) + " words were not hyperbolic");
    }
    if (s.pairs.empty()) throw Error(ErrorCode::EmptySample, "no hyperbolic words up to the given length");

    // enumeration is shortlex, so a stable sort keeps the shortest word first among ties
    std::stable_sort(s.pairs.begin(), s.pairs.end(),
                     [](const CirclePair& x, const CirclePair& y) { return x.theta_in.theta() < y.theta_in.theta(); });
    std::vector<CirclePair> kept;
    for (auto& p : s.pairs) {
        if (!kept.empty() && p.theta_in.theta() - kept.back().theta_in.theta() <= options.tol_angle) continue;
        kept.push_back(std::move(p));
    }
    if (kept.size() > 1 && angular_distance(kept.front().theta_in.theta(), kept.back().theta_in.theta()) <= options.tol_angle) {
        kept.pop_back();
    }
    s.pairs = std::move(kept);

    if (options.check_order && s.pairs.size() >= 3) {
        const OrderVerdict v = order_check(s, rep, phi, options.tol_angle);
        if (v.orientation == Orientation::Violation) {
            const auto& t = v.triple;
            throw OrderViolationError(t, "cyclic order broken at words " + s.pairs[t[0]].provenance.to_string() + ", " +
                                             s.pairs[t[1]].provenance.to_string() + ", " +
                                             s.pairs[t[2]].provenance.to_string());
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Identity detection

struct InnerCandidate {
    GroupWord word;
    double residual = 0.0;
};

struct IdentityVerdict {
    bool identity = false;
    GroupWord best_inner;  // post-composing with evaluate(best_inner) gives the smallest deviation
    double residual = 0.0;
    std::vector<InnerCandidate> near_minimizers;  // every candidate within twice the residual, shortlex order
    std::size_t sample_size = 0;
    std::size_t skipped = 0;
};

/// Largest circular distance between theta_in and g(theta_out).
inline double correction_residual(const CircleMapSample& s, const MobiusIsometry& g) {
    double worst = 0.0;
    for (const auto& p : s.pairs) {
        worst = std::max(worst, angular_distance(apply(g, p.theta_out).theta(), p.theta_in.theta()));
    }
    return worst;
}

inline IdentityVerdict is_boundary_identity(const CircleMapSample& s, const GroupRep& rep, int m, double tol = 1e-3) {
    if (m < 0) throw Error(ErrorCode::InvalidInput, "search depth must be nonnegative");
    if (s.pairs.empty()) throw Error(ErrorCode::EmptySample, "nothing to compare");
    std::vector<InnerCandidate> all;
    for (GroupWord& v : enumerate_words(rep, m)) {
        const double r = correction_residual(s, evaluate(rep, v));
        all.push_back({std::move(v), r});
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < all.size(); ++i) {
        if (all[i].residual < all[best].residual) best = i;
    }
    IdentityVerdict out;
    out.best_inner = all[best].word;
    out.residual = all[best].residual;
    out.identity = out.residual < tol;
    out.sample_size = s.size();
    out.skipped = s.skipped;
    for (const auto& c : all) {
        if (c.residual <= 2.0 * out.residual) out.near_minimizers.push_back(c);
    }
    return out;
}

inline IdentityVerdict is_boundary_identity(const GroupRep& rep, const FreeAutomorphism& phi, int n, int m,
                                            double tol = 1e-3, const BoundarySampleOptions& options = {}) {
    return is_boundary_identity(induced_boundary_sample(rep, phi, n, options), rep, m, tol);
}

// ---------------------------------------------------------------------------
// Continuity

struct ExtensionReport {
    std::vector<std::pair<double, double>> modulus;  // (input gap, image gap) after each sample point
    double max_gap_in = 0.0;
    double max_image_gap = 0.0;
    Orientation orientation = Orientation::Preserving;
};

namespace detail {

inline ExtensionReport continuity_from(const CircleMapSample& s, const OrderVerdict& v) {
    const std::size_t n = s.pairs.size();
    if (n < 4) throw Error(ErrorCode::TooFewPoints, "continuity profile needs at least 4 pairs");
    if (v.orientation == Orientation::Violation) {
        throw OrderViolationError(v.triple, "continuity profile needs an order-preserving or reversing sample");
    }
    ExtensionReport r;
    r.orientation = v.orientation;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = s.pairs[i];
        const auto& q = s.pairs[(i + 1) % n];
        const double gin = ccw_distance(p.theta_in.theta(), q.theta_in.theta());
        double gout = v.orientation == Orientation::Preserving ? ccw_distance(p.theta_out.theta(), q.theta_out.theta())
                                                               : ccw_distance(q.theta_out.theta(), p.theta_out.theta());
        // unresolved neighbours may have swapped under rounding
        const double near = angular_distance(p.theta_out.theta(), q.theta_out.theta());
        if (near <= Tolerances::angle) gout = near;
        r.modulus.emplace_back(gin, gout);
        r.max_gap_in = std::max(r.max_gap_in, gin);
        r.max_image_gap = std::max(r.max_image_gap, gout);
    }
    return r;
}

}  // namespace detail

inline ExtensionReport continuity_profile(const CircleMapSample& s) {
    if (s.pairs.size() < 4) throw Error(ErrorCode::TooFewPoints, "continuity profile needs at least 4 pairs");
    return detail::continuity_from(s, order_check(s));
}

inline ExtensionReport continuity_profile(const CircleMapSample& s, const GroupRep& rep, const FreeAutomorphism& phi) {
    if (s.pairs.size() < 4) throw Error(ErrorCode::TooFewPoints, "continuity profile needs at least 4 pairs");
    return detail::continuity_from(s, order_check(s, rep, phi));
}

}  // namespace hypsurf

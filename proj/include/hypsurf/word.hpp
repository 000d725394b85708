#pragma once

// Freely reduced words in a free group with generators A, B, C, ...
// (lowercase letters denote inverses).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypsurf/error.hpp"

namespace hypsurf {

struct Letter {
    std::uint8_t generator = 0;
    bool inverse = false;

    /// Position in the letter order A < a < B < b < ...
    constexpr unsigned index() const noexcept { return 2u * generator + (inverse ? 1u : 0u); }
    constexpr Letter inverted() const noexcept { return Letter{generator, !inverse}; }
    constexpr bool cancels(Letter other) const noexcept {
        return generator == other.generator && inverse != other.inverse;
    }

    static constexpr Letter from_index(unsigned idx) noexcept {
        return Letter{static_cast<std::uint8_t>(idx / 2), (idx % 2) == 1};
    }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter x, Letter y) noexcept { return x.index() <=> y.index(); }
};

inline constexpr unsigned kMaxGenerators = 26;

class GroupWord {
public:
    GroupWord() = default;

    /// Freely reduces the given letter sequence.
    explicit GroupWord(std::span<const Letter> letters) {
        letters_.reserve(letters.size());
        for (Letter l : letters) push_reduced(l);
    }

    static GroupWord generator(unsigned index, bool inverse = false) {
        if (index >= kMaxGenerators) throw Error(ErrorCode::IndexOutOfRange, "at most 26 generators are supported");
        GroupWord w;
        w.letters_.push_back(Letter{static_cast<std::uint8_t>(index), inverse});
        return w;
    }

    /// Parses "ABa", "1" (identity) or "". Capitals are generators, lowercase their inverses.
    static GroupWord parse(std::string_view text) {
        GroupWord w;
        if (text == "1") return w;
        for (char ch : text) {
            if (ch >= 'A' && ch <= 'Z') w.push_reduced(Letter{static_cast<std::uint8_t>(ch - 'A'), false});
            else if (ch >= 'a' && ch <= 'z') w.push_reduced(Letter{static_cast<std::uint8_t>(ch - 'a'), true});
            else throw Error(ErrorCode::InvalidInput, "unexpected character '" + std::string(1, ch) + "' in word");
        }
        return w;
    }

    std::string to_string() const {
        if (letters_.empty()) return "1";
        std::string s;
        s.reserve(letters_.size());
        for (Letter l : letters_) s.push_back(static_cast<char>((l.inverse ? 'a' : 'A') + l.generator));
        return s;
    }

    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const noexcept { return letters_[i]; }

    /// Largest generator index used plus one (0 for the identity).
    unsigned generator_span() const noexcept {
        unsigned m = 0;
        for (Letter l : letters_) m = std::max<unsigned>(m, l.generator + 1u);
        return m;
    }

    GroupWord inverse() const {
        GroupWord w;
        w.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverted());
        return w;
    }

    friend GroupWord operator*(const GroupWord& u, const GroupWord& v) {
        GroupWord w = u;
        w.letters_.reserve(u.size() + v.size());
        for (Letter l : v.letters_) w.push_reduced(l);
        return w;
    }

    GroupWord& operator*=(const GroupWord& v) {
        for (Letter l : v.letters_) push_reduced(l);
        return *this;
    }

    /// Integer power (negative exponents use the inverse).
    GroupWord pow(int k) const {
        const GroupWord base = k < 0 ? inverse() : *this;
        GroupWord w;
        for (int i = 0; i < std::abs(k); ++i) w *= base;
        return w;
    }

    bool is_cyclically_reduced() const noexcept {
        return letters_.size() < 2 || !letters_.front().cancels(letters_.back());
    }

    /// Strips the conjugating prefix: w = u c u^-1 with c cyclically reduced; returns c.
    GroupWord cyclic_core() const {
        std::size_t lo = 0;
        std::size_t hi = letters_.size();
        while (hi - lo >= 2 && letters_[lo].cancels(letters_[hi - 1])) {
            ++lo;
            --hi;
        }
        GroupWord w;
        w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                          letters_.begin() + static_cast<std::ptrdiff_t>(hi));
        return w;
    }

    /// Lexicographically least cyclic rotation of this word or of its inverse.
    /// Only meaningful for cyclically reduced words; names a conjugacy class up to inversion.
    GroupWord conjugacy_representative() const {
        GroupWord best = *this;
        const GroupWord inv = inverse();
        for (const GroupWord* src : {this, &inv}) {
            for (std::size_t r = 0; r < src->size(); ++r) {
                GroupWord rot;
                rot.letters_.reserve(src->size());
                rot.letters_.insert(rot.letters_.end(), src->letters_.begin() + static_cast<std::ptrdiff_t>(r),
                                    src->letters_.end());
                rot.letters_.insert(rot.letters_.end(), src->letters_.begin(),
                                    src->letters_.begin() + static_cast<std::ptrdiff_t>(r));
                if (rot < best) best = std::move(rot);
            }
        }
        return best;
    }

    friend bool operator==(const GroupWord&, const GroupWord&) = default;

    /// Shortlex order: by length, then lexicographically in the letter order.
    friend std::strong_ordering operator<=>(const GroupWord& u, const GroupWord& v) {
        if (u.size() != v.size()) return u.size() <=> v.size();
        return std::lexicographical_compare_three_way(u.letters_.begin(), u.letters_.end(), v.letters_.begin(),
                                                      v.letters_.end());
    }

private:
    void push_reduced(Letter l) {
        if (l.generator >= kMaxGenerators) throw Error(ErrorCode::IndexOutOfRange, "generator index too large");
        if (!letters_.empty() && letters_.back().cancels(l)) letters_.pop_back();
        else letters_.push_back(l);
    }

    std::vector<Letter> letters_;
};

/// Commutator u v u^-1 v^-1.
inline GroupWord commutator(const GroupWord& u, const GroupWord& v) { return u * v * u.inverse() * v.inverse(); }

}  // namespace hypsurf

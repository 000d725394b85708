#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "hypsurf/fuchsian.hpp"
#include "oracles.hpp"

using namespace hypsurf;

namespace {

GroupWord random_word(std::mt19937_64& rng, std::size_t rank, int len) {
    std::vector<Letter> letters;
    for (int i = 0; i < len; ++i) letters.push_back(Letter::from_index(static_cast<unsigned>(rng() % (2 * rank))));
    return GroupWord(letters);
}

GroupRep cyclic_group(double t) {
    GroupRep rep;
    rep.generators.push_back(MobiusIsometry::real_translation(t));
    rep.label = "cyclic";
    return rep;
}

}  // namespace

TEST(Word, ParseReduceFormat) {
    EXPECT_EQ(GroupWord::parse("ABba").to_string(), "1");
    EXPECT_EQ(GroupWord::parse("AbCd").to_string(), "AbCd");
    EXPECT_TRUE(GroupWord::parse("1").empty());
    EXPECT_THROW(GroupWord::parse("A2"), Error);
    EXPECT_EQ((GroupWord::parse("AB") * GroupWord::parse("ba")).size(), 0u);
    EXPECT_EQ(GroupWord::parse("ABc").inverse().to_string(), "Cba");
    EXPECT_EQ(commutator(GroupWord::parse("A"), GroupWord::parse("B")).to_string(), "ABab");
}

TEST(Word, ShortlexAndCyclicHelpers) {
    EXPECT_LT(GroupWord::parse("B"), GroupWord::parse("AA"));
    EXPECT_LT(GroupWord::parse("A"), GroupWord::parse("a"));
    EXPECT_LT(GroupWord::parse("a"), GroupWord::parse("B"));
    EXPECT_FALSE(GroupWord::parse("ABa").is_cyclically_reduced());
    EXPECT_EQ(GroupWord::parse("ABCa").cyclic_core().to_string(), "BC");
    EXPECT_EQ(GroupWord::parse("BA").conjugacy_representative().to_string(), "AB");
    EXPECT_EQ(GroupWord::parse("ba").conjugacy_representative().to_string(), "AB");
}

TEST(Evaluate, EmptyWordAndInverse) {
    const GroupRep rep = octagon_group();
    EXPECT_TRUE(evaluate(rep, GroupWord()).is_identity());
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        const GroupWord w = random_word(rng, 4, 8);
        const GroupWord inv = w.inverse();
        const MobiusIsometry g = evaluate(rep, w);
        const auto m = g * evaluate(rep, inv);
        // rounding grows like eps |a|^2
        EXPECT_LT(m.entry_distance(MobiusIsometry::identity()), 1e-13 * std::max(1.0, std::norm(g.a())));
    }
    EXPECT_THROW(evaluate(rep, GroupWord::parse("E")), Error);
}

TEST(Evaluate, Homomorphism) {
    const GroupRep rep = octagon_group();
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        const GroupWord u = random_word(rng, 4, 1 + static_cast<int>(rng() % 5));
        const GroupWord v = random_word(rng, 4, 1 + static_cast<int>(rng() % 5));
        const MobiusIsometry lhs = evaluate(rep, u * v);
        const MobiusIsometry rhs = evaluate(rep, u) * evaluate(rep, v);
        const double scale = std::max(1.0, std::abs(lhs.a()));
        EXPECT_LT(lhs.entry_distance(rhs) / scale, 1e-9);
    }
}

TEST(Octagon, RelatorsAndGenerators) {
    const GroupRep rep = octagon_group();
    ASSERT_EQ(rep.rank(), 4u);
    validate(rep);
    EXPECT_LT(relator_residual(rep, GroupWord::parse("AbCdaBcD")), 1e-6);
    for (const auto& g : rep.generators) EXPECT_EQ(classify(g), IsometryClass::Hyperbolic);
    const auto basis = octagon_commutator_basis();
    const GroupWord rel = commutator(basis[0], basis[1]) * commutator(basis[2], basis[3]);
    EXPECT_LT(relator_residual(rep, rel), 1e-6);
    // side-pairing translation length 2r with cosh r = 1 + sqrt 2
    EXPECT_NEAR(translation_length(rep.generators[0]), 2 * std::acosh(1 + std::numbers::sqrt2), 1e-12);
}

TEST(Octagon, OrbitSpacingAtLengthTwo) {
    const OrbitSample s = orbit(octagon_group(), DiskPoint(0.05, 0.02), 2);
    ASSERT_EQ(s.points.size(), 1u + 8u + 56u);
    for (std::size_t i = 0; i < s.points.size(); ++i)
        for (std::size_t j = i + 1; j < s.points.size(); ++j)
            EXPECT_GT(std::abs(s.points[i].point.z() - s.points[j].point.z()), 1e-6);
}

TEST(Enumerate, CountsMatchGrowthAndBruteForce) {
    EXPECT_EQ(enumerate_words(2, 0).size(), 1u);
    const auto w1 = enumerate_words(2, 1);
    EXPECT_EQ(w1.size(), 5u);
    const auto w2 = enumerate_words(2, 2);
    EXPECT_EQ(std::count_if(w2.begin(), w2.end(), [](const GroupWord& w) { return w.size() == 2; }), 12);
    for (int rank = 1; rank <= 3; ++rank) {
        for (int i = 1; i <= 5; ++i) {
            EXPECT_EQ(reduced_words_of_length(static_cast<std::size_t>(rank), i), oracle::brute_reduced_count(rank, i));
        }
    }
    const auto w = enumerate_words(3, 4);
    EXPECT_EQ(w.size(), reduced_word_count(3, 4));
    EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
    EXPECT_EQ(std::set<GroupWord>(w.begin(), w.end()).size(), w.size());
}

TEST(Enumerate, BudgetExceeded) {
    try {
        enumerate_words(4, 9);
        FAIL() << "expected BudgetExceeded";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    }
    EXPECT_THROW(enumerate_words(2, 3, 10), Error);
}

TEST(Orbit, Basics) {
    const DiskPoint base(0.1, 0.2);
    const OrbitSample s0 = orbit(octagon_group(), base, 0);
    ASSERT_EQ(s0.points.size(), 1u);
    EXPECT_EQ(s0.points[0].point.z(), base.z());

    const GroupRep cyc = cyclic_group(0.5);
    const OrbitSample s = orbit(cyc, DiskPoint::origin(), 10);
    ASSERT_EQ(s.points.size(), 21u);
    // A^k(0) = tanh(k t / 2) on the real axis
    for (const auto& p : s.points) {
        const int k = p.word.empty() ? 0 : (p.word[0].inverse ? -1 : 1) * static_cast<int>(p.word.size());
        EXPECT_NEAR(p.point.re(), std::tanh(0.25 * k), 1e-12);
        EXPECT_NEAR(p.point.im(), 0.0, 1e-12);
    }
    EXPECT_EQ(orbit(octagon_group(), base, 3).points.size(), reduced_word_count(4, 3));
}

TEST(LimitSample, CyclicGroupHasTwoAxisAngles) {
    const EndpointSample s = limit_sample(cyclic_group(1.0), DiskPoint::origin(), 5, SampleMode::AxisEndpoints);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_NEAR(s.angles[0].angle.theta(), 0.0, 1e-12);
    EXPECT_NEAR(s.angles[1].angle.theta(), std::numbers::pi, 1e-12);
    EXPECT_EQ(s.angles[0].word.to_string(), "A");
}

TEST(LimitSample, OctagonGrowsWithN) {
    std::size_t prev = 0;
    for (int n = 1; n <= 4; ++n) {
        const EndpointSample s = limit_sample(octagon_group(), DiskPoint::origin(), n, SampleMode::AxisEndpoints);
        EXPECT_GT(s.size(), prev);
        prev = s.size();
        for (std::size_t i = 1; i < s.size(); ++i) EXPECT_GT(s.angles[i].angle.theta(), s.angles[i - 1].angle.theta());
    }
}

TEST(LimitSample, OrbitProjectionIndependentOfBasepoint) {
    const GroupRep rep = octagon_group();
    const double g0 = max_angular_gap(limit_sample(rep, DiskPoint::origin(), 4, SampleMode::OrbitProjection));
    const double g1 = max_angular_gap(limit_sample(rep, DiskPoint(0.2, -0.1), 4, SampleMode::OrbitProjection));
    EXPECT_LT(std::abs(g0 - g1), 0.05);
}

TEST(LimitSample, EmptyAndInvalid) {
    LimitSampleOptions tight;
    tight.delta = 1e-9;
    EXPECT_THROW(limit_sample(cyclic_group(0.1), DiskPoint::origin(), 1, SampleMode::OrbitProjection, tight), Error);
    GroupRep rot;
    rot.generators.push_back(MobiusIsometry::rotation(0.5));
    try {
        limit_sample(rot, DiskPoint::origin(), 3, SampleMode::AxisEndpoints);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptySample);
    }
    EXPECT_THROW(limit_sample(cyclic_group(1.0), DiskPoint::origin(), 0, SampleMode::AxisEndpoints), Error);
}

TEST(LimitSample, ConjugationEquivariance) {
    const GroupRep rep = octagon_group();
    const MobiusIsometry g(Complex(1.1, 0.2), Complex(0.3, 0.35));
    const EndpointSample s = limit_sample(rep, DiskPoint::origin(), 2, SampleMode::AxisEndpoints);
    const EndpointSample t = limit_sample(conjugated(rep, g), DiskPoint::origin(), 2, SampleMode::AxisEndpoints);
    ASSERT_EQ(s.size(), t.size());
    std::vector<double> moved;
    for (const auto& a : s.angles) moved.push_back(apply(g, a.angle).theta());
    std::sort(moved.begin(), moved.end());
    for (std::size_t i = 0; i < moved.size(); ++i) EXPECT_LT(angular_distance(moved[i], t.angles[i].angle.theta()), 1e-8);
}

TEST(Gaps, SimpleSamples) {
    EXPECT_NEAR(max_angular_gap(EndpointSample{SampleMode::AxisEndpoints,
                                               {{IdealPoint(0.2), {}}, {IdealPoint(0.2 + std::numbers::pi), {}}}}),
                std::numbers::pi, 1e-14);
    EndpointSample even{SampleMode::AxisEndpoints, {}};
    for (int k = 0; k < 12; ++k) even.angles.push_back({IdealPoint(kTwoPi * k / 12), {}});
    EXPECT_NEAR(max_angular_gap(even), kTwoPi / 12, 1e-14);
    for (double gap : gap_profile(even)) EXPECT_NEAR(gap, kTwoPi / 12, 1e-14);
    EXPECT_NEAR(max_angular_gap(EndpointSample{SampleMode::AxisEndpoints, {{IdealPoint(1.0), {}}}}), kTwoPi, 0.0);
    EXPECT_THROW(max_angular_gap(EndpointSample{}), Error);
}

TEST(Gaps, MatchBruteForce) {
    const EndpointSample s = limit_sample(octagon_group(), DiskPoint::origin(), 3, SampleMode::AxisEndpoints);
    EXPECT_NEAR(max_angular_gap(s), oracle::brute_max_gap(sample_angles(s)), 1e-15);
    const auto profile = gap_profile(s);
    EXPECT_TRUE(std::is_sorted(profile.rbegin(), profile.rend()));
    double total = 0.0;
    for (double g : profile) total += g;
    EXPECT_NEAR(total, kTwoPi, 1e-9);
}

TEST(Schottky, CirclesAndHyperbolicity) {
    const GroupRep rep = schottky_rank2(4.0);
    // isometric circle of the translation by t along the real axis: centre -coth(t/2), radius 1/sinh(t/2)
    const IsometricCircle c = isometric_circle(rep.generators[0]);
    EXPECT_NEAR(c.centre.real(), -1.0 / std::tanh(2.0), 1e-12);
    EXPECT_NEAR(c.radius, 1.0 / std::sinh(2.0), 1e-12);
    for (const auto& w : enumerate_words(rep, 4)) {
        if (w.empty()) continue;
        EXPECT_EQ(classify(evaluate(rep, w)), IsometryClass::Hyperbolic) << w.to_string();
    }
    try {
        schottky_rank2(1.5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CirclesOverlap);
    }
    EXPECT_THROW(schottky_rank2(-1.0), Error);
}

TEST(Schottky, TopGapPersists) {
    const GroupRep rep = schottky_rank2(4.0);
    const auto s4 = limit_sample(rep, DiskPoint::origin(), 4, SampleMode::AxisEndpoints);
    const auto s6 = limit_sample(rep, DiskPoint::origin(), 6, SampleMode::AxisEndpoints);
    EXPECT_GT(gap_profile(s4).front(), 0.3);
    EXPECT_GT(gap_profile(s6).front(), 0.3);
    EXPECT_LT(std::abs(max_angular_gap(s4) - max_angular_gap(s6)), 1e-3);
    EXPECT_GT(s6.size(), s4.size());
}

TEST(CuspedTorus, CommutatorIsParabolic) {
    const GroupRep rep = cusped_torus_group();
    EXPECT_EQ(classify(evaluate(rep, GroupWord::parse("ABab"))), IsometryClass::Parabolic);
    EXPECT_EQ(classify(rep.generators[0]), IsometryClass::Hyperbolic);
    EXPECT_EQ(classify(rep.generators[1]), IsometryClass::Hyperbolic);
}

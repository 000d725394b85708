#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hypsurf/boundary.hpp"

using namespace hypsurf;

namespace {

GroupWord W(const char* s) { return GroupWord::parse(s); }

CircleMapSample flip_outputs(CircleMapSample s) {
    for (auto& p : s.pairs) p.theta_out = IdealPoint(-p.theta_out.theta());
    return s;
}

}  // namespace

TEST(FreeAutomorphism, Basics) {
    const auto id = FreeAutomorphism::identity(2);
    EXPECT_EQ(id(W("ABab")), W("ABab"));
    const auto t = FreeAutomorphism::parse("A=AB", 2);
    EXPECT_EQ(t(W("A")), W("AB"));
    EXPECT_EQ(t(W("B")), W("B"));
    EXPECT_EQ(t.inverse()(W("A")), W("Ab"));
    EXPECT_EQ((t * t.inverse())(W("AB")), W("AB"));
    EXPECT_EQ(t.to_string(), "A=AB,B=B");
    EXPECT_EQ(FreeAutomorphism::parse("id", 2).to_string(), "A=A,B=B");
    const auto in = FreeAutomorphism::parse("inner:A", 2);
    EXPECT_EQ(in(W("B")), W("ABa"));
    EXPECT_EQ(in(W("A")), W("A"));
}

TEST(FreeAutomorphism, RejectsNonAutomorphisms) {
    try {
        FreeAutomorphism::parse("A=AA", 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAutomorphism);
    }
    EXPECT_THROW(FreeAutomorphism::parse("A=AC", 2), Error);
    EXPECT_THROW(FreeAutomorphism::parse("A=", 2), Error);
}

TEST(FreeAutomorphism, NielsenInverseOfRandomProducts) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        const auto phi = random_nielsen_automorphism(2, 1 + static_cast<int>(i % 6), rng);
        const auto rebuilt = FreeAutomorphism::from_images(phi.images());
        for (const char* w : {"A", "B", "AB", "ABab", "aaB"}) {
            EXPECT_EQ(rebuilt.inverse()(phi(W(w))), W(w));
            EXPECT_EQ(phi(phi.inverse()(W(w))), W(w));
        }
    }
}

TEST(FreeAutomorphism, RandomIsDeterministicForSeed) {
    std::mt19937_64 r1(99), r2(99);
    for (int i = 0; i < 10; ++i) {
        EXPECT_EQ(random_nielsen_automorphism(4, 5, r1).to_string(), random_nielsen_automorphism(4, 5, r2).to_string());
    }
}

TEST(BoundarySample, IdentityFixesEveryAngle) {
    const GroupRep rep = octagon_group();
    const auto s = induced_boundary_sample(rep, FreeAutomorphism::identity(4), 3);
    EXPECT_GT(s.size(), 20u);
    for (const auto& p : s.pairs) EXPECT_NEAR(angular_distance(p.theta_in.theta(), p.theta_out.theta()), 0.0, 1e-9);
    for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LT(s.pairs[i - 1].theta_in.theta(), s.pairs[i].theta_in.theta());
    EXPECT_EQ(order_check(s).orientation, Orientation::Preserving);
}

TEST(BoundarySample, OrderCheckDetectsReversalAndViolation) {
    const auto s = induced_boundary_sample(octagon_group(), FreeAutomorphism::identity(4), 2);
    EXPECT_EQ(order_check(flip_outputs(s)).orientation, Orientation::Reversing);
    auto broken = s;
    std::swap(broken.pairs[2].theta_out, broken.pairs[5].theta_out);
    EXPECT_EQ(order_check(broken).orientation, Orientation::Violation);
    CircleMapSample tiny;
    tiny.pairs.assign(s.pairs.begin(), s.pairs.begin() + 2);
    EXPECT_THROW(order_check(tiny), Error);
}

TEST(BoundarySample, InnerAutomorphismIsRigidMotion) {
    const GroupRep rep = octagon_group();
    const auto phi = FreeAutomorphism::inner(4, W("A"));
    const MobiusIsometry A = rep.generators[0];
    const auto s = induced_boundary_sample(rep, phi, 3);
    for (const auto& p : s.pairs) {
        EXPECT_LT(angular_distance(apply(A, p.theta_in).theta(), p.theta_out.theta()), 1e-8);
    }
}

TEST(IdentityVerdict, IdentityAndInner) {
    const GroupRep rep = octagon_group();
    const auto v = is_boundary_identity(rep, FreeAutomorphism::identity(4), 3, 1);
    EXPECT_TRUE(v.identity);
    EXPECT_TRUE(v.best_inner.empty());
    EXPECT_LT(v.residual, 1e-9);

    const auto w = is_boundary_identity(rep, FreeAutomorphism::inner(4, W("A")), 3, 2);
    EXPECT_TRUE(w.identity);
    EXPECT_EQ(w.best_inner.to_string(), "a");
    ASSERT_FALSE(w.near_minimizers.empty());
    for (const auto& c : w.near_minimizers) EXPECT_LE(c.residual, 2 * w.residual);
}

TEST(IdentityVerdict, TwistIsNotIdentity) {
    const GroupRep rep = cusped_torus_group();
    const auto v = is_boundary_identity(rep, FreeAutomorphism::parse("A=AB", 2), 5, 3, 0.01);
    EXPECT_FALSE(v.identity);
    EXPECT_GT(v.residual, 0.05);
    EXPECT_GE(v.sample_size, 40u);
}

TEST(Continuity, ModulusSumsToFullTurn) {
    const GroupRep rep = cusped_torus_group();
    const auto s = induced_boundary_sample(rep, FreeAutomorphism::parse("A=AB", 2), 5);
    const auto r = continuity_profile(s);
    EXPECT_EQ(r.orientation, Orientation::Preserving);
    double in = 0, out = 0;
    for (const auto& [gi, go] : r.modulus) {
        in += gi;
        out += go;
    }
    EXPECT_NEAR(in, 2 * std::numbers::pi, 1e-9);
    EXPECT_NEAR(out, 2 * std::numbers::pi, 1e-9);
    EXPECT_LE(r.max_gap_in, 2 * std::numbers::pi);
    EXPECT_EQ(continuity_profile(flip_outputs(s)).orientation, Orientation::Reversing);
}

TEST(Functoriality, CompositionMatchesSequentialImages) {
    const GroupRep rep = cusped_torus_group();
    const auto phi = FreeAutomorphism::parse("A=AB", 2);
    const auto psi = FreeAutomorphism::parse("B=BA", 2);
    const auto composite = phi * psi;
    for (const char* w : {"A", "B", "AB", "AbAB"}) {
        const auto direct = boundary_pair(rep, composite, W(w));
        const auto mid = boundary_pair(rep, psi, W(w));
        ASSERT_TRUE(direct && mid);
        const auto last = boundary_pair(rep, phi, psi(W(w)));
        ASSERT_TRUE(last);
        EXPECT_LT(angular_distance(direct->theta_out.theta(), last->theta_out.theta()), 1e-9);
        EXPECT_LT(angular_distance(mid->theta_out.theta(), last->theta_in.theta()), 1e-9);
    }
}

TEST(BoundarySample, Errors) {
    const GroupRep rep = octagon_group();
    EXPECT_THROW(induced_boundary_sample(rep, FreeAutomorphism::identity(2), 2), Error);
    EXPECT_THROW(induced_boundary_sample(rep, FreeAutomorphism::identity(4), 0), Error);
    GroupRep rot;
    rot.generators = {MobiusIsometry::rotation(0.3), MobiusIsometry::rotation(0.7)};
    try {
        induced_boundary_sample(rot, FreeAutomorphism::identity(2), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SkipFractionExceeded);
    }
}

TEST(OrderCheck, CollapsedOutputsOrderedByConjugation) {
    // image fixed points of this automorphism agree to far below double precision
    const GroupRep rep = cusped_torus_group();
    const auto phi = FreeAutomorphism::parse("A=AbAAbAAb,B=BaaBaaBaBaaBa", 2);
    BoundarySampleOptions opts;
    opts.check_order = false;
    const auto s = induced_boundary_sample(rep, phi, 4, opts);
    EXPECT_EQ(order_check(s).orientation, Orientation::Violation);
    const auto v = order_check(s, rep, phi);
    EXPECT_EQ(v.orientation, Orientation::Preserving);
    EXPECT_GT(v.refined, 0u);
    EXPECT_EQ(continuity_profile(s, rep, phi).orientation, Orientation::Preserving);
}

TEST(OrderCheck, ConjugationDoesNotHideSwaps) {
    const GroupRep rep = cusped_torus_group();
    const auto phi = FreeAutomorphism::parse("A=AB", 2);
    auto s = induced_boundary_sample(rep, phi, 4);
    std::swap(s.pairs[1].theta_out, s.pairs[4].theta_out);
    EXPECT_EQ(order_check(s, rep, phi).orientation, Orientation::Violation);
}

TEST(OrderCheck, DeterminantMinusOneReverses) {
    const GroupRep rep = cusped_torus_group();
    const auto phi = FreeAutomorphism::parse("A=a,B=B", 2);
    const auto s = induced_boundary_sample(rep, phi, 4);
    EXPECT_EQ(order_check(s, rep, phi).orientation, Orientation::Reversing);
}

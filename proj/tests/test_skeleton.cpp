#include <gtest/gtest.h>

#include "clustermirror/random.hpp"
#include "clustermirror/skeleton.hpp"

using namespace clustermirror;

namespace {

Seed zero_seed() {
    Seed s;
    s.n = 2;
    s.r = 2;
    s.psi = {{1, 0}, {0, 1}};
    s.B = IntMat(2, 2);
    s.d = {1, 1};
    return s;
}

StackyFan1D fan_of(std::vector<StackyRay> rays) {
    StackyFan1D f;
    f.n = 2;
    f.rays = std::move(rays);
    return f;
}

} // namespace

TEST(Skeleton, FromSeed) {
    Skeleton sk = skeleton_from_seed(a2_seed());
    ASSERT_EQ(sk.handles.size(), 2u);
    EXPECT_EQ(sk.handles[0], (Handle{{1, 0}, {0, 1}, 1}));
    EXPECT_EQ(sk.handles[1], (Handle{{0, 1}, {-1, 0}, 1}));
    try {
        skeleton_from_seed(zero_seed());
        FAIL() << "expected an error";
    } catch (const ValidationError& e) {
        EXPECT_STREQ(e.what(), "disk direction undefined");
    }
    Seed s = a2_seed();
    s.d = {2, 1};
    EXPECT_EQ(skeleton_from_seed(s).handles[0].d, 2);
}

TEST(Skeleton, PrimitivizesCocharacters) {
    Seed s = a2_seed();
    s.B = IntMat{{0, 3}, {-3, 0}};
    Skeleton sk = skeleton_from_seed(s);
    EXPECT_EQ(sk.handles[0].chi, (IntVec{0, 1}));
}

TEST(Skeleton, BondalStrata) {
    auto cyl = bondal_strata(fan_of({{{1, 0}, 1}}));
    ASSERT_EQ(cyl.size(), 2u);
    EXPECT_EQ(cyl[0], (BondalStratum{{}, 2, 1}));
    EXPECT_EQ(cyl[1], (BondalStratum{{0}, 1, 1}));
    auto stacky = bondal_strata(fan_of({{{1, 0}, 3}}));
    EXPECT_EQ(stacky[1].components, 3);
    auto torus = bondal_strata(fan_of({}));
    ASSERT_EQ(torus.size(), 1u);
    EXPECT_EQ(torus[0].torus_dim, 2u);
}

TEST(Skeleton, BondalStrataCounts) {
    Rng rng(8);
    for (int c = 0; c < 50; ++c) {
        std::vector<StackyRay> rays;
        const long k = rng.uniform(0, 4);
        for (long i = 0; i < k; ++i) rays.push_back({random_primitive2(rng), rng.uniform(1, 6)});
        auto strata = bondal_strata(fan_of(rays));
        ASSERT_EQ(strata.size(), 1 + rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) ASSERT_EQ(strata[i + 1].components, rays[i].d);
    }
}

TEST(Skeleton, IntersectionNumber) {
    EXPECT_EQ(intersection_number({0, 1}, {1, 0}), -1);
    EXPECT_EQ(intersection_number({1, 0}, {1, 0}), 0);
    EXPECT_EQ(intersection_number({2, 1}, {1, 1}), 1);
    EXPECT_THROW(intersection_number({1, 0, 0}, {0, 1, 0}), ValidationError);
}

TEST(Skeleton, DehnTwist) {
    EXPECT_EQ(dehn_twist({0, -1}, {1, 0}), (IntVec{1, -1}));
    EXPECT_EQ(dehn_twist({2, 4}, {1, 2}), (IntVec{2, 4}));
    IntVec c{3, -2}, a{1, 1};
    EXPECT_EQ(dehn_twist(dehn_twist(c, a), a), c + 2 * intersection_number(c, a) * a);
}

TEST(Skeleton, DehnTwistPreservesIntersections) {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        IntVec a = random_primitive2(rng), c = random_primitive2(rng), e = random_primitive2(rng);
        ASSERT_EQ(intersection_number(dehn_twist(c, a), dehn_twist(e, a)), intersection_number(c, e));
        ASSERT_EQ(dehn_twist(a, a), a);
    }
}

TEST(Skeleton, SurgeryA2MatchesMutation) {
    for (std::size_t k = 0; k < 2; ++k)
        EXPECT_EQ(disk_surgery(skeleton_from_seed(a2_seed()), k), skeleton_from_seed(mutate(a2_seed(), k)));
}

TEST(Skeleton, SingleHandleTwiceRestores) {
    Skeleton sk;
    sk.n = 2;
    sk.handles = {{{2, 1}, {-1, 2}, 1}};
    Skeleton once = disk_surgery(sk, 0);
    EXPECT_EQ(once.handles[0].psi, (IntVec{-2, -1}));
    EXPECT_EQ(disk_surgery(once, 0), sk);
}

TEST(Skeleton, NegativeBranchLeavesHandle) {
    Skeleton sk;
    sk.n = 2;
    // s_0 = R(0,1) = (-1,0), s_1 = R(1,0) = (0,1); <s_0, s_1> = -1.
    sk.handles = {{{0, 1}, {-1, 0}, 1}, {{1, 0}, {0, 1}, 1}};
    Skeleton out = disk_surgery(sk, 1);
    EXPECT_EQ(out.handles[0], sk.handles[0]);
    EXPECT_EQ(out.handles[1].psi, (IntVec{-1, 0}));
}

TEST(Skeleton, SurgeryRejectsMultipliers) {
    Skeleton sk = skeleton_from_seed(a2_seed());
    sk.handles[0].d = 2;
    try {
        disk_surgery(sk, 0);
        FAIL() << "expected an error";
    } catch (const ValidationError& e) {
        EXPECT_STREQ(e.what(), "surgery defined only for skew-symmetric data");
    }
}

TEST(Skeleton, DictionaryRandomized) {
    Rng rng(7);
    for (int c = 0; c < 500; ++c) {
        Seed s = random_dictionary_seed(rng);
        for (std::size_t k = 0; k < s.r; ++k) {
            Skeleton lhs = disk_surgery(skeleton_from_seed(s), k);
            ASSERT_EQ(lhs, skeleton_from_seed(mutate(s, k)));
            ASSERT_EQ(lhs.handles.size(), s.r);
            ASSERT_EQ(lhs.n, 2u);
        }
    }
}

TEST(Skeleton, HigherRankSurgeryMatchesMutation) {
    // A3 quiver; every blowup character is primitive.
    Seed s;
    s.n = 3;
    s.r = 3;
    s.psi = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    s.B = IntMat{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
    s.d = {1, 1, 1};
    for (std::size_t k = 0; k < 3; ++k)
        EXPECT_EQ(disk_surgery(skeleton_from_seed(s), k), skeleton_from_seed(mutate(s, k)));
}

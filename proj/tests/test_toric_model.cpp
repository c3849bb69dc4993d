#include <gtest/gtest.h>

#include "clustermirror/random.hpp"
#include "clustermirror/toric_model.hpp"

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

std::vector<IntVec> ray_dirs(const ToricModel& m) {
    std::vector<IntVec> out;
    for (const auto& r : m.fan.rays) out.push_back(r.psi);
    return out;
}

} // namespace

TEST(ToricModel, FanFromSeed) {
    StackyFan1D fan = fan_from_seed(a2_seed());
    ASSERT_EQ(fan.rays.size(), 2u);
    EXPECT_EQ(fan.rays[0], (StackyRay{{1, 0}, 1}));
    EXPECT_EQ(fan.rays[1], (StackyRay{{0, 1}, 1}));
    Seed s = a2_seed();
    s.d = {2, 1};
    EXPECT_EQ(fan_from_seed(s).rays[0].d, 2);
    s.r = 0;
    EXPECT_TRUE(fan_from_seed(s).rays.empty());
}

TEST(ToricModel, FanCollisionRejected) {
    Seed s = a2_seed();
    s.psi = {{1, 0}, {1, 0}};
    EXPECT_THROW(fan_from_seed(s), ValidationError);
    s.psi = {{1, 0}, {-1, 0}};
    EXPECT_THROW(fan_from_seed(s), ValidationError);
}

TEST(ToricModel, BlowupCharacters) {
    auto chi = blowup_characters(a2_seed());
    EXPECT_EQ(chi[0], (IntVec{0, 1}));
    EXPECT_EQ(chi[1], (IntVec{-1, 0}));
    for (const auto& c : blowup_characters(zero_seed())) EXPECT_TRUE(is_zero(c));
}

TEST(ToricModel, CharactersVanishOnRays) {
    Rng rng(3);
    for (int c = 0; c < 200; ++c) {
        Seed s = random_seed(rng);
        auto chi = blowup_characters(s);
        for (std::size_t i = 0; i < s.r; ++i) ASSERT_EQ(dot(chi[i], s.psi[i]), 0);
    }
}

TEST(ToricModel, LocalPresentation) {
    LocalPresentation p = local_presentation(a2_seed(), 0);
    EXPECT_EQ(p.relation, "x1 x1' = y^(0,1) + 1");
    EXPECT_FALSE(p.degenerate);
    EXPECT_TRUE(p.basic_model);
    LocalPresentation z = local_presentation(zero_seed(), 0);
    EXPECT_TRUE(z.degenerate);
    EXPECT_EQ(z.relation, "x1 x1' = 2");
    EXPECT_THROW(local_presentation(a2_seed(), 2), ValidationError);
}

TEST(ToricModel, LociUseMinusOne) {
    ToricModel m = toric_model(a2_seed());
    ASSERT_EQ(m.loci.size(), 2u);
    EXPECT_EQ(m.loci[0], "{chi_1 = -1} in D_1, chi_1 = (0,1)");
}

TEST(ToricModel, MutateModel) {
    MutationReport r1 = mutate_model(a2_seed(), 0);
    EXPECT_EQ(ray_dirs(r1.after), (std::vector<IntVec>{{-1, 0}, {0, 1}}));
    EXPECT_EQ(r1.ray_before, (IntVec{1, 0}));
    EXPECT_EQ(r1.ray_after, (IntVec{-1, 0}));
    MutationReport r2 = mutate_model(a2_seed(), 1);
    EXPECT_EQ(ray_dirs(r2.after), (std::vector<IntVec>{{1, 1}, {0, -1}}));
    MutationReport z = mutate_model(zero_seed(), 0);
    EXPECT_EQ(ray_dirs(z.after), (std::vector<IntVec>{{-1, 0}, {0, 1}}));
}

TEST(ToricModel, MutationFlipsOnlyTheMutatedRayAndKeepsMultipliers) {
    Rng rng(9);
    for (int c = 0; c < 200; ++c) {
        Seed s = random_seed(rng);
        for (std::size_t k = 0; k < s.r; ++k) {
            Seed t = mutate(s, k);
            StackyFan1D before, after;
            try {
                before = fan_from_seed(s);
                after = fan_from_seed(t);
            } catch (const ValidationError&) {
                continue;
            }
            ASSERT_EQ(after.rays[k].psi, -before.rays[k].psi);
            for (std::size_t i = 0; i < s.r; ++i) ASSERT_EQ(after.rays[i].d, before.rays[i].d);
        }
    }
}

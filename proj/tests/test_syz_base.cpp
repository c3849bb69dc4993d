#include <gtest/gtest.h>

#include <string>

#include "clustermirror/json_io.hpp"
#include "clustermirror/random.hpp"
#include "clustermirror/syz_base.hpp"

using namespace clustermirror;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

StackyFan1D fan_of(std::vector<IntVec> rays) {
    StackyFan1D f;
    f.n = 2;
    for (auto& r : rays) f.rays.push_back({r, 1});
    return f;
}

} // namespace

TEST(SyzBase, MonodromyExamples) {
    EXPECT_EQ(monodromy_matrix({1, 0}), (IntMat{{1, -1}, {0, 1}}));
    EXPECT_EQ(monodromy_matrix({-1, -1}), (IntMat{{2, -1}, {1, 0}}));
    EXPECT_EQ(monodromy_matrix({-1, -1}).transpose(), (IntMat{{2, 1}, {-1, 0}}));
    EXPECT_EQ(monodromy_matrix({0, 1}), (IntMat{{1, 0}, {1, 1}}));
    EXPECT_THROW(monodromy_matrix({2, 0}), ValidationError);
}

TEST(SyzBase, ConjugationWitnessExamples) {
    auto w1 = conjugation_witness({1, 0});
    EXPECT_EQ(w1.A, IntMat::identity(2));
    EXPECT_EQ(w1.sign, -1);
    EXPECT_TRUE(check_conjugation({1, 0}, w1));
    auto w2 = conjugation_witness({0, 1});
    EXPECT_EQ(w2.A, (IntMat{{0, -1}, {1, 0}}));
    EXPECT_EQ(w2.sign, w1.sign);
    EXPECT_TRUE(check_conjugation({0, 1}, w2));
}

TEST(SyzBase, MonodromyProperties) {
    Rng rng(77);
    for (int c = 0; c < 500; ++c) {
        IntVec psi = random_primitive2(rng, 50);
        IntMat m = monodromy_matrix(psi);
        ASSERT_EQ(det(m), 1);
        ASSERT_EQ(m(0, 0) + m(1, 1), 2);
        ASSERT_EQ(m * psi, psi);
        ASSERT_EQ(monodromy_matrix(-psi), m);
        auto w = conjugation_witness(psi);
        ASSERT_EQ(w.sign, kSyzSign);
        ASSERT_TRUE(check_conjugation(psi, w));
    }
}

TEST(SyzBase, BaseFromFan) {
    IntegralAffineBase2D a2 = base_from_fan(fan_of({{1, 0}, {0, 1}}), {1, 1});
    ASSERT_EQ(a2.singularities.size(), 2u);
    EXPECT_EQ(a2.singularities[0].position, (RatVec{1, 0}));
    EXPECT_EQ(a2.singularities[1].cut_direction, (IntVec{0, 1}));
    EXPECT_EQ(a2.convention, Convention::Character);
    EXPECT_TRUE(base_from_fan(fan_of({})).singularities.empty());
    IntegralAffineBase2D one = base_from_fan(fan_of({{1, 1}}), {2});
    EXPECT_EQ(one.singularities[0].position, (RatVec{2, 2}));
    EXPECT_THROW(base_from_fan(fan_of({{1, 0}}), {0}), ValidationError);
    EXPECT_THROW(base_from_fan(fan_of({{1, 0}}), {-1}), ValidationError);
}

TEST(SyzBase, ToggleConvention) {
    IntegralAffineBase2D b = base_from_fan(fan_of({{-1, -1}}));
    IntegralAffineBase2D a = toggle_convention(b);
    EXPECT_EQ(a.convention, Convention::Cocharacter);
    EXPECT_EQ(a.singularities[0].monodromy, (IntMat{{2, 1}, {-1, 0}}));
    EXPECT_EQ(toggle_convention(a), b);
    IntegralAffineBase2D empty;
    EXPECT_EQ(toggle_convention(empty).singularities.size(), 0u);
}

TEST(SyzBase, ToggleCommutesWithTransposition) {
    Rng rng(4);
    for (int c = 0; c < 50; ++c) {
        IntegralAffineBase2D b = base_from_fan(fan_of({random_primitive2(rng), random_primitive2(rng)}));
        IntegralAffineBase2D t = toggle_convention(b);
        for (std::size_t i = 0; i < b.singularities.size(); ++i)
            ASSERT_EQ(t.singularities[i].monodromy, b.singularities[i].monodromy.transpose());
    }
}

TEST(SyzBase, RenderGolden) {
    IntegralAffineBase2D a2 = base_from_fan(fan_from_seed(a2_seed()));
    const std::string svg = render_svg(a2);
    EXPECT_EQ(svg, render_svg(a2));
    EXPECT_EQ(svg, io::read_file(std::string(CM_GOLDEN_DIR) + "/a2_syz.svg"));
}

TEST(SyzBase, RenderCounts) {
    IntegralAffineBase2D empty;
    const std::string e = render_svg(empty);
    EXPECT_EQ(count(e, "stroke-dasharray"), 0u);
    EXPECT_NE(e.find("<svg"), std::string::npos);
    IntegralAffineBase2D three = base_from_fan(fan_of({{1, 0}, {0, 1}, {-1, -1}}));
    EXPECT_EQ(count(render_svg(three), "stroke-dasharray:6,4"), 3u);
}

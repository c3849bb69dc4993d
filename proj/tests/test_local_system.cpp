#include <gtest/gtest.h>

#include "clustermirror/local_system.hpp"
#include "clustermirror/random.hpp"

using namespace clustermirror;

namespace {

LocalSystem rank1(const Rat& a, const Rat& b) {
    LocalSystem ls;
    ls.rank = 1;
    ls.holonomies = {RatMat(1, 1, a), RatMat(1, 1, b)};
    return ls;
}

LocalSystem diag2(const Rat& a1, const Rat& a2, const Rat& b1, const Rat& b2) {
    LocalSystem ls;
    ls.rank = 2;
    ls.holonomies = {RatMat{{a1, 0}, {0, a2}}, RatMat{{b1, 0}, {0, b2}}};
    return ls;
}

RationalFunction var(std::size_t i) { return RationalFunction::variable(2, i); }

} // namespace

TEST(LocalSystem, HolonomyAround) {
    EXPECT_EQ(holonomy_around(rank1(2, 3), {1, 1}), RatMat(1, 1, Rat(6)));
    EXPECT_EQ(holonomy_around(rank1(2, 3), {0, 0}), RatMat::identity(1));
    EXPECT_EQ(holonomy_around(rank1(2, 3), {-1, 2}), RatMat(1, 1, Rat(9, 2)));
    LocalSystem d = diag2(2, 3, 5, 7);
    EXPECT_EQ(holonomy_around(d, {2, 1}), (RatMat{{20, 0}, {0, 63}}));
}

TEST(LocalSystem, ValidationRejectsNonCommuting) {
    LocalSystem ls;
    ls.rank = 2;
    ls.holonomies = {RatMat{{1, 1}, {0, 1}}, RatMat{{1, 0}, {1, 1}}};
    EXPECT_THROW(ls.validate(), ValidationError);
    ls.holonomies = {RatMat{{1, 0}, {0, 0}}, RatMat::identity(2)};
    EXPECT_THROW(ls.validate(), ValidationError);
}

TEST(LocalSystem, IsMutable) {
    EXPECT_FALSE(is_mutable(rank1(1, 5), {1, 0}));
    EXPECT_TRUE(is_mutable(rank1(2, 5), {1, 0}));
    EXPECT_FALSE(is_mutable(diag2(1, 2, 3, 4), {1, 0}));
    EXPECT_TRUE(is_mutable(diag2(3, 2, 3, 4), {1, 0}));
}

TEST(LocalSystem, AdaptedRule) {
    const Rat a(3, 2), b(-5);
    auto m = mutate_local_system(rank1(a, b), {1, 0});
    EXPECT_EQ(m.gamma1, (IntVec{1, 0}));
    EXPECT_EQ(m.gamma2, (IntVec{0, 1}));
    EXPECT_EQ(m.adapted1, RatMat(1, 1, a));
    EXPECT_EQ(m.adapted2, RatMat(1, 1, (1 - a) * b));
}

TEST(LocalSystem, AdaptedBasisCrossesOnceAgainstCoorientation) {
    Rng rng(31);
    for (int c = 0; c < 100; ++c) {
        auto [ls, s] = random_mutable_local_system(rng, 1);
        auto m = mutate_local_system(ls, s);
        ASSERT_EQ(intersection_number(m.gamma2, s), -1);
        ASSERT_EQ(m.gamma1, s);
    }
}

TEST(LocalSystem, ObstructionRejected) {
    try {
        mutate_local_system(rank1(1, 2), {1, 0});
        FAIL() << "expected an error";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("det(I - E_S) = 0"), std::string::npos);
    }
    EXPECT_THROW(mutate_local_system(diag2(1, 2, 3, 4), {1, 0}), ValidationError);
}

TEST(LocalSystem, StandardBasisRule) {
    // E'(delta) = E(tau_s delta) (1 - x)^{-<delta, s>} with x = E(s).
    auto m = mutate_local_system(rank1(2, 3), {1, 0});
    // delta = e1: <e1, s> = 0, tau fixes e1.
    EXPECT_EQ(m.result.holonomies[0], RatMat(1, 1, Rat(2)));
    // delta = e2: <e2, s> = -1, tau e2 = (-1, 1): 3/2 * (1 - 2) = -3/2.
    EXPECT_EQ(m.result.holonomies[1], RatMat(1, 1, Rat(-3, 2)));
}

TEST(LocalSystem, RankTwoOutputsCommute) {
    LocalSystem ls;
    ls.rank = 2;
    RatMat C{{1, 2}, {3, -1}};
    ls.holonomies = {Rat(2) * RatMat::identity(2) + C, Rat(3) * RatMat::identity(2) - C};
    ls.validate();
    auto m = mutate_local_system(ls, {1, 1});
    m.result.validate();
    EXPECT_EQ(m.result.rank, 2u);
}

TEST(LocalSystem, SurgeryCircleUnaffected) {
    Rng rng(5);
    for (int c = 0; c < 100; ++c) {
        auto [ls, s] = random_mutable_local_system(rng, c % 2 == 0 ? 1 : 2);
        auto m = mutate_local_system(ls, s);
        ASSERT_EQ(holonomy_around(m.result, s), holonomy_around(ls, s));
        for (const auto& h : m.result.holonomies) ASSERT_NE(field_det(h), 0);
    }
}

TEST(LocalSystem, DoubleMutationCoherence) {
    // The sign is fixed on one instance ...
    {
        LocalSystem ls = rank1(2, 3);
        const IntVec s{1, 0};
        auto twice = mutate_local_system(mutate_local_system(ls, s).result, -s).result;
        LocalSystem back = reidentify(twice, s);
        EXPECT_EQ(back.holonomies[0], RatMat(1, 1, Rat(2)));
        EXPECT_EQ(back.holonomies[1], RatMat(1, 1, Rat(-3)));
        EXPECT_EQ(kLocalSystemSign, -1);
    }
    // ... and asserted on randomized ones.
    Rng rng(100);
    for (int c = 0; c < 100; ++c) {
        auto [ls, s] = random_mutable_local_system(rng, c % 2 == 0 ? 1 : 2);
        auto twice = mutate_local_system(mutate_local_system(ls, s).result, -s).result;
        ASSERT_EQ(reidentify(twice, s), coherence_prediction(ls, s));
    }
}

TEST(LocalSystem, UnsupportedRank) {
    LocalSystem ls;
    ls.rank = 1;
    ls.holonomies = {RatMat(1, 1, Rat(2)), RatMat(1, 1, Rat(3)), RatMat(1, 1, Rat(5))};
    EXPECT_THROW(mutate_local_system(ls, {1, 0}), ValidationError);
}

TEST(ChartTransition, A2FirstHandle) {
    ChartTransition t = chart_transition(a2_seed(), 0);
    EXPECT_EQ(t.s, (IntVec{0, 1}));
    RationalFunction one(1);
    EXPECT_EQ(t.first, var(0) * var(1) / (one - var(1)));
    EXPECT_EQ(t.second, var(1));
    EXPECT_EQ(t.first.to_string(), "-x1*x2/(x2 - 1)");
}

TEST(ChartTransition, ContainsTheSurgeryFactor) {
    ChartTransition t = chart_transition(a2_seed(), 0);
    RationalFunction one(1);
    RationalFunction monomial = t.first * (one - var(1));
    EXPECT_TRUE(monomial.denominator().is_constant());
    EXPECT_EQ(monomial.numerator().terms().size(), 1u);
}

TEST(ChartTransition, DegenerateSeedPropagates) {
    Seed s = a2_seed();
    s.B = IntMat(2, 2);
    EXPECT_THROW(chart_transition(s, 0), ValidationError);
}

TEST(ChartTransition, DoubleTransitionIsSignTwist) {
    for (std::size_t k = 0; k < 2; ++k) {
        ChartTransition t = chart_transition(a2_seed(), k);
        auto [a, b] = apply_transition(t.first, t.second, -t.s);
        SymbolicLocalSystem twice;
        twice.rank = 1;
        twice.holonomies = {Matrix<RationalFunction>(1, 1, a), Matrix<RationalFunction>(1, 1, b)};
        SymbolicLocalSystem back = reidentify(twice, t.s);
        SymbolicLocalSystem expected = coherence_prediction(generic_symbolic_system(2), t.s);
        EXPECT_EQ(back, expected);
    }
    ChartTransition t = chart_transition(a2_seed(), 0);
    auto [a, b] = apply_transition(t.first, t.second, -t.s);
    SymbolicLocalSystem twice;
    twice.rank = 1;
    twice.holonomies = {Matrix<RationalFunction>(1, 1, a), Matrix<RationalFunction>(1, 1, b)};
    SymbolicLocalSystem back = reidentify(twice, t.s);
    EXPECT_EQ(back.holonomies[0](0, 0), RationalFunction(0) - var(0));
    EXPECT_EQ(back.holonomies[1](0, 0), var(1));
}

#include <gtest/gtest.h>

#include "clustermirror/lattice.hpp"
#include "clustermirror/random.hpp"

using namespace clustermirror;

TEST(Lattice, IsPrimitive) {
    EXPECT_FALSE(is_primitive({2, 4}));
    EXPECT_TRUE(is_primitive({1, 0}));
    EXPECT_TRUE(is_primitive({3, 5, 7}));
    EXPECT_TRUE(is_primitive({-1, 0}));
}

TEST(Lattice, IsPrimitiveRejectsZero) {
    try {
        is_primitive({0, 0});
        FAIL() << "expected an error";
    } catch (const ValidationError& e) {
        EXPECT_STREQ(e.what(), "zero vector has no primitive test");
    }
}

TEST(Lattice, Det) {
    EXPECT_EQ(det(IntMat{{1, 1}, {0, 1}}), 1);
    EXPECT_EQ(det(IntMat{{2, 1}, {-1, 0}}), 1);
    EXPECT_EQ(det(IntMat::identity(4)), 1);
    EXPECT_EQ(det(IntMat{{0, 2, 1}, {1, 0, 0}, {3, 1, 4}}), -7);
    EXPECT_THROW(det(IntMat(2, 3)), ValidationError);
}

TEST(Lattice, SmithNormalFormExamples) {
    EXPECT_EQ(smith_normal_form(IntMat{{3, 0}, {0, 1}}).D, (IntMat{{1, 0}, {0, 3}}));
    EXPECT_EQ(smith_normal_form(IntMat::identity(2)).D, IntMat::identity(2));
    EXPECT_EQ(smith_normal_form(IntMat{{2, 4}, {0, 2}}).D, (IntMat{{2, 0}, {0, 2}}));
}

TEST(Lattice, SmithNormalFormRandomProperty) {
    Rng rng(11);
    for (int c = 0; c < 300; ++c) {
        const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 6));
        const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 6));
        IntMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-9, 9);
        SmithForm s = smith_normal_form(m);
        ASSERT_EQ(s.U * m * s.V, s.D);
        ASSERT_TRUE(is_unimodular(s.U));
        ASSERT_TRUE(is_unimodular(s.V));
        Int prev = 1;
        bool zero_seen = false;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                if (i != j) ASSERT_EQ(s.D(i, j), 0);
            }
        for (std::size_t i = 0; i < std::min(rows, cols); ++i) {
            const Int di = s.D(i, i);
            ASSERT_GE(di, 0);
            if (di == 0) {
                zero_seen = true;
                continue;
            }
            ASSERT_FALSE(zero_seen);
            ASSERT_EQ(di % prev, 0);
            prev = di;
        }
    }
}

TEST(Lattice, TorsionOrder) {
    EXPECT_EQ(torsion_order({{3, 0}}, 2), 3);
    EXPECT_EQ(torsion_order({{1, 0}}, 2), 1);
    EXPECT_EQ(torsion_order({}, 2), 1);
    QuotientInfo q = lattice_quotient({{3, 0}}, 2);
    EXPECT_EQ(q.torsion_order, 3);
    EXPECT_EQ(q.free_rank, 1u);
    EXPECT_TRUE(q.infinite());
    EXPECT_FALSE(lattice_quotient({{1, 0}, {0, 2}}, 2).infinite());
}

TEST(Lattice, TorsionScalesWithMultiplier) {
    Rng rng(5);
    for (int c = 0; c < 100; ++c) {
        IntVec v = random_primitive2(rng);
        const Int d = rng.uniform(1, 12);
        EXPECT_EQ(torsion_order({d * v}, 2), d * torsion_order({v}, 2));
    }
}

TEST(Lattice, SolveRationalPoint) {
    SolutionSet s = solve_rational(RatMat{{1, 0}, {0, 1}}, {1, 1});
    EXPECT_EQ(s.kind, SolutionSet::Kind::Point);
    EXPECT_EQ(s.point, (RatVec{1, 1}));
}

TEST(Lattice, SolveRationalInfeasible) {
    SolutionSet s = solve_rational(RatMat{{1}, {1}}, {0, 1});
    EXPECT_EQ(s.kind, SolutionSet::Kind::Infeasible);
    EXPECT_FALSE(s.feasible());
}

TEST(Lattice, SolveRationalLine) {
    SolutionSet s = solve_rational(RatMat{{1, 1}}, {2});
    EXPECT_EQ(s.kind, SolutionSet::Kind::Affine);
    ASSERT_EQ(s.dimension(), 1u);
    EXPECT_EQ(s.point[0] + s.point[1], 2);
    EXPECT_EQ(s.basis[0][0] + s.basis[0][1], 0);
}

TEST(Lattice, SolveRationalDimensionMismatch) {
    EXPECT_THROW(solve_rational(RatMat{{1, 1}}, {1, 2}), ValidationError);
}

TEST(Lattice, SolveRationalSubstitutes) {
    Rng rng(17);
    for (int c = 0; c < 200; ++c) {
        const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 5));
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        RatMat A(m, n);
        RatVec x0(n);
        for (std::size_t j = 0; j < n; ++j) x0[j] = Rat(rng.uniform(-5, 5), rng.uniform(1, 4));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) A(i, j) = rng.uniform(-3, 3);
        RatVec b = A * x0;
        SolutionSet s = solve_rational(A, b);
        ASSERT_TRUE(s.feasible());
        ASSERT_EQ(A * s.point, b);
        for (const auto& v : s.basis) ASSERT_EQ(A * v, RatVec(m, Rat(0)));
    }
}

TEST(Lattice, CompleteToUnimodular) {
    IntMat rows{{1, 0, 0}, {0, 1, 0}};
    IntMat a = complete_to_unimodular(rows);
    EXPECT_EQ(det(a), 1);
    EXPECT_EQ(a.row(0), rows.row(0));
    EXPECT_EQ(a.row(1), rows.row(1));
    IntMat skew{{2, 3, 5}};
    IntMat b = complete_to_unimodular(skew);
    EXPECT_EQ(det(b), 1);
    EXPECT_EQ(b.row(0), skew.row(0));
    EXPECT_THROW(complete_to_unimodular(IntMat{{2, 0, 0}}), ValidationError);
}

TEST(Lattice, InverseUnimodular) {
    IntMat m{{2, 1}, {1, 1}};
    EXPECT_EQ(m * inverse_unimodular(m), IntMat::identity(2));
    EXPECT_THROW(inverse_unimodular(IntMat{{2, 0}, {0, 1}}), ValidationError);
}

TEST(Lattice, ExtendedGcd) {
    auto [g, x, y] = extended_gcd(Int(12), Int(-18));
    EXPECT_EQ(g, 6);
    EXPECT_EQ(12 * x + (-18) * y, 6);
}

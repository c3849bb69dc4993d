#include <gtest/gtest.h>

#include <string>

#include "clustermirror/json_io.hpp"

using namespace clustermirror;

namespace {

std::string sample(const std::string& name) { return std::string(CM_SAMPLES_DIR) + "/" + name; }

} // namespace

TEST(JsonIo, SeedRoundTrip) {
    Seed s = io::seed_from_json(io::read_json(sample("a2.json")));
    EXPECT_EQ(s, a2_seed());
    EXPECT_EQ(io::seed_from_json(io::to_json(s)), s);
}

TEST(JsonIo, MalformedSeedReportsField) {
    try {
        io::seed_from_json(io::parse_text(R"({"rank": 2, "unfrozen": 2, "psi": [[1, 0], [0, "x"]], "B": [[0,1],[-1,0]]})",
                                          "inline"));
        FAIL() << "expected an error";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("seed.psi[1][1]"), std::string::npos);
    }
    try {
        io::parse_text("{\n  \"rank\": 2,\n  oops\n}", "bad.json");
        FAIL() << "expected an error";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(JsonIo, BigIntegersAndRationals) {
    Int big = Int(1) << 80;
    EXPECT_EQ(io::to_json(big), io::json(big.str()));
    EXPECT_EQ(io::parse_int(io::to_json(big), "x"), big);
    EXPECT_EQ(io::to_json(Rat(3, 4)), io::json("3/4"));
    EXPECT_EQ(io::parse_rat(io::json("-3/4"), "x"), Rat(-3, 4));
    EXPECT_EQ(io::parse_rat(io::json(5), "x"), Rat(5));
    EXPECT_THROW(io::parse_rat(io::json("1/0"), "x"), ValidationError);
    EXPECT_THROW(io::parse_int(io::json(1.5), "x"), ValidationError);
}

TEST(JsonIo, SkeletonRoundTrip) {
    Skeleton sk = skeleton_from_seed(a2_seed());
    EXPECT_EQ(io::skeleton_from_json(io::to_json(sk)), sk);
    Skeleton torus;
    torus.n = 2;
    io::json j = io::to_json(torus);
    EXPECT_TRUE(j["handles"].empty());
    EXPECT_EQ(io::skeleton_from_json(j), torus);
    EXPECT_EQ(io::dump(io::to_json(sk)), io::dump(io::to_json(io::skeleton_from_json(io::to_json(sk)))));
}

TEST(JsonIo, SkeletonFixture) {
    const std::string expected = io::read_file(std::string(CM_GOLDEN_DIR) + "/a2_skeleton.json");
    EXPECT_EQ(io::dump(io::to_json(skeleton_from_seed(a2_seed()))), expected);
}

TEST(JsonIo, LocalSystemRoundTrip) {
    LocalSystem ls = io::local_system_from_json(io::read_json(sample("rank2_local_system.json")));
    EXPECT_EQ(ls.rank, 2u);
    EXPECT_EQ(ls.holonomies[1](0, 0), Rat(1, 2));
    EXPECT_EQ(io::local_system_from_json(io::to_json(ls)), ls);
}

TEST(JsonIo, AffineBaseRoundTrip) {
    IntegralAffineBase2D b = base_from_fan(fan_from_seed(a2_seed()));
    EXPECT_EQ(io::affine_base_from_json(io::to_json(b)), b);
    IntegralAffineBase2D t = toggle_convention(b);
    EXPECT_EQ(io::affine_base_from_json(io::to_json(t)), t);
}

TEST(JsonIo, PolytopesAndTrades) {
    MomentPolytope p = io::polytope_from_json(io::read_json(sample("bl0c2_polygon.json")));
    EXPECT_EQ(p.polygon.vertices.size(), 2u);
    auto trades = io::trades_from_json(io::read_json(sample("bl0c2_trades.json")), 2);
    ASSERT_EQ(trades.size(), 2u);
    EXPECT_EQ(trades[1].vertex, 1u);
    EXPECT_EQ(trades[0].t, Rat(1, 5));
    MomentPolytope p4 = io::polytope_from_json(io::read_json(sample("c2_times_c2.json")));
    EXPECT_EQ(p4.dimension, 4u);
    auto faces = io::trades_from_json(io::read_json(sample("c2_times_c2_trades.json")), 4);
    EXPECT_EQ(faces[1].face, (std::pair<std::size_t, std::size_t>{2, 3}));
    EXPECT_EQ(io::polytope_from_json(io::to_json(p)), p);
}

TEST(JsonIo, GraphUsesOneBasedIndices) {
    io::json g = io::to_json(exchange_graph(a2_seed(), 1));
    EXPECT_EQ(g["nodes"].size(), 3u);
    EXPECT_EQ(g["nodes"][0]["id"], 1);
    for (const auto& e : g["edges"]) {
        EXPECT_GE(e["source"].get<int>(), 1);
        EXPECT_GE(e["index"].get<int>(), 1);
    }
    EXPECT_FALSE(g["truncated"].get<bool>());
}

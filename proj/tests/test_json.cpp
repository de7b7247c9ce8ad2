#include <gtest/gtest.h>

#include "splice/json_io.hpp"

using namespace splice;

TEST(Json, WeightRoundTrip) {
    const Params ctx(7, 2);
    const Weight w = make_weight(ctx, {2, 3}, 28);
    const Json j = to_json(w);
    EXPECT_EQ(j.dump(), R"({"m":28,"r":[2,3]})");
    EXPECT_EQ(weight_from_json(j, ctx), w);
    EXPECT_THROW(weight_from_json(Json{{"r", {9, 9}}, {"m", 0}}, ctx), Error);
    EXPECT_THROW(weight_from_json(Json{{"r", "x"}}, ctx), Error);
    EXPECT_EQ(bchar_from_json(to_json(BChar{3, 4})), (BChar{3, 4}));
}

TEST(Json, SplicedModuleShape) {
    const Params ctx(7, 2);
    const SplicedModule d = build_spliced(ctx, {2, 3});
    const Json j = to_json(d);
    EXPECT_EQ(j.at("length"), 14);
    EXPECT_EQ(j.at("summands").size(), d.summands.size());
    EXPECT_EQ(to_json(d).dump(), j.dump());
}

TEST(Json, Dot) {
    const Params ctx(7, 2);
    const std::string dot = to_dot(build_spliced(ctx, {2, 3}));
    EXPECT_EQ(dot.rfind("graph D0 {", 0), 0u);
    EXPECT_NE(dot.find("cluster"), std::string::npos);
    EXPECT_EQ(dot.back(), '\n');
}

TEST(Json, SweepTimingIsOptional) {
    SweepReport r;
    r.seconds = 1.5;
    EXPECT_FALSE(to_json(r, false).contains("seconds"));
    EXPECT_TRUE(to_json(r, true).contains("seconds"));
}

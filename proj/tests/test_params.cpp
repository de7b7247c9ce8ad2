#include <gtest/gtest.h>

#include <set>

#include "splice/params.hpp"

using namespace splice;

namespace {

// All weights of GL_2(F_{p^f}) for small p, f.
std::vector<Weight> all_weights(const Params& ctx) {
    std::vector<Weight> out;
    std::vector<int> r(static_cast<std::size_t>(ctx.f()), 0);
    while (true) {
        for (std::int64_t m = 0; m < ctx.det_mod(); ++m) out.push_back(Weight{r, m});
        std::size_t j = 0;
        while (j < r.size() && r[j] == ctx.p() - 1) r[j++] = 0;
        if (j == r.size()) break;
        ++r[j];
    }
    return out;
}

}  // namespace

TEST(Params, DerivedQuantities) {
    const Params odd(7, 3);
    EXPECT_EQ(odd.q(), 343);
    EXPECT_EQ(odd.l(), 3);
    EXPECT_EQ(odd.det_mod(), 342);
    const Params even(5, 2);
    EXPECT_EQ(even.l(), 4);
    EXPECT_EQ(even.reduce(-1), 23);
    EXPECT_EQ(even.reduce(48), 0);
    EXPECT_EQ(even.pow_p(2), 25);
}

TEST(Params, RejectsBadContexts) {
    for (auto [p, f] : std::vector<std::pair<int, int>>{{3, 2}, {2, 2}, {9, 2}, {7, 1}, {7, 0}}) {
        try {
            Params ctx(p, f);
            FAIL() << p << "," << f;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
        }
    }
}

TEST(Params, PrimalityAgainstTrialDivision) {
    for (std::int64_t n = -3; n < 2000; ++n) {
        bool expect = n >= 2;
        for (std::int64_t d = 2; d * d <= n && expect; ++d) expect = n % d != 0;
        EXPECT_EQ(is_prime(n), expect) << n;
    }
}

TEST(Weights, MakeWeightValidates) {
    const Params ctx(7, 2);
    EXPECT_EQ(make_weight(ctx, {2, 3}, 50).m, 2);
    EXPECT_EQ(make_weight(ctx, {2, 3}, -1).m, 47);
    EXPECT_THROW(make_weight(ctx, {7, 0}, 0), Error);
    EXPECT_THROW(make_weight(ctx, {1, 2, 3}, 0), Error);
    EXPECT_THROW(make_weight(ctx, {-1, 2}, 0), Error);
}

TEST(Weights, CharacterExamples) {
    const Params ctx(7, 2);
    EXPECT_EQ(chi(make_weight(ctx, {2, 3}, 0), ctx), (BChar{23, 0}));
    EXPECT_EQ(chi(make_weight(ctx, {0, 0}, 11), ctx), (BChar{11, 11}));
    const Params small(5, 2);
    EXPECT_EQ(chi(make_weight(small, {4, 4}, 0), small), (BChar{0, 0}));
    EXPECT_EQ(chi(make_weight(small, {4, 4}, 0), small), chi(make_weight(small, {0, 0}, 0), small));
}

TEST(Weights, SConj) {
    EXPECT_EQ(s_conj(BChar{23, 0}), (BChar{0, 23}));
    EXPECT_EQ(s_conj(BChar{5, 5}), (BChar{5, 5}));
    for (std::int64_t u = 0; u < 10; ++u)
        for (std::int64_t v = 0; v < 10; ++v) EXPECT_EQ(s_conj(s_conj(BChar{u, v})), (BChar{u, v}));
}

TEST(Weights, Genericity) {
    const Params ctx(7, 2);
    EXPECT_TRUE(is_generic(make_weight(ctx, {2, 3}, 5), ctx));
    EXPECT_FALSE(is_generic(make_weight(ctx, {0, 0}, 5), ctx));
    EXPECT_FALSE(is_generic(make_weight(ctx, {6, 6}, 0), ctx));
    EXPECT_TRUE(is_generic(make_weight(ctx, {6, 0}, 0), ctx));
}

TEST(Weights, SInvolutionExamples) {
    const Params ctx(7, 2);
    EXPECT_EQ(s_involution(make_weight(ctx, {2, 3}, 0), ctx), make_weight(ctx, {4, 3}, 23));
    const Params small(5, 2);
    EXPECT_EQ(s_involution(make_weight(small, {1, 1}, 0), small), make_weight(small, {3, 3}, 6));
    try {
        s_involution(make_weight(ctx, {0, 0}, 1), ctx);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonGenericWeight);
    }
}

TEST(Weights, ToString) { EXPECT_EQ(to_string(Weight{{2, 3}, 0}), "(2,3)(x)det^0"); }

class CharacterBijection : public ::testing::TestWithParam<int> {};

TEST_P(CharacterBijection, ExhaustiveOnGenericWeights) {
    const Params ctx(GetParam(), 2);
    std::set<BChar> seen;
    for (const auto& w : all_weights(ctx)) {
        if (!is_generic(w, ctx)) continue;
        const BChar c = chi(w, ctx);
        EXPECT_TRUE(seen.insert(c).second) << to_string(w);
        EXPECT_NE(c, s_conj(c));
        const Weight ws = s_involution(w, ctx);
        EXPECT_EQ(chi(ws, ctx), s_conj(c));
        EXPECT_EQ(s_involution(ws, ctx), w);
    }
    // q(q-1) weights minus 2(q-1) non-generic ones
    EXPECT_EQ(seen.size(), static_cast<std::size_t>((ctx.q() - 2) * ctx.det_mod()));
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, CharacterBijection, ::testing::Values(5, 7));

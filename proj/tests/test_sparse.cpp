#include <gtest/gtest.h>

#include <random>

#include "splice/sparse.hpp"

using namespace splice;

namespace {

// Dense rank over F_p (prime field only) by plain Gaussian elimination.
std::size_t dense_rank(std::vector<std::vector<int>> rows, int p) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        int inv = 1;
        while (inv * rows[rank][c] % p != 1) ++inv;
        for (auto& x : rows[rank]) x = x * inv % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const int factor = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - factor * rows[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST(SparseVec, Construction) {
    const SparseVec v({{3, 2}, {-1, 0}, {0, 5}});
    ASSERT_EQ(v.support_size(), 2u);
    EXPECT_EQ(v.min_index(), 0);
    EXPECT_EQ(v.at(3), 2u);
    EXPECT_EQ(v.at(7), 0u);
    EXPECT_THROW(SparseVec({{1, 1}, {1, 2}}), Error);
    EXPECT_TRUE(SparseVec().empty());
}

TEST(SparseVec, Arithmetic) {
    const GaloisField F(7, 1 + 1);
    const SparseVec a({{0, 1}, {1, 1}}), b({{1, 1}, {2, 3}});
    const SparseVec d = a.axpy(F, F.neg(F.one()), b);
    EXPECT_EQ(d, SparseVec({{0, 1}, {2, F.neg(3)}}));
    EXPECT_TRUE(a.axpy(F, F.neg(F.one()), a).empty());
    EXPECT_EQ(a.scaled(F, 0), SparseVec());
    EXPECT_EQ(a.shifted(-2), SparseVec({{-2, 1}, {-1, 1}}));
}

TEST(PivotKey, Order) {
    EXPECT_EQ(pivot_key(0), 0u);
    EXPECT_EQ(pivot_key(-1), 1u);
    EXPECT_EQ(pivot_key(1), 2u);
    EXPECT_EQ(pivot_key(-2), 3u);
    EXPECT_EQ(pivot_key(2), 4u);
}

TEST(Echelon, RankMatchesDenseOracle) {
    const int p = 5;
    const GaloisField F(p, 2);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        EchelonSpan span(&F);
        std::vector<std::vector<int>> dense;
        const int count = 1 + static_cast<int>(rng() % 8);
        for (int k = 0; k < count; ++k) {
            std::vector<SparseVec::Entry> entries;
            std::vector<int> row(9, 0);
            for (int i = -4; i <= 4; ++i) {
                // prime-field coefficients so the dense oracle applies; sparse-ish
                const int c = rng() % 3 == 0 ? static_cast<int>(rng() % p) : 0;
                row[static_cast<std::size_t>(i + 4)] = c;
                entries.emplace_back(i, static_cast<Elem>(c));
            }
            if (trial % 4 == 0 && k > 0) row = dense.back(), entries = {};
            if (entries.empty())
                for (int i = -4; i <= 4; ++i) entries.emplace_back(i, static_cast<Elem>(row[static_cast<std::size_t>(i + 4)]));
            span.insert(SparseVec(entries));
            dense.push_back(row);
        }
        EXPECT_EQ(span.rank(), dense_rank(dense, p));
    }
}

TEST(Echelon, CanonicalForm) {
    const GaloisField F(7, 2);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<SparseVec> gens;
        for (int k = 0; k < 4; ++k) {
            std::vector<SparseVec::Entry> e;
            for (int i = -3; i <= 3; ++i)
                if (rng() % 2) e.emplace_back(i, static_cast<Elem>(rng() % F.size()));
            gens.emplace_back(e);
        }
        EchelonSpan a(&F), b(&F);
        for (const auto& g : gens) a.insert(g);
        // same span from a shuffled and mixed generating set
        std::vector<SparseVec> mixed = gens;
        for (std::size_t k = 1; k < mixed.size(); ++k) mixed[k] = mixed[k].axpy(F, F.from_int(3), mixed[k - 1]);
        std::reverse(mixed.begin(), mixed.end());
        for (const auto& g : mixed) b.insert(g);
        EXPECT_EQ(a, b);
        for (const auto& g : gens) EXPECT_TRUE(b.contains(g));
        // RREF: leading coefficient 1, pivot columns clear elsewhere
        const auto rows = a.basis();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            int lead = rows[i].entries().front().first;
            for (const auto& [j, c] : rows[i].entries())
                if (pivot_key(j) < pivot_key(lead)) lead = j;
            EXPECT_EQ(rows[i].at(lead), 1u);
            for (std::size_t k = 0; k < rows.size(); ++k)
                if (k != i) EXPECT_EQ(rows[k].at(lead), 0u);
        }
    }
}

TEST(Echelon, InsertReportsGrowth) {
    const GaloisField F(5, 2);
    EchelonSpan s(&F);
    EXPECT_TRUE(s.insert(SparseVec::unit(0)));
    EXPECT_FALSE(s.insert(SparseVec::unit(0).scaled(F, 3)));
    EXPECT_FALSE(s.insert(SparseVec()));
    EXPECT_TRUE(s.insert(SparseVec({{0, 1}, {1, 1}})));
    EXPECT_TRUE(s.contains(SparseVec::unit(1)));
    EXPECT_EQ(s.rank(), 2u);
    EXPECT_TRUE(s.reduce(SparseVec::unit(2)) == SparseVec::unit(2));
}

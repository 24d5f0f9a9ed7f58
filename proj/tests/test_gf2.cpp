#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "concordia/gf2.hpp"

using concordia::gf2::BitMatrix;

namespace {

BitMatrix from_rows(std::size_t cols, const std::vector<std::vector<std::size_t>>& rows) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c : rows[r]) m.set(r, c);
    return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
    CHECK(BitMatrix(0, 5).rank_destructive() == 0);
    CHECK(BitMatrix(4, 4).rank_destructive() == 0);  // zero matrix

    auto id = from_rows(3, {{0}, {1}, {2}});
    CHECK(id.rank_destructive() == 3);

    // duplicated and dependent rows
    auto m = from_rows(4, {{0, 1}, {1, 2}, {0, 2}, {0, 1}});
    CHECK(m.rank_destructive() == 2);

    // wide matrix spanning across word boundaries
    auto w = from_rows(130, {{0, 129}, {129}, {0}, {64, 65}, {64}, {65}});
    CHECK(w.rank_destructive() == 4);
}

TEST_CASE("left kernel basis") {
    // rows 0 + 1 + 2 = 0; row 3 independent
    auto m = from_rows(3, {{0, 1}, {1, 2}, {0, 2}, {1}});
    auto copy = m;
    auto kernel = copy.left_kernel_destructive();
    REQUIRE(kernel.size() == 1);

    // verify the combination really kills every column
    std::vector<int> col_sum(3, 0);
    for (std::size_t r : kernel[0])
        for (std::size_t c = 0; c < 3; ++c) col_sum[c] ^= m.get(r, c) ? 1 : 0;
    CHECK(col_sum == std::vector<int>{0, 0, 0});
}

TEST_CASE("full-rank matrices have trivial left kernel") {
    auto id = from_rows(4, {{0}, {1}, {2}, {3}});
    CHECK(id.left_kernel_destructive().empty());
}

TEST_CASE("rank-nullity over random matrices") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng() % 40;
        std::size_t cols = 1 + rng() % 90;
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 3 == 0) m.set(r, c);

        BitMatrix for_rank = m;
        BitMatrix for_kernel = m;
        std::size_t rank = for_rank.rank_destructive();
        auto kernel = for_kernel.left_kernel_destructive();

        CHECK(rank <= rows);
        CHECK(rank <= cols);
        CHECK(kernel.size() == rows - rank);

        for (const auto& combo : kernel) {
            CHECK(!combo.empty());
            for (std::size_t c = 0; c < cols; ++c) {
                int s = 0;
                for (std::size_t r : combo) s ^= m.get(r, c) ? 1 : 0;
                CHECK(s == 0);
            }
        }
    }
}

TEST_CASE("set and flip address the right bits") {
    BitMatrix m(2, 70);
    m.set(0, 69);
    m.set(1, 0);
    m.flip(1, 0);
    m.flip(1, 1);
    CHECK(m.get(0, 69));
    CHECK_FALSE(m.get(0, 68));
    CHECK_FALSE(m.get(1, 0));
    CHECK(m.get(1, 1));
}

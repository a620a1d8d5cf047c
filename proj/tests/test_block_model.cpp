#include <doctest.h>

#include "mfblocks/block_model.hpp"

using namespace mfblocks;

namespace {

BlockStructure thirds() {
    return BlockStructure({Rational(1, 3), Rational(1, 3), Rational(1, 3)}, true);
}

} // namespace

TEST_SUITE("block_model") {

TEST_CASE("structure validation") {
    CHECK_NOTHROW(BlockStructure({Rational(1, 2), Rational(1, 2)}, true));
    CHECK_NOTHROW(BlockStructure({Rational(2), Rational(3)}, false));
    CHECK_THROWS_AS(BlockStructure({Rational(1, 2), Rational(1, 3)}, true), std::invalid_argument);
    CHECK_THROWS_AS(BlockStructure({Rational(-1), Rational(2)}, false), std::invalid_argument);
    CHECK_THROWS_AS(BlockStructure({}, true), std::invalid_argument);
    CHECK(thirds().dim(2) == Rational(1, 3));
    CHECK_THROWS_AS(thirds().dim(0), std::out_of_range);
    CHECK_THROWS_AS(thirds().dim(4), std::out_of_range);
}

TEST_CASE("covariance profile validation") {
    CovarianceProfile p;
    p.v["1"] = {{Rational(1), Rational(2)}, {Rational(2), Rational(1)}};
    p.hermitian = true;
    CHECK_NOTHROW(p.validate(2));
    CHECK(p.value("1", 1, 2) == Rational(2));
    CHECK_THROWS_AS(p.value("2", 1, 2), std::invalid_argument);

    CovarianceProfile bad = p;
    bad.v["1"][0][1] = Rational(3); // breaks symmetry
    CHECK_THROWS_AS(bad.validate(2), std::invalid_argument);
    bad.hermitian = false;
    CHECK_NOTHROW(bad.validate(2));

    CovarianceProfile neg = p;
    neg.v["1"][0][0] = Rational(-1);
    CHECK_THROWS_AS(neg.validate(2), std::invalid_argument);

    CHECK_THROWS_AS(p.validate(3), std::invalid_argument); // wrong size
}

TEST_CASE("block classification by zero pattern") {
    BlockStructure s({Rational(0), Rational(0), Rational(1)}, true);
    CHECK(classify_block(s, 3, 3) == BlockKind::balanced);
    CHECK(classify_block(s, 1, 3) == BlockKind::unbalanced);
    CHECK(classify_block(s, 3, 2) == BlockKind::unbalanced);
    CHECK(classify_block(s, 1, 2) == BlockKind::evanescent);
}

TEST_CASE("scaled covariance b = d_p v_pq") {
    BlockStructure s({Rational(1, 4), Rational(3, 4)}, true);
    std::vector<std::vector<Rational>> v{{Rational(1), Rational(2)}, {Rational(2), Rational(5)}};
    auto b = scaled_covariance(s, v);
    CHECK(b[0][1] == Rational(1, 2));  // d_1 * v_12
    CHECK(b[1][0] == Rational(3, 2));  // d_2 * v_21
    CHECK(b[1][1] == Rational(15, 4)); // d_2 * v_22
}

TEST_CASE("finite partition splits by largest remainder") {
    CHECK(finite_partition(7, thirds()) == std::vector<int>{3, 2, 2});
    CHECK(finite_partition(10, BlockStructure({Rational(1, 2), Rational(1, 2)}, true)) ==
          std::vector<int>{5, 5});
    // Uneven ratios: 10 * (2/3, 1/3) = (6.67, 3.33) -> (7, 3).
    CHECK(finite_partition(10, BlockStructure({Rational(2, 3), Rational(1, 3)}, true)) ==
          std::vector<int>{7, 3});
}

TEST_CASE("finite partition gives evanescent blocks n^alpha rows") {
    BlockStructure s({Rational(0), Rational(1)}, true);
    CHECK(finite_partition(100, s, 0.5) == std::vector<int>{10, 90});
    CHECK(finite_partition(9, s, 0.5) == std::vector<int>{3, 6});
    // alpha = 0.25: floor(100^(1/4)) = 3
    CHECK(finite_partition(100, s, 0.25) == std::vector<int>{3, 97});
    // Tiny n still gives every block a row.
    CHECK(finite_partition(2, s, 0.5) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(finite_partition(1, s, 0.5), std::invalid_argument);
}

TEST_CASE("partition always sums to n and covers every block") {
    BlockStructure s({Rational(1, 7), Rational(2, 7), Rational(4, 7)}, true);
    for (int n = 3; n <= 64; ++n) {
        auto dims = finite_partition(n, s);
        int total = 0;
        for (int d : dims) {
            CHECK(d >= 1);
            total += d;
        }
        CHECK(total == n);
    }
}

TEST_CASE("block ranges are consecutive half-open intervals") {
    auto ranges = block_ranges({3, 2, 2});
    REQUIRE(ranges.size() == 3);
    CHECK(ranges[0] == std::pair<int, int>{0, 3});
    CHECK(ranges[1] == std::pair<int, int>{3, 5});
    CHECK(ranges[2] == std::pair<int, int>{5, 7});
}

} // TEST_SUITE

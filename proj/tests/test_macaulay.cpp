#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "shadowcalc/macaulay.hpp"

using namespace shadowcalc;

TEST_CASE("binomial matches Pascal's rule on a dense grid") {
    for (unsigned a = 0; a <= 36; ++a)
        for (unsigned b = 0; b <= 36; ++b) CHECK(binomial(Int(a), Int(b)) == oracles::pascal_binomial(a, b));
}

TEST_CASE("binomial handles large and degenerate inputs") {
    CHECK(binomial(Int(52), Int(5)) == 2598960);
    CHECK(binomial(Int(100), Int(50)) == Int("100891344545564193334812497256"));
    CHECK(binomial(Int(3), Int(7)) == 0);
    CHECK(binomial(Int(0), Int(0)) == 1);
    CHECK_THROWS_AS(binomial(Int(-1), Int(2)), std::invalid_argument);
    CHECK_THROWS_AS(binomial(Int(4), Int(-2)), std::invalid_argument);
}

TEST_CASE("expand produces the canonical decomposition") {
    auto r = expand(Int(5), 1);
    CHECK(r.dim == 1);
    CHECK(r.uppers == std::vector<Int>{3, 2});  // 5 = C(3,2) + C(2,1)
    CHECK(expand(Int(10), 2).uppers == std::vector<Int>{5});        // 10 = C(5,3)
    CHECK(expand(Int(3), 2).uppers == std::vector<Int>{3, 2, 1});   // 3 = C(3,3) + C(2,2) + C(1,1)
    CHECK(expand(Int(7), 2).uppers == std::vector<Int>{4, 3});      // 7 = C(4,3) + C(3,2)
    CHECK(expand(Int(0), 4).uppers.empty());
    CHECK(expand(Int(0), 4).is_zero());
    CHECK_FALSE(expand(Int(1), 4).is_zero());
}

TEST_CASE("expansion lower indices descend from dim + 1") {
    auto r = expand(Int(7), 2);
    REQUIRE(r.term_count() == 2);
    CHECK(r.lower_index(0) == 3);
    CHECK(r.lower_index(1) == 2);
}

TEST_CASE("every value up to 300 has exactly one expansion (dims 0..4)") {
    for (unsigned dim = 0; dim <= 4; ++dim) {
        // the oracle throws if any two index lists share a value, so a map
        // of size 301 certifies existence and uniqueness on the whole range
        auto table = oracles::enumerate_expansions(dim, 300);
        REQUIRE(table.size() == 301);
        for (unsigned n = 0; n <= 300; ++n) {
            auto it = table.find(Int(n));
            REQUIRE(it != table.end());
            auto rep = expand(Int(n), dim);
            REQUIRE(rep.uppers.size() == it->second.size());
            for (std::size_t j = 0; j < rep.uppers.size(); ++j) CHECK(rep.uppers[j] == it->second[j]);
        }
    }
}

TEST_CASE("evaluate validates shape and inverts expand") {
    MacaulayRep bad;
    bad.dim = 1;
    bad.uppers = {Int(2), Int(2)};  // not strictly decreasing
    CHECK_THROWS_AS(evaluate(bad), std::invalid_argument);
    bad.uppers = {Int(1)};  // upper index below lower index 2
    CHECK_THROWS_AS(evaluate(bad), std::invalid_argument);
    bad.uppers = {Int(4), Int(3), Int(2)};  // three terms but dim + 1 = 2
    CHECK_THROWS_AS(evaluate(bad), std::invalid_argument);

    for (unsigned k : {0u, 1u, 2u, 5u, 9u})
        for (std::uint64_t n : {0ull, 1ull, 2ull, 17ull, 100ull, 12345ull, 999999937ull})
            CHECK(evaluate(expand(Int(n), k)) == Int(n));
}

TEST_CASE("expand rejects bad input") {
    CHECK_THROWS_AS(expand(Int(-3), 1), std::invalid_argument);
    CHECK_THROWS_AS(expand(Int(1), 1u << 30), std::invalid_argument);
}

TEST_CASE("expand handles values far beyond word size") {
    const Int big("123456789012345678901234567890123456789");
    for (unsigned k : {1u, 4u, 12u}) CHECK(evaluate(expand(big, k)) == big);
}

TEST_CASE("compare agrees with numeric order") {
    for (unsigned dim = 0; dim <= 3; ++dim)
        for (unsigned n = 0; n <= 120; ++n)
            for (unsigned m = 0; m <= 120; ++m) {
                auto c = compare(expand(Int(n), dim), expand(Int(m), dim));
                CHECK((c == std::strong_ordering::less) == (n < m));
                CHECK((c == std::strong_ordering::equal) == (n == m));
            }
    CHECK_THROWS_AS(compare(expand(Int(3), 1), expand(Int(3), 2)), std::invalid_argument);
}

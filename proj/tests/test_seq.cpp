#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "shadowcalc/seq.hpp"

using namespace shadowcalc;

TEST_CASE("construction canonicalizes trailing zeros") {
    CHECK(IntSeq({Int(1), Int(2), Int(0), Int(0)}) == IntSeq({Int(1), Int(2)}));
    CHECK(IntSeq({Int(0), Int(0)}) == IntSeq::zero());
    CHECK(IntSeq({Int(0), Int(0)}).is_zero());
    CHECK(IntSeq({Int(0), Int(1)}).size() == 2);
    CHECK_THROWS_AS(IntSeq({Int(1), Int(-2)}), std::invalid_argument);
}

TEST_CASE("at is total with zero padding") {
    const IntSeq s({Int(3), Int(1)});
    CHECK(s.at(0) == 3);
    CHECK(s.at(1) == 1);
    CHECK(s.at(2) == 0);
    CHECK(s.at(1000) == 0);
}

TEST_CASE("set grows, shrinks, and validates") {
    IntSeq s;
    s.set(2, Int(5));
    CHECK(s.size() == 3);
    CHECK(s.at(0) == 0);
    CHECK(s.at(2) == 5);
    s.set(2, Int(0));  // canonicalizes back to zero
    CHECK(s.is_zero());
    s.set(5, Int(0));  // writing zero past the end is a no-op
    CHECK(s.is_zero());
    CHECK_THROWS_AS(s.set(0, Int(-1)), std::invalid_argument);
}

TEST_CASE("componentwise order and arithmetic") {
    const IntSeq a({Int(1), Int(2)});
    const IntSeq b({Int(2), Int(2), Int(1)});
    CHECK(a.leq(b));
    CHECK_FALSE(b.leq(a));
    CHECK(IntSeq::zero().leq(a));
    CHECK(a.leq(a));

    CHECK(a.plus(b) == IntSeq({Int(3), Int(4), Int(1)}));
    CHECK(b.minus(a) == IntSeq({Int(1), Int(0), Int(1)}));
    CHECK(a.minus(a).is_zero());
    CHECK_THROWS_AS(a.minus(b), std::invalid_argument);
}

TEST_CASE("rendering") {
    CHECK(IntSeq({Int(4), Int(6), Int(4)}).str() == "4,6,4");
    CHECK(IntSeq::zero().str() == "0");
    CHECK(IntSeq({Int(7)}).str() == "7");
}

TEST_CASE("parsing accepts the CLI sequence format") {
    CHECK(parse_seq("3,3") == IntSeq({Int(3), Int(3)}));
    CHECK(parse_seq(" 4 , 6 , 4 ") == IntSeq({Int(4), Int(6), Int(4)}));
    CHECK(parse_seq("0").is_zero());
    CHECK(parse_seq("0,0,0").is_zero());
    CHECK(parse_seq("184467440737095516150") == IntSeq({Int("184467440737095516150")}));
}

TEST_CASE("parsing names the offending token") {
    CHECK_THROWS_WITH_AS(parse_seq("3,x,1"), "sequence: bad token \"x\"", std::invalid_argument);
    CHECK_THROWS_AS(parse_seq(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_seq("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_seq("-1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_seq("1,2,"), std::invalid_argument);
}

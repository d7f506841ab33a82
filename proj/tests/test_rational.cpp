#include "doctest.h"

#include "gorcontract/rational.hpp"

using namespace gorcontract;

TEST_SUITE_BEGIN("rational");

TEST_CASE("arithmetic is exact") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK(-a == Rat(-1, 3));
    CHECK(Rat(4, 6) == Rat(2, 3));
    CHECK(Rat(-4, -6) == Rat(2, 3));
    CHECK(Rat(4, -6) == Rat(-2, 3));
    CHECK(Rat(1, 3) < Rat(1, 2));
}

TEST_CASE("parse and render") {
    CHECK(Rat::parse("2/3").str() == "2/3");
    CHECK(Rat::parse("-6/4").str() == "-3/2");
    CHECK(Rat::parse("7").str() == "7");
    CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
}

TEST_CASE("overflow is detected") {
    Rat big(INT64_MAX, 1);
    CHECK_THROWS_AS(big * Rat(2), std::overflow_error);
}

TEST_CASE("half integers") {
    HalfInt h = HalfInt::parse("3/2");
    CHECK(h.twice == 3);
    CHECK(!h.is_integer());
    CHECK(h.str() == "3/2");
    CHECK(h.doubled() == HalfInt::whole(3));
    CHECK((h + h) == HalfInt::whole(3));
    CHECK((h - HalfInt::parse("1/2")) == HalfInt::whole(1));
    CHECK(HalfInt::parse("-3/2").str() == "-3/2");
    CHECK(HalfInt::whole(2).str() == "2");
    CHECK_THROWS_AS(HalfInt::parse("1/3"), std::invalid_argument);
    CHECK_THROWS_AS(HalfInt::parse("3/2").to_integer(), std::domain_error);
    CHECK(HalfInt::from_rat(Rat(5, 2)).twice == 5);
}

TEST_SUITE_END();

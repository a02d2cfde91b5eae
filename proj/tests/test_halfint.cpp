#include <doctest.h>

#include "curvegraph/halfint.hpp"

using curvegraph::HalfInt;

TEST_SUITE("halfint") {

TEST_CASE("construction and value") {
    CHECK(HalfInt{}.doubled == 0);
    CHECK(HalfInt::whole(3).doubled == 6);
    CHECK(HalfInt::half(5).doubled == 5);
    CHECK(HalfInt::from_doubled(-7).value() == doctest::Approx(-3.5));
    CHECK(HalfInt::whole(2).value() == 2.0);
}

TEST_CASE("arithmetic is exact") {
    HalfInt a = HalfInt::half(1);   // 1/2
    HalfInt b = HalfInt::half(-3);  // -3/2
    CHECK(a + b == HalfInt::whole(-1));
    CHECK(a - b == HalfInt::whole(2));
    CHECK(-b == HalfInt::half(3));
    HalfInt c;
    for (int i = 0; i < 1000; ++i) c += HalfInt::half(1);
    CHECK(c == HalfInt::whole(500));
    for (int i = 0; i < 1000; ++i) c -= HalfInt::half(1);
    CHECK(c == HalfInt{});
}

TEST_CASE("ordering") {
    CHECK(HalfInt::half(1) < HalfInt::whole(1));
    CHECK(HalfInt::whole(-2) < HalfInt::half(-3));
    CHECK(HalfInt::half(4) == HalfInt::whole(2));
    CHECK(HalfInt::half(3) >= HalfInt::half(3));
}

TEST_CASE("helpers") {
    CHECK(HalfInt::half(-5).pos() == HalfInt{});
    CHECK(HalfInt::half(5).pos() == HalfInt::half(5));
    CHECK(HalfInt::half(-5).abs() == HalfInt::half(5));
    CHECK(HalfInt::whole(4).is_integer());
    CHECK_FALSE(HalfInt::half(3).is_integer());
}

TEST_CASE("string form") {
    CHECK(HalfInt::whole(2).str() == "2");
    CHECK(HalfInt::whole(-1).str() == "-1");
    CHECK(HalfInt::half(5).str() == "5/2");
    CHECK(HalfInt::half(-3).str() == "-3/2");
    CHECK(HalfInt{}.str() == "0");
}

}  // TEST_SUITE

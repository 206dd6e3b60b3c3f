#include <doctest.h>

#include "sturmian/slope.hpp"

using namespace sturmian;

TEST_SUITE("slope") {

TEST_CASE("parse and render round-trip") {
    CHECK(Slope::parse("2,(1)").render() == "2,(1)");
    CHECK(Slope::parse("(2,1,3,1)").render() == "(2,1,3,1)");
    CHECK(Slope::parse("3,(1,2)").render() == "3,(1,2)");
    CHECK(Slope::parse(" 2, ( 1 ) ").render() == "2,(1)");
}

TEST_CASE("construction normalizes to the minimal form") {
    CHECK(Slope::parse("(2,1,2,1)").render() == "(2,1)");
    CHECK(Slope::parse("1,(2,1)").render() == "(1,2)");
    CHECK(Slope::parse("2,(1,1,1)").render() == "2,(1)");
    CHECK(Slope::parse("2,1,(2,1)").render() == "(2,1)");
}

TEST_CASE("malformed literals are rejected") {
    CHECK_THROWS_AS(Slope::parse("(0,1)"), InvalidSlope);
    CHECK_THROWS_AS(Slope::parse("()"), InvalidSlope);
    CHECK_THROWS_AS(Slope::parse("2,(1"), InvalidSlope);
    CHECK_THROWS_AS(Slope::parse("2(1)"), InvalidSlope);
    CHECK_THROWS_AS(Slope::parse("2,,(1)"), InvalidSlope);
    CHECK_THROWS_AS(Slope::parse("2"), InvalidSlope);
    CHECK_THROWS_AS(Slope::parse("(1,x)"), InvalidSlope);
    CHECK_THROWS_AS(Slope::parse(""), InvalidSlope);
    CHECK_THROWS_AS(Slope::parse("(1),2"), InvalidSlope);
}

TEST_CASE("digit reads the preperiod then cycles the period") {
    const Slope s = Slope::parse("(2,1,3,1)");
    CHECK(s.digit(6) == 1);
    CHECK(Slope::parse("2,(1)").digit(1) == 2);
    CHECK(Slope::parse("2,(1)").digit(100) == 1);
    CHECK_THROWS_AS(s.digit(0), IndexOutOfRange);
}

TEST_CASE("directive digits") {
    CHECK(Slope::parse("(2,1,3,1)").directive(1) == 1);
    CHECK(Slope::parse("3,(1,2)").directive(1) == 2);
    CHECK(Slope::parse("(2,1,3,1)").directive(5) == 2);
}

TEST_CASE("Fibonacci denominators") {
    const Slope fib = Slope::parse("2,(1)");
    const std::int64_t expect[] = {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144,
                                   233, 377, 610, 987, 1597, 2584, 4181, 6765, 10946, 17711};
    for (std::int64_t n = 0; n <= 20; ++n) CHECK(fib.q(n) == BigInt(expect[n]));
}

TEST_CASE("convergent base cases and examples") {
    const Slope s = Slope::parse("(2,1,3,1)");
    CHECK(s.q(3) == 11);
    CHECK(s.q(0) == 1);
    CHECK(s.p(0) == 0);
    CHECK(s.q(-1) == 1);
}

TEST_CASE("convergent recurrence battery") {
    for (const char* lit : {"2,(1)", "(2,1)", "(2,1,3,1)", "3,(1,2)", "(4,1,2)"}) {
        const Slope s = Slope::parse(lit);
        for (std::int64_t n = 2; n <= 40; ++n) {
            const BigInt a = s.digit(n);
            CHECK(s.q(n) == a * s.q(n - 1) + s.q(n - 2));
            CHECK(s.p(n) == a * s.p(n - 1) + s.p(n - 2));
            CHECK(boost::multiprecision::gcd(s.p(n), s.q(n)) == 1);
            CHECK(s.q(n) > s.q(n - 1));
        }
    }
}

TEST_CASE("shifted slopes") {
    CHECK(Slope::parse("(2,1,3,1)").shifted(2, -1) == Slope::parse("2,(1,2,1,3)"));
    const Slope s = Slope::parse("3,(1,2)");
    CHECK(s.shifted(0, 0) == s);
    CHECK(Slope::parse("(2,1)").shifted(3, 1) == Slope::parse("2,(2,1)"));
    CHECK_THROWS_AS(Slope::parse("2,(1)").shifted(1, -1), KOutOfRange);
}

TEST_CASE("shifted digit relation") {
    for (const char* lit : {"2,(1)", "(2,1)", "(2,1,3,1)", "3,(1,2)"}) {
        const Slope s = Slope::parse(lit);
        for (std::int64_t n = 0; n <= 6; ++n)
            for (std::int64_t k : {-s.digit(n + 1) + 1, std::int64_t(0), std::int64_t(1), std::int64_t(3)}) {
                const Slope t = s.shifted(n, k);
                CHECK(t.digit(1) == s.digit(n + 1) + k);
                for (std::int64_t i = 2; i <= 12; ++i) CHECK(t.digit(i) == s.digit(n + i));
            }
    }
}

TEST_CASE("complement") {
    CHECK(Slope::parse("(1,1)").complement() == Slope::parse("2,(1)"));
    CHECK(Slope::parse("3,(2)").complement() == Slope::parse("1,(2)"));
    for (const char* lit : {"2,(1)", "(2,1)", "(2,1,3,1)", "3,(1,2)", "(1,4)", "1,2,(3)"}) {
        const Slope s = Slope::parse(lit);
        CHECK(s.complement().complement() == s);
        const bool starts_one = s.digit(1) == 1;
        CHECK((s.complement().digit(1) == 1) == !starts_one);
    }
}

TEST_CASE("semantic equality ignores representation") {
    CHECK(Slope::parse("2,(1,1)") == Slope::parse("2,(1)"));
    CHECK(Slope::parse("(2,1)") == Slope::parse("2,1,(2,1)"));
    CHECK(Slope::parse("(2,1)") != Slope::parse("(1,2)"));
}

} // TEST_SUITE

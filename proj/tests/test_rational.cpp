#include <random>

#include "cliffordix/rational.hpp"
#include "doctest.h"

using namespace cliffordix;

TEST_CASE("construction normalizes to lowest terms") {
    CHECK(Rational(4, 2) == Rational(2));
    CHECK(Rational(4, 2).num() == 2);
    CHECK(Rational(4, 2).den() == 1);

    CHECK(Rational(3, -6).num() == -1);
    CHECK(Rational(3, -6).den() == 2);

    CHECK(Rational(0, 5).num() == 0);
    CHECK(Rational(0, 5).den() == 1);

    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("floor_div follows mathematical floor") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-1, 5) == -1);
    CHECK(floor_div(10, 5) == 2);
    CHECK(floor_div(-10, 5) == -2);
    CHECK(floor_div(-11, 5) == -3);
    CHECK_THROWS_AS(floor_div(1, 0), DomainError);
    CHECK_THROWS_AS(floor_div(1, -2), DomainError);

    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-1, 5) == 0);
    CHECK(ceil_div(10, 5) == 2);
}

TEST_CASE("arithmetic is exact on random small fractions") {
    std::mt19937_64 rng(20240311);
    std::uniform_int_distribution<Int> num(-1000, 1000);
    std::uniform_int_distribution<Int> den(1, 1000);
    for (int i = 0; i < 2000; ++i) {
        Int a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Rational x(a, b), y(c, d);
        // (a/b + c/d) * (b d) = a d + c b as an integer identity
        Rational sum = (x + y) * Rational(b * d);
        CHECK(sum == Rational(a * d + c * b));
        CHECK(x * y == Rational(a * c, b * d));
        if (c != 0) CHECK(x / y * y == x);
        CHECK(x - y + y == x);
    }
}

TEST_CASE("ordering agrees with cross multiplication") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> num(-500, 500);
    std::uniform_int_distribution<Int> den(1, 500);
    for (int i = 0; i < 2000; ++i) {
        Int a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        bool lt = a * d < c * b;
        CHECK((Rational(a, b) < Rational(c, d)) == lt);
    }
}

TEST_CASE("floor_div brackets the exact quotient") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<Int> num(-2000, 2000);
    std::uniform_int_distribution<Int> den(1, 200);
    for (int i = 0; i < 2000; ++i) {
        Int a = num(rng), b = den(rng);
        Int q = floor_div(a, b);
        CHECK(Rational(q) <= Rational(a, b));
        CHECK(Rational(a, b) < Rational(q + 1));
    }
}

TEST_CASE("overflow aborts loudly instead of wrapping") {
    Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(checked::add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked::mul(big, 2), OverflowError);
    CHECK_THROWS_AS(Rational(big, 1) + Rational(big, 1), OverflowError);
}

TEST_CASE("string round trip") {
    CHECK(Rational(9, 5).str() == "9/5");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational::parse("9/5") == Rational(9, 5));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(!Rational::parse("x/2").has_value());
    CHECK(!Rational::parse("1/0").has_value());

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Int> num(-300, 300);
    std::uniform_int_distribution<Int> den(1, 300);
    for (int i = 0; i < 500; ++i) {
        Rational x(num(rng), den(rng));
        CHECK(Rational::parse(x.str()) == x);
    }
}

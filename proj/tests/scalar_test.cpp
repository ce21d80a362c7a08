#include <doctest.h>

#include <random>

#include "atl/scalar.hpp"

using atl::Scalar;
using atl::format_scalar;
using atl::parse_scalar;

TEST_CASE("arithmetic on small values") {
    const Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    CHECK(Scalar::fraction(1, 2) + Scalar::fraction(1, 2) == Scalar(1));
    CHECK((-i).inverse() == i);
    CHECK(Scalar(3) - Scalar(5) == Scalar(-2));
    CHECK(Scalar(1) / Scalar(2, 2) == Scalar(mpq_class(1, 4), mpq_class(-1, 4)));
}

TEST_CASE("zero has one representation") {
    Scalar z = Scalar(mpq_class(2, 4)) - Scalar::fraction(1, 2);
    CHECK(z.is_zero());
    CHECK(z == Scalar());
    CHECK(z.hash() == Scalar().hash());
    CHECK(format_scalar(z) == "0");
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
    CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
    CHECK_THROWS(Scalar::fraction(1, 0));
}

TEST_CASE("parse and format") {
    CHECK(parse_scalar("1/2+1/2i") == Scalar(mpq_class(1, 2), mpq_class(1, 2)));
    CHECK(parse_scalar("-2") == Scalar(-2));
    CHECK(parse_scalar("3/4i") == Scalar(0, mpq_class(3, 4)));
    CHECK(parse_scalar("-i") == -Scalar::i());
    CHECK(parse_scalar("2/4") == Scalar::fraction(1, 2));
    for (const char* t : {"1/2+1/2i", "-2", "3/4i", "i", "-i", "0", "-1/3-5/7i"}) CHECK(format_scalar(parse_scalar(t)) == t);
    CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("1+"), std::invalid_argument);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(11);
    auto draw = [&] {
        std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
        return Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
    };
    for (int t = 0; t < 300; ++t) {
        Scalar a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
        CHECK(parse_scalar(format_scalar(a)) == a);
    }
}

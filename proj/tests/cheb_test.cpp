#include <doctest.h>

#include "atl/cheb.hpp"

using namespace atl;

TEST_CASE("first and second kind") {
    const IntPolynomial x = IntPolynomial::x();
    CHECK(cheb_first(0) == IntPolynomial(2));
    CHECK(cheb_first(1) == x);
    CHECK(cheb_first(2) == x * x - IntPolynomial(2));
    CHECK(cheb_second(2) == x * x - IntPolynomial(1));
    CHECK(cheb_first(4).text() == "X^4-4X^2+2");
    CHECK(cheb_second(3).text() == "X^3-2X");
    CHECK(cheb_first(0).text() == "2");
    CHECK(IntPolynomial().text() == "0");
    CHECK_THROWS_AS(cheb_first(-1), std::invalid_argument);
}

TEST_CASE("values at X = 2") {
    for (int m = 0; m <= 12; ++m) {
        CHECK(cheb_first(m).eval(2) == 2);
        CHECK(cheb_second(m).eval(2) == m + 1);
    }
}

TEST_CASE("multiplication rules") {
    CHECK(cheb_first(2) * cheb_first(3) == cheb_first(5) + cheb_first(1));
    CHECK(cheb_second(1) * cheb_second(1) == cheb_second(2) + cheb_second(0));
    CHECK(cheb_second(4) == cheb_first(4) + cheb_second(2));
    for (int m = 0; m <= 12; ++m) {
        CHECK(verify_basis_change(m));
        for (int n = 0; n <= 12; ++n) CHECK(verify_mult(m, n));
    }
    CHECK(chebyshev_report(12).all_pass());
}

TEST_CASE("rank bookkeeping against the diagrams") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
        Report r = decat_check(m, n);
        CHECK_MESSAGE(r.all_pass(), r.text());
    }
    Report s = symmetric_check(3);
    CHECK_MESSAGE(s.all_pass(), s.text());
}

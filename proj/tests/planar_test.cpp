#include <doctest.h>

#include "atl/planar.hpp"
#include "atl/projectors.hpp"

using namespace atl;

TEST_CASE("planarity") {
    CHECK(is_planar(gen::u(2, 1)));
    CHECK_FALSE(is_planar(gen::u(2, 0)));
    CHECK_FALSE(is_planar(extremal(2).morphism()));
    CHECK(is_planar(jones_wenzl(4)));
}

TEST_CASE("Jones-Wenzl projectors") {
    CHECK(jones_wenzl(1) == gen::id(1));
    CHECK(jones_wenzl(2) == gen::id(2) + Scalar::fraction(1, 2) * gen::u(2, 1));
    CHECK_THROWS_AS(jones_wenzl(0), std::invalid_argument);
    for (int m = 1; m <= 6; ++m) {
        const Morphism& p = jones_wenzl(m);
        CHECK(p * p == p);
        for (int i = 1; i < m; ++i) {
            CHECK((p * gen::u(m, i)).is_zero());
            CHECK((gen::u(m, i) * p).is_zero());
        }
    }
    Report r = verify_jw(5);
    CHECK_MESSAGE(r.all_pass(), r.text());
}

TEST_CASE("Jones-Wenzl closure and splitting") {
    CHECK(partial_trace(jones_wenzl(2)) == Scalar::fraction(-3, 2) * jones_wenzl(1));
    for (int m : {2, 3, 5}) CHECK(jw_partial_trace_check(m));
    for (int m : {2, 3, 4}) CHECK(jw_k0_check(m));
    JwSplitting s = jw_splitting(3);
    CHECK(s.f.dom() == 2);
    CHECK(s.f.cod() == 4);
    CHECK(s.g * s.f == jones_wenzl(2));
}

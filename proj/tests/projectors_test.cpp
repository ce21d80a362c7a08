#include <doctest.h>

#include "atl/projectors.hpp"
#include "atl/rep.hpp"

using namespace atl;

TEST_CASE("small extremal projectors") {
    CHECK(extremal(0).morphism() == Scalar(2) * gen::id(0));
    CHECK(extremal(1).morphism() == gen::id(1));
    Morphism t2 = gen::id(2) + Scalar::fraction(1, 2) * gen::u(2, 1) + Scalar::fraction(1, 2) * gen::u(2, 0);
    CHECK(extremal(2).morphism() == t2);
    CHECK(extremal(2).morphism().size() == 3);
    CHECK_THROWS_AS(extremal(-1), std::invalid_argument);
}

TEST_CASE("extremal images match the diagonal oracle") {
    for (int m = 1; m <= 6; ++m) CHECK(wm_eq(extremal(m).image(), extremal_matrix(m)));
}

TEST_CASE("projector properties") {
    for (int m = 2; m <= 4; ++m) {
        Report r = verify_properties(m);
        CHECK_MESSAGE(r.all_pass(), r.text());
    }
    Hybrid t2 = extremal(2);
    CHECK(is_zero(compose(t2, Hybrid(gen::u(2, 0)))));
    CHECK(is_zero(compose(t2, Hybrid(gen::u(2, 1)))));
    Hybrid t3 = extremal(3);
    CHECK(ess_equal(chain(Hybrid(gen::d(3, -1)), t3, Hybrid(gen::d(3, 1))), t3));
    Hybrid t4 = extremal(4);
    CHECK(ess_equal(compose(t4, iota_pow(extremal(2), 2)), t4));
}

TEST_CASE("partial trace of extremal projectors") {
    for (int m = 1; m <= 5; ++m) {
        const int n = m - 1;
        Hybrid closed = chain(Hybrid(gen::cap(n + 2, n + 1)), iota(extremal(m)), Hybrid(gen::cup(n, n + 1)));
        CHECK(ess_equal(closed, Scalar(-1) * extremal(m - 1)));
    }
    CHECK(partial_trace(extremal(2).morphism()) == Scalar(-1) * gen::id(1));
}

TEST_CASE("highest and lowest weight projectors") {
    for (int m = 2; m <= 4; ++m) {
        CHECK(wm_eq(highest(m).image(), extreme_vector_projector(m, true)));
        CHECK(wm_eq(lowest(m).image(), extreme_vector_projector(m, false)));
        CHECK(ess_equal(highest(m) + lowest(m), extremal(m)));
    }
    CHECK(highest(2).morphism().size() == 6);
    CHECK(syntactic_eq(highest(2).morphism() + lowest(2).morphism(), extremal(2).morphism()));
    CHECK_THROWS_AS(highest(1), std::invalid_argument);
}

TEST_CASE("splitting idempotents") {
    Morphism conj = gen::d(2, -1) * gen::u(2, 1) * gen::d(2, 1);
    CHECK(split_idempotent(1, 1).morphism() == Scalar::fraction(-1, 2) * (gen::u(2, 1) + conj));
    Hybrid e21 = split_idempotent(2, 1);
    CHECK(ess_equal(compose(e21, e21), e21));
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {3, 2}}) {
        Report r = verify_split(m, n);
        CHECK_MESSAGE(r.all_pass(), r.text());
    }
    CHECK_THROWS_AS(split_idempotent(0, 1), std::invalid_argument);
}

TEST_CASE("projector lemmas") {
    CHECK(linked_check(2, 1));
    CHECK(linked_check(1, 2));
    CHECK(overlap_check(3, 2, 1));
    CHECK(overlap_check(2, 2, 0));
    CHECK(nested_form_check(2, 2, 1));
    CHECK(nested_form_check(2, 1, 1));
    CHECK(kariso_check(2, 1));
    CHECK(kariso_check(1, 1));
    CHECK_THROWS_AS(overlap_check(2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(nested_form_check(1, 1, 1), std::invalid_argument);
}

TEST_CASE("isomorphisms between summands") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {1, 3}}) {
        Report plain = verify_iso(iso_diff(m, n), "plain");
        Report twisted = verify_iso(iso_diff_twisted(m, n), "twisted");
        CHECK_MESSAGE(plain.all_pass(), plain.text());
        CHECK_MESSAGE(twisted.all_pass(), twisted.text());
        IsoPair t = iso_diff_twisted(m, n);
        CHECK(wm_eq(s2_conjugate(t.fwd.image()), t.fwd.image()));
        CHECK(wm_eq(s2_conjugate(t.bwd.image()), t.bwd.image()));
    }
    CHECK_THROWS_AS(iso_diff(2, 2), std::invalid_argument);
    for (int m = 1; m <= 3; ++m) {
        Report r = verify_iso_equal(m);
        CHECK_MESSAGE(r.all_pass(), r.text());
    }
    auto [a, b] = iso_equal(2);
    CHECK(is_zero(compose(a.bwd, b.fwd)));
}

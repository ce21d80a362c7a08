#include <doctest.h>

#include <set>

#include "atl/canon.hpp"
#include "atl/projectors.hpp"
#include "atl/rep.hpp"

using namespace atl;

namespace {

Morphism w1() { return gen::cup(0, 1); }
Morphism w2() { return gen::d(2, 1) * gen::cup(0, 1); }

} // namespace

TEST_CASE("labels for hom(0,2)") {
    CHECK(Morphism(matching_from_labels(parse_labels("io"))) == w1());
    CHECK(Morphism(matching_from_labels(parse_labels("oi"))) == w2());
    CHECK(label_text(labels_from_matching(w2().terms()[0].first)) == "oi");
    CHECK_THROWS_AS(matching_from_labels(parse_labels("ii")), std::invalid_argument);
}

TEST_CASE("label bijection round trip") {
    for (int two_n = 2; two_n <= 8; two_n += 2) {
        std::set<AnnularDiagram> seen;
        for (const auto& ls : enumerate_labels(two_n)) {
            AnnularDiagram d = matching_from_labels(ls);
            CHECK(labels_from_matching(d) == ls);
            seen.insert(d);
        }
        CHECK(seen.size() == enumerate_labels(two_n).size());
    }
}

TEST_CASE("basis sizes") {
    CHECK(enumerate_basis(2).size() == 2);
    CHECK(enumerate_basis(4).size() == 6);
    CHECK(enumerate_basis(6).size() == 20);
    CHECK(enumerate_basis(8).size() == 70);
    CHECK_THROWS_AS(enumerate_basis(3), std::invalid_argument);
}

TEST_CASE("transport to hom(0, 2n) and back") {
    Morphism f = f_apply(gen::id(1));
    REQUIRE(f.size() == 1);
    CHECK(f.dom() == 0);
    CHECK(f.cod() == 2);
    CHECK(f.terms()[0].first.arcs().size() == 1);
    CHECK(ess_equal(f_inverse(f_apply(gen::u(2, 1)), 2), gen::u(2, 1)));
    CHECK(f_apply(gen::d_pow(1, 2)).cod() == 2);
    Morphism t3 = extremal(3).morphism();
    CHECK(ess_equal(f_inverse(f_apply(t3), 3), t3));
}

TEST_CASE("coordinates") {
    CHECK(coordinates(gen::d_pow(1, 2)) == std::vector<Scalar>{-1, 0});
    CHECK(basis_expansion(gen::id(1)) == std::vector<Scalar>{1, 0});
    CHECK(coordinates(gen::u(2, 0)) == coordinates(gen::d(2, 1) * gen::u(2, 1) * gen::d(2, -1)));
    Morphism x = Scalar::fraction(1, 2) * (w1() - Scalar::i() * w2());
    std::vector<Scalar> c = coordinates(x);
    CHECK(c == std::vector<Scalar>{Scalar::fraction(1, 2), Scalar(0, mpq_class(-1, 2))});
    CHECK(wm_eq(phi(x), WeightMap::from_entries(0, 2, {{{parse_sign_string("+-"), 0}, 1}})));
    CHECK(basis_expansion(gen::d_pow(1, 2)) == coordinates(gen::d_pow(1, 2)));
}

TEST_CASE("ess equality") {
    CHECK(ess_equal(gen::d_pow(1, 2), Scalar(-1) * gen::id(1)));
    CHECK(ess_equal(gen::d(1, 1), Scalar(-1) * gen::d(1, -1)));
    CHECK_FALSE(ess_equal(gen::u(2, 1), gen::u(2, 0)));
    CHECK_FALSE(ess_equal(gen::id(1), gen::id(2)));
}

TEST_CASE("reduction onto a fixed basis") {
    for (int m = 2; m <= 4; ++m) {
        Morphism t = extremal(m).morphism();
        Morphism r = ess_reduce(t);
        CHECK(ess_equal(r, t));
        CHECK(r.size() <= reduction_basis(m, m).size());
    }
    CHECK(ess_reduce(gen::d_pow(1, 2)) == Scalar(-1) * gen::id(1));
}

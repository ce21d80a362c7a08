#include <doctest.h>

#include <algorithm>

#include "atl/diagram.hpp"
#include "atl/morphism.hpp"

using namespace atl;

namespace {

Point pt(const char* s) { return parse_point_label(s); }

RawDiagram raw(int dom, int cod, int seam, std::vector<std::pair<const char*, const char*>> arcs) {
    RawDiagram r{dom, cod, seam, 0, {}};
    for (auto [a, b] : arcs) r.arcs.push_back({pt(a), pt(b)});
    return r;
}

} // namespace

TEST_CASE("canonicalize leaves a double wind alone") {
    Reduction r = canonicalize(raw(1, 1, 2, {{"I0", "R0"}, {"L0", "R1"}, {"L1", "O0"}}));
    CHECK(r.diagram.seam() == 2);
    CHECK(r.inessential == 0);
    CHECK(r.essential == 0);
    CHECK(canonicalize(expand(r.diagram)).diagram == r.diagram);
}

TEST_CASE("canonicalize removes a seam bigon") {
    Reduction r = canonicalize(raw(1, 1, 2, {{"I0", "L0"}, {"R0", "R1"}, {"L1", "O0"}}));
    CHECK(r.diagram == diagrams::identity(1));
}

TEST_CASE("crossing arcs are rejected") {
    CHECK_THROWS_AS(canonicalize(raw(2, 2, 0, {{"I0", "O1"}, {"I1", "O0"}})), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(raw(2, 0, 0, {{"I0", "I0"}})), std::invalid_argument);
}

TEST_CASE("stacking two planar matchings closes one loop") {
    AnnularDiagram lower = canonicalize(raw(1, 5, 0, {{"O0", "O3"}, {"O1", "O2"}, {"I0", "O4"}})).diagram;
    AnnularDiagram upper = canonicalize(raw(5, 3, 0, {{"I1", "I2"}, {"O0", "O1"}, {"I0", "O2"}, {"I3", "I4"}})).diagram;
    Reduction r = compose(lower, upper);
    CHECK(r.inessential == 1);
    CHECK(r.essential == 0);
    CHECK(r.diagram == canonicalize(raw(1, 3, 0, {{"O0", "O1"}, {"I0", "O2"}})).diagram);
    CHECK_THROWS_AS(compose(upper, lower), std::invalid_argument);
}

TEST_CASE("identity composes trivially") {
    AnnularDiagram w = diagrams::rotation(3, 1);
    Reduction r = compose(diagrams::identity(3), w);
    CHECK(r.diagram == w);
    CHECK(r.inessential + r.essential == 0);
}

TEST_CASE("D composed with D on one strand winds twice") {
    Reduction r = compose(diagrams::rotation(1, 1), diagrams::rotation(1, 1));
    CHECK(r.diagram.seam() == 2);
    CHECK(r.inessential + r.essential == 0);
}

TEST_CASE("Temperley-Lieb relations") {
    CHECK(gen::u(2, 1) * gen::u(2, 1) == Scalar(-2) * gen::u(2, 1));
    CHECK(gen::u(3, 1) * gen::u(3, 2) * gen::u(3, 1) == gen::u(3, 1));
    CHECK(gen::d(1, 1) * gen::d(1, -1) == gen::id(1));
    CHECK_FALSE(gen::u(2, 0) == gen::u(2, 1));
    for (int n = 2; n <= 6; ++n)
        for (int i = 0; i < n; ++i)
            CHECK(compose(gen::u(n, i), gen::d(n, 1), Mode::raw) == compose(gen::d(n, 1), gen::u(n, i + 1), Mode::raw));
}

TEST_CASE("closing a strand around the core") {
    Morphism raw_loop = compose(gen::cap(2, 1), compose(gen::d(2, 1), gen::cup(0, 1), Mode::raw), Mode::raw);
    REQUIRE(raw_loop.size() == 1);
    CHECK(raw_loop.terms()[0].first.ess() == 1);
    CHECK(compose(gen::cap(2, 1), compose(gen::d(2, 1), gen::cup(0, 1))).is_zero());
    CHECK(quotient(gen::essential_circle(0)).is_zero());
    CHECK(gen::essential_circle(0) == raw_loop);
}

TEST_CASE("crossings") {
    CHECK(gen::crossing(2, 1) * gen::crossing(2, 1) == gen::id(2));
    Morphism kink = gen::cap(3, 2) * gen::crossing(3, 1) * gen::cup(1, 2);
    CHECK(kink == Scalar(-1) * gen::id(1));
    Morphism s1 = gen::crossing(3, 1), s2 = gen::crossing(3, 2);
    CHECK(s1 * s2 * s1 == s2 * s1 * s2);
    CHECK_THROWS(gen::u(1, 0));
}

TEST_CASE("iota, tensor and partial trace") {
    CHECK(iota(gen::id(3)) == gen::id(4));
    CHECK(iota_prime(gen::id(3)) == gen::id(4));
    CHECK(tensor(gen::id(1), gen::id(1)) == gen::id(2));
    CHECK(partial_trace(gen::id(1)) == Scalar(-2) * gen::id(0));
    CHECK(partial_trace(gen::u(2, 1)) == gen::id(1));
    Morphism t2 = gen::id(2) + Scalar::fraction(1, 2) * (gen::u(2, 1) + gen::u(2, 0));
    CHECK(partial_trace(t2) == Scalar(-1) * gen::id(1));
    CHECK_THROWS_AS(partial_trace(gen::id(0)), std::invalid_argument);
    CHECK_THROWS_AS(compose(gen::id(2), gen::id(3)), std::invalid_argument);
}

TEST_CASE("syntactic equality") {
    CHECK_FALSE(syntactic_eq(gen::d_pow(1, 2), Scalar(-1) * gen::id(1)));
    CHECK(syntactic_eq(gen::u(2, 0), gen::d(2, 1) * gen::u(2, 1) * gen::d(2, -1)));
    CHECK(syntactic_eq(gen::u(4, 3), gen::u(4, 3)));
}

TEST_CASE("terms are ordered by seam, essential circles, then arc list") {
    Morphism t2 = gen::id(2) + gen::u(2, 0) + gen::u(2, 1);
    REQUIRE(t2.size() == 3);
    CHECK(t2.terms()[0].first == diagrams::planar_u(2, 1)); // arcs start (I0, I1)
    CHECK(t2.terms()[1].first == diagrams::identity(2));    // arcs start (I0, O0)
    CHECK(t2.terms()[2].first.seam() == 2);
    Morphism mixed = gen::d_pow(1, 3) + gen::d_pow(1, -1) + gen::id(1);
    std::vector<int> seams;
    for (const auto& [d, c] : mixed.terms()) seams.push_back(d.seam());
    CHECK(std::is_sorted(seams.begin(), seams.end()));
}

#include <doctest.h>

#include "atl/projectors.hpp"
#include "atl/rep.hpp"

using namespace atl;

namespace {

WeightMap vec(std::vector<std::pair<const char*, Scalar>> entries) {
    std::vector<std::pair<WeightMap::Key, Scalar>> e;
    int len = 0;
    for (auto& [s, c] : entries) {
        len = static_cast<int>(std::string(s).size());
        e.push_back({{parse_sign_string(s), 0}, c});
    }
    return WeightMap::from_entries(0, len, std::move(e));
}

Morphism w2() { return gen::d(2, 1) * gen::cup(0, 1); }

} // namespace

TEST_CASE("sign strings") {
    CHECK(sign_string(parse_sign_string("+-+"), 3) == "+-+");
    CHECK(weight(parse_sign_string("++-"), 3) == 1);
    CHECK_THROWS_AS(parse_sign_string("+x"), std::invalid_argument);
}

TEST_CASE("generator images") {
    using K = Letter::Kind;
    const Scalar i = Scalar::i();
    WeightMap cup = phi_generator({K::cup, 0, 1});
    CHECK(wm_eq(cup, vec({{"+-", 1}, {"-+", -1}})));
    WeightMap loop = wm_mul(phi_generator({K::cap, 2, 1}), cup);
    CHECK(wm_eq(loop, WeightMap::from_entries(0, 0, {{{0, 0}, -2}})));
    WeightMap d = phi_generator({K::rotation, 2, 1});
    CHECK(d.at(parse_sign_string("-+"), parse_sign_string("+-")) == i);
    CHECK(wm_eq(phi(gen::d_pow(1, 2)), WeightMap::identity(1) * Scalar(-1)));
}

TEST_CASE("images of U_0 and the wrap-around cup") {
    WeightMap u0 = phi(gen::u(2, 0));
    const BasisIndex pm = parse_sign_string("+-"), mp = parse_sign_string("-+");
    CHECK(u0.at(pm, pm) == Scalar(-1));
    CHECK(u0.at(mp, pm) == Scalar(-1));
    CHECK(wm_eq(phi(w2()), vec({{"+-", Scalar::i()}, {"-+", Scalar::i()}})));
    CHECK(phi(gen::essential_circle(0)).is_zero());
    for (int k = 1; k <= 4; ++k) CHECK(phi(gen::essential_circle(k)).is_zero());
}

TEST_CASE("factorize") {
    auto wrap = w2().terms()[0].first;
    GeneratorWord word = factorize(wrap);
    CHECK(word.letters.size() == 2);
    CHECK(word.letters[0].kind == Letter::Kind::cup);
    CHECK(word.letters[1].kind == Letter::Kind::rotation);
    CHECK(recompose(word).diagram == wrap);
    CHECK(factorize(diagrams::identity(3)).letters.empty());
    GeneratorWord twice = factorize(gen::d_pow(1, 2).terms()[0].first);
    REQUIRE(twice.letters.size() == 2);
    CHECK(twice.letters[0] == twice.letters[1]);
    CHECK(twice.letters[0].kind == Letter::Kind::rotation);
    CHECK_THROWS_AS(factorize(gen::essential_circle(0).terms()[0].first), std::invalid_argument);
}

TEST_CASE("matrix operations") {
    CHECK(wm_rank(phi(gen::id(2))) == 4);
    CHECK(wm_rank(extremal(3).image()) == 2);
    CHECK(wm_eq(phi(iota(gen::u(2, 1))), wm_tensor(phi(gen::u(2, 1)), WeightMap::identity(1))));
    CHECK(wm_eq(phi(gen::u(3, 1) * gen::u(3, 2)), wm_mul(phi(gen::u(3, 1)), phi(gen::u(3, 2)))));
    CHECK_THROWS(wm_mul(phi(gen::id(2)), phi(gen::id(3))));
}

TEST_CASE("s2 conjugation") {
    CHECK(wm_eq(s2_conjugate(WeightMap::identity(3)), WeightMap::identity(3)));
    for (int m = 1; m <= 5; ++m) CHECK(wm_eq(s2_conjugate(extremal(m).image()), extremal(m).image()));
    CHECK(wm_eq(s2_conjugate(highest(2).image()), lowest(2).image()));
}

TEST_CASE("extremal oracle") {
    const BasisIndex pp = parse_sign_string("++"), mm = parse_sign_string("--");
    CHECK(wm_eq(extremal_matrix(2), WeightMap::from_entries(2, 2, {{{pp, pp}, 1}, {{mm, mm}, 1}})));
    CHECK(wm_eq(extremal_matrix(1), WeightMap::identity(1)));
    for (int m = 1; m <= 8; ++m) {
        Scalar trace;
        const WeightMap e = extremal_matrix(m);
        for (const auto& [k, v] : e.entries())
            if (k.first == k.second) trace += v;
        CHECK(trace == Scalar(2));
    }
}

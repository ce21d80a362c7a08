#include <doctest.h>

#include "atl/io.hpp"
#include "atl/projectors.hpp"
#include "atl/render.hpp"
#include "atl/report.hpp"

using namespace atl;

TEST_CASE("morphism json round trip") {
    for (const Morphism& x : {extremal(3).morphism(), highest(2).morphism(), gen::essential_circle(2),
                              gen::d_pow(2, 3), Morphism(1, 1)}) {
        const std::string text = io::dump(io::to_json(x));
        Morphism back = io::morphism_from_json(io::parse(text));
        CHECK(back == x);
        CHECK(io::dump(io::to_json(back)) == text);
    }
}

TEST_CASE("json input is canonicalized") {
    auto j = io::parse(R"({"dom":1,"cod":1,"terms":[{"coeff":"3","diagram":{"seam":2,"ess":0,
        "arcs":[["I0","L0"],["R0","R1"],["L1","O0"]]}}]})");
    CHECK(io::morphism_from_json(j) == Scalar(3) * gen::id(1));
    CHECK_THROWS_AS(io::morphism_from_json(io::parse(R"({"cod":1,"terms":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(io::morphism_from_json(io::parse(R"({"dom":1,"cod":1,"terms":[{"coeff":"x","diagram":{}}]})")),
                    std::invalid_argument);
}

TEST_CASE("weight map json round trip") {
    WeightMap w = highest(2).image();
    CHECK(wm_eq(io::weight_map_from_json(io::to_json(w)), w));
    CHECK(io::to_json(phi(gen::d(2, 1) * gen::cup(0, 1)))["entries"].size() == 2);
}

TEST_CASE("rendering") {
    CHECK(render::svg(extremal(3).morphism()) == render::svg(extremal(3).morphism()));
    CHECK(render::svg(gen::u(2, 0)) == render::svg(gen::d(2, 1) * gen::u(2, 1) * gen::d(2, -1)));
    const std::string one = render::ascii(gen::id(1));
    CHECK(one.find("I0 -- O0  through") != std::string::npos);
    const std::string wrap = render::ascii(gen::u(2, 0));
    CHECK(wrap.find("I0 -- I1  cap, crosses the base point 1 time") != std::string::npos);
    CHECK(wrap.find("O0 -- O1  cup, crosses the base point 1 time") != std::string::npos);
    const std::string svg = render::svg(gen::id(1));
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(render::tikz(gen::id(1)).find("\\begin{tikzpicture}") == 0);
}

TEST_CASE("report lines") {
    Report r;
    r.add("first", true);
    r.add("second", false, "at (+-, -+): 1/2 vs 0");
    CHECK(r.text() == "PASS first\nFAIL second: at (+-, -+): 1/2 vs 0\n");
    CHECK(r.failures() == 1);
    CHECK_FALSE(r.all_pass());
}

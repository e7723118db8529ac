#include <doctest.h>

#include "legendrian/errors.hpp"
#include "legendrian/front_analysis.hpp"
#include "legendrian/front_diagram.hpp"
#include "legendrian/json_io.hpp"

using namespace legendrian;

namespace {

FrontDiagram theta_with_crossings(int crossings) {
    FrontDiagram d;
    d.edges = {"e1", "e2", "e3"};
    d.vertices = {{"v1", 3}, {"v2", 3}};
    d.events.push_back(Event::make_vertex(1, "v1", {}, {"e1", "e2", "e3"}));
    for (int i = 0; i < crossings; ++i)
        d.events.push_back(Event::crossing(2));
    std::vector<std::string> tail =
        crossings % 2 ? std::vector<std::string>{"e1", "e3", "e2"} : std::vector<std::string>{"e1", "e2", "e3"};
    d.events.push_back(Event::make_vertex(1, "v2", tail, {}));
    return d;
}

FrontDiagram unknot() {
    FrontDiagram d;
    d.edges = {"k"};
    d.events = {Event::left_cusp(1, "k"), Event::right_cusp(1)};
    return d;
}

} // namespace

TEST_CASE("standard unknot has tb -1 and rot 0") {
    const auto d = unknot();
    CHECK(validate(d).empty());
    const std::vector<CycleStep> cycle{{"k", Direction::Forward}};
    CHECK(tb(d, cycle) == -1);
    CHECK(rot(d, cycle) == 0);
}

TEST_CASE("stabilized unknot") {
    FrontDiagram d;
    d.edges = {"k"};
    // A zigzag on the top strand: two extra cusps.
    d.events = {Event::left_cusp(1, "k"), Event::left_cusp(2, "k"), Event::right_cusp(1), Event::right_cusp(1)};
    REQUIRE(validate(d).empty());
    const std::vector<CycleStep> cycle{{"k", Direction::Forward}};
    const auto t = traverse_cycle(d, cycle);
    CHECK(t.cusps() == 4);
    CHECK(t.tb() == -2);
    CHECK(std::abs(t.rot()) == 1);
    CHECK(t.up_cusps + t.down_cusps == 4);
}

TEST_CASE("unclosed diagram is rejected") {
    FrontDiagram d;
    d.edges = {"k"};
    d.events = {Event::left_cusp(1, "k")};
    const auto v = validate(d);
    REQUIRE_FALSE(v.empty());
    CHECK_THROWS_AS(require_legal(d), InvalidInput);
}

TEST_CASE("right cusp must join strands of one edge") {
    FrontDiagram d;
    d.edges = {"a", "b"};
    d.events = {Event::left_cusp(1, "a"), Event::left_cusp(2, "b"), Event::right_cusp(1), Event::right_cusp(1)};
    CHECK_FALSE(validate(d).empty());
}

TEST_CASE("vertex valence mismatch is rejected") {
    auto d = theta_with_crossings(1);
    d.vertices[0].valence = 4;
    CHECK_FALSE(validate(d).empty());
}

TEST_CASE("theta without crossings") {
    const auto d = theta_with_crossings(0);
    REQUIRE(validate(d).empty());
    const auto inv = theta_invariants(d);
    CHECK(inv.tb == Vec3{-1, -1, -1});
    CHECK(inv.rot == Vec3{0, 0, 0});
    CHECK(vertex_sign(d, "v1") == -1);
    CHECK(vertex_sign(d, "v2") == -1);
    CHECK(embedding_key(d).sigma2() == vertex_sign(d, "v2"));
}

TEST_CASE("theta with one crossing") {
    const auto d = theta_with_crossings(1);
    REQUIRE(validate(d).empty());
    const auto inv = theta_invariants(d);
    CHECK(inv.tb == Vec3{-1, -2, -1});
    CHECK(inv.rot == Vec3{0, -1, 0});
    CHECK(vertex_sign(d, "v1") == -1);
    CHECK(vertex_sign(d, "v2") == 1);
}

TEST_CASE("theta with two crossings") {
    const auto inv = theta_invariants(theta_with_crossings(2));
    CHECK(inv.tb == Vec3{-1, -3, -1});
    CHECK(inv.rot == Vec3{0, 0, 0});
}

TEST_CASE("theta with three crossings: gamma_2 writhe") {
    const auto d = theta_with_crossings(3);
    const auto t = traverse_cycle(d, theta_cycle(d, 1));
    CHECK(t.writhe == -3);
    CHECK(t.tb() == -4);
}

TEST_CASE("sigma identity relates both vertex signs") {
    for (int c = 1; c <= 6; ++c) {
        const auto d = theta_with_crossings(c);
        const auto key = embedding_key(d);
        CHECK(vertex_sign(d, "v2") == key.sigma1 - 2 * key.inv.total_rot());
    }
}

TEST_CASE("vertex sign follows the ascending order convention") {
    FrontDiagram d = theta_with_crossings(1);
    d.events.front().right = {"e3", "e2", "e1"};
    d.events.back().left = {"e3", "e1", "e2"};
    REQUIRE(validate(d).empty());
    CHECK(vertex_sign(d, "v1") == 1);
}

TEST_CASE("mirror negates rotation and keeps tb") {
    for (int c = 1; c <= 5; ++c) {
        const auto d = theta_with_crossings(c);
        const auto m = mirror(d);
        REQUIRE(validate(m).empty());
        const auto a = theta_invariants(d), b = theta_invariants(m);
        CHECK(a.tb == b.tb);
        for (int i = 0; i < 3; ++i)
            CHECK(b.rot[i] == -a.rot[i]);
        CHECK(mirror(m) == d);
    }
}

TEST_CASE("twist numbers reproduce tb") {
    const auto inv = theta_invariants(theta_with_crossings(4));
    CHECK(tb_from_twist(inv.twist()) == inv.tb);
}

TEST_CASE("json round trip is byte stable") {
    const auto d = theta_with_crossings(3);
    const auto text = diagram_to_text(d);
    const auto back = diagram_from_text(text);
    CHECK(back == d);
    CHECK(diagram_to_text(back) == text);
}

TEST_CASE("malformed json is invalid input") {
    CHECK_THROWS_AS(diagram_from_text("{\"edges\": ["), InvalidInput);
    CHECK_THROWS_AS(diagram_from_text("{\"edges\": []}"), InvalidInput);
}

TEST_CASE("segments and paths") {
    const auto d = theta_with_crossings(2);
    FrontAnalysis fa(d);
    CHECK(fa.segments().size() == 3);
    CHECK(fa.crossings().size() == 2);
    for (std::size_t e = 0; e < 3; ++e) {
        CHECK(fa.path(e).tail->vertex == 0);
        CHECK(fa.path(e).head->vertex == 1);
    }
}

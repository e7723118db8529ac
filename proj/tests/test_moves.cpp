#include <doctest.h>

#include "legendrian/errors.hpp"
#include "legendrian/moves.hpp"
#include "legendrian/realize.hpp"

#include <random>

using namespace legendrian;

namespace {

HalfInt half(int doubled) { return HalfInt::from_doubled(doubled); }

// Arc used by gamma_i at a Theta vertex: (incoming edge, outgoing edge).
std::pair<std::string, std::string> arc_of_cycle(int i, bool at_head) {
    const std::string a = "e" + std::to_string(i + 1), b = "e" + std::to_string((i + 1) % 3 + 1);
    return at_head ? std::pair{a, b} : std::pair{b, a};
}

void check_vertex_stabilization(const FrontDiagram &d, const std::string &vertex, int k) {
    const auto before = theta_invariants(d);
    const auto vs = vertex_stabilize_detailed(d, vertex, k);
    REQUIRE(validate(vs.result).empty());
    const auto after = theta_invariants(vs.result);
    const int n = static_cast<int>(vs.order.size());
    const bool at_head = vertex == "v2";
    for (int i = 0; i < 3; ++i) {
        CHECK(after.tb[i] == before.tb[i] - 1);
        const auto [in, out] = arc_of_cycle(i, at_head);
        int expected = 0;
        for (int j = 0; j < n; ++j) {
            const int delta = j + 1 < n ? -1 : 1;
            if (vs.order[j] == in && vs.order[(j + 1) % n] == out)
                expected = delta;
            if (vs.order[j] == out && vs.order[(j + 1) % n] == in)
                expected = -delta;
        }
        CHECK(after.rot[i] - before.rot[i] == expected);
    }
}

} // namespace

TEST_CASE("edge stabilization changes tb and rot along the edge") {
    for (int l2 = -1; l2 <= 3; ++l2) {
        const auto base = build_gl(half(l2));
        const auto inv = theta_invariants(base);
        for (int e = 0; e < 3; ++e) {
            for (int sign : {1, -1}) {
                const auto s = edge_stabilize(base, base.edges[e], sign);
                REQUIRE(validate(s).empty());
                const auto out = theta_invariants(s);
                // gamma_e uses e forward, gamma_{e-1} uses it backward.
                const int fwd = e, bwd = (e + 2) % 3, other = (e + 1) % 3;
                CHECK(out.tb[fwd] == inv.tb[fwd] - 1);
                CHECK(out.tb[bwd] == inv.tb[bwd] - 1);
                CHECK(out.tb[other] == inv.tb[other]);
                CHECK(out.rot[fwd] == inv.rot[fwd] + sign);
                CHECK(out.rot[bwd] == inv.rot[bwd] - sign);
                CHECK(out.rot[other] == inv.rot[other]);

                const auto z = find_zigzag(s, base.edges[e]);
                REQUIRE(z.has_value());
                CHECK(edge_destabilize(s, *z) == base);
            }
        }
    }
}

TEST_CASE("stabilizing a knot component") {
    FrontDiagram d;
    d.edges = {"k"};
    d.events = {Event::left_cusp(1, "k"), Event::right_cusp(1)};
    const std::vector<CycleStep> cycle{{"k", Direction::Forward}};
    const auto up = edge_stabilize(d, "k", 1);
    CHECK(tb(up, cycle) == -2);
    CHECK(rot(up, cycle) == 1);
    const auto down = edge_stabilize(d, "k", -1);
    CHECK(rot(down, cycle) == -1);
}

TEST_CASE("destabilization needs a zigzag") {
    const auto g = build_gl(half(0));
    CHECK_THROWS_AS(edge_destabilize(g, 0), Infeasible);
    CHECK_FALSE(find_zigzag(g, "e1").has_value());
}

TEST_CASE("vertex stabilization lowers tb on every arc") {
    for (int l2 = -1; l2 <= 2; ++l2) {
        for (const auto &lab : GlLabeling::all()) {
            const auto g = build_gl(half(l2), lab);
            for (const char *v : {"v1", "v2"})
                for (int k = 1; k <= 3; ++k)
                    check_vertex_stabilization(g, v, k);
        }
    }
}

TEST_CASE("vertex stabilization after a mixed-side vertex") {
    auto g = build_gl(half(1));
    g = reidemeister(g, Reidemeister::V, {0, 1, 0, false});
    REQUIRE(validate(g).empty());
    for (int k = 1; k <= 3; ++k) {
        check_vertex_stabilization(g, "v1", k);
        check_vertex_stabilization(g, "v2", k);
    }
}

TEST_CASE("positive vertex twist turns G_-1/2 into G_0") {
    const auto g = build_gl(half(-1));
    const auto t = vertex_twist(g, "v2", "e2", "e3", 1);
    CHECK(t == build_gl(half(0)));
    CHECK(vertex_twist(t, "v2", "e2", "e3", -1) == g);
}

TEST_CASE("vertex twist lowers tb on the cycle through both ends") {
    const auto g = build_gl(half(1));
    const auto before = theta_invariants(g);
    const auto t = vertex_twist(g, "v1", "e1", "e2", 1);
    const auto after = theta_invariants(t);
    CHECK(after.tb[0] == before.tb[0] - 1);
    CHECK(after.tb[1] == before.tb[1]);
    CHECK(after.tb[2] == before.tb[2]);
    CHECK(std::abs(after.rot[0] - before.rot[0]) == 1);
}

TEST_CASE("negative vertex twist without a twist crossing is infeasible") {
    const auto g = build_gl(half(-1));
    CHECK_THROWS_AS(vertex_twist(g, "v1", "e1", "e2", -1), Infeasible);
    CHECK_THROWS_AS(vertex_twist(g, "v1", "e1", "e3", 1), Infeasible);
}

TEST_CASE("gl_step walks up the G_l family") {
    for (int l2 = -1; l2 <= 5; ++l2) {
        const auto step = gl_step(build_gl(half(l2)));
        CHECK(step.result == build_gl(half(l2 + 1)));
        CHECK(embedding_key(step.vertex_stabilized) == embedding_key(step.stabilized_target));
    }
    const auto first = gl_step(build_gl(half(-1)));
    CHECK(first.edge == "e1");
    CHECK(first.sign == -1);
}

TEST_CASE("gl_step rejects other fronts") {
    CHECK_THROWS_AS(gl_step(edge_stabilize(build_gl(half(0)), "e1", 1)), InvalidInput);
}

TEST_CASE("edge stabilization connectivity") {
    CHECK_FALSE(edge_stab_connected(half(-1), half(0)));
    CHECK(edge_stab_connected(half(-1), half(1)));
    CHECK(edge_stab_connected(half(4), half(0)));
    CHECK_THROWS_AS(edge_stab_connected(half(-3), half(1)), InvalidInput);
}

TEST_CASE("move names round trip") {
    for (auto m : {Reidemeister::I, Reidemeister::II, Reidemeister::III, Reidemeister::IIIv, Reidemeister::V})
        CHECK(parse_move(move_name(m)) == m);
    CHECK_FALSE(parse_move("VI").has_value());
}

TEST_CASE("each Reidemeister move has an inverse") {
    const auto g = edge_stabilize(build_gl(half(2)), "e2", 1);
    for (auto m : {Reidemeister::I, Reidemeister::II, Reidemeister::IIIv, Reidemeister::V}) {
        for (const auto &site : applicable_sites(g, m)) {
            if (site.inverse)
                continue;
            const auto moved = reidemeister(g, m, site);
            bool undone = false;
            for (const auto &back : applicable_sites(moved, m))
                if (back.inverse && reidemeister(moved, m, back) == g)
                    undone = true;
            CHECK_MESSAGE(undone, move_name(m) << " at event " << site.event << " variant " << site.variant);
        }
    }
}

TEST_CASE("Reidemeister moves preserve invariants (random walk)") {
    std::mt19937 rng(20261017);
    const std::array moves{Reidemeister::I, Reidemeister::II, Reidemeister::III, Reidemeister::IIIv,
                           Reidemeister::V};
    FrontDiagram braid = build_gl(half(-1));
    braid.events = {Event::make_vertex(1, "v1", {}, {"e1", "e2", "e3"}), Event::crossing(1), Event::crossing(2),
                    Event::crossing(1), Event::make_vertex(1, "v2", {"e3", "e2", "e1"}, {})};
    REQUIRE(validate(braid).empty());
    std::vector<FrontDiagram> starts{build_gl(half(-1)), build_gl(half(0)), build_gl(half(3), {{2, 0, 1}, true}),
                                     edge_stabilize(edge_stabilize(build_gl(half(1)), "e3", -1), "e1", 1), braid};
    std::array<int, 5> per_move{};
    int applied = 0;
    for (const auto &start : starts) {
        const auto key = embedding_key(start);
        const int v2_sign = vertex_sign(start, "v2");
        FrontDiagram d = start;
        int local = 0;
        for (int attempt = 0; local < 2500 && attempt < 200000; ++attempt) {
            if (d.events.size() > 40)
                d = start;
            const std::size_t mi = rng() % moves.size();
            const auto m = moves[mi];
            MoveSite site;
            if (m == Reidemeister::III || m == Reidemeister::IIIv) {
                // Their patterns are rare under uniform sampling; aim at a
                // crossing or vertex event instead.
                const auto want = m == Reidemeister::III ? EventKind::Crossing : EventKind::Vertex;
                std::vector<std::size_t> hits;
                for (std::size_t k = 0; k < d.events.size(); ++k)
                    if (d.events[k].kind == want)
                        hits.push_back(k);
                if (hits.empty())
                    continue;
                site.event = hits[rng() % hits.size()];
            } else {
                site.event = rng() % (d.events.size() + 1);
                site.slot = 1 + static_cast<int>(rng() % 6);
            }
            site.variant = static_cast<int>(rng() % 4);
            site.inverse = rng() % 2 == 0;
            FrontDiagram next;
            try {
                next = reidemeister(d, m, site);
            } catch (const Infeasible &) {
                continue;
            } catch (const InvalidInput &) {
                continue;
            }
            REQUIRE(validate(next).empty());
            const auto got = embedding_key(next);
            CHECK_MESSAGE(got == key, move_name(m) << " event " << site.event << " variant " << site.variant
                                                   << (site.inverse ? " inverse" : ""));
            if (got != key)
                break;
            CHECK(vertex_sign(next, "v2") == v2_sign);
            d = std::move(next);
            ++local;
            ++per_move[mi];
        }
        applied += local;
    }
    CHECK(applied >= 10000);
    for (std::size_t i = 0; i < moves.size(); ++i) {
        INFO(move_name(moves[i]));
        CHECK(per_move[i] >= 100);
    }
}

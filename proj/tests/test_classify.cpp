#include <doctest.h>

#include "legendrian/classify.hpp"
#include "legendrian/errors.hpp"
#include "legendrian/front_diagram.hpp"
#include "legendrian/realize.hpp"

#include <map>
#include <set>

using namespace legendrian;

namespace {

// Renames edges and vertices of a Theta front: new e_i is old e_{perm[i]}.
FrontDiagram relabel(const FrontDiagram &d, const AutElement &a) {
    std::map<std::string, std::string> edge, vertex;
    for (int i = 0; i < 3; ++i)
        edge["e" + std::to_string(a.perm[i] + 1)] = "e" + std::to_string(i + 1);
    vertex["v1"] = a.swap_vertices ? "v2" : "v1";
    vertex["v2"] = a.swap_vertices ? "v1" : "v2";
    FrontDiagram out = d;
    for (auto &ev : out.events) {
        if (ev.kind == EventKind::LeftCusp)
            ev.edge = edge.at(ev.edge);
        if (ev.kind == EventKind::Vertex) {
            ev.vertex = vertex.at(ev.vertex);
            for (auto &x : ev.left)
                x = edge.at(x);
            for (auto &x : ev.right)
                x = edge.at(x);
        }
    }
    return out;
}

ThetaInvariants inv(Vec3 tb, Vec3 rot) { return {tb, rot}; }

} // namespace

TEST_CASE("admissibility examples") {
    CHECK(is_admissible(inv({-1, -2, -1}, {0, 1, 0})));
    CHECK(is_admissible(inv({-1, -1, -1}, {0, 0, 0})));
    const auto bad = check_admissible(inv({-1, -1, -1}, {0, 0, 1}));
    CHECK_FALSE(bad.admissible);
    CHECK(bad.violations.size() == 2);
    CHECK_FALSE(is_admissible(inv({-3, -3, -3}, {2, 2, 0})));
    CHECK_FALSE(is_admissible(inv({-2, -2, -2}, {1, 1, 1})));
}

TEST_CASE("embedding counts") {
    CHECK(count_embeddings(inv({-1, -2, -1}, {0, 1, 0})) == 1);
    CHECK(count_embeddings(inv({-1, -1, -1}, {0, 0, 0})) == 2);
    CHECK(count_embeddings(inv({-1, -1, -1}, {0, 0, 2})) == 0);
}

TEST_CASE("group structure of relabelings") {
    const auto all = AutElement::all();
    CHECK(all.size() == 12);
    std::set<std::pair<bool, std::array<int, 3>>> seen;
    for (const auto &a : all)
        seen.insert({a.swap_vertices, a.perm});
    CHECK(seen.size() == 12);
    for (const auto &a : all)
        for (const auto &b : all)
            for (const auto &c : all)
                CHECK(compose(compose(c, b), a) == compose(c, compose(b, a)));
}

TEST_CASE("relabeling action is a homomorphism on keys") {
    for (const auto &t : enumerate_admissible(3))
        for (const auto &k : keys_over(t))
            for (const auto &a : AutElement::all())
                for (const auto &b : AutElement::all())
                    CHECK(apply_aut(apply_aut(k, a), b) == apply_aut(k, compose(b, a)));
}

TEST_CASE("relabeling formula agrees with relabeled fronts") {
    for (const auto &t : enumerate_admissible(3)) {
        for (const auto &k : keys_over(t)) {
            const auto d = realize_key(k).diagram;
            for (const auto &a : AutElement::all())
                CHECK(embedding_key(relabel(d, a)) == apply_aut(k, a));
        }
    }
}

TEST_CASE("generator actions") {
    const EmbeddingKey k{inv({-1, -2, -3}, {0, 1, 0}), 1};
    const auto swapped = apply_aut(k, AutElement::vertex_swap());
    CHECK(swapped.inv.tb == Vec3{-1, -2, -3});
    CHECK(swapped.inv.rot == Vec3{0, -1, 0});
    CHECK(swapped.sigma1 == -1);
    const auto t1 = apply_aut(k, AutElement::edge_transposition(0));
    CHECK(t1.inv.tb == Vec3{-1, -3, -2});
    CHECK(t1.inv.rot == Vec3{0, 0, -1});
    CHECK(t1.sigma1 == -1);
}

TEST_CASE("canonical form is an orbit invariant") {
    for (const auto &t : enumerate_admissible(3))
        for (const auto &k : keys_over(t))
            for (const auto &a : AutElement::all())
                CHECK(canonical(apply_aut(k, a)) == canonical(k));
}

TEST_CASE("enumeration order and size") {
    const auto list = enumerate_admissible(2);
    CHECK(std::is_sorted(list.begin(), list.end()));
    // Brute force over a wider box.
    std::size_t expected = 0;
    ThetaInvariants t;
    for (t.tb[0] = -2; t.tb[0] <= 0; ++t.tb[0])
        for (t.tb[1] = -2; t.tb[1] <= 0; ++t.tb[1])
            for (t.tb[2] = -2; t.tb[2] <= 0; ++t.tb[2])
                for (t.rot[0] = -3; t.rot[0] <= 3; ++t.rot[0])
                    for (t.rot[1] = -3; t.rot[1] <= 3; ++t.rot[1])
                        for (t.rot[2] = -3; t.rot[2] <= 3; ++t.rot[2])
                            expected += is_admissible(t) ? 1 : 0;
    CHECK(list.size() == expected);
    CHECK_THROWS_AS(enumerate_admissible(0), InvalidInput);
}

TEST_CASE("image counts against realized fronts") {
    for (const auto &t : enumerate_admissible(4)) {
        std::set<EmbeddingKey> reps;
        for (const auto &k : keys_over(t)) {
            // Orbit of the realized front under relabeling of the front itself.
            const auto d = realize_key(k).diagram;
            EmbeddingKey least = embedding_key(d);
            for (const auto &a : AutElement::all())
                least = std::min(least, embedding_key(relabel(d, a)));
            reps.insert(least);
        }
        CHECK(count_images(t).by_orbits == static_cast<int>(reps.size()));
    }
}

TEST_CASE("image count criterion misses vertex-swap symmetries") {
    const auto t = inv({-3, -2, -2}, {-2, 1, 1});
    const auto c = count_images(t);
    CHECK(c.by_orbits == 1);
    CHECK(c.by_criterion == 2);
    const EmbeddingKey plus{t, 1}, minus{t, -1};
    const AutElement swap_then_t1 = compose(AutElement::edge_transposition(0), AutElement::vertex_swap());
    CHECK(apply_aut(plus, swap_then_t1) == minus);
}

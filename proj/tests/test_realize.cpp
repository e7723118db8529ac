#include <doctest.h>

#include "legendrian/classify.hpp"
#include "legendrian/errors.hpp"
#include "legendrian/realize.hpp"

using namespace legendrian;

namespace {

HalfInt half(int doubled) { return HalfInt::from_doubled(doubled); }

} // namespace

TEST_CASE("G_l invariants") {
    for (int l2 = -1; l2 <= 9; ++l2) {
        for (const auto &lab : GlLabeling::all()) {
            const auto g = build_gl(half(l2), lab);
            REQUIRE(validate(g).empty());
            const auto key = embedding_key(g);
            // Relabel back to the standard G_l and compare with the default build.
            AutElement a;
            a.swap_vertices = lab.swap_vertices;
            for (int j = 0; j < 3; ++j)
                a.perm[j] = lab.top_to_bottom[j];
            CHECK(apply_aut(key, a) == embedding_key(build_gl(half(l2))));
        }
        const auto inv = theta_invariants(build_gl(half(l2)));
        CHECK(inv.tb == Vec3{-1, -2 - l2, -1});
        CHECK(inv.rot == Vec3{0, l2 % 2 == 0 ? -1 : 0, 0});
        CHECK(inv.twist()[0] == half(l2));
    }
    CHECK_THROWS_AS(build_gl(half(-2)), InvalidInput);
}

TEST_CASE("match_gl recognizes every labeling") {
    for (int l2 = -1; l2 <= 4; ++l2)
        for (const auto &lab : GlLabeling::all()) {
            const auto m = match_gl(build_gl(half(l2), lab));
            REQUIRE(m.has_value());
            CHECK(m->l == half(l2));
            CHECK(build_gl(m->l, m->labeling) == build_gl(half(l2), lab));
        }
}

TEST_CASE("recipe worked example") {
    const auto r = stab_recipe({{-3, -3, -2}, {0, 0, 1}});
    CHECK(r.l == half(0));
    CHECK(r.shift == 0);
    CHECK(r.a == std::array{1, 1, 1});
    CHECK(r.b == std::array{0, 1, 0});
    CHECK(r.stabs[0] == std::pair{0, 1});
    CHECK(r.stabs[1] == std::pair{0, 1});
    CHECK(r.stabs[2] == std::pair{0, 0});
    CHECK(r.mirrored);
    CHECK(theta_invariants(apply_recipe(r)) == ThetaInvariants{{-3, -3, -2}, {0, 0, 1}});
}

TEST_CASE("recipe falls back to another relabeling when l would drop below -1/2") {
    const ThetaInvariants t{{-3, -3, -2}, {-2, 2, -1}};
    const auto r = stab_recipe(t);
    CHECK(r.shift == 2);
    CHECK(r.l == half(0));
    CHECK(theta_invariants(apply_recipe(r)) == t);
}

TEST_CASE("zero recipe at l = 0 is G_0") {
    StabRecipe r;
    r.l = half(0);
    CHECK(apply_recipe(r) == build_gl(half(0)));
}

TEST_CASE("recipe for an unstabilized G_0 mirror") {
    const auto r = stab_recipe({{-1, -2, -1}, {0, 1, 0}});
    CHECK(r.l == half(0));
    CHECK(r.mirrored);
    for (const auto &s : r.stabs)
        CHECK(s == std::pair{0, 0});
}

TEST_CASE("recipe picks the largest twist") {
    const auto r = stab_recipe({{-2, -1, -2}, {-1, 0, 1}});
    CHECK(r.shift == 1);
}

TEST_CASE("recipe rejects inadmissible pairs") {
    CHECK_THROWS_AS(stab_recipe({{-1, -1, -1}, {0, 0, 2}}), InvalidInput);
    CHECK_THROWS_AS(realize_key({{{-1, -2, -1}, {0, 1, 0}}, -1}), InvalidInput);
}

TEST_CASE("every key with small tb is realized") {
    for (const auto &t : enumerate_admissible(4)) {
        for (const auto &k : keys_over(t)) {
            const auto real = realize_key(k);
            REQUIRE(validate(real.diagram).empty());
            CHECK(embedding_key(real.diagram) == k);
            CHECK(real.diagram.trusted_trivial);
        }
    }
}

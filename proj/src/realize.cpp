#include "legendrian/realize.hpp"

#include "legendrian/classify.hpp"
#include "legendrian/errors.hpp"
#include "legendrian/moves.hpp"

#include <algorithm>
#include <stdexcept>

namespace legendrian {

namespace {

const std::array<std::string, 3> kEdgeNames{"e1", "e2", "e3"};

} // namespace

std::array<GlLabeling, 12> GlLabeling::all() {
    std::array<GlLabeling, 12> out;
    std::size_t n = 0;
    for (bool swap : {false, true}) {
        std::array<int, 3> p{0, 1, 2};
        do {
            out[n++] = GlLabeling{p, swap};
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

FrontDiagram build_gl(HalfInt l, GlLabeling labeling) {
    if (l < HalfInt::from_doubled(-1))
        throw InvalidInput("G_l needs l >= -1/2, got " + l.to_string());
    const auto crossings = l.doubled() + 1;
    FrontDiagram d;
    d.edges = {kEdgeNames.begin(), kEdgeNames.end()};
    d.vertices = {{"v1", 3}, {"v2", 3}};
    d.trusted_trivial = true;
    const std::string left = labeling.swap_vertices ? "v2" : "v1";
    const std::string right = labeling.swap_vertices ? "v1" : "v2";
    std::vector<std::string> strands;
    for (int e : labeling.top_to_bottom)
        strands.push_back(kEdgeNames.at(e));
    d.events.push_back(Event::make_vertex(1, left, {}, strands));
    for (std::int64_t i = 0; i < crossings; ++i)
        d.events.push_back(Event::crossing(2));
    if (crossings % 2 == 1)
        std::swap(strands[1], strands[2]);
    d.events.push_back(Event::make_vertex(1, right, strands, {}));
    return d;
}

std::optional<GlMatch> match_gl(const FrontDiagram &diagram) {
    if (diagram.events.size() < 2)
        return std::nullopt;
    const auto l = HalfInt::from_doubled(static_cast<std::int64_t>(diagram.events.size()) - 3);
    FrontDiagram probe = diagram;
    probe.trusted_trivial = true;
    for (const auto &lab : GlLabeling::all())
        if (build_gl(l, lab) == probe)
            return GlMatch{l, lab};
    return std::nullopt;
}

namespace {

StabRecipe recipe_for_shift(const ThetaInvariants &target, int shift) {
    StabRecipe r;
    r.shift = shift;
    ThetaInvariants t;
    for (int i = 0; i < 3; ++i) {
        t.tb[i] = target.tb[(i + shift) % 3];
        t.rot[i] = target.rot[(i + shift) % 3];
    }
    const HalfInt t1 = t.twist()[0];
    r.mirrored = t.total_rot() == 1;

    const int a2 = (-1 - t.tb[0] - t.rot[0]) / 2, b2 = (-1 - t.tb[0] + t.rot[0]) / 2;
    const int a3 = (-1 - t.tb[2] + t.rot[2]) / 2, b3 = (-1 - t.tb[2] - t.rot[2]) / 2;
    const int a1 = std::min(a2, a3), b1 = std::min(b2, b3);
    r.a = {a1, a2, a3};
    r.b = {b1, b2, b3};
    if (t1 >= HalfInt::from_doubled(-1)) {
        r.l = t1;
        r.stabs = {std::pair{0, 0}, std::pair{a2, b2}, std::pair{a3, b3}};
    } else {
        // e1 is traversed forward by gamma_1 and backward by gamma_3, so its
        // rot contribution must be b1 - a1 to leave r1 and r3 intact.
        r.l = t1 + HalfInt::from_int(a1 + b1);
        r.stabs = {std::pair{b1, a1}, std::pair{a2 - a1, b2 - b1}, std::pair{a3 - a1, b3 - b1}};
    }
    return r;
}

} // namespace

StabRecipe stab_recipe(const ThetaInvariants &target) {
    const auto report = check_admissible(target);
    if (!report.admissible)
        throw InvalidInput("invariants are not admissible: " + report.violations.front());

    const auto tw = target.twist();
    int best = 0;
    for (int s = 1; s < 3; ++s)
        if (tw[s] > tw[best])
            best = s;
    const auto min_l = HalfInt::from_doubled(-1);
    StabRecipe r = recipe_for_shift(target, best);
    if (r.l >= min_l)
        return r;
    // The smallest shift with the largest twist can still leave l below
    // -1/2. Try the other maximizers, then the remaining shifts.
    for (bool maximal : {true, false}) {
        for (int s = 0; s < 3; ++s) {
            if ((tw[s] == tw[best]) != maximal)
                continue;
            r = recipe_for_shift(target, s);
            if (r.l >= min_l)
                return r;
        }
    }
    throw std::logic_error("no cyclic relabeling yields a G_l base");
}

FrontDiagram apply_recipe(const StabRecipe &recipe) {
    GlLabeling lab;
    for (int j = 0; j < 3; ++j)
        lab.top_to_bottom[j] = (j + recipe.shift) % 3;
    FrontDiagram d = build_gl(recipe.l, lab);
    for (int i = 0; i < 3; ++i) {
        const auto &edge = kEdgeNames[(i + recipe.shift) % 3];
        auto [pos, neg] = recipe.stabs[i];
        if (recipe.mirrored)
            std::swap(pos, neg);
        for (int k = 0; k < neg; ++k)
            d = edge_stabilize(d, edge, -1);
        for (int k = 0; k < pos; ++k)
            d = edge_stabilize(d, edge, +1);
    }
    return recipe.mirrored ? mirror(d) : d;
}

Realization realize(const ThetaInvariants &target) {
    Realization out;
    out.recipe = stab_recipe(target);
    out.diagram = apply_recipe(out.recipe);
    if (theta_invariants(out.diagram) != target)
        throw std::logic_error("realization recipe produced the wrong invariants");
    return out;
}

Realization realize_key(const EmbeddingKey &key) {
    if (!is_valid_key(key))
        throw InvalidInput("no Legendrian Theta has this embedding key");
    Realization out = realize(key.inv);
    if (vertex_sign(out.diagram, "v1") != key.sigma1) {
        // Only possible when Rot = 0: the reflected front of the dual recipe
        // has the same invariants and the other vertex sign.
        out.recipe.mirrored = !out.recipe.mirrored;
        out.diagram = apply_recipe(out.recipe);
    }
    if (embedding_key(out.diagram) != key)
        throw std::logic_error("realization produced the wrong embedding key");
    return out;
}

} // namespace legendrian

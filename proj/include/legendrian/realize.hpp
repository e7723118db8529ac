#ifndef LEGENDRIAN_REALIZE_HPP
#define LEGENDRIAN_REALIZE_HPP

#include "legendrian/front_diagram.hpp"
#include "legendrian/half_int.hpp"
#include "legendrian/theta.hpp"

#include <array>
#include <optional>
#include <utility>

namespace legendrian {

// Which edge runs on which strand, and which vertex sits on the left.
struct GlLabeling {
    std::array<int, 3> top_to_bottom{0, 1, 2}; // edge indices, 0 = e1
    bool swap_vertices = false;                // v2 on the left

    bool operator==(const GlLabeling &) const = default;
    static std::array<GlLabeling, 12> all();
};

// Theta front with 2l+1 crossings between the lower two strands (l >= -1/2).
FrontDiagram build_gl(HalfInt l, GlLabeling labeling = {});

// Recognizes a G_l front up to labeling.
struct GlMatch {
    HalfInt l;
    GlLabeling labeling;
};
std::optional<GlMatch> match_gl(const FrontDiagram &diagram);

// Stabilization recipe for an admissible invariant pair. Counts are indexed
// by the shifted edge order: entry i refers to original edge (i + shift) % 3.
struct StabRecipe {
    HalfInt l;
    std::array<std::pair<int, int>, 3> stabs{}; // (positive, negative)
    int shift = 0;
    bool mirrored = false;
    std::array<int, 3> a{}; // a1, a2, a3 of the algorithm
    std::array<int, 3> b{}; // b1, b2, b3
};

// Throws InvalidInput for inadmissible pairs.
StabRecipe stab_recipe(const ThetaInvariants &target);
FrontDiagram apply_recipe(const StabRecipe &recipe);

struct Realization {
    StabRecipe recipe;
    FrontDiagram diagram;
};

// A front whose embedding key equals `key`.
Realization realize_key(const EmbeddingKey &key);
// Some front with the given invariants.
Realization realize(const ThetaInvariants &target);

} // namespace legendrian

#endif

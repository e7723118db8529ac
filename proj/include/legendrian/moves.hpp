#ifndef LEGENDRIAN_MOVES_HPP
#define LEGENDRIAN_MOVES_HPP

#include "legendrian/front_diagram.hpp"
#include "legendrian/half_int.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace legendrian {

// A place on a strand: just before events[event], in stack slot `slot`.
struct StrandSite {
    std::size_t event = 0;
    int slot = 1;
    bool operator==(const StrandSite &) const = default;
};

// Next to the edge's tail vertex, or at the first cusp of a closed component.
StrandSite default_stab_site(const FrontDiagram &diagram, const std::string &edge);

// Adds a zigzag. sign = +1 raises rot along the edge's forward direction by
// one, sign = -1 lowers it; tb drops by one either way.
FrontDiagram edge_stabilize(const FrontDiagram &diagram, const std::string &edge, int sign, StrandSite site);
FrontDiagram edge_stabilize(const FrontDiagram &diagram, const std::string &edge, int sign);

// Index of the left cusp of the first zigzag on `edge`, if any.
std::optional<std::size_t> find_zigzag(const FrontDiagram &diagram, const std::string &edge);
// Removes the zigzag whose left cusp is events[event]. Infeasible otherwise.
FrontDiagram edge_destabilize(const FrontDiagram &diagram, std::size_t event);

// Vertex stabilization S_k at a vertex of valence n (k in 1..n). The ends are
// first brought to one side with e_k on top; let e'_1..e'_n be that order.
// Afterwards each arc alpha_i (in along e'_i, out along e'_{i+1}) has tb one
// lower, rot one lower for i < n and one higher for alpha_n.
struct VertexStabilization {
    FrontDiagram result;
    std::vector<std::string> order; // e'_1 .. e'_n
};
VertexStabilization vertex_stabilize_detailed(const FrontDiagram &diagram, const std::string &vertex, int k);
FrontDiagram vertex_stabilize(const FrontDiagram &diagram, const std::string &vertex, int k);

// Twists two ends that are adjacent on the same side of the vertex.
// sign = +1 adds a crossing between them. sign = -1 removes a crossing that
// sits right against the vertex between those ends and is Infeasible when
// there is none.
FrontDiagram vertex_twist(const FrontDiagram &diagram, const std::string &vertex, const std::string &edge_a,
                          const std::string &edge_b, int sign);

enum class Reidemeister { I, II, III, IIIv, V };

// Where and how to apply a Reidemeister move.
//   I     forward: kink on the strand at (event, slot); variant 0 or 1 picks
//                  which of the two kinks. inverse: kink starting at event.
//   II    forward: events[event] is a cusp; variant 0 pushes it past the
//                  strand above, 1 past the strand below.
//         inverse: the three-event pattern starts at event.
//   III   events[event .. event+2] is a crossing triangle (self-inverse).
//   IIIv  events[event] is a one-sided vertex; variant 0 moves the strand
//         above it to the far side, 1 the strand below. inverse undoes that.
//   V     events[event] is a vertex; variant 0..3 moves an end
//         top-right to bottom-left, bottom-right to top-left,
//         bottom-left to top-right, top-left to bottom-right.
struct MoveSite {
    std::size_t event = 0;
    int slot = 1;
    int variant = 0;
    bool inverse = false;
};

// Throws Infeasible if the move does not apply at the site.
FrontDiagram reidemeister(const FrontDiagram &diagram, Reidemeister move, const MoveSite &site);

// Every site at which reidemeister() succeeds, for a given move.
std::vector<MoveSite> applicable_sites(const FrontDiagram &diagram, Reidemeister move);

const char *move_name(Reidemeister move);
std::optional<Reidemeister> parse_move(const std::string &name);

// G_l and G_l' are related by edge (de)stabilizations alone iff l - l' is an
// integer.
bool edge_stab_connected(HalfInt l, HalfInt lprime);

// One step G_l -> G_{l+1/2}: vertex-stabilize the right vertex, recognize the
// result as an edge stabilization of G_{l+1/2}, and destabilize it.
struct GlStep {
    HalfInt l;
    FrontDiagram vertex_stabilized;
    FrontDiagram stabilized_target;
    std::string edge;
    int sign = 0;
    FrontDiagram result;
};
GlStep gl_step(const FrontDiagram &gl);

} // namespace legendrian

#endif

#ifndef LEGENDRIAN_FRONT_DIAGRAM_HPP
#define LEGENDRIAN_FRONT_DIAGRAM_HPP

#include "legendrian/theta.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace legendrian {

// A front projection is read left to right as a Morse event word acting on a
// stack of horizontal strands. Slots are 1-based from the top.
//
//   LeftCusp  at p: two new strands of `edge` appear at p, p+1.
//   RightCusp at p: strands p, p+1 (same edge) meet and vanish.
//   Crossing  at p: strands p, p+1 swap. The descending strand is in front, so
//                   no over/under datum is stored.
//   Vertex    at p: strands p .. p+|left|-1 end at the vertex, |right| new
//                   strands start at p. Labels are listed top to bottom.
enum class EventKind { LeftCusp, RightCusp, Crossing, Vertex };

struct Event {
    EventKind kind = EventKind::Crossing;
    int pos = 1;
    std::string edge;   // LeftCusp
    std::string vertex; // Vertex
    std::vector<std::string> left;
    std::vector<std::string> right;

    static Event left_cusp(int pos, std::string edge);
    static Event right_cusp(int pos);
    static Event crossing(int pos);
    static Event make_vertex(int pos, std::string id, std::vector<std::string> left,
                             std::vector<std::string> right);

    // Strands consumed from / added to the stack.
    int consumed() const;
    int produced() const;

    bool operator==(const Event &) const = default;
};

struct VertexDecl {
    std::string id;
    int valence = 0;

    bool operator==(const VertexDecl &) const = default;
};

struct FrontDiagram {
    std::vector<std::string> edges;
    std::vector<VertexDecl> vertices;
    std::vector<Event> events;
    // Caller's assertion that the underlying spatial graph lies on a sphere.
    bool trusted_trivial = false;

    std::optional<std::size_t> edge_index(const std::string &id) const;
    std::optional<std::size_t> vertex_index(const std::string &id) const;

    bool operator==(const FrontDiagram &) const = default;
};

struct Violation {
    std::optional<std::size_t> event; // index into events, if local
    std::string message;
};

// Every broken legality rule, in the order found. Empty means legal.
std::vector<Violation> validate(const FrontDiagram &diagram);

// Throws InvalidInput with the first violation.
void require_legal(const FrontDiagram &diagram);

enum class Direction { Forward, Backward };

inline Direction reversed(Direction d) { return d == Direction::Forward ? Direction::Backward : Direction::Forward; }

struct CycleStep {
    std::string edge;
    Direction dir = Direction::Forward;

    bool operator==(const CycleStep &) const = default;
};

// Cusp and writhe tallies along an oriented cycle. Turns at a vertex between
// two edge-ends on the same side count as cusps.
struct CycleTraversal {
    std::vector<CycleStep> steps;
    int up_cusps = 0;
    int down_cusps = 0;
    int writhe = 0;

    int cusps() const { return up_cusps + down_cusps; }
    int tb() const { return -cusps() / 2 + writhe; }
    int rot() const { return (down_cusps - up_cusps) / 2; }
};

CycleTraversal traverse_cycle(const FrontDiagram &diagram, std::span<const CycleStep> cycle);
int tb(const FrontDiagram &diagram, std::span<const CycleStep> cycle);
int rot(const FrontDiagram &diagram, std::span<const CycleStep> cycle);

// The oriented cycle gamma_i (0-based i) of a Theta diagram whose edges are
// listed e1, e2, e3.
std::vector<CycleStep> theta_cycle(const FrontDiagram &diagram, int i);

// Requires edges e1,e2,e3 each joining v1 (vertices[0]) to v2 (vertices[1]).
ThetaInvariants theta_invariants(const FrontDiagram &diagram);

// +1 iff the diagram's edge order is a positive cyclic order of the ends at a
// trivalent vertex, reading the ends counterclockwise in the contact plane:
// right-going ends bottom to top, then left-going ends bottom to top.
int vertex_sign(const FrontDiagram &diagram, const std::string &vertex);

// (theta_invariants, vertex_sign(v1)).
EmbeddingKey embedding_key(const FrontDiagram &diagram);

// Reflection across the x-axis.
FrontDiagram mirror(const FrontDiagram &diagram);

// Strand count just before each event (index events.size() = final width).
std::vector<int> widths(const FrontDiagram &diagram);

} // namespace legendrian

#endif

#ifndef LEGENDRIAN_FRONT_ANALYSIS_HPP
#define LEGENDRIAN_FRONT_ANALYSIS_HPP

#include "legendrian/front_diagram.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace legendrian {

enum class Side { Left, Right };

// An edge-end at a vertex; `index` counts top to bottom within its side.
struct VertexEnd {
    std::size_t vertex = 0;
    Side side = Side::Left;
    std::size_t index = 0;

    bool operator==(const VertexEnd &) const = default;
};

// How one end of a strand segment is attached.
struct Attachment {
    enum class Kind { Cusp, Vertex } kind = Kind::Cusp;
    std::size_t partner = 0; // Cusp: the other segment at the cusp
    bool upper = false;      // Cusp: this segment is the upper branch
    VertexEnd end{};         // Vertex
};

// A maximal piece of strand between cusps and vertices. Crossings do not cut
// segments.
struct Segment {
    std::size_t edge = 0; // index into FrontDiagram::edges
    std::size_t born = 0; // event creating it
    std::size_t died = 0; // event consuming it
    Attachment left;
    Attachment right;
};

struct CrossingRecord {
    std::size_t event = 0;
    std::size_t upper = 0; // segment in slot pos just left of the crossing
    std::size_t lower = 0;
};

// dir = +1 rightward, -1 leftward.
struct PathStep {
    std::size_t segment = 0;
    int dir = 1;
};

// An edge traversed forward: from its tail end to its head end. Closed
// components without vertices have no ends.
struct EdgePath {
    std::vector<PathStep> steps;
    std::optional<VertexEnd> tail;
    std::optional<VertexEnd> head;

    bool closed() const { return !tail.has_value(); }
};

// Segment-level model of a legal diagram.
class FrontAnalysis {
public:
    // Throws InvalidInput if the diagram is illegal.
    explicit FrontAnalysis(const FrontDiagram &diagram);

    const FrontDiagram &diagram() const { return *diagram_; }
    const std::vector<Segment> &segments() const { return segments_; }
    const std::vector<CrossingRecord> &crossings() const { return crossings_; }
    const EdgePath &path(std::size_t edge) const { return paths_[edge]; }

    // Segment ids occupying the slots just before event k (k may equal the
    // event count, giving the final empty stack).
    const std::vector<std::size_t> &stack_before(std::size_t k) const { return stacks_[k]; }

    // Direction of a segment when its edge is traversed forward.
    int forward_dir(std::size_t segment) const { return forward_dir_[segment]; }

    // Ends at a vertex listed per side, top to bottom, as edge indices.
    const std::vector<std::size_t> &ends(std::size_t vertex, Side side) const;

    std::size_t vertex_event(std::size_t vertex) const { return vertex_event_[vertex]; }

private:
    const FrontDiagram *diagram_;
    std::vector<Segment> segments_;
    std::vector<CrossingRecord> crossings_;
    std::vector<EdgePath> paths_;
    std::vector<std::vector<std::size_t>> stacks_;
    std::vector<int> forward_dir_;
    std::vector<std::vector<std::size_t>> left_ends_;
    std::vector<std::vector<std::size_t>> right_ends_;
    std::vector<std::size_t> vertex_event_;
};

} // namespace legendrian

#endif

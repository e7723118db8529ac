#ifndef LEGENDRIAN_PLANAR_HPP
#define LEGENDRIAN_PLANAR_HPP

#include "legendrian/front_diagram.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace legendrian {

// Combinatorial map on the sphere. Edge e has darts 2e (the end at
// edges[e].first) and 2e+1 (the end at edges[e].second). rotation[v] lists
// the darts at v in cyclic (counterclockwise) order.
struct PlanarMap {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rotation;

    int dart_vertex(int dart) const { return dart % 2 == 0 ? edges[dart / 2].first : edges[dart / 2].second; }
    static int partner(int dart) { return dart ^ 1; }
    static int edge_of(int dart) { return dart / 2; }
};

// Checks each dart appears once, at its own vertex. Throws InvalidInput.
void check_rotation(const PlanarMap &map);

struct FaceStructure {
    std::vector<std::vector<int>> faces; // dart walks; a face follows dart d by rotation-successor of partner(d)
    std::vector<int> face_of;            // per dart
};

// Throws InvalidInput if the rotation is inconsistent or V - E + F != 2.
FaceStructure trace_faces(const PlanarMap &map);

// One dual vertex per face, one dual edge per primal edge (same index).
PlanarMap dual(const PlanarMap &map, const FaceStructure &faces);

struct DualTree {
    int root = 0;
    std::vector<bool> in_tree;     // per primal edge: dual edge in T*
    std::vector<int> parent;       // per face, -1 at the root
    std::vector<int> parent_edge;  // per face, -1 at the root
    std::vector<int> depth;        // l(F*)
    int max_depth = 0;             // m
    int d(int face) const { return max_depth - depth[face]; }
};

// BFS spanning tree of the dual from `root`, taking edges in index order.
// `seeds` are added first when they do not close a cycle.
DualTree dual_spanning_tree(const PlanarMap &map, const FaceStructure &faces, int root = 0,
                            const std::vector<int> &seeds = {});

// tb of a closed walk given as edge indices: minus the number of its edges
// whose duals are tree edges. Throws InvalidInput if it is not a closed walk.
int lerp_tb(const PlanarMap &map, const DualTree &tree, const std::vector<int> &cycle);

struct EdgeCertificate {
    bool cut = false;
    std::vector<int> witness; // simple cycle as edges in walk order
    int witness_tb = 0;
};

struct Certificate {
    PlanarMap map;
    FaceStructure faces;
    DualTree tree;
    std::vector<EdgeCertificate> edges;
    std::vector<int> face_tb;
};

// Property-N realization: every edge is a cut edge or lies on a cycle with
// tb = -1. Throws InvalidInput for a disconnected graph.
Certificate realize_property_n(const PlanarMap &map, const std::vector<int> &seeds = {});

// Checks a certificate without reusing the construction: cut edges by
// connectivity, witnesses as simple cycles through their edge with lerp_tb
// -1, tree as a spanning tree of the dual. Returns the problems found.
std::vector<std::string> validate_certificate(const Certificate &cert);

struct Path {
    std::vector<int> vertices;
    std::vector<int> edges;
};

struct ThetaWitness {
    int v1 = 0, v2 = 0;
    std::array<Path, 3> paths;
};

struct WedgeWitness {
    int v = 0;
    std::array<Path, 2> cycles; // closed paths from v to v, disjoint elsewhere
};

// Exact at every size (vertex-disjoint paths by max-flow).
std::optional<ThetaWitness> has_theta_subdivision(const PlanarMap &graph);
// Exhaustive up to 12 vertices. Larger graphs only report wedges at cut
// vertices, which finds every wedge when the graph has no Theta subdivision.
std::optional<WedgeWitness> has_wedge_subdivision(const PlanarMap &graph);

struct FamilyMember {
    int k = 0;
    int invariant = 0;          // distinguished tb (Theta) or linking number (wedge)
    std::vector<int> face_tb;   // facial tb after k twists (Theta case)
    bool witnesses_preserved = true;
};

struct Family {
    enum class Kind { Theta, Wedge } kind = Kind::Theta;
    Certificate base;
    int vertex = 0;
    int edge_a = 0, edge_b = 0;       // twisted pair of adjacent edges
    std::vector<int> distinguished;   // Theta case: cycle through both edges
    std::vector<FamilyMember> members; // k = 0 .. k_max
};

// Throws Infeasible when the graph has neither subdivision, or when no
// embedding with the needed adjacent pair is found.
Family infinite_family(const PlanarMap &map, int k_max);

// Front of a single vertex with two loops after `twists` positive twists
// between them, and the signed crossing count between the loops (second
// loop oriented against its edge direction).
FrontDiagram wedge_front(int twists);
int wedge_linking_crossings(const FrontDiagram &wedge);

} // namespace legendrian

#endif

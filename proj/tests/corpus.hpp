#ifndef LEGENDRIAN_TESTS_CORPUS_HPP
#define LEGENDRIAN_TESTS_CORPUS_HPP

#include "legendrian/planar.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace corpus {

using legendrian::PlanarMap;

PlanarMap theta_map();
PlanarMap wedge_map();
PlanarMap k4();
PlanarMap cube();
PlanarMap wheel4();
PlanarMap prism();
PlanarMap path(int n);
PlanarMap triangles_sharing_vertex();
PlanarMap triangles_joined_by_bridge();

// Straight-line drawing: rotation from the angles of the edges at each vertex.
PlanarMap from_coordinates(const std::vector<std::pair<double, double>> &points,
                           const std::vector<std::pair<int, int>> &edges);

// Connected planar map grown by pendant vertices and face-splitting edges
// (loops and parallel edges included).
PlanarMap random_map(std::mt19937 &rng, int max_vertices);

std::vector<std::pair<std::string, PlanarMap>> named_maps();

} // namespace corpus

#endif

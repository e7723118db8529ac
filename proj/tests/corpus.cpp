#include "corpus.hpp"

#include <algorithm>
#include <cmath>

namespace corpus {

namespace {

std::vector<std::string> names(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        out.push_back("v" + std::to_string(i));
    return out;
}

void insert_after(std::vector<int> &rot, int anchor, int dart) {
    rot.insert(std::find(rot.begin(), rot.end(), anchor) + 1, dart);
}

} // namespace

PlanarMap from_coordinates(const std::vector<std::pair<double, double>> &points,
                           const std::vector<std::pair<int, int>> &edges) {
    PlanarMap m;
    m.vertices = names(static_cast<int>(points.size()));
    m.edges = edges;
    m.rotation.resize(points.size());
    std::vector<std::vector<std::pair<double, int>>> at(points.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [a, b] = edges[e];
        const auto angle = [&](int from, int to) {
            return std::atan2(points[to].second - points[from].second, points[to].first - points[from].first);
        };
        at[a].push_back({angle(a, b), static_cast<int>(2 * e)});
        at[b].push_back({angle(b, a), static_cast<int>(2 * e + 1)});
    }
    for (std::size_t v = 0; v < points.size(); ++v) {
        std::sort(at[v].begin(), at[v].end());
        for (const auto &[angle, dart] : at[v])
            m.rotation[v].push_back(dart);
    }
    return m;
}

PlanarMap theta_map() {
    PlanarMap m;
    m.vertices = {"v1", "v2"};
    m.edges = {{0, 1}, {0, 1}, {0, 1}};
    m.rotation = {{0, 2, 4}, {5, 3, 1}};
    return m;
}

PlanarMap wedge_map() {
    PlanarMap m;
    m.vertices = {"v"};
    m.edges = {{0, 0}, {0, 0}};
    m.rotation = {{0, 1, 2, 3}};
    return m;
}

PlanarMap k4() {
    return from_coordinates({{0, 0}, {4, 0}, {2, 4}, {2, 1.5}}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
}

PlanarMap cube() {
    return from_coordinates({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 1}, {3, 1}, {3, 3}, {1, 3}},
                            {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6},
                             {3, 7}});
}

PlanarMap wheel4() {
    return from_coordinates({{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                            {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

PlanarMap prism() {
    return from_coordinates({{0, 0}, {6, 0}, {3, 5}, {2, 1}, {4, 1}, {3, 3}},
                            {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

PlanarMap path(int n) {
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        pts.push_back({static_cast<double>(i), 0.0});
        if (i > 0)
            edges.push_back({i - 1, i});
    }
    return from_coordinates(pts, edges);
}

PlanarMap triangles_sharing_vertex() {
    return from_coordinates({{0, 0}, {-2, 1}, {-2, -1}, {2, 1}, {2, -1}},
                            {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

PlanarMap triangles_joined_by_bridge() {
    return from_coordinates({{0, 0}, {-2, 1}, {-2, -1}, {3, 0}, {5, 1}, {5, -1}},
                            {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 3}});
}

PlanarMap random_map(std::mt19937 &rng, int max_vertices) {
    PlanarMap m;
    m.vertices = {"v0"};
    m.rotation = {{}};
    const int target_vertices = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_vertices - 1));
    const int extra_edges = static_cast<int>(rng() % static_cast<unsigned>(2 * target_vertices));
    int added = 0;
    while (static_cast<int>(m.vertices.size()) < target_vertices || added < extra_edges) {
        const bool pendant = static_cast<int>(m.vertices.size()) < target_vertices && (m.edges.empty() || rng() % 2);
        const int e = static_cast<int>(m.edges.size());
        if (pendant) {
            const int v = static_cast<int>(rng() % m.vertices.size());
            const int w = static_cast<int>(m.vertices.size());
            m.vertices.push_back("v" + std::to_string(w));
            m.edges.push_back({v, w});
            auto &rot = m.rotation[v];
            rot.insert(rot.begin() + static_cast<long>(rng() % (rot.size() + 1)), 2 * e);
            m.rotation.push_back({2 * e + 1});
            continue;
        }
        // Split a face: join two of its corners.
        const auto fs = legendrian::trace_faces(m);
        const auto &face = fs.faces[rng() % fs.faces.size()];
        const std::size_t i = rng() % face.size(), j = rng() % face.size();
        const auto corner = [&](std::size_t c) {
            const int before = PlanarMap::partner(face[(c + face.size() - 1) % face.size()]);
            return std::pair{m.dart_vertex(face[c]), before};
        };
        const auto [u, anchor_u] = corner(i);
        const auto [w, anchor_w] = corner(j);
        m.edges.push_back({u, w});
        if (i == j) {
            // Loop inside this corner.
            insert_after(m.rotation[u], anchor_u, 2 * e);
            insert_after(m.rotation[u], 2 * e, 2 * e + 1);
        } else {
            insert_after(m.rotation[u], anchor_u, 2 * e);
            insert_after(m.rotation[w], anchor_w, 2 * e + 1);
        }
        ++added;
    }
    return m;
}

std::vector<std::pair<std::string, PlanarMap>> named_maps() {
    return {{"theta", theta_map()}, {"K4", k4()},         {"cube", cube()},
            {"W4", wheel4()},       {"prism", prism()}};
}

} // namespace corpus

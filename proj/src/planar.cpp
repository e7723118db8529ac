#include "legendrian/planar.hpp"

#include "legendrian/errors.hpp"
#include "legendrian/front_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace legendrian {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
};

int num_vertices(const PlanarMap &m) { return static_cast<int>(m.vertices.size()); }
int num_edges(const PlanarMap &m) { return static_cast<int>(m.edges.size()); }

// Connected after deleting edge `skip` (-1: none)?
bool connected_without(const PlanarMap &m, int skip) {
    const int n = num_vertices(m);
    if (n == 0)
        return true;
    UnionFind uf(static_cast<std::size_t>(n));
    int parts = n;
    for (int e = 0; e < num_edges(m); ++e)
        if (e != skip && uf.unite(m.edges[e].first, m.edges[e].second))
            --parts;
    return parts == 1;
}

// Vertex sequence of a closed walk along `cycle`, if it is one.
std::optional<std::vector<int>> walk_of(const PlanarMap &m, const std::vector<int> &cycle) {
    if (cycle.empty())
        return std::nullopt;
    for (int e : cycle)
        if (e < 0 || e >= num_edges(m))
            return std::nullopt;
    const auto [a0, b0] = m.edges[cycle.front()];
    for (int start : {a0, b0}) {
        std::vector<int> verts{start};
        int cur = start;
        bool ok = true;
        for (int e : cycle) {
            const auto [a, b] = m.edges[e];
            if (cur == a)
                cur = b;
            else if (cur == b)
                cur = a;
            else {
                ok = false;
                break;
            }
            verts.push_back(cur);
        }
        if (ok && cur == start)
            return verts;
    }
    return std::nullopt;
}

// Orders an edge set forming one simple cycle into walk order.
std::vector<int> order_cycle(const PlanarMap &m, std::vector<int> edges) {
    if (edges.size() <= 1)
        return edges;
    std::vector<int> out{edges.front()};
    std::vector<bool> used(edges.size(), false);
    used[0] = true;
    int cur = m.edges[edges.front()].second;
    for (std::size_t step = 1; step < edges.size(); ++step) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (used[i])
                continue;
            const auto [a, b] = m.edges[edges[i]];
            if (a == cur || b == cur) {
                used[i] = true;
                out.push_back(edges[i]);
                cur = a == cur ? b : a;
                break;
            }
        }
    }
    return out;
}

bool is_simple_cycle(const PlanarMap &m, const std::vector<int> &edges) {
    if (edges.empty())
        return false;
    std::set<int> distinct(edges.begin(), edges.end());
    if (distinct.size() != edges.size())
        return false;
    if (edges.size() == 1)
        return m.edges[edges[0]].first == m.edges[edges[0]].second;
    std::vector<int> degree(m.vertices.size(), 0);
    for (int e : edges) {
        if (m.edges[e].first == m.edges[e].second)
            return false;
        ++degree[m.edges[e].first];
        ++degree[m.edges[e].second];
    }
    std::size_t touched = 0;
    for (int d : degree) {
        if (d != 0 && d != 2)
            return false;
        touched += d == 2 ? 1 : 0;
    }
    // A 2-regular edge set is a simple cycle iff it is connected, i.e. it has
    // as many vertices as edges and one component.
    if (touched != edges.size())
        return false;
    UnionFind uf(m.vertices.size());
    std::size_t parts = touched;
    for (int e : edges)
        if (uf.unite(m.edges[e].first, m.edges[e].second))
            --parts;
    return parts == 1;
}

} // namespace

void check_rotation(const PlanarMap &m) {
    if (m.rotation.size() != m.vertices.size())
        throw InvalidInput("rotation must list every vertex");
    for (const auto &[a, b] : m.edges)
        if (a < 0 || b < 0 || a >= num_vertices(m) || b >= num_vertices(m))
            throw InvalidInput("edge endpoint out of range");
    std::vector<int> seen(2 * m.edges.size(), 0);
    for (int v = 0; v < num_vertices(m); ++v) {
        for (int d : m.rotation[v]) {
            if (d < 0 || d >= static_cast<int>(seen.size()))
                throw InvalidInput("edge-end " + std::to_string(d) + " does not exist");
            if (m.dart_vertex(d) != v)
                throw InvalidInput("edge-end " + std::to_string(d) + " listed at the wrong vertex '" +
                                   m.vertices[v] + "'");
            if (seen[d]++)
                throw InvalidInput("edge-end " + std::to_string(d) + " listed twice");
        }
    }
    for (std::size_t d = 0; d < seen.size(); ++d)
        if (!seen[d])
            throw InvalidInput("edge-end " + std::to_string(d) + " missing from the rotation");
}

FaceStructure trace_faces(const PlanarMap &m) {
    check_rotation(m);
    if (m.vertices.empty())
        throw InvalidInput("map has no vertices");
    if (!connected_without(m, -1))
        throw InvalidInput("map is disconnected");
    const int darts = 2 * num_edges(m);
    std::vector<int> next_at_vertex(static_cast<std::size_t>(darts));
    for (const auto &rot : m.rotation)
        for (std::size_t i = 0; i < rot.size(); ++i)
            next_at_vertex[rot[i]] = rot[(i + 1) % rot.size()];

    FaceStructure fs;
    fs.face_of.assign(static_cast<std::size_t>(darts), -1);
    for (int start = 0; start < darts; ++start) {
        if (fs.face_of[start] >= 0)
            continue;
        const int id = static_cast<int>(fs.faces.size());
        fs.faces.emplace_back();
        for (int d = start; fs.face_of[d] < 0; d = next_at_vertex[PlanarMap::partner(d)]) {
            fs.face_of[d] = id;
            fs.faces.back().push_back(d);
        }
    }
    if (darts == 0)
        fs.faces.emplace_back();
    const int euler = num_vertices(m) - num_edges(m) + static_cast<int>(fs.faces.size());
    if (euler != 2)
        throw InvalidInput("rotation system is not a sphere embedding (V - E + F = " + std::to_string(euler) + ")");
    return fs;
}

PlanarMap dual(const PlanarMap &m, const FaceStructure &fs) {
    PlanarMap d;
    for (std::size_t f = 0; f < fs.faces.size(); ++f)
        d.vertices.push_back("F" + std::to_string(f));
    for (int e = 0; e < num_edges(m); ++e)
        d.edges.emplace_back(fs.face_of[2 * e], fs.face_of[2 * e + 1]);
    d.rotation.resize(fs.faces.size());
    for (std::size_t f = 0; f < fs.faces.size(); ++f)
        d.rotation[f] = fs.faces[f];
    return d;
}

DualTree dual_spanning_tree(const PlanarMap &m, const FaceStructure &fs, int root, const std::vector<int> &seeds) {
    const int nf = static_cast<int>(fs.faces.size());
    if (root < 0 || root >= nf)
        throw InvalidInput("root face out of range");
    DualTree t;
    t.root = root;
    t.in_tree.assign(m.edges.size(), false);
    UnionFind uf(static_cast<std::size_t>(nf));
    const auto ends = [&](int e) { return std::pair{fs.face_of[2 * e], fs.face_of[2 * e + 1]}; };
    for (int e : seeds) {
        if (e < 0 || e >= num_edges(m))
            throw InvalidInput("seed edge out of range");
        const auto [f, g] = ends(e);
        if (uf.unite(f, g))
            t.in_tree[e] = true;
    }
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(nf));
    for (int e = 0; e < num_edges(m); ++e) {
        const auto [f, g] = ends(e);
        incident[f].push_back(e);
        if (g != f)
            incident[g].push_back(e);
    }
    std::vector<bool> seen(static_cast<std::size_t>(nf), false);
    std::queue<int> q;
    q.push(root);
    seen[root] = true;
    while (!q.empty()) {
        const int f = q.front();
        q.pop();
        for (int e : incident[f]) {
            const auto [a, b] = ends(e);
            const int g = a == f ? b : a;
            if (!t.in_tree[e] && uf.unite(f, g))
                t.in_tree[e] = true;
            if (!seen[g]) {
                seen[g] = true;
                q.push(g);
            }
        }
    }

    t.parent.assign(static_cast<std::size_t>(nf), -1);
    t.parent_edge.assign(static_cast<std::size_t>(nf), -1);
    t.depth.assign(static_cast<std::size_t>(nf), -1);
    t.depth[root] = 0;
    q.push(root);
    while (!q.empty()) {
        const int f = q.front();
        q.pop();
        for (int e : incident[f]) {
            if (!t.in_tree[e])
                continue;
            const auto [a, b] = ends(e);
            const int g = a == f ? b : a;
            if (t.depth[g] >= 0)
                continue;
            t.depth[g] = t.depth[f] + 1;
            t.parent[g] = f;
            t.parent_edge[g] = e;
            t.max_depth = std::max(t.max_depth, t.depth[g]);
            q.push(g);
        }
    }
    return t;
}

int lerp_tb(const PlanarMap &m, const DualTree &t, const std::vector<int> &cycle) {
    if (!walk_of(m, cycle))
        throw InvalidInput("cycle is not a closed walk in the graph");
    int tb = 0;
    for (int e : cycle)
        tb -= t.in_tree[e] ? 1 : 0;
    return tb;
}

namespace {

std::vector<int> face_edges(const std::vector<int> &face) {
    std::vector<int> out;
    for (int d : face)
        out.push_back(PlanarMap::edge_of(d));
    return out;
}

} // namespace

Certificate realize_property_n(const PlanarMap &m, const std::vector<int> &seeds) {
    Certificate c;
    c.map = m;
    c.faces = trace_faces(m);
    c.tree = dual_spanning_tree(m, c.faces, 0, seeds);
    const int nf = static_cast<int>(c.faces.faces.size());

    // Euler tour of the tree for subtree membership.
    std::vector<std::vector<int>> children(static_cast<std::size_t>(nf));
    for (int f = 0; f < nf; ++f)
        if (c.tree.parent[f] >= 0)
            children[c.tree.parent[f]].push_back(f);
    std::vector<int> tin(static_cast<std::size_t>(nf)), tout(static_cast<std::size_t>(nf));
    int clock = 0;
    std::vector<std::pair<int, std::size_t>> stack{{c.tree.root, 0}};
    tin[c.tree.root] = clock++;
    while (!stack.empty()) {
        auto &[f, i] = stack.back();
        if (i < children[f].size()) {
            const int g = children[f][i++];
            tin[g] = clock++;
            stack.emplace_back(g, 0);
        } else {
            tout[f] = clock;
            stack.pop_back();
        }
    }
    const auto inside = [&](int h, int x) { return tin[h] <= tin[x] && tin[x] < tout[h]; };

    c.edges.resize(m.edges.size());
    for (int e = 0; e < num_edges(m); ++e) {
        const int f = c.faces.face_of[2 * e], g = c.faces.face_of[2 * e + 1];
        EdgeCertificate &ec = c.edges[e];
        if (f == g) {
            ec.cut = true;
            continue;
        }
        // D = faces below h; its boundary is a simple cycle through e with a
        // single tree-dual edge (the one joining h to its parent).
        const int h = inside(f, g) ? g : f;
        std::vector<int> boundary;
        for (int x = 0; x < num_edges(m); ++x)
            if (inside(h, c.faces.face_of[2 * x]) != inside(h, c.faces.face_of[2 * x + 1]))
                boundary.push_back(x);
        ec.witness = order_cycle(m, boundary);
        ec.witness_tb = lerp_tb(m, c.tree, ec.witness);
    }
    for (const auto &face : c.faces.faces)
        c.face_tb.push_back(face.empty() ? 0 : lerp_tb(m, c.tree, face_edges(face)));
    return c;
}

std::vector<std::string> validate_certificate(const Certificate &c) {
    std::vector<std::string> problems;
    const PlanarMap &m = c.map;
    FaceStructure fs;
    try {
        fs = trace_faces(m);
    } catch (const InvalidInput &e) {
        return {e.what()};
    }
    const int nf = static_cast<int>(fs.faces.size());
    int tree_edges = 0;
    UnionFind uf(static_cast<std::size_t>(nf));
    for (int e = 0; e < num_edges(m); ++e) {
        if (e >= static_cast<int>(c.tree.in_tree.size()) || !c.tree.in_tree[e])
            continue;
        ++tree_edges;
        if (!uf.unite(fs.face_of[2 * e], fs.face_of[2 * e + 1]))
            problems.push_back("dual tree has a cycle at edge " + std::to_string(e));
    }
    if (tree_edges != nf - 1)
        problems.push_back("dual tree has " + std::to_string(tree_edges) + " edges, expected " +
                           std::to_string(nf - 1));
    if (c.edges.size() != m.edges.size()) {
        problems.push_back("certificate does not cover every edge");
        return problems;
    }
    for (int e = 0; e < num_edges(m); ++e) {
        const auto &ec = c.edges[e];
        const bool cut = !connected_without(m, e);
        const std::string name = "edge " + std::to_string(e);
        if (ec.cut != cut) {
            problems.push_back(name + (cut ? " is a cut edge but has a witness" : " is marked cut but is not"));
            continue;
        }
        if (cut)
            continue;
        if (std::find(ec.witness.begin(), ec.witness.end(), e) == ec.witness.end())
            problems.push_back(name + ": witness does not contain the edge");
        if (!is_simple_cycle(m, ec.witness))
            problems.push_back(name + ": witness is not a simple cycle");
        else if (lerp_tb(m, c.tree, ec.witness) != -1)
            problems.push_back(name + ": witness has tb " + std::to_string(lerp_tb(m, c.tree, ec.witness)));
    }
    return problems;
}

namespace {

// Max flow with unit vertex capacities between s and t, capped at `limit`.
// Returns the internally vertex-disjoint paths found.
std::vector<Path> disjoint_paths(const PlanarMap &m, int s, int t, int limit) {
    const int n = num_vertices(m);
    struct Arc {
        int to, cap, edge;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(2 * n));
    const auto add = [&](int a, int b, int cap, int edge) {
        out[a].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, cap, edge});
        out[b].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0, edge});
    };
    const auto in_node = [](int v) { return 2 * v; };
    const auto out_node = [](int v) { return 2 * v + 1; };
    for (int v = 0; v < n; ++v)
        add(in_node(v), out_node(v), v == s || v == t ? limit : 1, -1);
    for (int e = 0; e < num_edges(m); ++e) {
        const auto [a, b] = m.edges[e];
        if (a == b)
            continue;
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}})
            if (y != s && x != t)
                add(out_node(x), in_node(y), 1, e);
    }
    const int source = out_node(s), sink = in_node(t);
    int flow = 0;
    while (flow < limit) {
        std::vector<int> via(static_cast<std::size_t>(2 * n), -1);
        std::queue<int> q;
        q.push(source);
        via[source] = -2;
        while (!q.empty() && via[sink] == -1) {
            const int x = q.front();
            q.pop();
            for (int id : out[x])
                if (arcs[id].cap > 0 && via[arcs[id].to] == -1) {
                    via[arcs[id].to] = id;
                    q.push(arcs[id].to);
                }
        }
        if (via[sink] == -1)
            break;
        for (int x = sink; x != source;) {
            const int id = via[x];
            arcs[id].cap -= 1;
            arcs[id ^ 1].cap += 1;
            x = arcs[id ^ 1].to;
        }
        ++flow;
    }
    // Flow on a forward arc = capacity of its reverse arc.
    std::vector<Path> paths;
    std::vector<int> used(arcs.size(), 0);
    for (int p = 0; p < flow; ++p) {
        Path path{{s}, {}};
        int x = source;
        while (x != sink) {
            bool moved = false;
            for (int id : out[x]) {
                // At an out-node the even arcs are edge arcs.
                if (id % 2 != 0 || arcs[id ^ 1].cap - used[id] <= 0)
                    continue;
                ++used[id];
                if (arcs[id].edge >= 0) {
                    path.edges.push_back(arcs[id].edge);
                    path.vertices.push_back(arcs[id].to / 2);
                }
                x = arcs[id].to;
                if (x != sink && x % 2 == 0)
                    x = out_node(x / 2);
                moved = true;
                break;
            }
            if (!moved)
                throw std::logic_error("flow decomposition failed");
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

// Simple cycles through v: (mask of other vertices, closed path from v).
std::vector<std::pair<unsigned, Path>> cycles_through(const PlanarMap &m, int v, std::size_t cap) {
    std::vector<std::pair<unsigned, Path>> out;
    std::vector<std::vector<std::pair<int, int>>> adj(m.vertices.size());
    for (int e = 0; e < num_edges(m); ++e) {
        const auto [a, b] = m.edges[e];
        if (a == b) {
            if (a == v)
                out.push_back({0u, Path{{v, v}, {e}}});
            continue;
        }
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }
    Path cur{{v}, {}};
    unsigned mask = 0;
    const auto dfs = [&](auto &&self, int x) -> void {
        if (out.size() >= cap)
            return;
        for (auto [y, e] : adj[x]) {
            if (y == v) {
                // Close the cycle once per direction-free pair of end edges.
                if (cur.edges.size() >= 1 && e > cur.edges.front()) {
                    Path p = cur;
                    p.vertices.push_back(v);
                    p.edges.push_back(e);
                    out.push_back({mask, std::move(p)});
                }
                continue;
            }
            if (mask & (1u << y))
                continue;
            mask |= 1u << y;
            cur.vertices.push_back(y);
            cur.edges.push_back(e);
            self(self, y);
            cur.vertices.pop_back();
            cur.edges.pop_back();
            mask &= ~(1u << y);
        }
    };
    dfs(dfs, v);
    return out;
}

bool share_edge(const Path &a, const Path &b) {
    for (int e : a.edges)
        if (std::find(b.edges.begin(), b.edges.end(), e) != b.edges.end())
            return true;
    return false;
}

// Biconnected components as edge lists (loops form their own blocks).
std::vector<std::vector<int>> blocks(const PlanarMap &m) {
    const int n = num_vertices(m);
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> out;
    for (int e = 0; e < num_edges(m); ++e) {
        const auto [a, b] = m.edges[e];
        if (a == b) {
            out.push_back({e});
            continue;
        }
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<int> edge_stack;
    int clock = 0;
    const auto dfs = [&](auto &&self, int x, int via) -> void {
        disc[x] = low[x] = clock++;
        for (auto [y, e] : adj[x]) {
            if (e == via)
                continue;
            if (disc[y] < 0) {
                edge_stack.push_back(e);
                self(self, y, e);
                low[x] = std::min(low[x], low[y]);
                if (low[y] >= disc[x]) {
                    std::vector<int> block;
                    while (true) {
                        const int top = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(top);
                        if (top == e)
                            break;
                    }
                    std::sort(block.begin(), block.end());
                    out.push_back(std::move(block));
                }
            } else if (disc[y] < disc[x]) {
                edge_stack.push_back(e);
                low[x] = std::min(low[x], disc[y]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] < 0)
            dfs(dfs, v, -1);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<int> block_vertices(const PlanarMap &m, const std::vector<int> &block) {
    std::set<int> vs;
    for (int e : block) {
        vs.insert(m.edges[e].first);
        vs.insert(m.edges[e].second);
    }
    return vs;
}

// Shortest path from a to b using only `allowed` edges and avoiding `avoid`.
std::optional<Path> bfs_path(const PlanarMap &m, int a, int b, const std::set<int> &allowed, int avoid) {
    std::vector<int> via(m.vertices.size(), -1), prev(m.vertices.size(), -1);
    std::vector<bool> seen(m.vertices.size(), false);
    std::queue<int> q;
    q.push(a);
    seen[a] = true;
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        if (x == b)
            break;
        for (int e : allowed) {
            const auto [p, r] = m.edges[e];
            if (p == r || (p != x && r != x))
                continue;
            const int y = p == x ? r : p;
            if (y == avoid || seen[y])
                continue;
            seen[y] = true;
            via[y] = e;
            prev[y] = x;
            q.push(y);
        }
    }
    if (!seen[b])
        return std::nullopt;
    Path path;
    for (int x = b; x != a; x = prev[x]) {
        path.vertices.push_back(x);
        path.edges.push_back(via[x]);
    }
    path.vertices.push_back(a);
    std::reverse(path.vertices.begin(), path.vertices.end());
    std::reverse(path.edges.begin(), path.edges.end());
    return path;
}

constexpr int kExhaustiveLimit = 12;
constexpr std::size_t kCycleCap = 200000;

std::vector<WedgeWitness> wedge_witnesses(const PlanarMap &m, bool first_only) {
    std::vector<WedgeWitness> found;
    const int n = num_vertices(m);
    if (n <= kExhaustiveLimit) {
        for (int v = 0; v < n; ++v) {
            const auto cycles = cycles_through(m, v, kCycleCap);
            for (std::size_t i = 0; i < cycles.size(); ++i)
                for (std::size_t j = i + 1; j < cycles.size(); ++j)
                    if ((cycles[i].first & cycles[j].first) == 0 && !share_edge(cycles[i].second, cycles[j].second)) {
                        found.push_back({v, {cycles[i].second, cycles[j].second}});
                        if (first_only)
                            return found;
                    }
        }
        return found;
    }
    // Larger graphs: two cyclic blocks meeting at a cut vertex.
    const auto bs = blocks(m);
    for (int v = 0; v < n; ++v) {
        std::vector<Path> cyc;
        for (const auto &b : bs) {
            const auto vs = block_vertices(m, b);
            if (!vs.count(v))
                continue;
            if (b.size() == 1 && m.edges[b[0]].first == m.edges[b[0]].second) {
                cyc.push_back({{v, v}, {b[0]}});
                continue;
            }
            if (b.size() < 2)
                continue;
            const std::set<int> allowed(b.begin(), b.end());
            for (int e : b) {
                const auto [p, r] = m.edges[e];
                if (p != v && r != v)
                    continue;
                const int far = p == v ? r : p;
                std::set<int> rest = allowed;
                rest.erase(e);
                if (auto path = bfs_path(m, far, v, rest, -1)) {
                    Path c{{v}, {e}};
                    c.vertices.insert(c.vertices.end(), path->vertices.begin(), path->vertices.end());
                    c.edges.insert(c.edges.end(), path->edges.begin(), path->edges.end());
                    cyc.push_back(c);
                    break;
                }
            }
        }
        for (std::size_t i = 0; i + 1 < cyc.size(); ++i) {
            found.push_back({v, {cyc[i], cyc[i + 1]}});
            if (first_only)
                return found;
        }
    }
    return found;
}

} // namespace

std::optional<ThetaWitness> has_theta_subdivision(const PlanarMap &g) {
    const int n = num_vertices(g);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto paths = disjoint_paths(g, a, b, 3);
            if (paths.size() == 3)
                return ThetaWitness{a, b, {paths[0], paths[1], paths[2]}};
        }
    return std::nullopt;
}

std::optional<WedgeWitness> has_wedge_subdivision(const PlanarMap &g) {
    auto found = wedge_witnesses(g, true);
    if (found.empty())
        return std::nullopt;
    return found.front();
}

FrontDiagram wedge_front(int twists) {
    if (twists < 0)
        throw InvalidInput("twist count must be non-negative");
    FrontDiagram d;
    d.edges = {"a", "b"};
    d.vertices = {{"v", 4}};
    d.trusted_trivial = true;
    const std::vector<std::string> labels =
        twists % 2 == 0 ? std::vector<std::string>{"a", "a", "b", "b"} : std::vector<std::string>{"a", "b", "a", "b"};
    d.events.push_back(Event::make_vertex(1, "v", {}, labels));
    for (int i = 0; i < twists; ++i)
        d.events.push_back(Event::crossing(2));
    d.events.push_back(Event::right_cusp(1));
    d.events.push_back(Event::right_cusp(1));
    return d;
}

int wedge_linking_crossings(const FrontDiagram &d) {
    const FrontAnalysis fa(d);
    const auto b = d.edge_index("b");
    int total = 0;
    for (const auto &x : fa.crossings()) {
        const auto &su = fa.segments()[x.upper], &sl = fa.segments()[x.lower];
        if (su.edge == sl.edge)
            continue;
        int sign = fa.forward_dir(x.upper) * fa.forward_dir(x.lower);
        if (b && (su.edge == *b || sl.edge == *b))
            sign = -sign;
        total += sign;
    }
    return total;
}

namespace {

// Number of times a facial walk turns at v directly between darts da and db.
int corner_passes(const PlanarMap &m, const std::vector<int> &face, int v, int da, int db) {
    int passes = 0;
    for (std::size_t i = 0; i < face.size(); ++i) {
        const int arrive = PlanarMap::partner(face[i]);
        const int leave = face[(i + 1) % face.size()];
        if (m.dart_vertex(arrive) != v)
            continue;
        if ((arrive == da && leave == db) || (arrive == db && leave == da))
            ++passes;
    }
    return passes;
}

bool contains_both(const std::vector<int> &cycle, int a, int b) {
    return std::find(cycle.begin(), cycle.end(), a) != cycle.end() &&
           std::find(cycle.begin(), cycle.end(), b) != cycle.end();
}

// Rotation at v with dart db moved to follow da directly; the darts that sat
// between them (other blocks hanging at v) move to the next corner.
PlanarMap make_adjacent(const PlanarMap &m, int v, int da, int db) {
    PlanarMap out = m;
    auto rot = m.rotation[v];
    std::rotate(rot.begin(), std::find(rot.begin(), rot.end(), da), rot.end());
    const auto it = std::find(rot.begin(), rot.end(), db);
    std::vector<int> between(rot.begin() + 1, it);
    std::vector<int> next{da, db};
    next.insert(next.end(), it + 1, rot.end());
    next.insert(next.end(), between.begin(), between.end());
    out.rotation[v] = next;
    return out;
}

std::optional<Family> theta_family(const PlanarMap &m, int k_max) {
    for (const auto &block : blocks(m)) {
        const auto vs = block_vertices(m, block);
        if (block.size() < vs.size() + 1)
            continue;
        const std::set<int> in_block(block.begin(), block.end());
        for (int v : vs) {
            std::vector<int> bdarts;
            for (int d : m.rotation[v])
                if (in_block.count(PlanarMap::edge_of(d)))
                    bdarts.push_back(d);
            if (bdarts.size() < 3)
                continue;
            for (std::size_t i = 0; i < bdarts.size(); ++i) {
                const int da = bdarts[i], db = bdarts[(i + 1) % bdarts.size()];
                const PlanarMap adjusted = make_adjacent(m, v, da, db);
                try {
                    trace_faces(adjusted);
                } catch (const InvalidInput &) {
                    continue;
                }
                const int ea = PlanarMap::edge_of(da), eb = PlanarMap::edge_of(db);
                Certificate base = realize_property_n(adjusted, {ea, eb});
                if (!base.tree.in_tree[ea] || !base.tree.in_tree[eb])
                    continue;
                const int far_a = adjusted.dart_vertex(PlanarMap::partner(da));
                const int far_b = adjusted.dart_vertex(PlanarMap::partner(db));
                std::set<int> rest = in_block;
                rest.erase(ea);
                rest.erase(eb);
                const auto path = bfs_path(adjusted, far_a, far_b, rest, v);
                if (!path)
                    continue;
                Family fam;
                fam.kind = Family::Kind::Theta;
                fam.vertex = v;
                fam.edge_a = ea;
                fam.edge_b = eb;
                fam.distinguished = {ea};
                fam.distinguished.insert(fam.distinguished.end(), path->edges.begin(), path->edges.end());
                fam.distinguished.push_back(eb);
                const int base_tb = lerp_tb(adjusted, base.tree, fam.distinguished);
                bool preserved = true;
                for (const auto &ec : base.edges)
                    preserved = preserved && (ec.cut || !contains_both(ec.witness, ea, eb));
                for (int k = 0; k <= k_max; ++k) {
                    FamilyMember member;
                    member.k = k;
                    member.invariant = base_tb - k;
                    for (std::size_t f = 0; f < base.faces.faces.size(); ++f)
                        member.face_tb.push_back(base.face_tb[f] -
                                                 k * corner_passes(adjusted, base.faces.faces[f], v, da, db));
                    member.witnesses_preserved = preserved;
                    fam.members.push_back(std::move(member));
                }
                fam.base = std::move(base);
                return fam;
            }
        }
    }
    return std::nullopt;
}

std::optional<Family> wedge_family(const PlanarMap &m, int k_max) {
    for (const auto &w : wedge_witnesses(m, false)) {
        // Ends of the two cycles at v; any pair adjacent in the rotation works.
        const auto &rot = m.rotation[w.v];
        for (std::size_t i = 0; i < rot.size(); ++i) {
            const int da = rot[i], db = rot[(i + 1) % rot.size()];
            const int ea = PlanarMap::edge_of(da), eb = PlanarMap::edge_of(db);
            const auto on = [](const Path &p, int e) {
                return p.edges.front() == e || p.edges.back() == e;
            };
            if (!((on(w.cycles[0], ea) && on(w.cycles[1], eb)) || (on(w.cycles[1], ea) && on(w.cycles[0], eb))))
                continue;
            Family fam;
            fam.kind = Family::Kind::Wedge;
            fam.vertex = w.v;
            fam.edge_a = ea;
            fam.edge_b = eb;
            fam.base = realize_property_n(m);
            bool preserved = true;
            for (const auto &ec : fam.base.edges)
                preserved = preserved && (ec.cut || !contains_both(ec.witness, ea, eb));
            for (int k = 0; k <= k_max; ++k) {
                FamilyMember member;
                member.k = k;
                member.invariant = wedge_linking_crossings(wedge_front(2 * k)) / 2;
                for (std::size_t f = 0; f < fam.base.faces.faces.size(); ++f)
                    member.face_tb.push_back(fam.base.face_tb[f] -
                                             2 * k * corner_passes(m, fam.base.faces.faces[f], w.v, da, db));
                member.witnesses_preserved = preserved;
                fam.members.push_back(std::move(member));
            }
            return fam;
        }
    }
    return std::nullopt;
}

} // namespace

Family infinite_family(const PlanarMap &m, int k_max) {
    if (k_max < 0)
        throw InvalidInput("k_max must be non-negative");
    trace_faces(m);
    if (has_theta_subdivision(m)) {
        if (auto fam = theta_family(m, k_max))
            return *fam;
        throw Infeasible("no embedding with adjacent twist edges was found");
    }
    if (has_wedge_subdivision(m)) {
        if (auto fam = wedge_family(m, k_max))
            return *fam;
        throw Infeasible("no wedge witness has adjacent ends at its vertex");
    }
    throw Infeasible("graph contains neither a Theta nor a wedge subdivision");
}

} // namespace legendrian

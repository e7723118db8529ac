#include "legendrian/front_diagram.hpp"

#include "legendrian/errors.hpp"
#include "legendrian/front_analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>

namespace legendrian {

Event Event::left_cusp(int pos, std::string edge) {
    Event e;
    e.kind = EventKind::LeftCusp;
    e.pos = pos;
    e.edge = std::move(edge);
    return e;
}

Event Event::right_cusp(int pos) {
    Event e;
    e.kind = EventKind::RightCusp;
    e.pos = pos;
    return e;
}

Event Event::crossing(int pos) {
    Event e;
    e.kind = EventKind::Crossing;
    e.pos = pos;
    return e;
}

Event Event::make_vertex(int pos, std::string id, std::vector<std::string> left, std::vector<std::string> right) {
    Event e;
    e.kind = EventKind::Vertex;
    e.pos = pos;
    e.vertex = std::move(id);
    e.left = std::move(left);
    e.right = std::move(right);
    return e;
}

int Event::consumed() const {
    switch (kind) {
    case EventKind::LeftCusp: return 0;
    case EventKind::RightCusp: return 2;
    case EventKind::Crossing: return 2;
    case EventKind::Vertex: return static_cast<int>(left.size());
    }
    return 0;
}

int Event::produced() const {
    switch (kind) {
    case EventKind::LeftCusp: return 2;
    case EventKind::RightCusp: return 0;
    case EventKind::Crossing: return 2;
    case EventKind::Vertex: return static_cast<int>(right.size());
    }
    return 0;
}

std::optional<std::size_t> FrontDiagram::edge_index(const std::string &id) const {
    auto it = std::find(edges.begin(), edges.end(), id);
    if (it == edges.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - edges.begin());
}

std::optional<std::size_t> FrontDiagram::vertex_index(const std::string &id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id)
            return i;
    return std::nullopt;
}

std::vector<int> widths(const FrontDiagram &diagram) {
    std::vector<int> out;
    out.reserve(diagram.events.size() + 1);
    int w = 0;
    for (const auto &ev : diagram.events) {
        out.push_back(w);
        w += ev.produced() - ev.consumed();
    }
    out.push_back(w);
    return out;
}

namespace {

// Everything the simulation learns; only complete when no violations arise.
struct Model {
    std::vector<Segment> segments;
    std::vector<CrossingRecord> crossings;
    std::vector<std::vector<std::size_t>> stacks;
    std::vector<std::vector<std::size_t>> left_ends, right_ends; // edge indices
    std::vector<std::vector<std::size_t>> left_segs, right_segs; // segment ids
    std::vector<std::size_t> vertex_event;
    std::vector<EdgePath> paths;
    std::vector<int> forward_dir;
};

std::string event_name(EventKind k) {
    switch (k) {
    case EventKind::LeftCusp: return "left cusp";
    case EventKind::RightCusp: return "right cusp";
    case EventKind::Crossing: return "crossing";
    case EventKind::Vertex: return "vertex";
    }
    return "event";
}

auto end_key(const VertexEnd &e) { return std::make_tuple(e.vertex, e.side == Side::Left ? 0 : 1, e.index); }

std::size_t segment_at(const Model &m, const VertexEnd &e) {
    return e.side == Side::Left ? m.left_segs[e.vertex][e.index] : m.right_segs[e.vertex][e.index];
}

// Runs the event word. Returns false if the model is unusable.
bool simulate(const FrontDiagram &d, std::vector<Violation> &out, Model &m) {
    auto fail = [&](std::optional<std::size_t> k, std::string msg) { out.push_back({k, std::move(msg)}); };

    {
        std::set<std::string> seen;
        for (const auto &e : d.edges)
            if (!seen.insert(e).second)
                fail(std::nullopt, "duplicate edge id '" + e + "'");
        std::set<std::string> vseen;
        for (const auto &v : d.vertices) {
            if (!vseen.insert(v.id).second)
                fail(std::nullopt, "duplicate vertex id '" + v.id + "'");
            if (v.valence < 1)
                fail(std::nullopt, "vertex '" + v.id + "' has valence < 1");
        }
        if (!out.empty())
            return false;
    }

    const std::size_t nv = d.vertices.size();
    m.left_ends.assign(nv, {});
    m.right_ends.assign(nv, {});
    m.left_segs.assign(nv, {});
    m.right_segs.assign(nv, {});
    m.vertex_event.assign(nv, d.events.size());

    std::vector<std::size_t> stack;
    bool fatal = false;
    for (std::size_t k = 0; k < d.events.size() && !fatal; ++k) {
        const Event &ev = d.events[k];
        m.stacks.push_back(stack);
        const int w = static_cast<int>(stack.size());
        const int p = ev.pos;
        const std::string where = event_name(ev.kind) + " at pos " + std::to_string(p) + " (width " +
                                  std::to_string(w) + ")";
        switch (ev.kind) {
        case EventKind::LeftCusp: {
            auto e = d.edge_index(ev.edge);
            if (!e) {
                fail(k, "left cusp names unknown edge '" + ev.edge + "'");
                fatal = true;
                break;
            }
            if (p < 1 || p > w + 1) {
                fail(k, where + " is out of range");
                fatal = true;
                break;
            }
            std::size_t a = m.segments.size(), b = a + 1;
            Segment sa, sb;
            sa.edge = sb.edge = *e;
            sa.born = sb.born = k;
            sa.left = {Attachment::Kind::Cusp, b, true, {}};
            sb.left = {Attachment::Kind::Cusp, a, false, {}};
            m.segments.push_back(sa);
            m.segments.push_back(sb);
            stack.insert(stack.begin() + (p - 1), {a, b});
            break;
        }
        case EventKind::RightCusp: {
            if (p < 1 || p > w - 1) {
                fail(k, where + " is out of range");
                fatal = true;
                break;
            }
            std::size_t s = stack[p - 1], t = stack[p];
            if (m.segments[s].edge != m.segments[t].edge)
                fail(k, "right cusp joins strands of different edges '" + d.edges[m.segments[s].edge] + "' and '" +
                            d.edges[m.segments[t].edge] + "'");
            m.segments[s].right = {Attachment::Kind::Cusp, t, true, {}};
            m.segments[t].right = {Attachment::Kind::Cusp, s, false, {}};
            m.segments[s].died = m.segments[t].died = k;
            stack.erase(stack.begin() + (p - 1), stack.begin() + (p + 1));
            break;
        }
        case EventKind::Crossing: {
            if (p < 1 || p > w - 1) {
                fail(k, where + " is out of range");
                fatal = true;
                break;
            }
            m.crossings.push_back({k, stack[p - 1], stack[p]});
            std::swap(stack[p - 1], stack[p]);
            break;
        }
        case EventKind::Vertex: {
            auto v = d.vertex_index(ev.vertex);
            if (!v) {
                fail(k, "vertex event names unknown vertex '" + ev.vertex + "'");
                fatal = true;
                break;
            }
            if (m.vertex_event[*v] != d.events.size()) {
                fail(k, "vertex '" + ev.vertex + "' appears in more than one event");
                fatal = true;
                break;
            }
            m.vertex_event[*v] = k;
            const int nl = static_cast<int>(ev.left.size());
            const int nr = static_cast<int>(ev.right.size());
            if (nl + nr != d.vertices[*v].valence)
                fail(k, "vertex '" + ev.vertex + "' has " + std::to_string(nl + nr) + " ends but valence " +
                            std::to_string(d.vertices[*v].valence));
            if (p < 1 || p + nl - 1 > w || (nl == 0 && p > w + 1)) {
                fail(k, where + " is out of range");
                fatal = true;
                break;
            }
            for (int j = 0; j < nl; ++j) {
                std::size_t s = stack[p - 1 + j];
                auto e = d.edge_index(ev.left[j]);
                if (!e) {
                    fail(k, "vertex '" + ev.vertex + "' names unknown edge '" + ev.left[j] + "'");
                    fatal = true;
                    break;
                }
                if (m.segments[s].edge != *e)
                    fail(k, "vertex '" + ev.vertex + "' expects edge '" + ev.left[j] + "' at slot " +
                                std::to_string(p + j) + " but finds '" + d.edges[m.segments[s].edge] + "'");
                m.segments[s].right = {Attachment::Kind::Vertex, 0, false,
                                       {*v, Side::Left, static_cast<std::size_t>(j)}};
                m.segments[s].died = k;
                m.left_ends[*v].push_back(m.segments[s].edge);
                m.left_segs[*v].push_back(s);
            }
            if (fatal)
                break;
            std::vector<std::size_t> fresh;
            for (int j = 0; j < nr; ++j) {
                auto e = d.edge_index(ev.right[j]);
                if (!e) {
                    fail(k, "vertex '" + ev.vertex + "' names unknown edge '" + ev.right[j] + "'");
                    fatal = true;
                    break;
                }
                Segment s;
                s.edge = *e;
                s.born = k;
                s.left = {Attachment::Kind::Vertex, 0, false, {*v, Side::Right, static_cast<std::size_t>(j)}};
                fresh.push_back(m.segments.size());
                m.right_ends[*v].push_back(*e);
                m.right_segs[*v].push_back(m.segments.size());
                m.segments.push_back(s);
            }
            if (fatal)
                break;
            stack.erase(stack.begin() + (p - 1), stack.begin() + (p - 1 + nl));
            stack.insert(stack.begin() + (p - 1), fresh.begin(), fresh.end());
            break;
        }
        }
    }
    if (fatal)
        return false;
    m.stacks.push_back(stack);

    if (!stack.empty())
        fail(std::nullopt, "strand list is not empty at the end (" + std::to_string(stack.size()) + " open strands)");
    for (std::size_t v = 0; v < nv; ++v)
        if (m.vertex_event[v] == d.events.size())
            fail(std::nullopt, "vertex '" + d.vertices[v].id + "' has no vertex event");
    if (!out.empty())
        return false;

    // Glue segments into edges.
    std::vector<std::vector<std::size_t>> by_edge(d.edges.size());
    for (std::size_t s = 0; s < m.segments.size(); ++s)
        by_edge[m.segments[s].edge].push_back(s);
    std::vector<std::vector<VertexEnd>> ends_of(d.edges.size());
    for (std::size_t v = 0; v < nv; ++v) {
        for (std::size_t j = 0; j < m.left_ends[v].size(); ++j)
            ends_of[m.left_ends[v][j]].push_back({v, Side::Left, j});
        for (std::size_t j = 0; j < m.right_ends[v].size(); ++j)
            ends_of[m.right_ends[v][j]].push_back({v, Side::Right, j});
    }

    m.paths.assign(d.edges.size(), {});
    m.forward_dir.assign(m.segments.size(), 0);
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
        const std::string &name = d.edges[e];
        if (by_edge[e].empty()) {
            fail(std::nullopt, "edge '" + name + "' is never drawn");
            continue;
        }
        EdgePath path;
        if (ends_of[e].empty()) {
            PathStep start{by_edge[e].front(), 1};
            PathStep cur = start;
            do {
                path.steps.push_back(cur);
                const Attachment &att = cur.dir > 0 ? m.segments[cur.segment].right : m.segments[cur.segment].left;
                cur = {att.partner, -cur.dir};
            } while (!(cur.segment == start.segment && cur.dir == start.dir) &&
                     path.steps.size() <= m.segments.size());
        } else if (ends_of[e].size() == 2) {
            VertexEnd a = ends_of[e][0], b = ends_of[e][1];
            if (end_key(b) < end_key(a))
                std::swap(a, b);
            path.tail = a;
            PathStep cur{segment_at(m, a), a.side == Side::Right ? 1 : -1};
            for (;;) {
                path.steps.push_back(cur);
                const Attachment &att = cur.dir > 0 ? m.segments[cur.segment].right : m.segments[cur.segment].left;
                if (att.kind == Attachment::Kind::Vertex) {
                    path.head = att.end;
                    break;
                }
                cur = {att.partner, -cur.dir};
            }
        } else {
            fail(std::nullopt, "edge '" + name + "' has " + std::to_string(ends_of[e].size()) +
                                   " vertex ends (expected 0 or 2)");
            continue;
        }
        if (path.steps.size() != by_edge[e].size()) {
            fail(std::nullopt, "edge '" + name + "' is not a single connected arc");
            continue;
        }
        for (const auto &st : path.steps)
            m.forward_dir[st.segment] = st.dir;
        m.paths[e] = std::move(path);
    }
    return out.empty();
}

} // namespace

std::vector<Violation> validate(const FrontDiagram &diagram) {
    std::vector<Violation> out;
    Model m;
    simulate(diagram, out, m);
    return out;
}

void require_legal(const FrontDiagram &diagram) {
    auto v = validate(diagram);
    if (!v.empty()) {
        std::string msg = "illegal diagram: " + v.front().message;
        if (v.front().event)
            msg += " (event " + std::to_string(*v.front().event) + ")";
        throw InvalidInput(msg);
    }
}

FrontAnalysis::FrontAnalysis(const FrontDiagram &diagram) : diagram_(&diagram) {
    std::vector<Violation> out;
    Model m;
    if (!simulate(diagram, out, m)) {
        std::string msg = "illegal diagram: " + (out.empty() ? std::string("unknown") : out.front().message);
        if (!out.empty() && out.front().event)
            msg += " (event " + std::to_string(*out.front().event) + ")";
        throw InvalidInput(msg);
    }
    segments_ = std::move(m.segments);
    crossings_ = std::move(m.crossings);
    paths_ = std::move(m.paths);
    stacks_ = std::move(m.stacks);
    forward_dir_ = std::move(m.forward_dir);
    left_ends_ = std::move(m.left_ends);
    right_ends_ = std::move(m.right_ends);
    vertex_event_ = std::move(m.vertex_event);
}

const std::vector<std::size_t> &FrontAnalysis::ends(std::size_t vertex, Side side) const {
    return side == Side::Left ? left_ends_[vertex] : right_ends_[vertex];
}

namespace {

struct OrientedPath {
    std::vector<PathStep> steps;
    std::optional<VertexEnd> tail, head;
};

OrientedPath orient(const EdgePath &p, Direction dir) {
    OrientedPath o{p.steps, p.tail, p.head};
    if (dir == Direction::Backward) {
        std::reverse(o.steps.begin(), o.steps.end());
        for (auto &s : o.steps)
            s.dir = -s.dir;
        std::swap(o.tail, o.head);
    }
    return o;
}

// Cusp passed when leaving `from` toward its cusp partner.
bool leaves_from_upper(const FrontAnalysis &a, const PathStep &from) {
    const Segment &s = a.segments()[from.segment];
    return from.dir > 0 ? s.right.upper : s.left.upper;
}

} // namespace

CycleTraversal traverse_cycle(const FrontDiagram &diagram, std::span<const CycleStep> cycle) {
    if (cycle.empty())
        throw InvalidInput("empty cycle");
    FrontAnalysis a(diagram);

    std::vector<std::size_t> idx;
    for (const auto &st : cycle) {
        auto e = diagram.edge_index(st.edge);
        if (!e)
            throw InvalidInput("cycle uses unknown edge '" + st.edge + "'");
        if (std::find(idx.begin(), idx.end(), *e) != idx.end())
            throw InvalidInput("cycle repeats edge '" + st.edge + "'");
        idx.push_back(*e);
    }

    CycleTraversal t;
    t.steps.assign(cycle.begin(), cycle.end());
    std::unordered_map<std::size_t, int> dir_of;

    auto count_cusp = [&](bool down) { (down ? t.down_cusps : t.up_cusps) += 1; };

    if (a.path(idx[0]).closed()) {
        if (cycle.size() != 1)
            throw InvalidInput("closed component '" + cycle[0].edge + "' cannot be joined with other edges");
        OrientedPath o = orient(a.path(idx[0]), cycle[0].dir);
        for (std::size_t i = 0; i < o.steps.size(); ++i) {
            count_cusp(leaves_from_upper(a, o.steps[i]));
            dir_of[o.steps[i].segment] = o.steps[i].dir;
        }
    } else {
        std::vector<OrientedPath> parts;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (a.path(idx[i]).closed())
                throw InvalidInput("closed component '" + cycle[i].edge + "' cannot be joined with other edges");
            parts.push_back(orient(a.path(idx[i]), cycle[i].dir));
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto &steps = parts[i].steps;
            for (std::size_t j = 0; j < steps.size(); ++j) {
                dir_of[steps[j].segment] = steps[j].dir;
                if (j + 1 < steps.size())
                    count_cusp(leaves_from_upper(a, steps[j]));
            }
            const VertexEnd &h = *parts[i].head;
            const VertexEnd &nt = *parts[(i + 1) % parts.size()].tail;
            if (h.vertex != nt.vertex)
                throw InvalidInput("cycle is not closed: edge '" + cycle[i].edge + "' ends at '" +
                                   diagram.vertices[h.vertex].id + "' but the next edge starts at '" +
                                   diagram.vertices[nt.vertex].id + "'");
            if (h.side == nt.side)
                count_cusp(h.index < nt.index);
        }
    }

    for (const auto &c : a.crossings()) {
        auto u = dir_of.find(c.upper), l = dir_of.find(c.lower);
        if (u != dir_of.end() && l != dir_of.end())
            t.writhe += u->second * l->second;
    }
    return t;
}

int tb(const FrontDiagram &diagram, std::span<const CycleStep> cycle) { return traverse_cycle(diagram, cycle).tb(); }

int rot(const FrontDiagram &diagram, std::span<const CycleStep> cycle) { return traverse_cycle(diagram, cycle).rot(); }

namespace {

void require_theta(const FrontDiagram &d, const FrontAnalysis &a) {
    if (d.edges.size() != 3 || d.vertices.size() != 2)
        throw InvalidInput("not a Theta diagram: need 3 edges and 2 vertices");
    for (std::size_t e = 0; e < 3; ++e) {
        const EdgePath &p = a.path(e);
        if (p.closed() || p.tail->vertex != 0 || p.head->vertex != 1)
            throw InvalidInput("not a Theta diagram: edge '" + d.edges[e] + "' does not join v1 to v2");
    }
}

} // namespace

std::vector<CycleStep> theta_cycle(const FrontDiagram &diagram, int i) {
    if (diagram.edges.size() != 3)
        throw InvalidInput("not a Theta diagram: need 3 edges");
    const int j = (i + 1) % 3;
    return {{diagram.edges[i], Direction::Forward}, {diagram.edges[j], Direction::Backward}};
}

ThetaInvariants theta_invariants(const FrontDiagram &diagram) {
    FrontAnalysis a(diagram);
    require_theta(diagram, a);
    ThetaInvariants inv;
    for (int i = 0; i < 3; ++i) {
        auto c = theta_cycle(diagram, i);
        CycleTraversal t = traverse_cycle(diagram, c);
        inv.tb[i] = t.tb();
        inv.rot[i] = t.rot();
    }
    return inv;
}

int vertex_sign(const FrontDiagram &diagram, const std::string &vertex) {
    FrontAnalysis a(diagram);
    auto v = diagram.vertex_index(vertex);
    if (!v)
        throw InvalidInput("unknown vertex '" + vertex + "'");
    std::vector<std::size_t> ccw;
    const auto &r = a.ends(*v, Side::Right);
    const auto &l = a.ends(*v, Side::Left);
    ccw.insert(ccw.end(), r.rbegin(), r.rend());
    ccw.insert(ccw.end(), l.rbegin(), l.rend());
    if (ccw.size() != 3)
        throw InvalidInput("vertex '" + vertex + "' is not trivalent");
    if (ccw[0] == ccw[1] || ccw[1] == ccw[2] || ccw[0] == ccw[2])
        throw InvalidInput("vertex '" + vertex + "' carries a loop");
    int descents = 0;
    for (int i = 0; i < 3; ++i)
        descents += ccw[i] > ccw[(i + 1) % 3] ? 1 : 0;
    return descents == 1 ? 1 : -1;
}

EmbeddingKey embedding_key(const FrontDiagram &diagram) {
    EmbeddingKey k;
    k.inv = theta_invariants(diagram);
    k.sigma1 = vertex_sign(diagram, diagram.vertices.at(0).id);
    return k;
}

FrontDiagram mirror(const FrontDiagram &diagram) {
    FrontDiagram out = diagram;
    auto w = widths(diagram);
    for (std::size_t k = 0; k < out.events.size(); ++k) {
        Event &ev = out.events[k];
        const int before = w[k];
        switch (ev.kind) {
        case EventKind::LeftCusp: ev.pos = before + 2 - ev.pos; break;
        case EventKind::RightCusp:
        case EventKind::Crossing: ev.pos = before - ev.pos; break;
        case EventKind::Vertex:
            ev.pos = before + 2 - ev.pos - static_cast<int>(ev.left.size());
            std::reverse(ev.left.begin(), ev.left.end());
            std::reverse(ev.right.begin(), ev.right.end());
            break;
        }
    }
    return out;
}

} // namespace legendrian

#include "legendrian/moves.hpp"

#include "legendrian/errors.hpp"
#include "legendrian/front_analysis.hpp"
#include "legendrian/realize.hpp"

#include <algorithm>
#include <stdexcept>

namespace legendrian {

namespace {

using Labels = std::vector<std::string>;

// Edge labels of the strands just before events[k]. Assumes a legal prefix.
Labels labels_before(const FrontDiagram &d, std::size_t k) {
    Labels stack;
    for (std::size_t i = 0; i < k; ++i) {
        const Event &ev = d.events[i];
        const auto at = stack.begin() + (ev.pos - 1);
        switch (ev.kind) {
        case EventKind::LeftCusp:
            stack.insert(at, 2, ev.edge);
            break;
        case EventKind::RightCusp:
            stack.erase(at, at + 2);
            break;
        case EventKind::Crossing:
            std::iter_swap(at, at + 1);
            break;
        case EventKind::Vertex:
            stack.erase(at, at + static_cast<std::ptrdiff_t>(ev.left.size()));
            stack.insert(stack.begin() + (ev.pos - 1), ev.right.begin(), ev.right.end());
            break;
        }
    }
    return stack;
}

bool is_crossing(const FrontDiagram &d, std::size_t k, int pos) {
    return k < d.events.size() && d.events[k].kind == EventKind::Crossing && d.events[k].pos == pos;
}

bool is_kind(const FrontDiagram &d, std::size_t k, EventKind kind, int pos) {
    return k < d.events.size() && d.events[k].kind == kind && d.events[k].pos == pos;
}

FrontDiagram splice(const FrontDiagram &d, std::size_t first, std::size_t count, std::vector<Event> with) {
    FrontDiagram out = d;
    const auto at = out.events.begin() + static_cast<std::ptrdiff_t>(first);
    out.events.erase(at, at + static_cast<std::ptrdiff_t>(count));
    out.events.insert(out.events.begin() + static_cast<std::ptrdiff_t>(first), with.begin(), with.end());
    return out;
}

std::size_t vertex_event(const FrontDiagram &d, const std::string &vertex) {
    for (std::size_t k = 0; k < d.events.size(); ++k)
        if (d.events[k].kind == EventKind::Vertex && d.events[k].vertex == vertex)
            return k;
    throw InvalidInput("no vertex '" + vertex + "' in the diagram");
}

void require_sign(int sign) {
    if (sign != 1 && sign != -1)
        throw InvalidInput("sign must be +1 or -1");
}

} // namespace

StrandSite default_stab_site(const FrontDiagram &d, const std::string &edge) {
    const FrontAnalysis fa(d);
    const auto e = d.edge_index(edge);
    if (!e)
        throw InvalidInput("no edge '" + edge + "' in the diagram");
    const EdgePath &path = fa.path(*e);
    if (path.tail) {
        const std::size_t q = fa.vertex_event(path.tail->vertex);
        const int slot = d.events[q].pos + static_cast<int>(path.tail->index);
        return path.tail->side == Side::Right ? StrandSite{q + 1, slot} : StrandSite{q, slot};
    }
    const std::size_t seg = path.steps.front().segment;
    const std::size_t k = fa.segments()[seg].born + 1;
    const auto &stack = fa.stack_before(k);
    const auto it = std::find(stack.begin(), stack.end(), seg);
    return {k, static_cast<int>(it - stack.begin()) + 1};
}

FrontDiagram edge_stabilize(const FrontDiagram &d, const std::string &edge, int sign, StrandSite site) {
    require_sign(sign);
    const FrontAnalysis fa(d);
    if (site.event > d.events.size())
        throw InvalidInput("stabilization site is past the last event");
    const auto &stack = fa.stack_before(site.event);
    if (site.slot < 1 || site.slot > static_cast<int>(stack.size()))
        throw InvalidInput("stabilization slot is out of range");
    const std::size_t seg = stack[site.slot - 1];
    if (d.edges[fa.segments()[seg].edge] != edge)
        throw InvalidInput("stabilization site is not on edge '" + edge + "'");
    const int p = site.slot;
    const bool down = (sign > 0) == (fa.forward_dir(seg) > 0);
    std::vector<Event> zigzag = down ? std::vector<Event>{Event::left_cusp(p + 1, edge), Event::right_cusp(p)}
                                     : std::vector<Event>{Event::left_cusp(p, edge), Event::right_cusp(p + 1)};
    return splice(d, site.event, 0, std::move(zigzag));
}

FrontDiagram edge_stabilize(const FrontDiagram &d, const std::string &edge, int sign) {
    return edge_stabilize(d, edge, sign, default_stab_site(d, edge));
}

namespace {

bool zigzag_at(const FrontDiagram &d, std::size_t k, const Labels &before) {
    if (k + 1 >= d.events.size())
        return false;
    const Event &a = d.events[k], &b = d.events[k + 1];
    if (a.kind != EventKind::LeftCusp || b.kind != EventKind::RightCusp)
        return false;
    int strand = 0;
    if (a.pos == b.pos + 1)
        strand = b.pos;
    else if (a.pos + 1 == b.pos)
        strand = a.pos;
    else
        return false;
    return strand <= static_cast<int>(before.size()) && before[strand - 1] == a.edge;
}

} // namespace

std::optional<std::size_t> find_zigzag(const FrontDiagram &d, const std::string &edge) {
    require_legal(d);
    for (std::size_t k = 0; k + 1 < d.events.size(); ++k)
        if (d.events[k].kind == EventKind::LeftCusp && d.events[k].edge == edge &&
            zigzag_at(d, k, labels_before(d, k)))
            return k;
    return std::nullopt;
}

FrontDiagram edge_destabilize(const FrontDiagram &d, std::size_t event) {
    require_legal(d);
    if (!zigzag_at(d, event, labels_before(d, std::min(event, d.events.size()))))
        throw Infeasible("no zigzag starts at event " + std::to_string(event));
    return splice(d, event, 2, {});
}

FrontDiagram vertex_twist(const FrontDiagram &d, const std::string &vertex, const std::string &edge_a,
                          const std::string &edge_b, int sign) {
    require_sign(sign);
    require_legal(d);
    const std::size_t q = vertex_event(d, vertex);
    const Event &ev = d.events[q];
    const auto adjacent = [&](const Labels &ends) -> std::optional<int> {
        for (std::size_t j = 0; j + 1 < ends.size(); ++j)
            if ((ends[j] == edge_a && ends[j + 1] == edge_b) || (ends[j] == edge_b && ends[j + 1] == edge_a))
                return static_cast<int>(j);
        return std::nullopt;
    };
    bool right_side = true;
    auto j = adjacent(ev.right);
    if (!j) {
        right_side = false;
        j = adjacent(ev.left);
    }
    if (!j)
        throw Infeasible("edges '" + edge_a + "' and '" + edge_b + "' are not adjacent on one side of '" + vertex +
                         "'");
    const int p = ev.pos + *j;
    FrontDiagram out = d;
    Labels &ends = right_side ? out.events[q].right : out.events[q].left;
    std::swap(ends[*j], ends[*j + 1]);
    if (sign > 0) {
        out.events.insert(out.events.begin() + static_cast<std::ptrdiff_t>(right_side ? q + 1 : q),
                          Event::crossing(p));
        return out;
    }
    const std::size_t c = right_side ? q + 1 : q - 1;
    if ((!right_side && q == 0) || !is_crossing(d, c, p))
        throw Infeasible("no twist crossing next to '" + vertex + "' to remove");
    out.events.erase(out.events.begin() + static_cast<std::ptrdiff_t>(c));
    return out;
}

bool edge_stab_connected(HalfInt l, HalfInt lprime) {
    const auto min = HalfInt::from_doubled(-1);
    if (l < min || lprime < min)
        throw InvalidInput("G_l needs l >= -1/2");
    return (l - lprime).is_integer();
}

namespace {

Labels slice(const Labels &v, std::size_t from, std::size_t to) {
    return {v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to)};
}

Labels concat(Labels a, const Labels &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Moves one end of the vertex at events[q] around to the other side.
FrontDiagram v_move(const FrontDiagram &d, std::size_t q, int variant) {
    const Event &ev = d.events[q];
    const int p = ev.pos;
    const Labels &L = ev.left, &R = ev.right;
    const int m = static_cast<int>(L.size()), r = static_cast<int>(R.size());
    std::vector<Event> out;
    switch (variant) {
    case 0: { // top right -> bottom left
        if (r == 0)
            throw Infeasible("vertex has no right ends");
        out.push_back(Event::left_cusp(p + m, R.front()));
        for (int c = p + m - 1; c >= p; --c)
            out.push_back(Event::crossing(c));
        out.push_back(Event::make_vertex(p + 1, ev.vertex, concat(L, {R.front()}), slice(R, 1, r)));
        break;
    }
    case 1: { // bottom right -> top left
        if (r == 0)
            throw Infeasible("vertex has no right ends");
        out.push_back(Event::left_cusp(p, R.back()));
        for (int c = p + 1; c <= p + m; ++c)
            out.push_back(Event::crossing(c));
        out.push_back(Event::make_vertex(p, ev.vertex, concat({R.back()}, L), slice(R, 0, r - 1)));
        break;
    }
    case 2: { // bottom left -> top right
        if (m == 0)
            throw Infeasible("vertex has no left ends");
        out.push_back(Event::make_vertex(p, ev.vertex, slice(L, 0, m - 1), concat({L.back()}, R)));
        for (int c = p + r; c >= p + 1; --c)
            out.push_back(Event::crossing(c));
        out.push_back(Event::right_cusp(p));
        break;
    }
    case 3: { // top left -> bottom right
        if (m == 0)
            throw Infeasible("vertex has no left ends");
        out.push_back(Event::make_vertex(p + 1, ev.vertex, slice(L, 1, m), concat(R, {L.front()})));
        for (int c = p; c <= p + r - 1; ++c)
            out.push_back(Event::crossing(c));
        out.push_back(Event::right_cusp(p + r));
        break;
    }
    default:
        throw InvalidInput("V move variant must be 0..3");
    }
    return splice(d, q, 1, std::move(out));
}

FrontDiagram v_move_inverse(const FrontDiagram &d, std::size_t q, int variant) {
    const Event &ev = d.events[q];
    const Labels &L = ev.left, &R = ev.right;
    const int m = static_cast<int>(L.size()), r = static_cast<int>(R.size());
    const auto fail = [] { return Infeasible("no V move pattern at this vertex"); };
    switch (variant) {
    case 0: {
        const int p = ev.pos - 1, k = m - 1;
        if (m == 0 || p < 1 || q < static_cast<std::size_t>(m))
            throw fail();
        const std::size_t first = q - static_cast<std::size_t>(m);
        if (!is_kind(d, first, EventKind::LeftCusp, p + k) || d.events[first].edge != L.back())
            throw fail();
        for (int i = 0; i < k; ++i)
            if (!is_crossing(d, first + 1 + i, p + k - 1 - i))
                throw fail();
        return splice(d, first, static_cast<std::size_t>(m) + 1,
                      {Event::make_vertex(p, ev.vertex, slice(L, 0, k), concat({L.back()}, R))});
    }
    case 1: {
        const int p = ev.pos, k = m - 1;
        if (m == 0 || q < static_cast<std::size_t>(m))
            throw fail();
        const std::size_t first = q - static_cast<std::size_t>(m);
        if (!is_kind(d, first, EventKind::LeftCusp, p) || d.events[first].edge != L.front())
            throw fail();
        for (int i = 0; i < k; ++i)
            if (!is_crossing(d, first + 1 + i, p + 1 + i))
                throw fail();
        return splice(d, first, static_cast<std::size_t>(m) + 1,
                      {Event::make_vertex(p, ev.vertex, slice(L, 1, m), concat(R, {L.front()}))});
    }
    case 2: {
        const int p = ev.pos, k = r - 1;
        if (r == 0)
            throw fail();
        for (int i = 0; i < k; ++i)
            if (!is_crossing(d, q + 1 + i, p + k - i))
                throw fail();
        if (!is_kind(d, q + 1 + k, EventKind::RightCusp, p))
            throw fail();
        return splice(d, q, static_cast<std::size_t>(r) + 1,
                      {Event::make_vertex(p, ev.vertex, concat(L, {R.front()}), slice(R, 1, r))});
    }
    case 3: {
        const int p = ev.pos - 1, k = r - 1;
        if (r == 0 || p < 1)
            throw fail();
        for (int i = 0; i < k; ++i)
            if (!is_crossing(d, q + 1 + i, p + i))
                throw fail();
        if (!is_kind(d, q + 1 + k, EventKind::RightCusp, p + k))
            throw fail();
        return splice(d, q, static_cast<std::size_t>(r) + 1,
                      {Event::make_vertex(p, ev.vertex, concat({R.back()}, L), slice(R, 0, k))});
    }
    default:
        throw InvalidInput("V move variant must be 0..3");
    }
}

} // namespace

VertexStabilization vertex_stabilize_detailed(const FrontDiagram &d, const std::string &vertex, int k) {
    require_legal(d);
    FrontDiagram cur = d;
    std::size_t q = vertex_event(cur, vertex);
    while (!cur.events[q].left.empty() && !cur.events[q].right.empty()) {
        cur = v_move(cur, q, 3);
        q = vertex_event(cur, vertex);
    }
    const int n = static_cast<int>(cur.events[q].left.size() + cur.events[q].right.size());
    if (k < 1 || k > n)
        throw InvalidInput("vertex stabilization variant must be in 1.." + std::to_string(n));
    const bool right_side = !cur.events[q].right.empty();
    for (int step = 1; step < k; ++step) {
        cur = v_move(cur, q, right_side ? 0 : 3);
        q = vertex_event(cur, vertex);
        cur = v_move(cur, q, right_side ? 3 : 0);
        q = vertex_event(cur, vertex);
    }

    const Event ev = cur.events[q];
    const Labels order = right_side ? ev.right : ev.left;
    const Labels reversed_order(order.rbegin(), order.rend());
    const int p = ev.pos;
    std::vector<Event> out;
    if (right_side) {
        for (int i = 0; i < n; ++i)
            out.push_back(Event::left_cusp(p + i, reversed_order[i]));
        out.push_back(Event::make_vertex(p, vertex, reversed_order, {}));
    } else {
        out.push_back(Event::make_vertex(p + n, vertex, {}, reversed_order));
        for (int c = p + n - 1; c >= p; --c)
            out.push_back(Event::right_cusp(c));
    }
    return {splice(cur, q, 1, std::move(out)), order};
}

FrontDiagram vertex_stabilize(const FrontDiagram &d, const std::string &vertex, int k) {
    return vertex_stabilize_detailed(d, vertex, k).result;
}

namespace {

FrontDiagram move_r1(const FrontDiagram &d, const MoveSite &s) {
    if (!s.inverse) {
        const Labels labels = labels_before(d, s.event);
        const int p = s.slot;
        if (p < 1 || p > static_cast<int>(labels.size()))
            throw Infeasible("no strand at this slot");
        const std::string &e = labels[p - 1];
        if (s.variant == 0)
            return splice(d, s.event, 0, {Event::left_cusp(p + 1, e), Event::crossing(p), Event::right_cusp(p + 1)});
        if (s.variant == 1)
            return splice(d, s.event, 0, {Event::left_cusp(p, e), Event::crossing(p + 1), Event::right_cusp(p)});
        throw InvalidInput("Reidemeister I variant must be 0 or 1");
    }
    const std::size_t k = s.event;
    if (k + 2 >= d.events.size())
        throw Infeasible("no kink here");
    const Event &a = d.events[k];
    if (a.kind != EventKind::LeftCusp)
        throw Infeasible("no kink here");
    const int q = a.pos;
    const bool kink0 = q >= 2 && is_crossing(d, k + 1, q - 1) && is_kind(d, k + 2, EventKind::RightCusp, q);
    const bool kink1 = is_crossing(d, k + 1, q + 1) && is_kind(d, k + 2, EventKind::RightCusp, q);
    if (!kink0 && !kink1)
        throw Infeasible("no kink here");
    return splice(d, k, 3, {});
}

FrontDiagram move_r2(const FrontDiagram &d, const MoveSite &s) {
    const std::size_t k = s.event;
    if (k >= d.events.size())
        throw Infeasible("no event here");
    const Event &ev = d.events[k];
    if (!s.inverse) {
        const int p = ev.pos;
        const int width = static_cast<int>(labels_before(d, k).size());
        if (s.variant != 0 && s.variant != 1)
            throw InvalidInput("Reidemeister II variant must be 0 or 1");
        if (ev.kind == EventKind::LeftCusp) {
            if (s.variant == 0 && p >= 2)
                return splice(d, k, 1, {Event::left_cusp(p - 1, ev.edge), Event::crossing(p), Event::crossing(p - 1)});
            if (s.variant == 1 && p <= width)
                return splice(d, k, 1, {Event::left_cusp(p + 1, ev.edge), Event::crossing(p), Event::crossing(p + 1)});
        } else if (ev.kind == EventKind::RightCusp) {
            if (s.variant == 0 && p >= 2)
                return splice(d, k, 1, {Event::crossing(p - 1), Event::crossing(p), Event::right_cusp(p - 1)});
            if (s.variant == 1 && p + 2 <= width)
                return splice(d, k, 1, {Event::crossing(p + 1), Event::crossing(p), Event::right_cusp(p + 1)});
        }
        throw Infeasible("no cusp with a neighbouring strand here");
    }
    const int q = ev.pos;
    if (ev.kind == EventKind::LeftCusp) {
        if (is_crossing(d, k + 1, q + 1) && is_crossing(d, k + 2, q))
            return splice(d, k, 3, {Event::left_cusp(q + 1, ev.edge)});
        if (q >= 2 && is_crossing(d, k + 1, q - 1) && is_crossing(d, k + 2, q))
            return splice(d, k, 3, {Event::left_cusp(q - 1, ev.edge)});
    } else if (ev.kind == EventKind::Crossing) {
        if (is_crossing(d, k + 1, q + 1) && is_kind(d, k + 2, EventKind::RightCusp, q))
            return splice(d, k, 3, {Event::right_cusp(q + 1)});
        if (q >= 2 && is_crossing(d, k + 1, q - 1) && is_kind(d, k + 2, EventKind::RightCusp, q))
            return splice(d, k, 3, {Event::right_cusp(q - 1)});
    }
    throw Infeasible("no Reidemeister II pattern here");
}

FrontDiagram move_r3(const FrontDiagram &d, const MoveSite &s) {
    const std::size_t k = s.event;
    if (k >= d.events.size() || d.events[k].kind != EventKind::Crossing)
        throw Infeasible("no crossing triangle here");
    const int p = d.events[k].pos;
    if (is_crossing(d, k + 1, p + 1) && is_crossing(d, k + 2, p))
        return splice(d, k, 3, {Event::crossing(p + 1), Event::crossing(p), Event::crossing(p + 1)});
    if (p >= 2 && is_crossing(d, k + 1, p - 1) && is_crossing(d, k + 2, p))
        return splice(d, k, 3, {Event::crossing(p - 1), Event::crossing(p), Event::crossing(p - 1)});
    throw Infeasible("no crossing triangle here");
}

FrontDiagram move_r3v(const FrontDiagram &d, const MoveSite &s) {
    const std::size_t k = s.event;
    if (k >= d.events.size() || d.events[k].kind != EventKind::Vertex)
        throw Infeasible("no vertex here");
    if (s.variant != 0 && s.variant != 1)
        throw InvalidInput("Reidemeister III_v variant must be 0 or 1");
    const Event &ev = d.events[k];
    const int q = ev.pos;
    const int m = static_cast<int>(ev.left.size()), r = static_cast<int>(ev.right.size());
    if (m > 0 && r > 0)
        throw Infeasible("vertex has ends on both sides");
    const auto moved = [&](int pos) {
        Event e = ev;
        e.pos = pos;
        return e;
    };
    const bool below = s.variant == 1;
    if (!s.inverse) {
        const int width = static_cast<int>(labels_before(d, k).size());
        std::vector<Event> out;
        if (r > 0) {
            if (below) {
                if (q > width)
                    throw Infeasible("no strand below the vertex");
                out.push_back(moved(q + 1));
                for (int c = q; c <= q + r - 1; ++c)
                    out.push_back(Event::crossing(c));
            } else {
                if (q < 2)
                    throw Infeasible("no strand above the vertex");
                out.push_back(moved(q - 1));
                for (int c = q + r - 2; c >= q - 1; --c)
                    out.push_back(Event::crossing(c));
            }
        } else {
            if (below) {
                if (q + m > width)
                    throw Infeasible("no strand below the vertex");
                for (int c = q + m - 1; c >= q; --c)
                    out.push_back(Event::crossing(c));
                out.push_back(moved(q + 1));
            } else {
                if (q < 2)
                    throw Infeasible("no strand above the vertex");
                for (int c = q - 1; c <= q + m - 2; ++c)
                    out.push_back(Event::crossing(c));
                out.push_back(moved(q - 1));
            }
        }
        return splice(d, k, 1, std::move(out));
    }
    const auto fail = [] { return Infeasible("no Reidemeister III_v pattern here"); };
    if (r > 0) {
        const int base = below ? q - 1 : q + 1;
        if (base < 1)
            throw fail();
        for (int i = 0; i < r; ++i) {
            const int c = below ? base + i : q + r - 1 - i;
            if (!is_crossing(d, k + 1 + static_cast<std::size_t>(i), c))
                throw fail();
        }
        return splice(d, k, static_cast<std::size_t>(r) + 1, {moved(base)});
    }
    if (k < static_cast<std::size_t>(m))
        throw fail();
    const std::size_t first = k - static_cast<std::size_t>(m);
    const int base = below ? q - 1 : q + 1;
    if (base < 1)
        throw fail();
    for (int i = 0; i < m; ++i) {
        const int c = below ? q + m - 2 - i : q + i;
        if (!is_crossing(d, first + static_cast<std::size_t>(i), c))
            throw fail();
    }
    return splice(d, first, static_cast<std::size_t>(m) + 1, {moved(base)});
}

} // namespace

FrontDiagram reidemeister(const FrontDiagram &d, Reidemeister move, const MoveSite &site) {
    require_legal(d);
    FrontDiagram out;
    switch (move) {
    case Reidemeister::I: out = move_r1(d, site); break;
    case Reidemeister::II: out = move_r2(d, site); break;
    case Reidemeister::III: out = move_r3(d, site); break;
    case Reidemeister::IIIv: out = move_r3v(d, site); break;
    case Reidemeister::V:
        if (site.event >= d.events.size() || d.events[site.event].kind != EventKind::Vertex)
            throw Infeasible("no vertex here");
        out = site.inverse ? v_move_inverse(d, site.event, site.variant) : v_move(d, site.event, site.variant);
        break;
    }
    if (!validate(out).empty())
        throw Infeasible("move would produce an illegal front");
    return out;
}

std::vector<MoveSite> applicable_sites(const FrontDiagram &d, Reidemeister move) {
    require_legal(d);
    const auto w = widths(d);
    std::vector<MoveSite> candidates;
    for (std::size_t k = 0; k <= d.events.size(); ++k) {
        for (bool inverse : {false, true}) {
            if (move == Reidemeister::I && !inverse) {
                for (int slot = 1; slot <= w[k]; ++slot)
                    for (int v = 0; v < 2; ++v)
                        candidates.push_back({k, slot, v, false});
            } else if (k < d.events.size()) {
                const int variants = move == Reidemeister::V ? 4 : (move == Reidemeister::III ? 1 : 2);
                if (move == Reidemeister::III && inverse)
                    continue;
                for (int v = 0; v < variants; ++v)
                    candidates.push_back({k, 1, v, inverse});
            }
        }
    }
    std::vector<MoveSite> out;
    for (const auto &c : candidates) {
        try {
            reidemeister(d, move, c);
            out.push_back(c);
        } catch (const Infeasible &) {
        }
    }
    return out;
}

const char *move_name(Reidemeister move) {
    switch (move) {
    case Reidemeister::I: return "I";
    case Reidemeister::II: return "II";
    case Reidemeister::III: return "III";
    case Reidemeister::IIIv: return "III_v";
    case Reidemeister::V: return "V";
    }
    return "?";
}

std::optional<Reidemeister> parse_move(const std::string &name) {
    for (auto m : {Reidemeister::I, Reidemeister::II, Reidemeister::III, Reidemeister::IIIv, Reidemeister::V})
        if (name == move_name(m))
            return m;
    return std::nullopt;
}

GlStep gl_step(const FrontDiagram &gl) {
    const auto match = match_gl(gl);
    if (!match)
        throw InvalidInput("diagram is not a G_l front");
    GlStep step;
    step.l = match->l;
    const std::string right_vertex = gl.events.back().vertex;
    step.vertex_stabilized = vertex_stabilize(gl, right_vertex, 1);
    const auto want = embedding_key(step.vertex_stabilized);
    const FrontDiagram target = build_gl(match->l + HalfInt::from_doubled(1), match->labeling);
    for (const auto &edge : target.edges) {
        for (int sign : {1, -1}) {
            const StrandSite site = default_stab_site(target, edge);
            FrontDiagram stabilized = edge_stabilize(target, edge, sign, site);
            if (embedding_key(stabilized) != want)
                continue;
            step.stabilized_target = stabilized;
            step.edge = edge;
            step.sign = sign;
            step.result = edge_destabilize(stabilized, site.event);
            return step;
        }
    }
    throw std::logic_error("vertex-stabilized G_l is not an edge stabilization of the next G_l");
}

} // namespace legendrian

#include "legendrian/json_io.hpp"

#include "legendrian/errors.hpp"

namespace legendrian {

namespace {

const char *kind_name(EventKind k) {
    switch (k) {
    case EventKind::LeftCusp: return "lcusp";
    case EventKind::RightCusp: return "rcusp";
    case EventKind::Crossing: return "cross";
    case EventKind::Vertex: return "vertex";
    }
    return "?";
}

template <typename T> T field(const Json &obj, const char *name, const char *what) {
    if (!obj.is_object() || !obj.contains(name))
        throw InvalidInput(std::string(what) + " is missing field '" + name + "'");
    try {
        return obj.at(name).get<T>();
    } catch (const Json::exception &e) {
        throw InvalidInput(std::string(what) + " field '" + name + "' has the wrong type");
    }
}

} // namespace

Json diagram_to_json(const FrontDiagram &d) {
    Json doc;
    doc["edges"] = d.edges;
    Json verts = Json::array();
    for (const auto &v : d.vertices)
        verts.push_back({{"id", v.id}, {"valence", v.valence}});
    doc["vertices"] = verts;
    Json events = Json::array();
    for (const auto &ev : d.events) {
        Json e{{"kind", kind_name(ev.kind)}, {"pos", ev.pos}};
        if (ev.kind == EventKind::LeftCusp)
            e["edge"] = ev.edge;
        if (ev.kind == EventKind::Vertex) {
            e["vertex"] = ev.vertex;
            e["left"] = ev.left;
            e["right"] = ev.right;
        }
        events.push_back(e);
    }
    doc["events"] = events;
    doc["trusted_trivial"] = d.trusted_trivial;
    return doc;
}

FrontDiagram diagram_from_json(const Json &doc) {
    if (!doc.is_object())
        throw InvalidInput("diagram document must be a JSON object");
    FrontDiagram d;
    d.edges = field<std::vector<std::string>>(doc, "edges", "diagram");
    const Json verts = field<Json>(doc, "vertices", "diagram");
    if (!verts.is_array())
        throw InvalidInput("diagram field 'vertices' must be an array");
    for (const auto &v : verts)
        d.vertices.push_back({field<std::string>(v, "id", "vertex"), field<int>(v, "valence", "vertex")});
    const Json events = field<Json>(doc, "events", "diagram");
    if (!events.is_array())
        throw InvalidInput("diagram field 'events' must be an array");
    for (const auto &e : events) {
        const auto kind = field<std::string>(e, "kind", "event");
        const int pos = field<int>(e, "pos", "event");
        if (kind == "lcusp")
            d.events.push_back(Event::left_cusp(pos, field<std::string>(e, "edge", "lcusp event")));
        else if (kind == "rcusp")
            d.events.push_back(Event::right_cusp(pos));
        else if (kind == "cross")
            d.events.push_back(Event::crossing(pos));
        else if (kind == "vertex")
            d.events.push_back(Event::make_vertex(pos, field<std::string>(e, "vertex", "vertex event"),
                                                  field<std::vector<std::string>>(e, "left", "vertex event"),
                                                  field<std::vector<std::string>>(e, "right", "vertex event")));
        else
            throw InvalidInput("unknown event kind '" + kind + "'");
    }
    d.trusted_trivial = doc.contains("trusted_trivial") ? field<bool>(doc, "trusted_trivial", "diagram") : false;
    return d;
}

std::string canonical(const Json &doc) { return doc.dump() + "\n"; }

std::string diagram_to_text(const FrontDiagram &diagram) { return canonical(diagram_to_json(diagram)); }

FrontDiagram diagram_from_text(const std::string &text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    return diagram_from_json(doc);
}

Json vec_to_json(const Vec3 &v) { return Json::array({v[0], v[1], v[2]}); }

Json invariants_to_json(const ThetaInvariants &inv) {
    Json tw = Json::array();
    for (const auto &t : inv.twist())
        tw.push_back(t.to_string());
    return {{"tb", vec_to_json(inv.tb)}, {"rot", vec_to_json(inv.rot)}, {"Rot", inv.total_rot()}, {"tw", tw}};
}

Json key_to_json(const EmbeddingKey &key) {
    return {{"tb", vec_to_json(key.inv.tb)}, {"rot", vec_to_json(key.inv.rot)}, {"sigma1", key.sigma1}};
}

} // namespace legendrian

#include "legendrian/planar_json.hpp"

#include "legendrian/errors.hpp"

#include <algorithm>

namespace legendrian {

namespace {

int vertex_ref(const Json &ref, const std::vector<std::string> &names) {
    if (ref.is_number_integer()) {
        const int i = ref.get<int>();
        if (i < 0 || i >= static_cast<int>(names.size()))
            throw InvalidInput("edge endpoint index " + std::to_string(i) + " is out of range");
        return i;
    }
    if (ref.is_string()) {
        const auto it = std::find(names.begin(), names.end(), ref.get<std::string>());
        if (it == names.end())
            throw InvalidInput("edge endpoint '" + ref.get<std::string>() + "' is not a vertex");
        return static_cast<int>(it - names.begin());
    }
    throw InvalidInput("edge endpoints must be vertex names or indices");
}

Json path_to_json(const PlanarMap &map, const Path &p) {
    Json vs = Json::array();
    for (int v : p.vertices)
        vs.push_back(map.vertices[v]);
    return {{"vertices", vs}, {"edges", p.edges}};
}

} // namespace

Json map_to_json(const PlanarMap &map) {
    Json edges = Json::array();
    for (const auto &[a, b] : map.edges)
        edges.push_back({map.vertices[a], map.vertices[b]});
    Json rotation = Json::object();
    for (std::size_t v = 0; v < map.vertices.size(); ++v)
        rotation[map.vertices[v]] = map.rotation[v];
    return {{"vertices", map.vertices}, {"edges", edges}, {"rotation", rotation}};
}

PlanarMap map_from_json(const Json &doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") || !doc.contains("rotation"))
        throw InvalidInput("map document needs 'vertices', 'edges' and 'rotation'");
    PlanarMap m;
    try {
        m.vertices = doc.at("vertices").get<std::vector<std::string>>();
    } catch (const Json::exception &) {
        throw InvalidInput("map 'vertices' must be a list of names");
    }
    auto sorted = m.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidInput("map has duplicate vertex names");

    const Json &edges = doc.at("edges");
    if (!edges.is_array())
        throw InvalidInput("map 'edges' must be a list");
    for (const auto &e : edges) {
        if (!e.is_array() || e.size() != 2)
            throw InvalidInput("each edge must be a pair of endpoints");
        m.edges.push_back({vertex_ref(e[0], m.vertices), vertex_ref(e[1], m.vertices)});
    }

    const Json &rotation = doc.at("rotation");
    if (!rotation.is_object())
        throw InvalidInput("map 'rotation' must be an object keyed by vertex");
    m.rotation.resize(m.vertices.size());
    for (auto it = rotation.begin(); it != rotation.end(); ++it) {
        const int v = vertex_ref(Json(it.key()), m.vertices);
        try {
            m.rotation[v] = it.value().get<std::vector<int>>();
        } catch (const Json::exception &) {
            throw InvalidInput("rotation at '" + it.key() + "' must be a list of edge-end ids");
        }
    }
    check_rotation(m);
    return m;
}

PlanarMap map_from_text(const std::string &text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    return map_from_json(doc);
}

Json certificate_to_json(const Certificate &cert) {
    Json tree_edges = Json::array();
    for (std::size_t e = 0; e < cert.tree.in_tree.size(); ++e)
        if (cert.tree.in_tree[e])
            tree_edges.push_back(e);
    Json edges = Json::array();
    for (std::size_t e = 0; e < cert.edges.size(); ++e) {
        const auto &ec = cert.edges[e];
        Json item{{"edge", e}, {"cut", ec.cut}};
        if (!ec.cut) {
            item["witness"] = ec.witness;
            item["witness_tb"] = ec.witness_tb;
        }
        edges.push_back(item);
    }
    return {{"map", map_to_json(cert.map)},
            {"faces", cert.faces.faces},
            {"face_tb", cert.face_tb},
            {"dual_tree",
             {{"root", cert.tree.root},
              {"edges", tree_edges},
              {"depth", cert.tree.depth},
              {"max_depth", cert.tree.max_depth}}},
            {"edges", edges}};
}

Json theta_witness_to_json(const PlanarMap &map, const ThetaWitness &w) {
    Json paths = Json::array();
    for (const auto &p : w.paths)
        paths.push_back(path_to_json(map, p));
    return {{"v1", map.vertices[w.v1]}, {"v2", map.vertices[w.v2]}, {"paths", paths}};
}

Json wedge_witness_to_json(const PlanarMap &map, const WedgeWitness &w) {
    Json cycles = Json::array();
    for (const auto &c : w.cycles)
        cycles.push_back(path_to_json(map, c));
    return {{"v", map.vertices[w.v]}, {"cycles", cycles}};
}

Json family_to_json(const Family &family) {
    const bool theta = family.kind == Family::Kind::Theta;
    Json members = Json::array();
    for (const auto &m : family.members) {
        Json item{{"k", m.k}, {theta ? "distinguished_tb" : "linking_number", m.invariant},
                  {"witnesses_preserved", m.witnesses_preserved}, {"face_tb", m.face_tb}};
        if (!theta)
            item["twists"] = 2 * m.k;
        members.push_back(item);
    }
    Json doc{{"kind", theta ? "theta" : "wedge"},
             {"base", certificate_to_json(family.base)},
             {"vertex", family.base.map.vertices[family.vertex]},
             {"edges", {family.edge_a, family.edge_b}},
             {"members", members}};
    if (theta)
        doc["distinguished_cycle"] = family.distinguished;
    return doc;
}

} // namespace legendrian

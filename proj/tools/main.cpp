#include "legendrian/classify.hpp"
#include "legendrian/errors.hpp"
#include "legendrian/front_diagram.hpp"
#include "legendrian/json_io.hpp"
#include "legendrian/moves.hpp"
#include "legendrian/planar.hpp"
#include "legendrian/planar_json.hpp"
#include "legendrian/realize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace legendrian;

namespace {

struct Options {
    std::string tb, rot, tb2, rot2;
    std::optional<int> sigma, sigma2;
    std::string l, lprime;
    int bound = 4;
    std::vector<std::string> diagrams;
    std::string map;
    std::string move, site = "{}";
    int kmax = 3;
    std::string format = "json";
    std::string output;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json(const std::string &text, const std::string &what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw InvalidInput("malformed JSON in " + what + ": " + e.what());
    }
}

// Accepts a bare diagram or any document carrying one under "diagram".
FrontDiagram load_diagram(const std::string &path) {
    Json doc = parse_json(read_file(path), path);
    if (doc.is_object() && doc.contains("diagram") && !doc.contains("events"))
        doc = doc.at("diagram");
    FrontDiagram d = diagram_from_json(doc);
    require_legal(d);
    return d;
}

const std::string &one_diagram(const Options &o) {
    if (o.diagrams.size() != 1)
        throw InvalidInput("expected exactly one --diagram");
    return o.diagrams.front();
}

Vec3 parse_vec(const std::string &text, const char *flag) {
    if (text.empty())
        throw InvalidInput(std::string("missing ") + flag);
    Vec3 v{};
    std::stringstream ss(text);
    std::string item;
    int n = 0;
    while (std::getline(ss, item, ',')) {
        if (n == 3)
            throw InvalidInput(std::string(flag) + " takes exactly three integers");
        try {
            std::size_t used = 0;
            v[n] = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception &) {
            throw InvalidInput(std::string(flag) + ": '" + item + "' is not an integer");
        }
        ++n;
    }
    if (n != 3)
        throw InvalidInput(std::string(flag) + " takes exactly three integers");
    return v;
}

HalfInt parse_half(const std::string &text, const char *flag) {
    if (text.empty())
        throw InvalidInput(std::string("missing ") + flag);
    try {
        return HalfInt::parse(text);
    } catch (const std::invalid_argument &e) {
        throw InvalidInput(std::string(flag) + ": " + e.what());
    }
}

Json half_to_json(HalfInt h) {
    if (h.is_integer())
        return h.as_integer();
    return static_cast<double>(h.doubled()) / 2.0;
}

ThetaInvariants invariants_from_flags(const std::string &tb, const std::string &rot, const char *tb_flag,
                                      const char *rot_flag) {
    ThetaInvariants inv;
    inv.tb = parse_vec(tb, tb_flag);
    inv.rot = parse_vec(rot, rot_flag);
    return inv;
}

EmbeddingKey key_from_flags(const ThetaInvariants &inv, std::optional<int> sigma) {
    const int total = inv.total_rot();
    EmbeddingKey key{inv, sigma.value_or(total == 0 ? 1 : total)};
    if (!is_admissible(inv))
        throw Infeasible("the invariant pair is not admissible");
    if (!is_valid_key(key))
        throw Infeasible("sigma1 = " + std::to_string(key.sigma1) + " is not realizable for Rot = " +
                         std::to_string(total));
    return key;
}

Json key_doc(const EmbeddingKey &key) {
    Json doc = key_to_json(key);
    doc["sigma2"] = key.sigma2();
    return doc;
}

Json recipe_to_json(const StabRecipe &r) {
    Json stabs = Json::array();
    for (const auto &[p, n] : r.stabs)
        stabs.push_back({p, n});
    return {{"l", half_to_json(r.l)}, {"stabs", stabs}, {"shift", r.shift}, {"mirrored", r.mirrored},
            {"a", r.a},           {"b", r.b}};
}

Json theta_report(const FrontDiagram &d) {
    const auto key = embedding_key(d);
    Json doc = invariants_to_json(key.inv);
    doc["sigma1"] = key.sigma1;
    doc["sigma2"] = vertex_sign(d, d.vertices[1].id);
    doc["canonical"] = key_to_json(canonical(key));
    return doc;
}

bool is_theta(const FrontDiagram &d) {
    if (d.edges.size() != 3 || d.vertices.size() != 2)
        return false;
    try {
        theta_invariants(d);
        return true;
    } catch (const std::exception &) {
        return false;
    }
}

// --- subcommands ------------------------------------------------------------

Json cmd_invariants(const Options &o) {
    const FrontDiagram d = load_diagram(one_diagram(o));
    if (!is_theta(d))
        throw InvalidInput("invariants needs a Theta-graph diagram (edges e1,e2,e3 between two trivalent vertices)");
    return theta_report(d);
}

Json cmd_classify(const Options &o) {
    const auto inv = invariants_from_flags(o.tb, o.rot, "--tb", "--rot");
    const auto adm = check_admissible(inv);
    const auto images = count_images(inv);
    Json doc{{"admissible", adm.admissible}, {"embeddings", count_embeddings(inv)}, {"images", images.by_orbits}};
    if (!adm.admissible)
        doc["violations"] = adm.violations;
    if (!images.agrees())
        doc["images_by_transposition_criterion"] = images.by_criterion;
    if (o.sigma) {
        const EmbeddingKey key{inv, *o.sigma};
        doc["key_valid"] = is_valid_key(key);
        if (is_valid_key(key))
            doc["canonical"] = key_to_json(canonical(key));
    }
    return doc;
}

Json cmd_enumerate(const Options &o) {
    const auto all = enumerate_admissible(o.bound);
    Json pairs = Json::array();
    int keys = 0, orbits = 0, disagreements = 0;
    for (const auto &inv : all) {
        const auto images = count_images(inv);
        keys += count_embeddings(inv);
        orbits += images.by_orbits;
        disagreements += images.agrees() ? 0 : 1;
        Json item{{"tb", vec_to_json(inv.tb)},
                  {"rot", vec_to_json(inv.rot)},
                  {"embeddings", count_embeddings(inv)},
                  {"images", images.by_orbits}};
        if (!images.agrees())
            item["images_by_transposition_criterion"] = images.by_criterion;
        pairs.push_back(item);
    }
    return {{"bound", o.bound},
            {"pairs", static_cast<int>(all.size())},
            {"embeddings", keys},
            {"images", orbits},
            {"image_count_disagreements", disagreements},
            {"items", pairs}};
}

Json cmd_realize(const Options &o) {
    const auto inv = invariants_from_flags(o.tb, o.rot, "--tb", "--rot");
    if (!is_admissible(inv))
        throw Infeasible("the invariant pair is not admissible");
    const Realization r = o.sigma ? realize_key(key_from_flags(inv, o.sigma)) : realize(inv);
    if (!o.output.empty()) {
        std::ofstream out(o.output);
        if (!out)
            throw InvalidInput("cannot write '" + o.output + "'");
        out << diagram_to_text(r.diagram);
    }
    return {{"recipe", recipe_to_json(r.recipe)}, {"key", key_doc(embedding_key(r.diagram))},
            {"diagram", diagram_to_json(r.diagram)}};
}

Json cmd_gl(const Options &o) {
    const HalfInt l = parse_half(o.l, "--l");
    if (l < HalfInt::from_doubled(-1))
        throw Infeasible("G_l needs l >= -1/2");
    return diagram_to_json(build_gl(l));
}

Json cmd_mirror(const Options &o) { return diagram_to_json(mirror(load_diagram(one_diagram(o)))); }

std::string site_string(const Json &site, const char *name) {
    if (!site.contains(name) || !site.at(name).is_string())
        throw InvalidInput(std::string("site needs string field '") + name + "'");
    return site.at(name).get<std::string>();
}

int site_int(const Json &site, const char *name, std::optional<int> fallback = std::nullopt) {
    if (!site.contains(name)) {
        if (fallback)
            return *fallback;
        throw InvalidInput(std::string("site needs integer field '") + name + "'");
    }
    if (!site.at(name).is_number_integer())
        throw InvalidInput(std::string("site field '") + name + "' must be an integer");
    return site.at(name).get<int>();
}

FrontDiagram apply_move(const FrontDiagram &d, const std::string &name, const Json &site) {
    if (name == "stabilize") {
        const std::string edge = site_string(site, "edge");
        const int sign = site_int(site, "sign");
        if (site.contains("event"))
            return edge_stabilize(d, edge, sign,
                                  StrandSite{static_cast<std::size_t>(site_int(site, "event")), site_int(site, "slot")});
        return edge_stabilize(d, edge, sign);
    }
    if (name == "destabilize") {
        if (site.contains("event"))
            return edge_destabilize(d, static_cast<std::size_t>(site_int(site, "event")));
        const auto at = find_zigzag(d, site_string(site, "edge"));
        if (!at)
            throw Infeasible("no zigzag on that edge");
        return edge_destabilize(d, *at);
    }
    if (name == "vertex_stabilize")
        return vertex_stabilize(d, site_string(site, "vertex"), site_int(site, "k", 1));
    if (name == "twist") {
        if (!site.contains("edges") || !site.at("edges").is_array() || site.at("edges").size() != 2)
            throw InvalidInput("twist site needs 'edges': [a, b]");
        return vertex_twist(d, site_string(site, "vertex"), site.at("edges")[0].get<std::string>(),
                            site.at("edges")[1].get<std::string>(), site_int(site, "sign", 1));
    }
    const auto move = parse_move(name);
    if (!move)
        throw InvalidInput("unknown move '" + name + "'");
    MoveSite ms;
    ms.event = static_cast<std::size_t>(site_int(site, "event"));
    ms.slot = site_int(site, "slot", 1);
    ms.variant = site_int(site, "variant", 0);
    if (site.contains("inverse")) {
        if (!site.at("inverse").is_boolean())
            throw InvalidInput("site field 'inverse' must be a boolean");
        ms.inverse = site.at("inverse").get<bool>();
    }
    return reidemeister(d, *move, ms);
}

Json cmd_move(const Options &o) {
    const FrontDiagram before = load_diagram(one_diagram(o));
    if (o.move.empty())
        throw InvalidInput("missing --move");
    const Json site = parse_json(o.site, "--site");
    if (!site.is_object())
        throw InvalidInput("--site must be a JSON object");
    const FrontDiagram after = apply_move(before, o.move, site);
    Json doc{{"move", o.move}, {"diagram", diagram_to_json(after)}};
    if (is_theta(before) && is_theta(after)) {
        const auto a = embedding_key(before), b = embedding_key(after);
        Json dtb = Json::array(), drot = Json::array();
        for (int i = 0; i < 3; ++i) {
            dtb.push_back(b.inv.tb[i] - a.inv.tb[i]);
            drot.push_back(b.inv.rot[i] - a.inv.rot[i]);
        }
        doc["before"] = key_doc(a);
        doc["after"] = key_doc(b);
        doc["delta"] = {{"tb", dtb}, {"rot", drot}, {"sigma1_changed", a.sigma1 != b.sigma1}};
    }
    return doc;
}

Json cmd_equiv(const Options &o) {
    EmbeddingKey a, b;
    if (!o.diagrams.empty()) {
        if (o.diagrams.size() != 2)
            throw InvalidInput("equiv takes two --diagram files");
        const auto da = load_diagram(o.diagrams[0]), db = load_diagram(o.diagrams[1]);
        if (!is_theta(da) || !is_theta(db))
            throw InvalidInput("equiv needs Theta-graph diagrams");
        a = embedding_key(da);
        b = embedding_key(db);
    } else {
        a = key_from_flags(invariants_from_flags(o.tb, o.rot, "--tb", "--rot"), o.sigma);
        b = key_from_flags(invariants_from_flags(o.tb2, o.rot2, "--tb2", "--rot2"), o.sigma2);
    }
    return {{"equivalent", equivalent_up_to_relabeling(a, b)},
            {"canonical", {key_to_json(canonical(a)), key_to_json(canonical(b))}}};
}

Json cmd_orbit(const Options &o) {
    const auto key = key_from_flags(invariants_from_flags(o.tb, o.rot, "--tb", "--rot"), o.sigma);
    Json members = Json::array();
    for (const auto &k : orbit(key))
        members.push_back(key_to_json(k));
    return {{"canonical", key_to_json(canonical(key))}, {"size", members.size()}, {"orbit", members}};
}

Json cmd_connected(const Options &o) {
    const HalfInt l = parse_half(o.l, "--l"), lp = parse_half(o.lprime, "--lprime");
    if (l < HalfInt::from_doubled(-1) || lp < HalfInt::from_doubled(-1))
        throw Infeasible("G_l needs l >= -1/2");
    return {{"edge_stab_connected", edge_stab_connected(l, lp)}};
}

PlanarMap load_map(const Options &o) {
    if (o.map.empty())
        throw InvalidInput("missing --map");
    PlanarMap m = map_from_text(read_file(o.map));
    trace_faces(m);
    return m;
}

Json cmd_planar_realize(const Options &o) {
    const PlanarMap m = load_map(o);
    const Certificate cert = realize_property_n(m);
    Json doc = certificate_to_json(cert);
    doc["problems"] = validate_certificate(cert);
    return doc;
}

Json cmd_family(const Options &o) {
    if (o.kmax < 0)
        throw InvalidInput("--kmax must be >= 0");
    const PlanarMap m = load_map(o);
    Json doc = family_to_json(infinite_family(m, o.kmax));
    if (const auto t = has_theta_subdivision(m))
        doc["theta_witness"] = theta_witness_to_json(m, *t);
    else if (const auto w = has_wedge_subdivision(m))
        doc["wedge_witness"] = wedge_witness_to_json(m, *w);
    return doc;
}

Json cmd_validate(const Options &o) {
    if (!o.map.empty()) {
        const PlanarMap m = map_from_text(read_file(o.map));
        const auto fs = trace_faces(m);
        return {{"valid", true},
                {"kind", "map"},
                {"vertices", m.vertices.size()},
                {"edges", m.edges.size()},
                {"faces", fs.faces.size()}};
    }
    const std::string &path = one_diagram(o);
    Json doc = parse_json(read_file(path), path);
    if (doc.is_object() && doc.contains("diagram") && !doc.contains("events"))
        doc = doc.at("diagram");
    const FrontDiagram d = diagram_from_json(doc);
    const auto violations = validate(d);
    if (!violations.empty()) {
        std::ostringstream msg;
        for (const auto &v : violations) {
            if (v.event)
                msg << "event " << *v.event << ": ";
            msg << v.message << "\n";
        }
        throw InvalidInput(msg.str());
    }
    return {{"valid", true}, {"kind", "diagram"}, {"theta", is_theta(d)}, {"events", d.events.size()}};
}

void print_summary(const Json &doc, const std::string &prefix = "") {
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string name = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object())
            print_summary(*it, name);
        else if (it->is_array() && it->size() > 8)
            std::cout << name << ": [" << it->size() << " items]\n";
        else
            std::cout << name << ": " << it->dump() << "\n";
    }
}

} // namespace

int main(int argc, char **argv) {
    Options o;
    CLI::App app{"Legendrian Theta-graph invariants, classification and planar realization"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    const auto add_key_flags = [&](CLI::App *c, bool second) {
        c->add_option("--tb", o.tb, "tb of gamma_1,gamma_2,gamma_3, e.g. -1,-2,-1");
        c->add_option("--rot", o.rot, "rot of gamma_1,gamma_2,gamma_3");
        c->add_option("--sigma", o.sigma, "sign at v1 (+1 or -1)");
        if (second) {
            c->add_option("--tb2", o.tb2, "tb of the second key");
            c->add_option("--rot2", o.rot2, "rot of the second key");
            c->add_option("--sigma2", o.sigma2, "sign at v1 for the second key");
        }
    };
    const auto add_format = [&](CLI::App *c) {
        c->add_option("--format", o.format, "json or summary")->check(CLI::IsMember({"json", "summary"}));
    };

    std::vector<std::pair<CLI::App *, std::function<Json(const Options &)>>> commands;
    const auto sub = [&](const char *name, const char *help, std::function<Json(const Options &)> fn) {
        CLI::App *c = app.add_subcommand(name, help);
        add_format(c);
        commands.push_back({c, std::move(fn)});
        return c;
    };

    auto *inv = sub("invariants", "tb, rot, tw and vertex signs of a Theta diagram", cmd_invariants);
    inv->add_option("--diagram", o.diagrams, "diagram file")->required();

    add_key_flags(sub("classify", "admissibility, embedding and image counts", cmd_classify), false);

    sub("enumerate", "all admissible pairs with tb_i >= -B", cmd_enumerate)
        ->add_option("--bound", o.bound, "B")
        ->required();

    auto *real = sub("realize", "stabilization recipe and a realizing front", cmd_realize);
    add_key_flags(real, false);
    real->add_option("--output", o.output, "also write the diagram to this file");

    sub("gl", "the front G_l", cmd_gl)->add_option("--l", o.l, "l >= -1/2, e.g. 1.5 or 3/2")->required();

    sub("mirror", "reflect a diagram", cmd_mirror)->add_option("--diagram", o.diagrams, "diagram file")->required();

    auto *mv = sub("move", "apply a move and report invariant changes", cmd_move);
    mv->add_option("--diagram", o.diagrams, "diagram file")->required();
    mv->add_option("--move", o.move,
                   "I, II, III, III_v, V, stabilize, destabilize, vertex_stabilize or twist")
        ->required();
    mv->add_option("--site", o.site, "site as a JSON object");

    auto *eq = sub("equiv", "equivalence up to relabeling of Theta", cmd_equiv);
    add_key_flags(eq, true);
    eq->add_option("--diagram", o.diagrams, "two diagram files instead of keys");

    add_key_flags(sub("orbit", "orbit of a key under relabeling", cmd_orbit), false);

    auto *con = sub("connected", "whether G_l and G_l' differ by edge stabilizations", cmd_connected);
    con->add_option("--l", o.l)->required();
    con->add_option("--lprime", o.lprime)->required();

    sub("planar-realize", "Property-N certificate for a planar map", cmd_planar_realize)
        ->add_option("--map", o.map, "map file")
        ->required();

    auto *fam = sub("family", "infinite family of distinct realizations", cmd_family);
    fam->add_option("--map", o.map, "map file")->required();
    fam->add_option("--kmax", o.kmax, "largest twist parameter");

    auto *val = sub("validate", "check a diagram or map file", cmd_validate);
    val->add_option("--diagram", o.diagrams, "diagram file");
    val->add_option("--map", o.map, "map file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    for (const auto &[cmd, fn] : commands) {
        if (!cmd->parsed())
            continue;
        try {
            const Json doc = fn(o);
            if (o.format == "summary")
                print_summary(doc);
            else
                std::cout << canonical(doc);
            return 0;
        } catch (const Infeasible &e) {
            std::cerr << "infeasible: " << e.what() << "\n";
            return 2;
        } catch (const InvalidInput &e) {
            std::cerr << "invalid input: " << e.what() << "\n";
            return 1;
        } catch (const std::exception &e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }
    return 1;
}

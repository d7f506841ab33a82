#include "gorcontract/io.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gorcontract {

namespace {

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (item.key() == a) ok = true;
        if (!ok)
            throw std::invalid_argument("unknown field '" + item.key() + "' in " + where);
    }
}

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key))
        throw std::invalid_argument("missing field '" + std::string(key) + "' in " + where);
    return j.at(key);
}

int need_int(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number_integer())
        throw std::invalid_argument("field '" + std::string(key) + "' in " + where +
                                    " must be an integer");
    return v.get<int>();
}

HalfInt parse_half(const json& v, const std::string& where) {
    if (v.is_number_integer()) return HalfInt::whole(v.get<std::int64_t>());
    if (v.is_string()) return HalfInt::parse(v.get<std::string>());
    throw std::invalid_argument(where + " must be an integer or a fraction string");
}

}  // namespace

InputDoc parse_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("input document must be a JSON object");
    reject_unknown(j, {"genus", "mu", "vertices", "edges", "datum", "lambda_bar"}, "document");

    InputDoc doc;
    TropCover& t = doc.cover;
    t.genus = need_int(j, "genus", "document");
    for (const auto& m : need(j, "mu", "document")) {
        if (!m.is_number_integer()) throw std::invalid_argument("mu entries must be integers");
        t.mu.push_back(m.get<int>());
    }

    std::set<int> vertex_ids, edge_ids, marking_ids;
    for (const auto& vj : need(j, "vertices", "document")) {
        reject_unknown(vj, {"id", "branch_count", "markings"}, "vertex");
        TVertex v;
        v.id = need_int(vj, "id", "vertex");
        v.branch_count = need_int(vj, "branch_count", "vertex");
        if (!vertex_ids.insert(v.id).second)
            throw std::invalid_argument("duplicate vertex id " + std::to_string(v.id));
        if (vj.contains("markings"))
            for (const auto& mj : vj.at("markings")) {
                reject_unknown(mj, {"id", "zero_order"}, "marking");
                MarkingLeg leg;
                leg.id = need_int(mj, "id", "marking");
                leg.zero_order = need_int(mj, "zero_order", "marking");
                if (!marking_ids.insert(leg.id).second)
                    throw std::invalid_argument("duplicate marking id " + std::to_string(leg.id));
                v.markings.push_back(leg);
            }
        t.vertices.push_back(v);
    }
    for (const auto& ej : need(j, "edges", "document")) {
        reject_unknown(ej, {"id", "ends", "ramified", "length"}, "edge");
        TEdge e;
        e.id = need_int(ej, "id", "edge");
        if (!edge_ids.insert(e.id).second)
            throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
        const json& ends = need(ej, "ends", "edge");
        if (!ends.is_array() || ends.size() != 2)
            throw std::invalid_argument("edge ends must be a pair of vertex ids");
        e.u = t.vertex_index_of_id(ends[0].get<int>());
        e.v = t.vertex_index_of_id(ends[1].get<int>());
        const json& ram = need(ej, "ramified", "edge");
        if (!ram.is_boolean()) throw std::invalid_argument("edge 'ramified' must be a boolean");
        e.ramified = ram.get<bool>();
        if (ej.contains("length")) {
            const json& len = ej.at("length");
            e.length = len.is_string() ? Rat::parse(len.get<std::string>())
                                       : Rat(len.get<std::int64_t>());
            if (!(e.length > Rat(0)))
                throw std::invalid_argument("edge length must be positive");
        }
        t.edges.push_back(e);
    }
    t.finalize();

    if (j.contains("datum")) doc.datum = clfunc_from_json(t, j.at("datum"));
    if (j.contains("lambda_bar")) doc.lambda_bar = clfunc_from_json(t, j.at("lambda_bar"));
    return doc;
}

CLFunction clfunc_from_json(const TropCover& t, const json& block) {
    reject_unknown(block, {"values", "edge_slopes", "leg_slopes", "branch_leg_slope"},
                   "CL function");
    CLFunction f = CLFunction::zero(t);
    const json& values = need(block, "values", "CL function");
    std::set<int> seen;
    for (const auto& item : values.items()) {
        int idx = t.vertex_index_of_id(std::stoi(item.key()));
        f.values[(size_t)idx] = parse_half(item.value(), "value at vertex " + item.key());
        seen.insert(idx);
    }
    if (seen.size() != t.vertices.size())
        throw std::invalid_argument("CL function must assign a value to every vertex");
    const json& slopes = need(block, "edge_slopes", "CL function");
    std::set<int> seen_edges;
    for (const auto& item : slopes.items()) {
        int idx = t.edge_index_of_id(std::stoi(item.key()));
        f.edge_slopes[(size_t)idx] = parse_half(item.value(), "slope on edge " + item.key());
        seen_edges.insert(idx);
    }
    if (seen_edges.size() != t.edges.size())
        throw std::invalid_argument("CL function must assign a slope to every edge");
    if (block.contains("leg_slopes")) {
        auto table = t.marking_table();
        for (const auto& item : block.at("leg_slopes").items()) {
            int id = std::stoi(item.key());
            bool found = false;
            for (size_t m = 0; m < table.size(); ++m)
                if (table[m].second.id == id) {
                    f.leg_slopes[m] = parse_half(item.value(), "slope on leg " + item.key());
                    found = true;
                }
            if (!found) throw std::invalid_argument("unknown marking id " + item.key());
        }
    }
    if (block.contains("branch_leg_slope"))
        f.branch_leg_slope = parse_half(block.at("branch_leg_slope"), "branch_leg_slope");
    return f;
}

json cover_to_json(const TropCover& t) {
    json j;
    j["genus"] = t.genus;
    j["mu"] = t.mu;
    json vertices = json::array();
    for (const auto& v : t.vertices) {
        json vj;
        vj["id"] = v.id;
        vj["branch_count"] = v.branch_count;
        json markings = json::array();
        for (const auto& m : v.markings) {
            json mj;
            mj["id"] = m.id;
            mj["zero_order"] = m.zero_order;
            markings.push_back(mj);
        }
        vj["markings"] = markings;
        vertices.push_back(vj);
    }
    j["vertices"] = vertices;
    json edges = json::array();
    for (const auto& e : t.edges) {
        json ej;
        ej["id"] = e.id;
        ej["ends"] = {t.vertices[e.u].id, t.vertices[e.v].id};
        ej["ramified"] = e.ramified;
        if (e.length != Rat(1)) ej["length"] = e.length.str();
        edges.push_back(ej);
    }
    j["edges"] = edges;
    return j;
}

json clfunc_to_json(const TropCover& t, const CLFunction& f) {
    json j;
    json values;
    for (size_t v = 0; v < t.vertices.size(); ++v)
        values[std::to_string(t.vertices[v].id)] = f.values[v].str();
    j["values"] = values;
    json slopes;
    for (size_t e = 0; e < t.edges.size(); ++e)
        slopes[std::to_string(t.edges[e].id)] = f.edge_slopes[e].str();
    j["edge_slopes"] = slopes;
    json legs;
    auto table = t.marking_table();
    for (size_t m = 0; m < table.size(); ++m)
        legs[std::to_string(table[m].second.id)] = f.leg_slopes[m].str();
    j["leg_slopes"] = legs;
    if (!f.branch_leg_slope.is_zero()) j["branch_leg_slope"] = f.branch_leg_slope.str();
    return j;
}

json input_to_json(const InputDoc& doc) {
    json j = cover_to_json(doc.cover);
    if (doc.datum) j["datum"] = clfunc_to_json(doc.cover, *doc.datum);
    if (doc.lambda_bar) j["lambda_bar"] = clfunc_to_json(doc.cover, *doc.lambda_bar);
    return j;
}

std::string cover_dot(const TropCover& t, const CoverGraph& g) {
    std::string out = "graph cover {\n  node [shape=circle];\n";
    for (size_t cv = 0; cv < g.vertices.size(); ++cv)
        out += "  c" + std::to_string(cv) + " [label=\"g=" +
               std::to_string(g.vertices[cv].genus) + "\"];\n";
    for (const auto& e : g.edges) {
        out += "  c" + std::to_string(e.u) + " -- c" + std::to_string(e.v);
        if (t.edges[e.base_edge].ramified) out += " [color=blue]";
        out += ";\n";
    }
    int leg = 0;
    for (size_t cv = 0; cv < g.vertices.size(); ++cv) {
        int b = t.vertices[g.vertices[cv].base].branch_count;
        if (b > 0 && g.vertices[cv].copy == 0) {
            out += "  bl" + std::to_string(leg) + " [shape=none, fontcolor=blue, label=\"" +
                   std::to_string(b) + "\"];\n";
            out += "  c" + std::to_string(cv) + " -- bl" + std::to_string(leg) +
                   " [color=blue];\n";
            ++leg;
        }
    }
    for (size_t l = 0; l < g.marking_legs.size(); ++l) {
        const auto& ml = g.marking_legs[l];
        out += "  m" + std::to_string(l) + " [shape=none, label=\"u" +
               std::to_string(ml.marking_id) + "," + std::to_string(ml.copy + 1) + " (" +
               std::to_string(ml.zero_order) + ")\"];\n";
        out += "  c" + std::to_string(ml.vertex) + " -- m" + std::to_string(l) + ";\n";
    }
    out += "}\n";
    return out;
}

std::string pbar_dot(const TropCover& t, const ContractionOutcome& outcome) {
    std::string out = "graph pbar {\n  node [shape=circle];\n";
    for (size_t pv = 0; pv < outcome.pbar.vertices.size(); ++pv) {
        const auto& v = outcome.pbar.vertices[pv];
        out += "  p" + std::to_string(pv);
        if (v.ell > 0) {
            out += " [shape=doublecircle, label=\"" + std::to_string(v.ell) + "-fold\"]";
        } else {
            out += " [label=\"v" + std::to_string(t.vertices[v.t_vertices[0]].id) + "\"";
            if (v.orbifold) out += ", style=dashed";
            out += "]";
        }
        out += ";\n";
    }
    for (const auto& e : outcome.pbar.edges) {
        out += "  p" + std::to_string(e.u) + " -- p" + std::to_string(e.v);
        if (t.edges[e.t_edge].ramified) out += " [color=blue]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace gorcontract

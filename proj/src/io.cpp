#include "fuzzygraph/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fuzzygraph/contraction.hpp"

namespace fuzzygraph {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_document(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level value must be an object");
    for (const char* key : {"vertices", "edges"})
        if (!doc.contains(key) || !doc[key].is_array()) throw ParseError(std::string("missing array '") + key + "'");
    return doc;
}

std::string string_field(const ordered_json& item, const char* key, std::string_view where) {
    if (!item.is_object() || !item.contains(key) || !item[key].is_string())
        throw ParseError(std::string(where) + " needs string field '" + key + "'");
    return item[key].get<std::string>();
}

Label vertex_id(const ordered_json& item) {
    Label id = string_field(item, "id", "vertex");
    if (id.empty()) throw ParseError("empty vertex id");
    if (id.find('+') != Label::npos) {
        std::vector<Label> parts = constituents(id);
        bool canonical = std::is_sorted(parts.begin(), parts.end()) &&
                         std::none_of(parts.begin(), parts.end(), [](const Label& p) { return p.empty(); });
        if (!canonical) throw ParseError("vertex id '" + id + "' is not a canonical merged label");
    }
    return id;
}

Membership membership_field(const ordered_json& item, std::string_view where) {
    std::string text = string_field(item, "mu", where);
    try {
        return Membership::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string(where) + " membership '" + text + "': " + e.what());
    }
}

EdgeKey edge_endpoints(const ordered_json& item, const std::set<Label>& known) {
    Label u = string_field(item, "u", "edge");
    Label v = string_field(item, "v", "edge");
    if (u == v) throw ParseError("self-loop at '" + u + "'");
    for (const auto& x : {u, v})
        if (!known.contains(x)) throw ParseError("edge endpoint '" + x + "' is not a vertex");
    return EdgeKey(u, v);
}

std::string finish(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

FuzzyGraph parse_fuzzy_graph(std::string_view text) {
    ordered_json doc = parse_document(text);
    FuzzyGraph g;
    std::set<Label> known;
    for (const auto& item : doc["vertices"]) {
        Label id = vertex_id(item);
        if (!known.insert(id).second) throw ParseError("duplicate vertex '" + id + "'");
        g.set_vertex(id, membership_field(item, "vertex '" + id + "'"));
    }
    for (const auto& item : doc["edges"]) {
        EdgeKey e = edge_endpoints(item, known);
        if (g.has_edge(e)) throw ParseError("duplicate edge " + e.to_string());
        Membership mu = membership_field(item, "edge " + e.to_string());
        if (mu.is_zero()) throw ParseError("edge " + e.to_string() + " has membership 0; absent edges are omitted");
        g.set_edge(e.u, e.v, mu);
    }
    return g;
}

std::string serialize_fuzzy_graph(const FuzzyGraph& g) {
    ordered_json doc;
    doc["vertices"] = ordered_json::array();
    doc["edges"] = ordered_json::array();
    for (const auto& [v, mu] : g.vertices()) doc["vertices"].push_back({{"id", v}, {"mu", mu.to_string()}});
    for (const auto& [e, mu] : g.edges()) doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"mu", mu.to_string()}});
    return finish(doc);
}

CrispGraph parse_crisp_graph(std::string_view text) {
    ordered_json doc = parse_document(text);
    CrispGraph g;
    for (const auto& item : doc["vertices"]) {
        Label id = vertex_id(item);
        if (g.has_vertex(id)) throw ParseError("duplicate vertex '" + id + "'");
        g.add_vertex(id);
    }
    for (const auto& item : doc["edges"]) {
        EdgeKey e = edge_endpoints(item, g.vertices());
        if (g.has_edge(e)) throw ParseError("duplicate edge " + e.to_string());
        g.add_edge(e.u, e.v);
    }
    return g;
}

std::string serialize_crisp_graph(const CrispGraph& g) {
    ordered_json doc;
    doc["vertices"] = ordered_json::array();
    doc["edges"] = ordered_json::array();
    for (const auto& v : g.vertices()) doc["vertices"].push_back({{"id", v}});
    for (const auto& e : g.edges()) doc["edges"].push_back({{"u", e.u}, {"v", e.v}});
    return finish(doc);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
}

}  // namespace fuzzygraph

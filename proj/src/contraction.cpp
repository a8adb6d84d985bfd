#include "fuzzygraph/contraction.hpp"

#include <algorithm>
#include <type_traits>

namespace fuzzygraph {

std::vector<Label> constituents(const Label& label) {
    std::vector<Label> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t plus = label.find('+', start);
        parts.push_back(label.substr(start, plus - start));
        if (plus == Label::npos) break;
        start = plus + 1;
    }
    return parts;
}

Label merged_label(const Label& a, const Label& b) {
    std::vector<Label> parts = constituents(a);
    std::vector<Label> more = constituents(b);
    parts.insert(parts.end(), more.begin(), more.end());
    std::sort(parts.begin(), parts.end());
    Label out;
    for (const auto& p : parts) {
        if (!out.empty()) out += '+';
        out += p;
    }
    return out;
}

Contraction contract_edge(const FuzzyGraph& g, const EdgeKey& e, TNorm t) {
    require_valid(g);
    if (!g.has_edge(e)) throw InvalidArgument("edge " + e.to_string() + " is not in the graph");

    const Label w = merged_label(e.u, e.v);
    ContractionRecord record{e, w, std::min(g.vertex_membership(e.u), g.vertex_membership(e.v)), {}};

    FuzzyGraph out;
    for (const auto& [x, mu] : g.vertices())
        if (x != e.u && x != e.v) out.set_vertex(x, mu);
    if (out.has_vertex(w)) throw InvalidArgument("merged label '" + w + "' collides with an existing vertex");
    out.set_vertex(w, record.merged_vertex_membership);

    for (const auto& [edge, mu] : g.edges()) {
        if (!edge.touches(e.u) && !edge.touches(e.v)) out.set_edge(edge.u, edge.v, mu);
    }
    for (const auto& [x, mu] : g.vertices()) {
        if (x == e.u || x == e.v) continue;
        Membership via_u = g.edge_membership(e.u, x);
        Membership via_v = g.edge_membership(e.v, x);
        if (via_u.is_zero() && via_v.is_zero()) continue;
        Membership combined = t(via_u, via_v);
        record.updated_incidences.emplace(x, combined);
        if (!combined.is_zero()) out.set_edge(w, x, combined);
    }
    return {std::move(out), std::move(record)};
}

FuzzyGraph delete_edge(const FuzzyGraph& g, const EdgeKey& e) {
    require_valid(g);
    if (!g.has_edge(e)) throw InvalidArgument("edge " + e.to_string() + " is not in the graph");
    FuzzyGraph out = g;
    out.erase_edge(e);
    return out;
}

// ---------------------------------------------------------------------------

LabelTracker::LabelTracker(const std::vector<Label>& labels) {
    for (const auto& l : labels) current_.emplace(l, l);
}

const Label& LabelTracker::resolve(const Label& original) const {
    auto it = current_.find(original);
    if (it == current_.end()) throw InvalidArgument("unknown vertex '" + original + "'");
    return it->second;
}

EdgeKey LabelTracker::resolve(const EdgeKey& e) const {
    const Label& a = resolve(e.u);
    const Label& b = resolve(e.v);
    if (a == b) throw InvalidArgument("edge " + e.to_string() + " collapsed into vertex '" + a + "'");
    return EdgeKey(a, b);
}

void LabelTracker::merge(const Label& a, const Label& b, const Label& merged) {
    for (auto& [original, now] : current_)
        if (now == a || now == b) now = merged;
}

namespace {

template <class Graph>
std::vector<Label> vertex_labels(const Graph& g) {
    std::vector<Label> labels;
    for (const auto& v : g.vertices()) {
        if constexpr (std::is_same_v<Graph, FuzzyGraph>)
            labels.push_back(v.first);
        else
            labels.push_back(v);
    }
    return labels;
}

}  // namespace

FuzzyGraph contract_set(const FuzzyGraph& g, const std::vector<EdgeKey>& edges, TNorm t) {
    require_valid(g);
    LabelTracker tracker(vertex_labels(g));
    FuzzyGraph current = g;
    for (const auto& ref : edges) {
        EdgeKey e = tracker.resolve(ref);
        if (!current.has_edge(e))
            throw InvalidArgument("edge " + ref.to_string() + " resolves to " + e.to_string() +
                                  ", which is not in the current graph");
        Contraction step = contract_edge(current, e, t);
        tracker.merge(e.u, e.v, step.record.merged);
        current = std::move(step.graph);
    }
    return current;
}

CrispGraph crisp_contract(const CrispGraph& g, const EdgeKey& e) {
    if (!g.has_edge(e)) throw InvalidArgument("edge " + e.to_string() + " is not in the graph");
    const Label w = merged_label(e.u, e.v);
    CrispGraph out;
    for (const auto& x : g.vertices())
        if (x != e.u && x != e.v) out.add_vertex(x);
    if (out.has_vertex(w)) throw InvalidArgument("merged label '" + w + "' collides with an existing vertex");
    out.add_vertex(w);
    auto image = [&](const Label& x) -> const Label& { return x == e.u || x == e.v ? w : x; };
    for (const auto& edge : g.edges()) {
        const Label& a = image(edge.u);
        const Label& b = image(edge.v);
        if (a != b) out.add_edge(a, b);
    }
    return out;
}

CrispGraph crisp_contract_set(const CrispGraph& g, const std::vector<EdgeKey>& edges) {
    LabelTracker tracker(vertex_labels(g));
    CrispGraph current = g;
    for (const auto& ref : edges) {
        EdgeKey e = tracker.resolve(ref);
        Label w = merged_label(e.u, e.v);
        current = crisp_contract(current, e);
        tracker.merge(e.u, e.v, w);
    }
    return current;
}

}  // namespace fuzzygraph

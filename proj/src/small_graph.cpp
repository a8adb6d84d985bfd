#include "fuzzygraph/small_graph.hpp"

#include <map>

namespace fuzzygraph {

SmallGraph::SmallGraph(std::size_t n) : adj_(n, 0) {
    if (n > max_vertices) throw BoundExceeded("small graph limited to 64 vertices");
}

SmallGraph SmallGraph::from_crisp(const CrispGraph& g) {
    if (g.vertex_count() > max_vertices)
        throw BoundExceeded("graph has " + std::to_string(g.vertex_count()) + " vertices; limit is 64");
    std::map<Label, std::size_t> index;
    for (const auto& v : g.vertices()) index.emplace(v, index.size());
    SmallGraph out(index.size());
    for (const auto& e : g.edges()) out.add_edge(index.at(e.u), index.at(e.v));
    return out;
}

std::size_t SmallGraph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (VertexMask m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
}

void SmallGraph::add_edge(std::size_t a, std::size_t b) {
    if (a == b) throw InvalidArgument("self-loop in small graph");
    adj_[a] |= bit(b);
    adj_[b] |= bit(a);
}

void SmallGraph::remove_edge(std::size_t a, std::size_t b) {
    adj_[a] &= ~bit(b);
    adj_[b] &= ~bit(a);
}

VertexMask SmallGraph::reach(std::size_t start, VertexMask within) const noexcept {
    VertexMask seen = bit(start) & within;
    VertexMask frontier = seen;
    while (frontier) {
        VertexMask next = 0;
        for (VertexMask f = frontier; f; f &= f - 1) next |= adj_[lowest(f)];
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool SmallGraph::connected_within(VertexMask subset) const noexcept {
    if (subset == 0) return true;
    return reach(lowest(subset), subset) == subset;
}

std::vector<VertexMask> SmallGraph::components_within(VertexMask subset) const {
    std::vector<VertexMask> out;
    while (subset) {
        VertexMask c = reach(lowest(subset), subset);
        out.push_back(c);
        subset &= ~c;
    }
    return out;
}

SmallGraph SmallGraph::induced(VertexMask subset) const {
    std::vector<std::size_t> index(adj_.size(), 0);
    std::size_t next = 0;
    for (VertexMask s = subset; s; s &= s - 1) index[lowest(s)] = next++;
    SmallGraph out(next);
    for (VertexMask s = subset; s; s &= s - 1) {
        std::size_t v = lowest(s);
        for (VertexMask n = adj_[v] & subset; n; n &= n - 1) {
            std::size_t w = lowest(n);
            if (v < w) out.add_edge(index[v], index[w]);
        }
    }
    return out;
}

}  // namespace fuzzygraph

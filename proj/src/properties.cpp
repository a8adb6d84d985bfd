#include "fuzzygraph/properties.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "fuzzygraph/contraction.hpp"
#include "fuzzygraph/minors.hpp"
#include "fuzzygraph/small_graph.hpp"

namespace fuzzygraph {

namespace {

std::map<Label, std::vector<Label>> adjacency(const CrispGraph& g) {
    std::map<Label, std::vector<Label>> adj;
    for (const auto& v : g.vertices()) adj[v];
    for (const auto& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

void require_bound(const CrispGraph& g, std::size_t max_vertices, std::string_view what) {
    if (g.vertex_count() > max_vertices)
        throw BoundExceeded(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                            " vertices exceeds desk-scale bound " + std::to_string(max_vertices));
}

}  // namespace

bool is_connected(const CrispGraph& g) {
    if (g.vertex_count() <= 1) return true;
    auto adj = adjacency(g);
    std::set<Label> seen{*g.vertices().begin()};
    std::deque<Label> queue{*g.vertices().begin()};
    while (!queue.empty()) {
        Label v = queue.front();
        queue.pop_front();
        for (const auto& w : adj[v])
            if (seen.insert(w).second) queue.push_back(w);
    }
    return seen.size() == g.vertex_count();
}

bool is_bipartite(const CrispGraph& g) {
    auto adj = adjacency(g);
    std::map<Label, int> side;
    for (const auto& start : g.vertices()) {
        if (side.contains(start)) continue;
        side[start] = 0;
        std::deque<Label> queue{start};
        while (!queue.empty()) {
            Label v = queue.front();
            queue.pop_front();
            for (const auto& w : adj[v]) {
                auto it = side.find(w);
                if (it == side.end()) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (it->second == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_planar(const CrispGraph& g, std::size_t max_vertices) {
    require_bound(g, max_vertices, "planarity test");
    SmallGraph reduced = reduce_low_degree(SmallGraph::from_crisp(g));
    for (VertexMask component : reduced.components_within(reduced.all())) {
        SmallGraph part = reduced.induced(component);
        const std::size_t n = part.size();
        if (n <= 4) continue;
        if (part.edge_count() > 3 * n - 6) return false;
        if (has_minor(part, MinorPattern::k5) || has_minor(part, MinorPattern::k33)) return false;
    }
    return true;
}

bool is_series_parallel(const CrispGraph& g, std::size_t max_vertices) {
    require_bound(g, max_vertices, "series-parallel test");
    std::map<Label, std::size_t> index;
    for (const auto& v : g.vertices()) index.emplace(v, index.size());
    // Multigraph with explicit edge multiplicities; a suppressed degree-2
    // vertex whose neighbors are already adjacent produces a parallel pair.
    std::vector<std::map<std::size_t, int>> mult(index.size());
    for (const auto& e : g.edges()) {
        std::size_t a = index.at(e.u), b = index.at(e.v);
        mult[a][b] += 1;
        mult[b][a] += 1;
    }
    std::vector<bool> alive(index.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < mult.size(); ++v) {
            if (!alive[v]) continue;
            for (auto& [w, m] : mult[v]) {
                if (m > 1) {
                    m = 1;
                    mult[w][v] = 1;
                    changed = true;
                }
            }
            if (mult[v].size() <= 1) {
                for (const auto& [w, m] : mult[v]) mult[w].erase(v);
                mult[v].clear();
                alive[v] = false;
                changed = true;
            } else if (mult[v].size() == 2) {
                std::size_t x = mult[v].begin()->first;
                std::size_t y = std::next(mult[v].begin())->first;
                mult[x].erase(v);
                mult[y].erase(v);
                mult[v].clear();
                alive[v] = false;
                mult[x][y] += 1;
                mult[y][x] += 1;
                changed = true;
            }
        }
    }
    for (const auto& m : mult)
        if (!m.empty()) return false;
    return true;
}

namespace {

bool survives_all_removals(const SmallGraph& g, std::size_t remaining, std::size_t from, VertexMask removed) {
    if (!g.connected_within(g.all() & ~removed)) return false;
    if (remaining == 0) return true;
    for (std::size_t v = from; v < g.size(); ++v)
        if (!survives_all_removals(g, remaining - 1, v + 1, removed | bit(v))) return false;
    return true;
}

std::size_t max_flow(const SmallGraph& g, std::size_t s, std::size_t t) {
    const std::size_t n = g.size();
    std::vector<std::vector<int>> residual(n, std::vector<int>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (g.has_edge(a, b)) residual[a][b] = 1;
    std::size_t flow = 0;
    while (true) {
        std::vector<std::size_t> parent(n, n);
        parent[s] = s;
        std::deque<std::size_t> queue{s};
        while (!queue.empty() && parent[t] == n) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w = 0; w < n; ++w) {
                if (parent[w] == n && residual[v][w] > 0) {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if (parent[t] == n) return flow;
        for (std::size_t v = t; v != s; v = parent[v]) {
            residual[parent[v]][v] -= 1;
            residual[v][parent[v]] += 1;
        }
        ++flow;
    }
}

}  // namespace

bool is_k_connected(const CrispGraph& g, std::size_t k) {
    if (k == 0) throw InvalidArgument("connectivity order must be >= 1");
    if (g.vertex_count() <= k) return false;
    SmallGraph sg = SmallGraph::from_crisp(g);
    return survives_all_removals(sg, k - 1, 0, 0);
}

std::size_t edge_connectivity(const CrispGraph& g) {
    if (g.vertex_count() < 2) return 0;
    SmallGraph sg = SmallGraph::from_crisp(g);
    if (!sg.connected_within(sg.all())) return 0;
    std::size_t best = sg.edge_count();
    for (std::size_t t = 1; t < sg.size(); ++t) best = std::min(best, max_flow(sg, 0, t));
    return best;
}

std::size_t fuzzy_edge_connectivity(const FuzzyGraph& g, const MembershipLevel& alpha) {
    return edge_connectivity(alpha_cut(g, alpha));
}

bool is_fuzzy_3connected(const FuzzyGraph& g, const MembershipLevel& alpha) {
    return is_k_connected(alpha_cut(g, alpha), 3);
}

// ---------------------------------------------------------------------------
// Triconnected decomposition

std::optional<SeparationPair> find_separation_pair(const CrispGraph& g) {
    std::vector<Label> labels(g.vertices().begin(), g.vertices().end());
    SmallGraph sg = SmallGraph::from_crisp(g);
    for (std::size_t x = 0; x < sg.size(); ++x)
        for (std::size_t y = x + 1; y < sg.size(); ++y)
            if (sg.components_within(sg.all() & ~bit(x) & ~bit(y)).size() >= 2) return SeparationPair{labels[x], labels[y]};
    return std::nullopt;
}

namespace {

TriconnectedComponent induced_part(const TriconnectedComponent& whole, const std::vector<Label>& labels,
                                   VertexMask members, const EdgeKey* skip) {
    TriconnectedComponent part;
    std::set<Label> keep;
    for (VertexMask m = members; m; m &= m - 1) keep.insert(labels[lowest(m)]);
    for (const auto& v : keep) part.graph.add_vertex(v);
    for (const auto& e : whole.graph.edges()) {
        if (skip && e == *skip) continue;
        if (keep.contains(e.u) && keep.contains(e.v)) {
            part.graph.add_edge(e.u, e.v);
            if (whole.virtual_edges.contains(e)) part.virtual_edges.insert(e);
        }
    }
    return part;
}

void decompose(const TriconnectedComponent& piece, std::vector<TriconnectedComponent>& out) {
    if (piece.graph.vertex_count() <= 3) {
        out.push_back(piece);
        return;
    }
    std::vector<Label> labels(piece.graph.vertices().begin(), piece.graph.vertices().end());
    SmallGraph sg = SmallGraph::from_crisp(piece.graph);
    const VertexMask all = sg.all();

    for (std::size_t a = 0; a < sg.size(); ++a) {
        auto parts = sg.components_within(all & ~bit(a));
        if (parts.size() < 2) continue;
        for (VertexMask c : parts) decompose(induced_part(piece, labels, c | bit(a), nullptr), out);
        return;
    }

    bool cycle = true;
    for (std::size_t v = 0; v < sg.size(); ++v) cycle = cycle && sg.degree(v) == 2;
    if (cycle) {
        out.push_back(piece);
        return;
    }

    for (std::size_t x = 0; x < sg.size(); ++x) {
        for (std::size_t y = x + 1; y < sg.size(); ++y) {
            auto parts = sg.components_within(all & ~bit(x) & ~bit(y));
            if (parts.size() < 2) continue;
            const EdgeKey pair(labels[x], labels[y]);
            const bool real_pair_edge = piece.graph.has_edge(pair) && !piece.virtual_edges.contains(pair);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                TriconnectedComponent part = induced_part(piece, labels, parts[i] | bit(x) | bit(y), &pair);
                part.graph.add_edge(pair.u, pair.v);
                if (!(i == 0 && real_pair_edge)) part.virtual_edges.insert(pair);
                decompose(part, out);
            }
            return;
        }
    }
    out.push_back(piece);
}

}  // namespace

std::vector<TriconnectedComponent> triconnected_components(const CrispGraph& g) {
    require_bound(g, triconnected_bound, "triconnected decomposition");
    if (!is_connected(g)) throw InvalidArgument("triconnected decomposition needs a connected graph");
    std::vector<TriconnectedComponent> out;
    decompose(TriconnectedComponent{g, {}}, out);
    return out;
}

bool check_property(const PropertySpec& p, const CrispGraph& g) { return p.checker(g); }

bool check_property_via_3cc(const PropertySpec& p, const CrispGraph& g) {
    if (!p.determined_by_3cc)
        throw InvalidArgument("property '" + p.name + "' is not declared to be determined by 3-connected components");
    for (const auto& c : triconnected_components(g))
        if (!p.checker(c.graph)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Property registry

std::vector<std::string> PropertySpec::builtin_names() {
    return {"connected", "bipartite", "planar", "series-parallel", "3-connected"};
}

PropertySpec PropertySpec::parse(std::string_view name) {
    if (name.find('+') != std::string_view::npos) {
        std::vector<PropertySpec> parts;
        std::size_t start = 0;
        while (true) {
            std::size_t plus = name.find('+', start);
            parts.push_back(parse(name.substr(start, plus == std::string_view::npos ? plus : plus - start)));
            if (plus == std::string_view::npos) break;
            start = plus + 1;
        }
        PropertySpec out{std::string(name), true, true, true, {}};
        for (const auto& p : parts) {
            out.hereditary_deletion = out.hereditary_deletion && p.hereditary_deletion;
            out.hereditary_contraction = out.hereditary_contraction && p.hereditary_contraction;
            out.determined_by_3cc = out.determined_by_3cc && p.determined_by_3cc;
        }
        out.checker = [parts](const CrispGraph& g) {
            return std::all_of(parts.begin(), parts.end(), [&](const PropertySpec& p) { return p.checker(g); });
        };
        return out;
    }
    if (name == "connected") return {"connected", false, true, false, [](const CrispGraph& g) { return is_connected(g); }};
    if (name == "bipartite") return {"bipartite", true, false, false, [](const CrispGraph& g) { return is_bipartite(g); }};
    if (name == "planar") return {"planar", true, true, true, [](const CrispGraph& g) { return is_planar(g); }};
    if (name == "series-parallel")
        return {"series-parallel", true, true, true, [](const CrispGraph& g) { return is_series_parallel(g); }};
    if (name == "3-connected")
        return {"3-connected", false, false, false, [](const CrispGraph& g) { return is_k_connected(g, 3); }};
    throw InvalidArgument("unknown property '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Exhaustive hereditary verification

namespace {

using Code = std::uint32_t;

Code adjacency_code(const SmallGraph& g, const std::vector<std::size_t>& order) {
    Code code = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) code = (code << 1) | (g.has_edge(order[i], order[j]) ? 1U : 0U);
    return code;
}

/// Minimum code over relabelings that list vertices by ascending degree.
/// Isomorphic graphs share that set of relabelings, hence the minimum.
std::pair<Code, std::vector<std::size_t>> canonical(const SmallGraph& g) {
    const std::size_t n = g.size();
    std::vector<int> degrees(n);
    for (std::size_t v = 0; v < n; ++v) degrees[v] = g.degree(v);
    std::vector<int> slots = degrees;
    std::sort(slots.begin(), slots.end());

    Code best = ~Code{0};
    std::vector<std::size_t> best_order, order;
    std::vector<bool> used(n, false);
    auto fill = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n) {
            Code c = adjacency_code(g, order);
            if (c < best || best_order.empty()) {
                best = c;
                best_order = order;
            }
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v] || degrees[v] != slots[pos]) continue;
            used[v] = true;
            order.push_back(v);
            self(self, pos + 1);
            order.pop_back();
            used[v] = false;
        }
    };
    fill(fill, 0);
    return {best, best_order};
}

SmallGraph relabel(const SmallGraph& g, const std::vector<std::size_t>& order) {
    SmallGraph out(g.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (g.has_edge(order[i], order[j])) out.add_edge(i, j);
    return out;
}

CrispGraph to_crisp(const SmallGraph& g) {
    CrispGraph out;
    for (std::size_t v = 0; v < g.size(); ++v) out.add_vertex(std::to_string(v + 1));
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b)
            if (g.has_edge(a, b)) out.add_edge(std::to_string(a + 1), std::to_string(b + 1));
    return out;
}

std::vector<SmallGraph> connected_classes(std::size_t n) {
    if (n == 0) return {};
    if (n == 1) return {SmallGraph(1)};
    std::map<Code, SmallGraph> found;
    for (const SmallGraph& smaller : connected_classes(n - 1)) {
        for (VertexMask attach = 1; attach < bit(n - 1); ++attach) {
            SmallGraph g(n);
            for (std::size_t a = 0; a + 1 < n; ++a)
                for (std::size_t b = a + 1; b + 1 < n; ++b)
                    if (smaller.has_edge(a, b)) g.add_edge(a, b);
            for (VertexMask m = attach; m; m &= m - 1) g.add_edge(n - 1, lowest(m));
            auto [code, order] = canonical(g);
            if (!found.contains(code)) found.emplace(code, relabel(g, order));
        }
    }
    std::vector<SmallGraph> out;
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

CrispGraph random_connected(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> density(0.1, 0.9);
    std::bernoulli_distribution coin(density(rng));
    CrispGraph g;
    for (std::size_t v = 1; v <= n; ++v) g.add_vertex(std::to_string(v));
    for (std::size_t v = 2; v <= n; ++v) {
        std::uniform_int_distribution<std::size_t> parent(1, v - 1);
        g.add_edge(std::to_string(parent(rng)), std::to_string(v));
    }
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b)
            if (coin(rng)) g.add_edge(std::to_string(a), std::to_string(b));
    return g;
}

bool check_graph(const PropertySpec& p, EdgeOperation op, const CrispGraph& g, HereditaryReport& report) {
    ++report.graphs_checked;
    if (!p.checker(g)) return true;
    for (const auto& e : g.edges()) {
        ++report.operations_checked;
        CrispGraph after = g;
        if (op == EdgeOperation::contraction)
            after = crisp_contract(g, e);
        else
            after.remove_edge(e);
        if (!p.checker(after)) {
            report.passed = false;
            report.counterexample = g;
            report.counterexample_edge = e;
            return false;
        }
    }
    return true;
}

constexpr std::size_t exhaustive_limit = 7;
constexpr std::size_t sampled_limit = 12;
constexpr std::size_t samples_per_size = 500;

}  // namespace

std::vector<CrispGraph> connected_graphs_up_to_isomorphism(std::size_t n) {
    if (n > exhaustive_limit) throw BoundExceeded("isomorphism-class enumeration limited to 7 vertices");
    std::vector<CrispGraph> out;
    for (const auto& g : connected_classes(n)) out.push_back(to_crisp(g));
    return out;
}

HereditaryReport verify_hereditary(const PropertySpec& p, EdgeOperation op, std::size_t n_max) {
    if (n_max > sampled_limit)
        throw BoundExceeded("hereditary verification limited to " + std::to_string(sampled_limit) + " vertices");
    HereditaryReport report;
    for (std::size_t n = 1; n <= std::min(n_max, exhaustive_limit); ++n)
        for (const auto& g : connected_graphs_up_to_isomorphism(n))
            if (!check_graph(p, op, g, report)) return report;
    for (std::size_t n = exhaustive_limit + 1; n <= n_max; ++n) {
        report.exhaustive = false;
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ n);
        for (std::size_t i = 0; i < samples_per_size; ++i)
            if (!check_graph(p, op, random_connected(n, rng), report)) return report;
    }
    return report;
}

}  // namespace fuzzygraph

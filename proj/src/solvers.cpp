#include "fuzzygraph/solvers.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "fuzzygraph/contraction.hpp"
#include "fuzzygraph/small_graph.hpp"

namespace fuzzygraph {

Semantics parse_semantics(std::string_view text) {
    if (text == "all") return AllAlphaSemantics{};
    constexpr std::string_view prefix = "threshold:";
    if (text.starts_with(prefix)) return ThresholdSemantics{MembershipLevel::parse(text.substr(prefix.size()))};
    throw InvalidArgument("semantics must be 'all' or 'threshold:A', got '" + std::string(text) + "'");
}

std::string to_string(const Semantics& s) {
    if (const auto* t = std::get_if<ThresholdSemantics>(&s)) return "threshold:" + t->alpha.to_string();
    return "all";
}

std::string_view to_string(EdgeOperation op) { return op == EdgeOperation::deletion ? "delete" : "contract"; }

EdgeOperation parse_operation(std::string_view text) {
    if (text == "delete") return EdgeOperation::deletion;
    if (text == "contract") return EdgeOperation::contraction;
    throw InvalidArgument("operation must be 'delete' or 'contract', got '" + std::string(text) + "'");
}

bool for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (visit(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::uint64_t subsets_up_to(std::size_t n, std::size_t k) {
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(n, s)
    for (std::size_t s = 0; s <= std::min(n, k); ++s) {
        if (s > 0) {
            unsigned __int128 next = static_cast<unsigned __int128>(binom) * (n - s + 1) / s;
            binom = next > cap ? cap : static_cast<std::uint64_t>(next);
        }
        total = cap - total < binom ? cap : total + binom;
    }
    return total;
}

FuzzyGraph apply_edit(const FuzzyGraph& g, const std::vector<EdgeKey>& edges, EdgeOperation op, TNorm t) {
    if (op == EdgeOperation::contraction) return contract_set(g, edges, t);
    FuzzyGraph out = g;
    for (const auto& e : edges) {
        if (!out.has_edge(e)) throw InvalidArgument("edge " + e.to_string() + " is not in the graph");
        out.erase_edge(e);
    }
    return out;
}

bool satisfies_semantics(const FuzzyGraph& g, const PropertySpec& p, const Semantics& semantics) {
    if (const auto* t = std::get_if<ThresholdSemantics>(&semantics)) return p.checker(alpha_cut(g, t->alpha));
    for (const auto& level : distinct_levels(g))
        if (!p.checker(alpha_cut(g, level))) return false;
    return true;
}

bool certificate_holds(const SolveInstance& instance, const std::vector<EdgeKey>& edges) {
    if (edges.size() > instance.budget) return false;
    FuzzyGraph edited;
    try {
        edited = apply_edit(instance.graph, edges, instance.operation, instance.tnorm);
    } catch (const InvalidArgument&) {
        return false;
    }
    return satisfies_semantics(edited, instance.property, instance.semantics);
}

namespace {

void check_limits(std::size_t edge_count, std::size_t budget, const SolveLimits& limits) {
    if (edge_count > limits.max_edges && budget > limits.max_budget)
        throw BoundExceeded("enumeration bound: " + std::to_string(edge_count) + " edges with budget " +
                            std::to_string(budget) + " (allowed: <= " + std::to_string(limits.max_edges) +
                            " edges or budget <= " + std::to_string(limits.max_budget) + ")");
    if (subsets_up_to(edge_count, budget) > limits.max_subsets)
        throw BoundExceeded("enumeration bound: more than " + std::to_string(limits.max_subsets) + " candidate sets");
}

std::vector<EdgeKey> canonical_edges(const FuzzyGraph& g) {
    std::vector<EdgeKey> edges;
    for (const auto& [e, mu] : g.edges()) edges.push_back(e);
    return edges;
}

}  // namespace

SolveResult solve(const SolveInstance& instance, const SolveLimits& limits) {
    require_valid(instance.graph);
    const std::vector<EdgeKey> edges = canonical_edges(instance.graph);
    const std::size_t budget = std::min(instance.budget, edges.size());
    check_limits(edges.size(), instance.budget, limits);

    SolveResult result;
    std::vector<EdgeKey> chosen;
    for (std::size_t size = 0; size <= budget && !result.yes; ++size) {
        for_each_combination(edges.size(), size, [&](const std::vector<std::size_t>& idx) {
            ++result.subsets_examined;
            chosen.clear();
            for (std::size_t i : idx) chosen.push_back(edges[i]);
            if (!certificate_holds(instance, chosen)) return false;
            result.yes = true;
            result.edges = chosen;
            return true;
        });
    }
    if (result.yes && instance.operation == EdgeOperation::deletion)
        for (const auto& e : result.edges) result.membership_removed += instance.graph.edge_membership(e.u, e.v).value();
    return result;
}

MinMembershipResult solve_min_membership(const FuzzyGraph& g, const PropertySpec& p, const MembershipLevel& alpha,
                                         const SolveLimits& limits) {
    require_valid(g);
    // Edges below alpha never appear in the cut, so deleting them only adds cost.
    std::vector<EdgeKey> candidates;
    std::vector<Rational> costs;
    for (const auto& [e, mu] : g.edges()) {
        if (!reaches(mu, alpha)) continue;
        candidates.push_back(e);
        costs.push_back(mu.value());
    }
    check_limits(candidates.size(), candidates.size(), limits);

    const Semantics semantics = ThresholdSemantics{alpha};
    MinMembershipResult best;
    for (std::size_t size = 0; size <= candidates.size(); ++size) {
        for_each_combination(candidates.size(), size, [&](const std::vector<std::size_t>& idx) {
            Rational total;
            for (std::size_t i : idx) total += costs[i];
            // Later sets are never preferred on a tie: same size comes later in order, larger size loses.
            if (best.feasible && total >= best.removed_total) return false;
            ++best.subsets_examined;
            FuzzyGraph edited = g;
            std::vector<EdgeKey> chosen;
            for (std::size_t i : idx) {
                edited.erase_edge(candidates[i]);
                chosen.push_back(candidates[i]);
            }
            if (!satisfies_semantics(edited, p, semantics)) return false;
            best.feasible = true;
            best.edges = std::move(chosen);
            best.removed_total = total;
            return false;
        });
    }
    return best;
}

// ---------------------------------------------------------------------------

namespace {

void require_connected_small(const CrispGraph& g, std::size_t bound, std::string_view what) {
    if (g.vertex_count() > bound)
        throw BoundExceeded(std::string(what) + ": " + std::to_string(g.vertex_count()) + " vertices exceeds bound " +
                            std::to_string(bound));
}

bool covers(const SmallGraph& g, VertexMask cover) {
    for (std::size_t v = 0; v < g.size(); ++v)
        if (!(cover & bit(v)) && (g.neighbors(v) & ~cover)) return false;
    return true;
}

}  // namespace

CoverResult solve_connected_vertex_cover(const CrispGraph& g, std::size_t k) {
    require_connected_small(g, cover_bound, "connected vertex cover");
    if (!is_connected(g)) throw InvalidArgument("connected vertex cover needs a connected graph");
    std::vector<Label> labels(g.vertices().begin(), g.vertices().end());
    SmallGraph sg = SmallGraph::from_crisp(g);

    CoverResult result;
    for (std::size_t size = 0; size <= std::min(k, labels.size()) && !result.yes; ++size) {
        for_each_combination(labels.size(), size, [&](const std::vector<std::size_t>& idx) {
            VertexMask chosen = 0;
            for (std::size_t i : idx) chosen |= bit(i);
            if (!covers(sg, chosen) || !sg.connected_within(chosen)) return false;
            result.yes = true;
            for (std::size_t i : idx) result.cover.insert(labels[i]);
            return true;
        });
    }
    return result;
}

std::size_t min_connected_vertex_cover_size(const CrispGraph& g) {
    for (std::size_t k = 0;; ++k)
        if (solve_connected_vertex_cover(g, k).yes) return k;
}

std::optional<std::set<EdgeKey>> steiner_tree(const CrispGraph& g, const std::set<Label>& terminals) {
    require_connected_small(g, steiner_bound, "steiner tree");
    if (terminals.empty()) throw InvalidArgument("steiner tree needs at least one terminal");
    std::vector<Label> labels(g.vertices().begin(), g.vertices().end());
    std::map<Label, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    VertexMask required = 0;
    for (const auto& t : terminals) {
        auto it = index.find(t);
        if (it == index.end()) throw InvalidArgument("unknown terminal '" + t + "'");
        required |= bit(it->second);
    }
    SmallGraph sg = SmallGraph::from_crisp(g);
    if ((sg.reach(lowest(required), sg.all()) & required) != required) return std::nullopt;

    std::vector<std::size_t> optional_vertices;
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (!(required & bit(v))) optional_vertices.push_back(v);

    VertexMask support = 0;
    for (std::size_t extra = 0; extra <= optional_vertices.size() && !support; ++extra) {
        for_each_combination(optional_vertices.size(), extra, [&](const std::vector<std::size_t>& idx) {
            VertexMask candidate = required;
            for (std::size_t i : idx) candidate |= bit(optional_vertices[i]);
            if (!sg.connected_within(candidate)) return false;
            support = candidate;
            return true;
        });
    }

    // Kruskal over canonical edge order inside the chosen vertex set.
    std::vector<std::size_t> parent(labels.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::set<EdgeKey> tree;
    for (const auto& e : g.edges()) {
        std::size_t a = index.at(e.u), b = index.at(e.v);
        if (!(support & bit(a)) || !(support & bit(b))) continue;
        std::size_t ra = find(a), rb = find(b);
        if (ra == rb) continue;
        parent[ra] = rb;
        tree.insert(e);
    }
    return tree;
}

}  // namespace fuzzygraph

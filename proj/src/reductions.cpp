#include "fuzzygraph/reductions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <random>

#include "fuzzygraph/parallel.hpp"

namespace fuzzygraph {

ReductionArtifact embed_crisp(const CrispGraph& g, std::size_t k, const PropertySpec& p, EdgeOperation op,
                              const MembershipLevel& alpha) {
    ReductionArtifact out;
    out.source = g;
    out.source_budget = k;
    out.target.graph = full_membership(g);
    out.target.property = p;
    out.target.budget = k;
    out.target.semantics = ThresholdSemantics{alpha};
    out.target.operation = op;
    out.target.tnorm = TNorm(TNormKind::minimum);
    return out;
}

// ---------------------------------------------------------------------------
// Classical side. Index-based on purpose: it must not go through the fuzzy
// graph, contract_set, or alpha_cut.

namespace {

struct IndexedGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

IndexedGraph index_graph(const CrispGraph& g) {
    IndexedGraph out;
    std::vector<Label> labels(g.vertices().begin(), g.vertices().end());
    out.n = labels.size();
    for (const auto& e : g.edges()) {
        auto a = std::lower_bound(labels.begin(), labels.end(), e.u) - labels.begin();
        auto b = std::lower_bound(labels.begin(), labels.end(), e.v) - labels.begin();
        out.edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }
    return out;
}

CrispGraph after_deletion(const IndexedGraph& g, const std::vector<bool>& removed) {
    CrispGraph out;
    for (std::size_t v = 0; v < g.n; ++v) out.add_vertex("v" + std::to_string(v));
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (!removed[i]) out.add_edge("v" + std::to_string(g.edges[i].first), "v" + std::to_string(g.edges[i].second));
    return out;
}

CrispGraph after_quotient(const IndexedGraph& g, const std::vector<bool>& contracted) {
    std::vector<std::size_t> root(g.n);
    std::iota(root.begin(), root.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (contracted[i]) root[find(g.edges[i].first)] = find(g.edges[i].second);
    CrispGraph out;
    for (std::size_t v = 0; v < g.n; ++v) out.add_vertex("v" + std::to_string(find(v)));
    for (const auto& [a, b] : g.edges) {
        std::size_t ra = find(a), rb = find(b);
        if (ra != rb) out.add_edge("v" + std::to_string(ra), "v" + std::to_string(rb));
    }
    return out;
}

}  // namespace

bool classical_verdict(const CrispGraph& g, std::size_t k, const PropertySpec& p, EdgeOperation op,
                       const SolveLimits& limits) {
    IndexedGraph ig = index_graph(g);
    const std::size_t m = ig.edges.size();
    if (m > limits.max_edges && k > limits.max_budget)
        throw BoundExceeded("classical enumeration bound exceeded");
    if (subsets_up_to(m, k) > limits.max_subsets) throw BoundExceeded("classical enumeration bound exceeded");

    // Walk subsets as bit patterns rather than combinations: a different
    // enumeration order from the fuzzy solver.
    std::vector<bool> chosen(m, false);
    for (std::size_t size = 0; size <= std::min(k, m); ++size) {
        std::fill(chosen.begin(), chosen.end(), false);
        std::fill(chosen.end() - static_cast<std::ptrdiff_t>(size), chosen.end(), true);
        do {
            CrispGraph result = op == EdgeOperation::deletion ? after_deletion(ig, chosen) : after_quotient(ig, chosen);
            if (p.checker(result)) return true;
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    }
    return false;
}

EquivalenceReport verify_equivalence(const std::vector<CrispInstance>& corpus, const PropertySpec& p, EdgeOperation op,
                                     const MembershipLevel& alpha, std::size_t jobs, const SolveLimits& limits) {
    EquivalenceReport report;
    report.property = p.name;
    report.operation = op;
    report.alpha = alpha.to_string();
    report.records = parallel_map(corpus.size(), jobs, [&](std::size_t i) {
        const auto& [graph, k] = corpus[i];
        EquivalenceRecord rec;
        rec.graph = graph;
        rec.budget = k;
        try {
            rec.classical = classical_verdict(graph, k, p, op, limits);
            rec.fuzzy = solve(embed_crisp(graph, k, p, op, alpha).target, limits).yes;
        } catch (const BoundExceeded& e) {
            rec.skipped = true;
            rec.skip_reason = e.what();
        }
        return rec;
    });
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& rec = report.records[i];
        if (rec.skipped) {
            ++report.skipped;
            continue;
        }
        if (rec.classical) ++report.yes_count;
        if (rec.agree()) {
            ++report.agreements;
        } else {
            ++report.disagreements;
            if (!report.first_disagreement) report.first_disagreement = i;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Instance generators

namespace {

std::string name(std::size_t v) { return std::to_string(v + 1); }

bool connected_without(std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
    CrispGraph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex(name(v));
    for (const auto& [a, b] : edges) g.add_edge(name(a), name(b));
    return is_connected(g);
}

}  // namespace

std::vector<CrispInstance> generate_planar_instances(std::size_t count, std::size_t n_max, std::uint64_t seed) {
    if (n_max > 10) throw BoundExceeded("planar instance generator limited to 10 vertices");
    if (n_max < 3) throw InvalidArgument("planar instances need n_max >= 3");
    std::mt19937_64 rng(seed);
    std::vector<CrispInstance> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> size(std::min<std::size_t>(4, n_max), n_max);
        const std::size_t n = size(rng);

        std::set<std::pair<std::size_t, std::size_t>> edges{{0, 1}, {0, 2}, {1, 2}};
        std::vector<std::array<std::size_t, 3>> faces{{0, 1, 2}, {0, 1, 2}};
        for (std::size_t v = 3; v < n; ++v) {
            std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
            std::size_t f = pick(rng);
            auto [a, b, c] = faces[f];
            edges.insert({a, v});
            edges.insert({b, v});
            edges.insert({c, v});
            faces[f] = {a, b, v};
            faces.push_back({a, c, v});
            faces.push_back({b, c, v});
        }

        std::uniform_real_distribution<double> rate(0.2, 0.6);
        std::bernoulli_distribution drop(rate(rng));
        std::vector<std::pair<std::size_t, std::size_t>> order(edges.begin(), edges.end());
        std::shuffle(order.begin(), order.end(), rng);
        for (const auto& e : order) {
            if (!drop(rng)) continue;
            edges.erase(e);
            if (!connected_without(n, edges)) edges.insert(e);
        }

        CrispGraph g;
        for (std::size_t v = 0; v < n; ++v) g.add_vertex(name(v));
        for (const auto& [a, b] : edges) g.add_edge(name(a), name(b));
        if (!is_planar(g) || !is_connected(g)) throw std::logic_error("planar generator produced an invalid graph");

        std::size_t cover = min_connected_vertex_cover_size(g);
        std::bernoulli_distribution below(0.5);
        std::size_t k = cover > 0 && below(rng) ? cover - 1 : cover;
        out.emplace_back(std::move(g), k);
    }
    return out;
}

std::vector<CrispInstance> generate_equivalence_corpus(std::size_t count, std::size_t n_max, std::uint64_t seed) {
    if (n_max < 4) throw InvalidArgument("equivalence corpus needs n_max >= 4");
    std::mt19937_64 rng(seed);
    const std::array<double, 4> densities{0.3, 0.5, 0.7, 0.9};
    std::vector<CrispInstance> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> size(4, n_max);
        std::uniform_int_distribution<std::size_t> which(0, densities.size() - 1);
        std::uniform_int_distribution<std::size_t> budget(0, 2);
        const std::size_t n = size(rng);
        std::bernoulli_distribution coin(densities[which(rng)]);

        CrispGraph g;
        for (std::size_t v = 0; v < n; ++v) g.add_vertex(name(v));
        for (std::size_t v = 1; v < n; ++v) {
            std::uniform_int_distribution<std::size_t> parent(0, v - 1);
            g.add_edge(name(parent(rng)), name(v));
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (coin(rng)) g.add_edge(name(a), name(b));
        out.emplace_back(std::move(g), budget(rng));
    }
    return out;
}

}  // namespace fuzzygraph

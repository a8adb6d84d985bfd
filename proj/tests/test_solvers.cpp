#include <doctest.h>

#include "fuzzygraph/contraction.hpp"
#include "fuzzygraph/solvers.hpp"
#include "helpers.hpp"

using namespace fuzzygraph;
using namespace testing;

namespace {

SolveInstance make(FuzzyGraph g, const char* property, std::size_t k, Semantics s,
                   EdgeOperation op = EdgeOperation::deletion) {
    SolveInstance inst;
    inst.graph = std::move(g);
    inst.property = PropertySpec::parse(property);
    inst.budget = k;
    inst.semantics = s;
    inst.operation = op;
    return inst;
}

bool holds_everywhere(const FuzzyGraph& g, const PropertySpec& p, const Semantics& s) {
    if (auto* t = std::get_if<ThresholdSemantics>(&s)) return p.checker(alpha_cut(g, t->alpha));
    for (const auto& l : distinct_levels(g))
        if (!p.checker(alpha_cut(g, l))) return false;
    return true;
}

// Smallest workable edit size found by walking bitmasks from the top down.
std::optional<std::size_t> reverse_order_minimum(const SolveInstance& inst) {
    std::vector<EdgeKey> edges;
    for (const auto& [e, m] : inst.graph.edges()) edges.push_back(e);
    std::optional<std::size_t> best;
    for (std::size_t mask = (std::size_t{1} << edges.size()); mask-- > 0;) {
        std::vector<EdgeKey> chosen;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (mask >> i & 1) chosen.push_back(edges[i]);
        if (chosen.size() > inst.budget || (best && chosen.size() >= *best)) continue;
        FuzzyGraph edited = inst.graph;
        try {
            if (inst.operation == EdgeOperation::deletion) {
                for (const auto& e : chosen) edited.erase_edge(e);
            } else {
                edited = contract_set(inst.graph, chosen, inst.tnorm);
            }
        } catch (const InvalidArgument&) {
            continue;
        }
        if (holds_everywhere(edited, inst.property, inst.semantics)) best = chosen.size();
    }
    return best;
}

}  // namespace

TEST_CASE("K5 needs one deletion to become planar") {
    FuzzyGraph k5 = parse_fuzzy_graph(read_text_file(fixture("k5.fg")));
    auto yes = solve(make(k5, "planar", 1, parse_semantics("threshold:1")));
    CHECK(yes.yes);
    CHECK(yes.edges == std::vector<EdgeKey>{EdgeKey("1", "2")});
    CHECK(yes.membership_removed == Rational(1));
    CHECK_FALSE(solve(make(k5, "planar", 0, parse_semantics("threshold:1"))).yes);
    CHECK(solve(make(k5, "planar", 1, AllAlphaSemantics{}, EdgeOperation::contraction)).yes);
}

TEST_CASE("semantics parsing") {
    CHECK(to_string(parse_semantics("all")) == "all");
    CHECK(to_string(parse_semantics("threshold:0.50")) == "threshold:0.5");
    for (const char* bad : {"", "threshold:", "threshold:0", "threshold:1.2", "some"})
        CHECK_THROWS_AS(parse_semantics(bad), InvalidArgument);
    CHECK(parse_operation("contract") == EdgeOperation::contraction);
    CHECK_THROWS_AS(parse_operation("merge"), InvalidArgument);
}

TEST_CASE("solve agrees with a reverse-order enumeration, replays, and is monotone in k") {
    std::size_t yes_count = 0, no_count = 0;
    for (std::uint64_t seed = 0; seed < 160; ++seed) {
        FuzzyGraph g = random_fuzzy_graph(4 + seed % 4, 0.6, seed, RandomGraphOptions{10});
        if (g.edge_count() > 12) continue;
        const char* property = seed % 3 == 0 ? "bipartite" : seed % 3 == 1 ? "series-parallel" : "planar";
        const EdgeOperation op = seed % 2 == 0 || seed % 3 == 0 ? EdgeOperation::deletion : EdgeOperation::contraction;
        const Semantics sem = seed % 4 == 0 ? Semantics{AllAlphaSemantics{}} : parse_semantics("threshold:0.5");
        for (std::size_t k = 0; k <= 3; ++k) {
            auto inst = make(g, property, k, sem, op);
            CAPTURE(seed);
            CAPTURE(k);
            auto r = solve(inst);
            auto oracle = reverse_order_minimum(inst);
            CHECK(r.yes == oracle.has_value());
            if (!r.yes) {
                ++no_count;
                continue;
            }
            ++yes_count;
            CHECK(r.edges.size() == *oracle);
            CHECK(certificate_holds(inst, r.edges));
            inst.budget = k + 1;
            CHECK(certificate_holds(inst, r.edges));
            CHECK(solve(inst).yes);
        }
    }
    CHECK(yes_count > 0);
    CHECK(no_count > 0);
}

TEST_CASE("all-alpha equals threshold at every level of the edited graph") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        FuzzyGraph g = random_fuzzy_graph(5, 0.7, seed, RandomGraphOptions{10});
        auto all = solve(make(g, "bipartite", 2, AllAlphaSemantics{}));
        if (!all.yes) continue;
        FuzzyGraph edited = g;
        for (const auto& e : all.edges) edited.erase_edge(e);
        for (const auto& l : distinct_levels(edited))
            CHECK(certificate_holds(make(g, "bipartite", 2, ThresholdSemantics{l}), all.edges));
    }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        FuzzyGraph full = full_membership(support(random_fuzzy_graph(6, 0.6, seed)));
        CHECK(solve(make(full, "planar", 1, AllAlphaSemantics{})).yes ==
              solve(make(full, "planar", 1, parse_semantics("threshold:1"))).yes);
    }
}

TEST_CASE("minimum membership deletion matches full enumeration") {
    std::size_t feasible = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        FuzzyGraph g = random_fuzzy_graph(4 + seed % 3, 0.7, seed + 50, RandomGraphOptions{20});
        if (g.edge_count() > 12) continue;
        const auto alpha = level("0.3");
        const auto p = PropertySpec::parse(seed % 2 ? "bipartite" : "series-parallel");
        auto r = solve_min_membership(g, p, alpha);

        std::vector<std::pair<EdgeKey, Rational>> edges;
        for (const auto& [e, m] : g.edges()) edges.emplace_back(e, m.value());
        std::optional<Rational> best;
        for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
            FuzzyGraph edited = g;
            Rational total;
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (mask >> i & 1) {
                    edited.erase_edge(edges[i].first);
                    total += edges[i].second;
                }
            if (p.checker(alpha_cut(edited, alpha)) && (!best || total < *best)) best = total;
        }
        CAPTURE(seed);
        REQUIRE(best.has_value());  // deleting everything always works for these properties
        CHECK(r.feasible);
        CHECK(r.removed_total == *best);
        CHECK(certificate_holds(make(g, p.name.c_str(), r.edges.size(), ThresholdSemantics{alpha}), r.edges));
        feasible += r.edges.empty() ? 0 : 1;
    }
    CHECK(feasible > 0);
}

TEST_CASE("enumeration bounds") {
    FuzzyGraph big = full_membership(complete(8));  // 28 edges
    CHECK_THROWS_AS(solve(make(big, "planar", 7, AllAlphaSemantics{})), BoundExceeded);
    SolveLimits tight;
    tight.max_subsets = 10;
    CHECK_THROWS_AS(solve(make(full_membership(complete(5)), "planar", 2, AllAlphaSemantics{}), tight), BoundExceeded);
    FuzzyGraph broken = fig1();
    broken.set_vertex("4", mu("0.1"));
    CHECK_THROWS_AS(solve(make(broken, "planar", 1, AllAlphaSemantics{})), InvalidArgument);
}

TEST_CASE("certificates that cannot be replayed are rejected") {
    auto inst = make(fig1(), "planar", 2, AllAlphaSemantics{}, EdgeOperation::contraction);
    CHECK_FALSE(certificate_holds(inst, {EdgeKey("1", "3")}));
    CHECK_FALSE(certificate_holds(inst, {EdgeKey("1", "2"), EdgeKey("2", "5"), EdgeKey("3", "4")}));
}

TEST_CASE("connected vertex cover") {
    CHECK(min_connected_vertex_cover_size(crisp(4, {{1, 2}, {1, 3}, {1, 4}})) == 1);
    CHECK(min_connected_vertex_cover_size(crisp(4, {{1, 2}, {2, 3}, {3, 4}})) == 2);
    CHECK(min_connected_vertex_cover_size(cycle(5)) == 4);
    auto r = solve_connected_vertex_cover(cycle(4), 3);
    CHECK(r.yes);
    CHECK(r.cover.size() == 3);
    CHECK_FALSE(solve_connected_vertex_cover(cycle(4), 2).yes);
    CHECK_THROWS_AS(solve_connected_vertex_cover(crisp(4, {{1, 2}, {3, 4}}), 4), InvalidArgument);
    CHECK_THROWS_AS(solve_connected_vertex_cover(cycle(17), 3), BoundExceeded);
}

TEST_CASE("steiner trees have the fewest edges") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        CrispGraph g = support(random_fuzzy_graph(6, 0.5, seed + 300));
        if (g.edge_count() > 12) continue;
        std::set<Label> terminals{"1", "4", "6"};
        auto tree = steiner_tree(g, terminals);

        std::vector<EdgeKey> edges(g.edges().begin(), g.edges().end());
        std::optional<std::size_t> best;
        for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
            CrispGraph sub;
            for (const auto& t : terminals) sub.add_vertex(t);
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (mask >> i & 1) sub.add_edge(edges[i].u, edges[i].v);
            if (!is_connected(sub)) continue;
            std::size_t count = static_cast<std::size_t>(__builtin_popcountll(mask));
            if (!best || count < *best) best = count;
        }
        CAPTURE(seed);
        CHECK(tree.has_value() == best.has_value());
        if (!tree) continue;
        CHECK(tree->size() == *best);
        CrispGraph t;
        for (const auto& x : terminals) t.add_vertex(x);
        for (const auto& e : *tree) t.add_edge(e.u, e.v);
        CHECK(is_connected(t));
        CHECK(t.edge_count() + 1 == t.vertex_count());
    }
    CHECK_THROWS_AS(steiner_tree(cycle(4), {"9"}), InvalidArgument);
    CHECK_THROWS_AS(steiner_tree(cycle(4), {}), InvalidArgument);
}

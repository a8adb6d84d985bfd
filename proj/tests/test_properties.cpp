#include <doctest.h>

#include <map>
#include <random>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "fuzzygraph/contraction.hpp"
#include "fuzzygraph/minors.hpp"
#include "fuzzygraph/properties.hpp"
#include "fuzzygraph/small_graph.hpp"
#include "helpers.hpp"

using namespace fuzzygraph;
using namespace testing;

namespace {

CrispGraph random_crisp(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> e;
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b)
            if (coin(rng)) e.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return crisp(n, e);
}

std::map<Label, std::size_t> indices(const CrispGraph& g) {
    std::map<Label, std::size_t> idx;
    for (const auto& v : g.vertices()) idx.emplace(v, idx.size());
    return idx;
}

bool boost_planar(const CrispGraph& g) {
    using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    auto idx = indices(g);
    BG bg(g.vertex_count());
    for (const auto& e : g.edges()) boost::add_edge(idx[e.u], idx[e.v], bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

// Every assignment of vertices to four branch sets or "unused".
bool brute_force_k4_minor(const CrispGraph& g) {
    auto idx = indices(g);
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
    for (const auto& e : g.edges()) adj[idx[e.u]][idx[e.v]] = adj[idx[e.v]][idx[e.u]] = true;
    std::vector<int> cls(n, 0);
    auto connected_class = [&](int c) {
        std::vector<std::size_t> members;
        for (std::size_t v = 0; v < n; ++v)
            if (cls[v] == c) members.push_back(v);
        if (members.empty()) return false;
        std::vector<bool> seen(n);
        std::vector<std::size_t> stack{members[0]};
        seen[members[0]] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w)
                if (adj[v][w] && cls[w] == c && !seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == members.size();
    };
    while (true) {
        bool ok = true;
        for (int c = 1; c <= 4 && ok; ++c) ok = connected_class(c);
        for (int a = 1; a <= 4 && ok; ++a)
            for (int b = a + 1; b <= 4 && ok; ++b) {
                bool touch = false;
                for (std::size_t v = 0; v < n && !touch; ++v)
                    for (std::size_t w = 0; w < n && !touch; ++w) touch = cls[v] == a && cls[w] == b && adj[v][w];
                ok = touch;
            }
        if (ok) return true;
        std::size_t i = 0;
        while (i < n && cls[i] == 4) cls[i++] = 0;
        if (i == n) return false;
        ++cls[i];
    }
}

std::size_t brute_force_edge_connectivity(const CrispGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2) return 0;
    auto idx = indices(g);
    std::size_t best = g.edge_count();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        std::size_t crossing = 0;
        for (const auto& e : g.edges()) crossing += ((mask >> idx[e.u]) & 1) != ((mask >> idx[e.v]) & 1);
        best = std::min(best, crossing);
    }
    return best;
}

}  // namespace

TEST_CASE("small property facts") {
    CHECK(is_connected(cycle(5)));
    CHECK_FALSE(is_connected(crisp(4, {{1, 2}, {3, 4}})));
    CHECK(is_connected(CrispGraph{}));
    CHECK(is_bipartite(cycle(6)));
    CHECK_FALSE(is_bipartite(cycle(5)));
    CHECK_FALSE(is_planar(complete(5)));
    CHECK(is_planar(complete(4)));
    CHECK_FALSE(is_planar(crisp(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}})));
    CHECK(is_series_parallel(cycle(7)));
    CHECK_FALSE(is_series_parallel(complete(4)));
    CHECK(is_k_connected(complete(4), 3));
    CHECK_FALSE(is_k_connected(cycle(5), 3));
    CHECK(is_k_connected(cycle(5), 2));
    CHECK_FALSE(is_k_connected(complete(3), 3));
}

TEST_CASE("Petersen graph has a K5 minor") {
    CrispGraph p = crisp(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                              {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}});
    CHECK_FALSE(is_planar(p));
    CHECK(has_minor(SmallGraph::from_crisp(p), MinorPattern::k5));
    CHECK(has_minor(SmallGraph::from_crisp(p), MinorPattern::k33));
}

TEST_CASE("planarity agrees with Boyer-Myrvold") {
    for (std::uint64_t seed = 0; seed < 1500; ++seed) {
        const std::size_t n = 5 + seed % 6;
        CrispGraph g = random_crisp(n, 0.25 + 0.05 * static_cast<double>(seed % 8), seed);
        CAPTURE(seed);
        CHECK(is_planar(g) == boost_planar(g));
    }
}

TEST_CASE("series-parallel agrees with brute-force K4 minor search") {
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        const std::size_t n = 4 + seed % 4;
        CrispGraph g = random_crisp(n, 0.3 + 0.1 * static_cast<double>(seed % 5), seed + 7000);
        CAPTURE(seed);
        CHECK(is_series_parallel(g) == !brute_force_k4_minor(g));
    }
}

TEST_CASE("edge connectivity agrees with exhaustive cuts") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        CrispGraph g = random_crisp(2 + seed % 7, 0.5, seed + 900);
        CAPTURE(seed);
        CHECK(edge_connectivity(g) == brute_force_edge_connectivity(g));
    }
    CHECK(edge_connectivity(cycle(4)) == 2);
    CHECK(edge_connectivity(complete(5)) == 4);
    CHECK(edge_connectivity(crisp(1, {})) == 0);
}

TEST_CASE("fuzzy connectivity reads the cut") {
    FuzzyGraph g = fig1();
    CHECK(fuzzy_edge_connectivity(g, level("0.8")) == 0);
    CHECK(fuzzy_edge_connectivity(full_membership(cycle(4)), level("1")) == 2);
    CHECK(is_fuzzy_3connected(full_membership(complete(4)), level("1")));
    CHECK_FALSE(is_fuzzy_3connected(g, level("0.5")));
}

TEST_CASE("separation pairs") {
    auto pair = find_separation_pair(cycle(5));
    REQUIRE(pair);
    CHECK(*pair == SeparationPair{"1", "3"});
    CHECK_FALSE(find_separation_pair(complete(4)));
}

TEST_CASE("triconnected components") {
    auto diamond = triconnected_components(crisp(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(diamond.size() == 2);
    std::size_t virtual_count = 0;
    for (const auto& c : diamond) virtual_count += c.virtual_edges.size();
    CHECK(virtual_count == 1);  // (2,3) is real in one part and virtual in the other

    CHECK(triconnected_components(cycle(6)).size() == 1);
    CHECK(triconnected_components(complete(5)).size() == 1);
    CHECK_THROWS_AS(triconnected_components(crisp(4, {{1, 2}, {3, 4}})), InvalidArgument);

    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        CrispGraph g = random_crisp(3 + seed % 6, 0.55, seed + 31);
        if (!is_connected(g)) continue;
        std::multiset<EdgeKey> real;
        for (const auto& c : triconnected_components(g))
            for (const auto& e : c.graph.edges())
                if (!c.virtual_edges.contains(e)) real.insert(e);
        CHECK(std::set<EdgeKey>(real.begin(), real.end()) == g.edges());
        CHECK(real.size() == g.edge_count());
    }
}

TEST_CASE("3cc determination for planar and series-parallel") {
    auto planar = PropertySpec::parse("planar");
    auto sp = PropertySpec::parse("series-parallel");
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        CrispGraph g = random_crisp(3 + seed % 6, 0.5, seed + 77);
        if (!is_connected(g)) continue;
        CHECK(check_property(planar, g) == check_property_via_3cc(planar, g));
        CHECK(check_property(sp, g) == check_property_via_3cc(sp, g));
    }
    CHECK_THROWS_AS(check_property_via_3cc(PropertySpec::parse("bipartite"), cycle(4)), InvalidArgument);
}

TEST_CASE("property specs") {
    auto both = PropertySpec::parse("planar+bipartite");
    CHECK(both.hereditary_deletion);
    CHECK_FALSE(both.hereditary_contraction);
    CHECK(both.checker(cycle(4)));
    CHECK_FALSE(both.checker(cycle(3)));
    CHECK_THROWS_AS(PropertySpec::parse("outerplanar"), InvalidArgument);
    CHECK(PropertySpec::builtin_names().size() == 5);
}

TEST_CASE("connected graph census") {
    // known counts of connected graphs on n unlabeled vertices
    const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112};
    for (std::size_t n = 1; n <= expected.size(); ++n)
        CHECK(connected_graphs_up_to_isomorphism(n).size() == expected[n - 1]);
}

TEST_CASE("hereditary checks") {
    for (const char* name : {"connected", "planar", "series-parallel"}) {
        CAPTURE(name);
        auto r = verify_hereditary_contraction(PropertySpec::parse(name), 6);
        CHECK(r.passed);
        CHECK(r.exhaustive);
    }
    auto bip = verify_hereditary_contraction(PropertySpec::parse("bipartite"), 6);
    CHECK_FALSE(bip.passed);
    REQUIRE(bip.counterexample);
    const CrispGraph& c = *bip.counterexample;
    CHECK(c.vertex_count() == 4);
    CHECK(c.edge_count() == 4);
    for (const auto& v : c.vertices()) CHECK(c.neighbors(v).size() == 2);
    CHECK(crisp_contract(c, *bip.counterexample_edge).edge_count() == 3);

    CHECK(verify_hereditary(PropertySpec::parse("bipartite"), EdgeOperation::deletion, 6).passed);
    CHECK_FALSE(verify_hereditary(PropertySpec::parse("connected"), EdgeOperation::deletion, 5).passed);
    CHECK_THROWS_AS(verify_hereditary(PropertySpec::parse("planar"), EdgeOperation::contraction, 13), BoundExceeded);
}

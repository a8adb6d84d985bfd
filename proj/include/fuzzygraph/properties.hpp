#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzygraph/core.hpp"

namespace fuzzygraph {

/// A crisp graph property with the closure attributes it claims.
///
/// The flags are declarations; verify_hereditary() checks the first two by
/// exhaustive enumeration. Composite properties ("planar+bipartite") are the
/// conjunction of built-ins and inherit the conjunction of their flags.
struct PropertySpec {
    std::string name;
    bool hereditary_deletion = false;
    bool hereditary_contraction = false;
    bool determined_by_3cc = false;
    std::function<bool(const CrispGraph&)> checker;

    /// One of connected, bipartite, planar, series-parallel, 3-connected, or a
    /// '+'-joined conjunction of them.
    static PropertySpec parse(std::string_view name);
    static std::vector<std::string> builtin_names();
};

bool is_connected(const CrispGraph& g);
bool is_bipartite(const CrispGraph& g);

inline constexpr std::size_t default_desk_bound = 64;

/// No K5 and no K3,3 minor. Throws BoundExceeded above `max_vertices`.
bool is_planar(const CrispGraph& g, std::size_t max_vertices = default_desk_bound);
/// No K4 minor, by series/parallel/leaf reductions.
bool is_series_parallel(const CrispGraph& g, std::size_t max_vertices = default_desk_bound);
/// More than k vertices and no set of fewer than k vertices disconnects g.
bool is_k_connected(const CrispGraph& g, std::size_t k);

/// Minimum edge cut size; 0 for disconnected graphs and graphs with fewer than two vertices.
std::size_t edge_connectivity(const CrispGraph& g);
std::size_t fuzzy_edge_connectivity(const FuzzyGraph& g, const MembershipLevel& alpha);

bool is_fuzzy_3connected(const FuzzyGraph& g, const MembershipLevel& alpha);

using SeparationPair = std::pair<Label, Label>;

/// Lexicographically least pair {x,y}, x < y, whose removal disconnects g.
std::optional<SeparationPair> find_separation_pair(const CrispGraph& g);

struct TriconnectedComponent {
    CrispGraph graph;
    /// Edges of `graph` introduced by a split rather than taken from the input.
    std::set<EdgeKey> virtual_edges;
};

inline constexpr std::size_t triconnected_bound = 16;

/// Recursive split at cut vertices and then at the least separation pair,
/// adding a virtual edge between the pair in each part, until every part is
/// 3-connected, a cycle, or has at most three vertices. Every input edge ends
/// up as a non-virtual edge of exactly one component.
std::vector<TriconnectedComponent> triconnected_components(const CrispGraph& g);

bool check_property(const PropertySpec& p, const CrispGraph& g);
/// Conjunction of the checker over triconnected_components(g).
bool check_property_via_3cc(const PropertySpec& p, const CrispGraph& g);

enum class EdgeOperation { deletion, contraction };

struct HereditaryReport {
    bool passed = true;
    bool exhaustive = true;
    std::size_t graphs_checked = 0;
    std::size_t operations_checked = 0;
    std::optional<CrispGraph> counterexample;
    std::optional<EdgeKey> counterexample_edge;
};

/// Checks that `op` on any edge of a graph in p keeps it in p, over all
/// connected graphs on 1..n_max vertices up to isomorphism (n_max <= 7).
/// Sizes 8..12 fall back to seeded sampling and clear `exhaustive`.
HereditaryReport verify_hereditary(const PropertySpec& p, EdgeOperation op, std::size_t n_max);
inline HereditaryReport verify_hereditary_contraction(const PropertySpec& p, std::size_t n_max) {
    return verify_hereditary(p, EdgeOperation::contraction, n_max);
}

/// Connected graphs on vertices "1".."n" up to isomorphism, in canonical order. n <= 7.
std::vector<CrispGraph> connected_graphs_up_to_isomorphism(std::size_t n);

}  // namespace fuzzygraph

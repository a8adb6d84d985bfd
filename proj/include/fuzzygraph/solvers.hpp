#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "fuzzygraph/core.hpp"
#include "fuzzygraph/properties.hpp"

namespace fuzzygraph {

struct ThresholdSemantics {
    MembershipLevel alpha;
};
struct AllAlphaSemantics {};
using Semantics = std::variant<ThresholdSemantics, AllAlphaSemantics>;

/// "threshold:A" or "all"
Semantics parse_semantics(std::string_view text);
std::string to_string(const Semantics& s);
std::string_view to_string(EdgeOperation op);
EdgeOperation parse_operation(std::string_view text);

struct SolveInstance {
    FuzzyGraph graph;
    PropertySpec property;
    std::size_t budget = 0;
    Semantics semantics = AllAlphaSemantics{};
    EdgeOperation operation = EdgeOperation::deletion;
    TNorm tnorm{};
};

/// Enumeration is allowed when the graph has at most `max_edges` edges or the
/// budget is at most `max_budget`, and in any case at most `max_subsets`
/// candidate sets. Anything larger is refused with BoundExceeded.
struct SolveLimits {
    std::size_t max_edges = 24;
    std::size_t max_budget = 6;
    std::uint64_t max_subsets = std::uint64_t{1} << 25;
};

struct SolveResult {
    bool yes = false;
    /// Canonical pairs of the input graph; empty for no.
    std::vector<EdgeKey> edges;
    std::uint64_t subsets_examined = 0;
    /// Sum of mu_E over `edges` in deletion mode, 0 otherwise.
    Rational membership_removed;
};

/// Applies `edges` to `g` by deletion or by contract_set. Throws InvalidArgument
/// if a contraction ref cannot be resolved in the current graph.
FuzzyGraph apply_edit(const FuzzyGraph& g, const std::vector<EdgeKey>& edges, EdgeOperation op, TNorm t);

/// Whether the property holds on the cut(s) demanded by `semantics`. For
/// all-alpha semantics the cuts are taken at every distinct level of `g`.
bool satisfies_semantics(const FuzzyGraph& g, const PropertySpec& p, const Semantics& semantics);

/// Replays a candidate set; false if it cannot be applied or fails the semantics.
bool certificate_holds(const SolveInstance& instance, const std::vector<EdgeKey>& edges);

/// First edge set in size-then-lexicographic order (over canonical edge order)
/// that makes the instance hold, or no if none of size <= budget does.
SolveResult solve(const SolveInstance& instance, const SolveLimits& limits = {});

struct MinMembershipResult {
    bool feasible = false;
    std::vector<EdgeKey> edges;
    Rational removed_total;
    std::uint64_t subsets_examined = 0;
};

/// Deletion set minimizing the total membership removed subject to the
/// property holding on the alpha-cut; ties go to fewer edges, then to the
/// earlier set in canonical order.
MinMembershipResult solve_min_membership(const FuzzyGraph& g, const PropertySpec& p, const MembershipLevel& alpha,
                                         const SolveLimits& limits = {});

struct CoverResult {
    bool yes = false;
    std::set<Label> cover;
};

inline constexpr std::size_t cover_bound = 16;
inline constexpr std::size_t steiner_bound = 14;

/// Smallest-first search for a vertex cover of size <= k inducing a connected subgraph.
CoverResult solve_connected_vertex_cover(const CrispGraph& g, std::size_t k);

/// Size of the smallest connected vertex cover (brute force).
std::size_t min_connected_vertex_cover_size(const CrispGraph& g);

/// Minimum-edge tree spanning the terminals; nullopt if they are disconnected.
std::optional<std::set<EdgeKey>> steiner_tree(const CrispGraph& g, const std::set<Label>& terminals);

/// Calls `visit` with each k-subset of {0..n-1} in lexicographic order until it returns true.
/// Returns whether a visit returned true.
bool for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit);

/// sum_{s <= k} C(n, s), saturating.
std::uint64_t subsets_up_to(std::size_t n, std::size_t k);

}  // namespace fuzzygraph

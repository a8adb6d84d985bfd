#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "fuzzygraph/core.hpp"

namespace fuzzygraph {

using VertexMask = std::uint64_t;

/// Simple graph on vertices 0..n-1 (n <= 64) with bitmask adjacency.
///
/// The property checkers work on this form; vertex i is the i-th label of the
/// source CrispGraph in lexicographic order.
class SmallGraph {
public:
    static constexpr std::size_t max_vertices = 64;

    explicit SmallGraph(std::size_t n = 0);
    /// Throws BoundExceeded above 64 vertices.
    static SmallGraph from_crisp(const CrispGraph& g);

    [[nodiscard]] std::size_t size() const noexcept { return adj_.size(); }
    [[nodiscard]] VertexMask all() const noexcept {
        return adj_.size() == 64 ? ~VertexMask{0} : (VertexMask{1} << adj_.size()) - 1;
    }
    [[nodiscard]] VertexMask neighbors(std::size_t v) const noexcept { return adj_[v]; }
    [[nodiscard]] bool has_edge(std::size_t a, std::size_t b) const noexcept { return (adj_[a] >> b) & 1U; }
    [[nodiscard]] int degree(std::size_t v) const noexcept { return std::popcount(adj_[v]); }
    [[nodiscard]] std::size_t edge_count() const noexcept;

    void add_edge(std::size_t a, std::size_t b);
    void remove_edge(std::size_t a, std::size_t b);

    /// Vertices reachable from `start` inside `within`.
    [[nodiscard]] VertexMask reach(std::size_t start, VertexMask within) const noexcept;
    /// Whether `subset` induces a connected subgraph (the empty set counts as connected).
    [[nodiscard]] bool connected_within(VertexMask subset) const noexcept;
    [[nodiscard]] std::vector<VertexMask> components_within(VertexMask subset) const;
    /// Induced subgraph on `subset`, renumbered in increasing index order.
    [[nodiscard]] SmallGraph induced(VertexMask subset) const;

    friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

private:
    std::vector<VertexMask> adj_;
};

inline std::size_t lowest(VertexMask m) noexcept { return static_cast<std::size_t>(std::countr_zero(m)); }
inline VertexMask bit(std::size_t i) noexcept { return VertexMask{1} << i; }

}  // namespace fuzzygraph

#include "fuzzygraph/minors.hpp"

#include <array>

namespace fuzzygraph {

SmallGraph reduce_low_degree(const SmallGraph& input) {
    SmallGraph g = input;
    VertexMask alive = g.all();
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexMask a = alive; a; a &= a - 1) {
            std::size_t v = lowest(a);
            VertexMask nb = g.neighbors(v) & alive;
            int deg = std::popcount(nb);
            if (deg <= 1) {
                if (deg == 1) g.remove_edge(v, lowest(nb));
                alive &= ~bit(v);
                changed = true;
            } else if (deg == 2) {
                std::size_t x = lowest(nb);
                std::size_t y = lowest(nb & (nb - 1));
                g.remove_edge(v, x);
                g.remove_edge(v, y);
                g.add_edge(x, y);
                alive &= ~bit(v);
                changed = true;
            }
        }
    }
    return g.induced(alive);
}

namespace {

/// Enumerates surjective assignments of the vertices of a connected graph to
/// `blocks` branch sets (restricted growth strings, so each partition once).
class PartitionSearch {
public:
    PartitionSearch(const SmallGraph& g, std::size_t blocks, MinorPattern pattern)
        : g_(g), blocks_(blocks), pattern_(pattern) {}

    bool run() {
        if (g_.size() < blocks_) return false;
        sets_.fill(0);
        return assign(0, 0);
    }

private:
    bool assign(std::size_t v, std::size_t used) {
        const std::size_t n = g_.size();
        if (n - v < blocks_ - used) return false;
        if (v == n) return used == blocks_ && realizes();
        for (std::size_t b = 0; b < used; ++b) {
            sets_[b] |= bit(v);
            bool found = assign(v + 1, used);
            sets_[b] &= ~bit(v);
            if (found) return true;
        }
        if (used < blocks_) {
            sets_[used] |= bit(v);
            bool found = assign(v + 1, used + 1);
            sets_[used] &= ~bit(v);
            if (found) return true;
        }
        return false;
    }

    bool touches(std::size_t a, std::size_t b) const {
        for (VertexMask s = sets_[a]; s; s &= s - 1)
            if (g_.neighbors(lowest(s)) & sets_[b]) return true;
        return false;
    }

    bool realizes() const {
        for (std::size_t b = 0; b < blocks_; ++b)
            if (!g_.connected_within(sets_[b])) return false;
        std::array<std::array<bool, 6>, 6> adj{};
        for (std::size_t a = 0; a < blocks_; ++a)
            for (std::size_t b = a + 1; b < blocks_; ++b) adj[a][b] = adj[b][a] = touches(a, b);

        if (pattern_ != MinorPattern::k33) {
            for (std::size_t a = 0; a < blocks_; ++a)
                for (std::size_t b = a + 1; b < blocks_; ++b)
                    if (!adj[a][b]) return false;
            return true;
        }
        // Block 0 on the left; choose its two partners among blocks 1..5.
        for (std::size_t p = 1; p < 6; ++p) {
            for (std::size_t q = p + 1; q < 6; ++q) {
                std::array<std::size_t, 3> left{0, p, q};
                std::array<std::size_t, 3> right{};
                std::size_t r = 0;
                for (std::size_t x = 1; x < 6; ++x)
                    if (x != p && x != q) right[r++] = x;
                bool all = true;
                for (std::size_t l : left)
                    for (std::size_t rr : right) all = all && adj[l][rr];
                if (all) return true;
            }
        }
        return false;
    }

    const SmallGraph& g_;
    std::size_t blocks_;
    MinorPattern pattern_;
    std::array<VertexMask, 6> sets_{};
};

std::size_t pattern_order(MinorPattern p) {
    switch (p) {
        case MinorPattern::k4: return 4;
        case MinorPattern::k5: return 5;
        case MinorPattern::k33: return 6;
    }
    return 0;
}

std::size_t pattern_edges(MinorPattern p) {
    switch (p) {
        case MinorPattern::k4: return 6;
        case MinorPattern::k5: return 10;
        case MinorPattern::k33: return 9;
    }
    return 0;
}

}  // namespace

bool has_minor(const SmallGraph& g, MinorPattern pattern) {
    SmallGraph reduced = reduce_low_degree(g);
    for (VertexMask component : reduced.components_within(reduced.all())) {
        SmallGraph part = reduced.induced(component);
        if (part.size() < pattern_order(pattern) || part.edge_count() < pattern_edges(pattern)) continue;
        if (PartitionSearch(part, pattern_order(pattern), pattern).run()) return true;
    }
    return false;
}

}  // namespace fuzzygraph

#pragma once

#include <string>
#include <vector>

#include "fuzzygraph/core.hpp"
#include "fuzzygraph/io.hpp"

namespace testing {

using namespace fuzzygraph;

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline FuzzyGraph fig1() { return parse_fuzzy_graph(read_text_file(fixture("fig1.fg"))); }

inline Membership mu(const char* text) { return Membership::parse(text); }
inline MembershipLevel level(const char* text) { return MembershipLevel::parse(text); }

inline CrispGraph crisp(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    CrispGraph g;
    for (std::size_t v = 1; v <= n; ++v) g.add_vertex(std::to_string(v));
    for (auto [a, b] : edges) g.add_edge(std::to_string(a), std::to_string(b));
    return g;
}

inline CrispGraph cycle(std::size_t n) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 1; i <= n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>(i % n + 1));
    return crisp(n, e);
}

inline CrispGraph complete(std::size_t n) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b) e.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return crisp(n, e);
}

}  // namespace testing

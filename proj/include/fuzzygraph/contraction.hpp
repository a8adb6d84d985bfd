#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fuzzygraph/core.hpp"

namespace fuzzygraph {

/// Label of the vertex produced by merging `a` and `b`.
///
/// Labels are '+'-joined sorted lists of original labels, flattened, so
/// merged_label(merged_label("a","b"),"c") == merged_label("a",merged_label("b","c")) == "a+b+c".
Label merged_label(const Label& a, const Label& b);

/// Original labels making up a (possibly merged) label.
std::vector<Label> constituents(const Label& label);

struct ContractionRecord {
    EdgeKey contracted;
    Label merged;
    Membership merged_vertex_membership;
    /// neighbor -> mu'_E(w, neighbor); includes zero values that were not stored
    std::map<Label, Membership> updated_incidences;
};

struct Contraction {
    FuzzyGraph graph;
    ContractionRecord record;
};

/// Merges the endpoints of `e`; incidences to a third vertex x become
/// T(mu_E(u,x), mu_E(v,x)), and the merged vertex keeps min(mu_V(u), mu_V(v)).
Contraction contract_edge(const FuzzyGraph& g, const EdgeKey& e, TNorm t);

FuzzyGraph delete_edge(const FuzzyGraph& g, const EdgeKey& e);

/// Left-to-right fold of contract_edge. Refs name vertices of `g`; endpoints that
/// were merged by an earlier step resolve to their merged vertex.
FuzzyGraph contract_set(const FuzzyGraph& g, const std::vector<EdgeKey>& edges, TNorm t);

/// Classical simple-graph contraction: the merged vertex is adjacent to the
/// union of both neighborhoods. Uses the same merged labels as contract_edge.
CrispGraph crisp_contract(const CrispGraph& g, const EdgeKey& e);

/// crisp_contract folded over `edges` with the same ref resolution as contract_set.
CrispGraph crisp_contract_set(const CrispGraph& g, const std::vector<EdgeKey>& edges);

inline bool graphs_equal(const CrispGraph& a, const CrispGraph& b) { return a == b; }
inline bool graphs_equal(const FuzzyGraph& a, const FuzzyGraph& b) { return a == b; }

/// Maps labels of an input graph to the vertex currently holding them.
class LabelTracker {
public:
    explicit LabelTracker(const std::vector<Label>& labels);

    /// Throws InvalidArgument for labels that never existed.
    [[nodiscard]] const Label& resolve(const Label& original) const;
    /// Resolves both endpoints; throws if they now coincide.
    [[nodiscard]] EdgeKey resolve(const EdgeKey& e) const;
    void merge(const Label& a, const Label& b, const Label& merged);

private:
    std::map<Label, Label> current_;
};

}  // namespace fuzzygraph

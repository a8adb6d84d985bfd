#pragma once

#include "fuzzygraph/small_graph.hpp"

namespace fuzzygraph {

enum class MinorPattern { k4, k5, k33 };

/// Exhaustive minor test for the three Kuratowski-family patterns.
///
/// Vertices of degree <= 1 are deleted and degree-2 vertices suppressed
/// first; all three patterns have minimum degree 3, so neither step changes
/// the answer. Each connected component of what remains is then searched for
/// a partition into connected branch sets realizing the pattern. A connected
/// graph with an H-minor has a model covering every vertex (attach leftovers
/// to an adjacent branch set), so only surjective partitions are tried.
///
/// Exponential in the reduced component size; intended for desk-scale graphs.
bool has_minor(const SmallGraph& g, MinorPattern pattern);

/// Deletes degree <= 1 vertices and suppresses degree-2 vertices until
/// neither applies. Returned graph is simple with minimum degree >= 3 (or empty).
SmallGraph reduce_low_degree(const SmallGraph& g);

}  // namespace fuzzygraph

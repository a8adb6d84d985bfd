#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzygraph/solvers.hpp"

namespace fuzzygraph {

/// A classical edge-modification instance and its fuzzy image.
struct ReductionArtifact {
    CrispGraph source;
    std::size_t source_budget = 0;
    SolveInstance target;
    /// Source edge (u,v) is target edge (u,v).
    std::string edge_mapping = "identity";
};

/// Membership-1 embedding: every vertex and edge of `g` at membership 1,
/// threshold semantics at `alpha`, minimum t-norm.
ReductionArtifact embed_crisp(const CrispGraph& g, std::size_t k, const PropertySpec& p, EdgeOperation op,
                              const MembershipLevel& alpha);

/// Brute-force classical verdict: can at most k deletions / contractions of
/// edges of g put it in p? Contraction here is the classical quotient (a set
/// of contracted edges identifies the vertices of each component it spans).
/// Shares no code with the fuzzy solver.
bool classical_verdict(const CrispGraph& g, std::size_t k, const PropertySpec& p, EdgeOperation op,
                       const SolveLimits& limits = {});

using CrispInstance = std::pair<CrispGraph, std::size_t>;

struct EquivalenceRecord {
    CrispGraph graph;
    std::size_t budget = 0;
    bool skipped = false;
    std::string skip_reason;
    bool classical = false;
    bool fuzzy = false;
    [[nodiscard]] bool agree() const noexcept { return !skipped && classical == fuzzy; }
};

struct EquivalenceReport {
    std::string property;
    EdgeOperation operation = EdgeOperation::deletion;
    std::string alpha;
    std::vector<EquivalenceRecord> records;
    std::size_t agreements = 0;
    std::size_t disagreements = 0;
    std::size_t skipped = 0;
    std::size_t yes_count = 0;  // classical yes among non-skipped
    std::optional<std::size_t> first_disagreement;

    /// Every instance decided and every verdict pair equal.
    [[nodiscard]] bool complete_agreement() const noexcept { return disagreements == 0 && skipped == 0; }
};

EquivalenceReport verify_equivalence(const std::vector<CrispInstance>& corpus, const PropertySpec& p, EdgeOperation op,
                                     const MembershipLevel& alpha, std::size_t jobs = 1,
                                     const SolveLimits& limits = {});

/// Seeded connected planar graphs (random stacked triangulation, then edges
/// removed while the graph stays connected) on 4..n_max vertices, each with
/// k equal to or one below its minimum connected vertex cover size.
std::vector<CrispInstance> generate_planar_instances(std::size_t count, std::size_t n_max, std::uint64_t seed);

/// Seeded connected graphs on 4..n_max vertices (random spanning tree plus
/// random extra edges) with budgets in 0..2.
std::vector<CrispInstance> generate_equivalence_corpus(std::size_t count, std::size_t n_max, std::uint64_t seed);

}  // namespace fuzzygraph

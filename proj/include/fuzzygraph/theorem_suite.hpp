#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fuzzygraph/core.hpp"

namespace fuzzygraph {

/// Seeded corpus of random fuzzy graphs plus the suite's knobs.
struct SuiteOptions {
    std::size_t n_min = 3;
    std::size_t n_max = 8;
    std::vector<double> densities{0.3, 0.5, 0.8};
    std::size_t seeds_per_cell = 40;
    std::uint64_t base_seed = 1;
    /// Memberships are multiples of 1/quantum; 20 gives steps of 0.05.
    std::int64_t quantum = 20;
    /// Forces every membership to 1.
    bool full_membership_only = false;
    std::vector<TNorm> tnorms = TNorm::all();
    /// Exhaustive size for the minor-closure checks.
    std::size_t closure_n_max = 6;
    std::size_t jobs = 1;
};

struct CorpusGraph {
    FuzzyGraph graph;
    std::size_t n = 0;
    double density = 0;
    std::uint64_t seed = 0;
};

std::vector<CorpusGraph> theorem_corpus(const SuiteOptions& options);

struct Counterexample {
    std::string graph;  // fuzzy graph document
    std::map<std::string, std::string> parameters;
};

struct TheoremRecord {
    std::string id;
    std::string claim;
    /// Measured records are reported but never fail the suite.
    bool asserted = true;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::optional<Counterexample> first_failure;
};

struct SuiteReport {
    std::vector<TheoremRecord> records;
    std::size_t corpus_size = 0;

    [[nodiscard]] bool asserted_pass() const;
    [[nodiscard]] const TheoremRecord* find(const std::string& id) const;
};

/// Runs every invariant family over the corpus. Deterministic for fixed options
/// regardless of `jobs`.
SuiteReport run_theorem_suite(const SuiteOptions& options);

/// Machine-readable report (schema_version 1). No timings, so identical
/// options give byte-identical text.
std::string serialize_suite_report(const SuiteReport& report, const SuiteOptions& options);

/// Triangle u,v,x with all edges at 0.9: product contraction of (u,v) gives
/// (w,x) = 0.81, which drops out of the 0.85-cut while the crisp contraction keeps it.
FuzzyGraph product_commutation_counterexample();

}  // namespace fuzzygraph

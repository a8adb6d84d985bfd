#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzygraph/reductions.hpp"
#include "fuzzygraph/solvers.hpp"

namespace fuzzygraph::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, bound = 3 };

/// Runs one command line (without the program name). Human-readable output
/// goes to `out`, diagnostics to `err`; machine-readable documents are only
/// written to files named by --out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Instance document: {"schema_version": 1, "kind": "instance", "graph": {...},
/// "property", "operation", "budget", "semantics", "tnorm"}.
std::string serialize_instance(const SolveInstance& instance);
SolveInstance parse_instance(std::string_view text);

std::string serialize_solve_result(const SolveInstance& instance, const SolveResult& result);
std::string serialize_equivalence_report(const EquivalenceReport& report);

}  // namespace fuzzygraph::cli

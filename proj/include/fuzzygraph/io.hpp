#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fuzzygraph/core.hpp"

namespace fuzzygraph {

/// Malformed document: bad syntax, missing fields, duplicates, self-loops,
/// or memberships outside their range.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fuzzy graph document:
///
///   {"vertices": [{"id": "1", "mu": "1.0"}, ...],
///    "edges":    [{"u": "1", "v": "2", "mu": "0.9"}, ...]}
///
/// Memberships are decimal strings. '+' in a vertex id marks a merged
/// vertex and is only accepted in canonical form ("a+b", sorted, no empty parts). The parser does not check
/// mu_E <= min(mu_V); run validate() for that.
FuzzyGraph parse_fuzzy_graph(std::string_view text);
/// Canonical form: vertices by label, edges by (u,v) with u < v, two-space indent, trailing newline.
std::string serialize_fuzzy_graph(const FuzzyGraph& g);

/// Crisp graph document: {"vertices": [{"id": "1"}, ...], "edges": [{"u": "1", "v": "2"}, ...]}
CrispGraph parse_crisp_graph(std::string_view text);
std::string serialize_crisp_graph(const CrispGraph& g);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace fuzzygraph

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzygraph/rational.hpp"

namespace fuzzygraph {

// ---------------------------------------------------------------------------
// Errors

/// Raised when an operation receives a graph or argument that breaks its contract.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive procedure would exceed its desk-scale bound.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Memberships

/// A membership degree in [0,1], held exactly.
class Membership {
public:
    constexpr Membership() = default;
    explicit Membership(Rational value);
    Membership(std::int64_t numerator, std::int64_t denominator) : Membership(Rational(numerator, denominator)) {}

    /// Throws InvalidArgument for malformed or out-of-range text.
    static Membership parse(std::string_view decimal);
    static Membership zero() { return Membership(); }
    static Membership one() { return Membership(Rational(1)); }

    [[nodiscard]] const Rational& value() const noexcept { return value_; }
    [[nodiscard]] bool is_zero() const noexcept { return value_.numerator() == 0; }
    [[nodiscard]] std::string to_string() const { return value_.to_string(); }

    friend bool operator==(const Membership&, const Membership&) = default;
    friend auto operator<=>(const Membership& a, const Membership& b) { return a.value_ <=> b.value_; }

private:
    Rational value_;
};

/// A threshold level alpha in (0,1].
class MembershipLevel {
public:
    explicit MembershipLevel(Membership value);
    static MembershipLevel parse(std::string_view decimal) { return MembershipLevel(Membership::parse(decimal)); }

    [[nodiscard]] const Membership& value() const noexcept { return value_; }
    [[nodiscard]] std::string to_string() const { return value_.to_string(); }

    friend bool operator==(const MembershipLevel&, const MembershipLevel&) = default;
    friend auto operator<=>(const MembershipLevel& a, const MembershipLevel& b) { return a.value_ <=> b.value_; }

private:
    Membership value_;
};

/// True when `mu` survives thresholding at `alpha`.
inline bool reaches(const Membership& mu, const MembershipLevel& alpha) { return mu >= alpha.value(); }

// ---------------------------------------------------------------------------
// T-norms

enum class TNormKind { minimum, product, lukasiewicz };

class TNorm {
public:
    constexpr explicit TNorm(TNormKind kind = TNormKind::minimum) : kind_(kind) {}

    [[nodiscard]] constexpr TNormKind kind() const noexcept { return kind_; }
    [[nodiscard]] Membership operator()(const Membership& a, const Membership& b) const;

    /// "min", "product", "lukasiewicz"
    [[nodiscard]] std::string_view name() const noexcept;
    static TNorm parse(std::string_view name);
    static std::vector<TNorm> all() {
        return {TNorm(TNormKind::minimum), TNorm(TNormKind::product), TNorm(TNormKind::lukasiewicz)};
    }

    friend constexpr bool operator==(TNorm, TNorm) = default;

private:
    TNormKind kind_;
};

/// T(a,b) for a,b given as exact values; rejects arguments outside [0,1].
Membership tnorm_apply(TNorm t, const Rational& a, const Rational& b);

// ---------------------------------------------------------------------------
// Graphs

using Label = std::string;

/// Unordered vertex pair, stored with u < v.
struct EdgeKey {
    Label u;
    Label v;

    EdgeKey() = default;
    /// Canonicalizes the order; rejects self-loops.
    EdgeKey(Label a, Label b);

    friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;

    [[nodiscard]] bool touches(const Label& x) const { return u == x || v == x; }
    [[nodiscard]] const Label& other(const Label& x) const { return u == x ? v : u; }
    [[nodiscard]] std::string to_string() const { return "(" + u + "," + v + ")"; }
};

class CrispGraph {
public:
    CrispGraph() = default;

    void add_vertex(const Label& v) { vertices_.insert(v); }
    /// Adds both endpoints if missing.
    void add_edge(const Label& a, const Label& b);
    void remove_edge(const EdgeKey& e) { edges_.erase(e); }

    [[nodiscard]] const std::set<Label>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const std::set<EdgeKey>& edges() const noexcept { return edges_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] bool has_vertex(const Label& v) const { return vertices_.contains(v); }
    [[nodiscard]] bool has_edge(const Label& a, const Label& b) const;
    [[nodiscard]] bool has_edge(const EdgeKey& e) const { return edges_.contains(e); }
    [[nodiscard]] std::set<Label> neighbors(const Label& v) const;

    friend bool operator==(const CrispGraph&, const CrispGraph&) = default;

private:
    std::set<Label> vertices_;
    std::set<EdgeKey> edges_;
};

/// Vertex and edge membership functions over labeled vertices.
///
/// Mutators do not enforce the fuzzy-graph invariants, so that parsers and
/// tests can build broken graphs and ask validate() what is wrong with them.
/// Operations that need a valid graph check and throw InvalidArgument.
class FuzzyGraph {
public:
    FuzzyGraph() = default;

    void set_vertex(const Label& v, Membership mu) { vertices_[v] = mu; }
    /// Stores the pair as given; use erase_edge to make it absent.
    void set_edge(const Label& a, const Label& b, Membership mu) { edges_[EdgeKey(a, b)] = mu; }
    void erase_edge(const EdgeKey& e) { edges_.erase(e); }
    void erase_vertex(const Label& v);

    [[nodiscard]] const std::map<Label, Membership>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const std::map<EdgeKey, Membership>& edges() const noexcept { return edges_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] bool has_vertex(const Label& v) const { return vertices_.contains(v); }
    [[nodiscard]] bool has_edge(const EdgeKey& e) const { return edges_.contains(e); }

    /// Throws InvalidArgument for an unknown vertex.
    [[nodiscard]] Membership vertex_membership(const Label& v) const;
    /// Zero for absent pairs (including pairs with unknown endpoints).
    [[nodiscard]] Membership edge_membership(const Label& a, const Label& b) const;

    friend bool operator==(const FuzzyGraph&, const FuzzyGraph&) = default;

private:
    std::map<Label, Membership> vertices_;
    std::map<EdgeKey, Membership> edges_;
};

struct Violation {
    std::string element;  // vertex label or "(u,v)"
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
    [[nodiscard]] std::string summary() const;
};

ValidationReport validate(const FuzzyGraph& g);
/// Throws InvalidArgument carrying the first violation.
void require_valid(const FuzzyGraph& g);

/// Vertices with mu_V >= alpha and edges with mu_E >= alpha between them.
CrispGraph alpha_cut(const FuzzyGraph& g, const MembershipLevel& alpha);

/// Distinct positive membership values of vertices and edges, ascending.
std::vector<MembershipLevel> distinct_levels(const FuzzyGraph& g);

/// {x : mu_E(v,x) >= alpha}
std::set<Label> alpha_neighborhood(const FuzzyGraph& g, const Label& v, const MembershipLevel& alpha);

/// Membership values are drawn as multiples of 1/`quantum`.
struct RandomGraphOptions {
    std::int64_t quantum = 1000;
};

/// Seeded random fuzzy graph on vertices "1".."n". Always valid.
FuzzyGraph random_fuzzy_graph(std::size_t n, double p, std::uint64_t seed, RandomGraphOptions options = {});

/// Every vertex and edge at membership 1.
FuzzyGraph full_membership(const CrispGraph& g);

/// The crisp graph underlying all stored vertices and edges.
CrispGraph support(const FuzzyGraph& g);

}  // namespace fuzzygraph

#include "fuzzygraph/core.hpp"

#include <algorithm>
#include <random>

namespace fuzzygraph {

Membership::Membership(Rational value) : value_(value) {
    if (value_ < Rational(0) || value_ > Rational(1))
        throw InvalidArgument("membership " + value_.to_string() + " outside [0,1]");
}

Membership Membership::parse(std::string_view decimal) {
    try {
        return Membership(Rational::parse_decimal(decimal));
    } catch (const InvalidArgument&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InvalidArgument(e.what());
    }
}

MembershipLevel::MembershipLevel(Membership value) : value_(value) {
    if (value_.is_zero()) throw InvalidArgument("membership level must be > 0");
}

// ---------------------------------------------------------------------------

Membership TNorm::operator()(const Membership& a, const Membership& b) const {
    switch (kind_) {
        case TNormKind::minimum:
            return std::min(a, b);
        case TNormKind::product:
            return Membership(a.value() * b.value());
        case TNormKind::lukasiewicz: {
            Rational s = a.value() + b.value() - Rational(1);
            return s < Rational(0) ? Membership::zero() : Membership(s);
        }
    }
    throw InvalidArgument("unknown t-norm");
}

std::string_view TNorm::name() const noexcept {
    switch (kind_) {
        case TNormKind::minimum: return "min";
        case TNormKind::product: return "product";
        case TNormKind::lukasiewicz: return "lukasiewicz";
    }
    return "?";
}

TNorm TNorm::parse(std::string_view name) {
    if (name == "min" || name == "minimum") return TNorm(TNormKind::minimum);
    if (name == "product" || name == "prod") return TNorm(TNormKind::product);
    if (name == "lukasiewicz" || name == "luk") return TNorm(TNormKind::lukasiewicz);
    throw InvalidArgument("unknown t-norm '" + std::string(name) + "'");
}

Membership tnorm_apply(TNorm t, const Rational& a, const Rational& b) {
    return t(Membership(a), Membership(b));
}

// ---------------------------------------------------------------------------

EdgeKey::EdgeKey(Label a, Label b) {
    if (a == b) throw InvalidArgument("self-loop at '" + a + "'");
    if (b < a) std::swap(a, b);
    u = std::move(a);
    v = std::move(b);
}

void CrispGraph::add_edge(const Label& a, const Label& b) {
    EdgeKey e(a, b);
    vertices_.insert(e.u);
    vertices_.insert(e.v);
    edges_.insert(std::move(e));
}

bool CrispGraph::has_edge(const Label& a, const Label& b) const {
    if (a == b) return false;
    return edges_.contains(EdgeKey(a, b));
}

std::set<Label> CrispGraph::neighbors(const Label& v) const {
    std::set<Label> out;
    for (const auto& e : edges_)
        if (e.touches(v)) out.insert(e.other(v));
    return out;
}

void FuzzyGraph::erase_vertex(const Label& v) {
    vertices_.erase(v);
    std::erase_if(edges_, [&](const auto& kv) { return kv.first.touches(v); });
}

Membership FuzzyGraph::vertex_membership(const Label& v) const {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) throw InvalidArgument("unknown vertex '" + v + "'");
    return it->second;
}

Membership FuzzyGraph::edge_membership(const Label& a, const Label& b) const {
    if (a == b) return Membership::zero();
    auto it = edges_.find(EdgeKey(a, b));
    return it == edges_.end() ? Membership::zero() : it->second;
}

// ---------------------------------------------------------------------------

std::string ValidationReport::summary() const {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v.element + ": " + v.message;
    }
    return out;
}

ValidationReport validate(const FuzzyGraph& g) {
    ValidationReport report;
    for (const auto& [e, mu] : g.edges()) {
        const std::string name = e.to_string();
        auto u = g.vertices().find(e.u);
        auto v = g.vertices().find(e.v);
        if (u == g.vertices().end()) report.violations.push_back({name, "endpoint '" + e.u + "' is not a vertex"});
        if (v == g.vertices().end()) report.violations.push_back({name, "endpoint '" + e.v + "' is not a vertex"});
        if (mu.is_zero()) report.violations.push_back({name, "stored edge has membership 0"});
        if (u != g.vertices().end() && v != g.vertices().end()) {
            Membership bound = std::min(u->second, v->second);
            if (mu > bound)
                report.violations.push_back(
                    {name, "membership " + mu.to_string() + " exceeds endpoint minimum " + bound.to_string()});
        }
    }
    return report;
}

void require_valid(const FuzzyGraph& g) {
    ValidationReport report = validate(g);
    if (!report.ok()) throw InvalidArgument("invalid fuzzy graph: " + report.summary());
}

CrispGraph alpha_cut(const FuzzyGraph& g, const MembershipLevel& alpha) {
    require_valid(g);
    CrispGraph cut;
    for (const auto& [v, mu] : g.vertices())
        if (reaches(mu, alpha)) cut.add_vertex(v);
    for (const auto& [e, mu] : g.edges())
        if (reaches(mu, alpha) && cut.has_vertex(e.u) && cut.has_vertex(e.v)) cut.add_edge(e.u, e.v);
    return cut;
}

std::vector<MembershipLevel> distinct_levels(const FuzzyGraph& g) {
    require_valid(g);
    std::set<Membership> values;
    for (const auto& [v, mu] : g.vertices())
        if (!mu.is_zero()) values.insert(mu);
    for (const auto& [e, mu] : g.edges()) values.insert(mu);
    std::vector<MembershipLevel> levels;
    levels.reserve(values.size());
    for (const auto& mu : values) levels.emplace_back(mu);
    return levels;
}

std::set<Label> alpha_neighborhood(const FuzzyGraph& g, const Label& v, const MembershipLevel& alpha) {
    if (!g.has_vertex(v)) throw InvalidArgument("unknown vertex '" + v + "'");
    std::set<Label> out;
    for (const auto& [e, mu] : g.edges())
        if (e.touches(v) && reaches(mu, alpha)) out.insert(e.other(v));
    return out;
}

FuzzyGraph random_fuzzy_graph(std::size_t n, double p, std::uint64_t seed, RandomGraphOptions options) {
    if (p < 0.0 || p > 1.0) throw InvalidArgument("edge probability outside [0,1]");
    if (options.quantum < 1) throw InvalidArgument("membership quantum must be positive");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> step(1, options.quantum);
    std::bernoulli_distribution coin(p);

    FuzzyGraph g;
    std::vector<Label> labels;
    for (std::size_t i = 1; i <= n; ++i) {
        labels.push_back(std::to_string(i));
        g.set_vertex(labels.back(), Membership(step(rng), options.quantum));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!coin(rng)) continue;
            Membership drawn(step(rng), options.quantum);
            Membership cap = std::min(g.vertex_membership(labels[i]), g.vertex_membership(labels[j]));
            g.set_edge(labels[i], labels[j], std::min(drawn, cap));
        }
    }
    return g;
}

FuzzyGraph full_membership(const CrispGraph& g) {
    FuzzyGraph out;
    for (const auto& v : g.vertices()) out.set_vertex(v, Membership::one());
    for (const auto& e : g.edges()) out.set_edge(e.u, e.v, Membership::one());
    return out;
}

CrispGraph support(const FuzzyGraph& g) {
    CrispGraph out;
    for (const auto& [v, mu] : g.vertices()) out.add_vertex(v);
    for (const auto& [e, mu] : g.edges()) out.add_edge(e.u, e.v);
    return out;
}

}  // namespace fuzzygraph

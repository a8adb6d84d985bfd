#include "fuzzygraph/theorem_suite.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "fuzzygraph/contraction.hpp"
#include "fuzzygraph/io.hpp"
#include "fuzzygraph/parallel.hpp"
#include "fuzzygraph/properties.hpp"
#include "fuzzygraph/small_graph.hpp"
#include "fuzzygraph/solvers.hpp"

namespace fuzzygraph {

namespace {

constexpr std::size_t corpus_vertex_bound = 8;
constexpr std::size_t closure_bound = 7;

std::string format_double(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::uint64_t cell_seed(std::uint64_t base, std::size_t n, std::size_t density_index, std::size_t s) {
    std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(density_index),
                      static_cast<std::uint32_t>(s)};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

// Renames every vertex of g through f (which must be injective on g's vertices).
CrispGraph relabel(const CrispGraph& g, const std::function<Label(const Label&)>& f) {
    CrispGraph out;
    for (const auto& v : g.vertices()) out.add_vertex(f(v));
    for (const auto& e : g.edges()) out.add_edge(f(e.u), f(e.v));
    return out;
}

bool isomorphic(const CrispGraph& a, const CrispGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    SmallGraph ga = SmallGraph::from_crisp(a), gb = SmallGraph::from_crisp(b);
    const std::size_t n = ga.size();
    std::vector<std::size_t> da(n), db(n);
    for (std::size_t i = 0; i < n; ++i) {
        da[i] = ga.degree(i);
        db[i] = gb.degree(i);
    }
    std::vector<std::size_t> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (da[i] != db[perm[i]]) ok = false;
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if (ga.has_edge(i, j) != gb.has_edge(perm[i], perm[j])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

CrispGraph induced(const CrispGraph& g, const std::set<Label>& keep) {
    CrispGraph out;
    for (const auto& v : keep) out.add_vertex(v);
    for (const auto& e : g.edges())
        if (keep.contains(e.u) && keep.contains(e.v)) out.add_edge(e.u, e.v);
    return out;
}

std::set<Label> component_of(const CrispGraph& g, const Label& start) {
    std::set<Label> seen{start};
    std::vector<Label> stack{start};
    while (!stack.empty()) {
        Label v = stack.back();
        stack.pop_back();
        for (const auto& x : g.neighbors(v))
            if (seen.insert(x).second) stack.push_back(x);
    }
    return seen;
}

bool subset_edges(const CrispGraph& a, const CrispGraph& b) {
    return std::includes(b.edges().begin(), b.edges().end(), a.edges().begin(), a.edges().end());
}

// ---------------------------------------------------------------------------
// Record layout

struct Family {
    std::string id;
    std::string claim;
    bool asserted;
};

constexpr std::size_t none = static_cast<std::size_t>(-1);

struct Layout {
    std::vector<Family> families;
    std::array<std::size_t, 3> axioms{none, none, none};
    std::array<std::size_t, 3> commutation{none, none, none};
    std::array<std::size_t, 3> inclusion{none, none, none};
    std::array<std::size_t, 3> monotonicity{none, none, none};
    std::array<std::size_t, 3> order{none, none, none};
    std::array<std::size_t, 3> restricted{none, none, none};
    std::array<std::size_t, 3> unrestricted{none, none, none};
    std::size_t intersection = none;
    std::size_t neighborhood = none, triple = none, lifting = none, connectivity = none;
    std::size_t planar_3cc = none, sp_3cc = none, decomposition = none;
    std::array<std::size_t, 4> closure{none, none, none, none};

    std::size_t add(std::string id, std::string claim, bool asserted) {
        families.push_back({std::move(id), std::move(claim), asserted});
        return families.size() - 1;
    }
};

std::size_t slot(TNorm t) { return static_cast<std::size_t>(t.kind()); }

Layout make_layout(const SuiteOptions& options) {
    Layout L;
    bool with_min = false;
    for (const auto& t : options.tnorms) {
        const std::string tag = "[" + std::string(t.name()) + "]";
        const std::size_t i = slot(t);
        const bool is_min = t.kind() == TNormKind::minimum;
        with_min = with_min || is_min;
        L.axioms[i] = L.add("tnorm-axioms" + tag,
                            "commutative, associative, monotone, identity 1, bounded by min on the 0.1 grid", true);
        L.commutation[i] = L.add("contraction-commutes-with-cut" + tag,
                                 "cut(G/e, a) = crisp_contract(cut(G, a), e) for e in the a-cut", is_min);
        L.inclusion[i] = L.add("contracted-cut-edges-included" + tag,
                               "edges of cut(G/e, a) are edges of crisp_contract(cut(G, a), e)", true);
        L.monotonicity[i] = L.add("contraction-monotone" + tag,
                                  "mu'(w,x) <= min(mu(u,x), mu(v,x)); a-adjacency to w needs a-adjacency to u and v",
                                  true);
        L.order[i] = L.add("contraction-order-independent" + tag,
                           "(G/e1)/e2 = (G/e2)/e1 for vertex-disjoint e1, e2", true);
        L.restricted[i] = L.add("no-new-edges-restricted" + tag,
                                "mu(e) < a with an endpoint below a: cut(G/e, a) = cut(G, a) up to renaming", true);
        L.unrestricted[i] = L.add("no-new-edges-unrestricted" + tag,
                                  "mu(e) < a: cut(G/e, a) isomorphic to cut(G, a)", false);
    }
    if (with_min) {
        L.intersection = L.add("contraction-commutes-with-intersection-cut[min]",
                               "cut(G/e, a) = cut(G, a) with u, v replaced by w adjacent to N(u) & N(v)", false);
        L.neighborhood = L.add("neighborhood-intersection[min]", "N_a(w) in G/e = N_a(u) & N_a(v) in G", true);
        L.triple = L.add("cut-order-triple[min]",
                         "cut((G/e1)/e2) = cut(G)/e1/e2 = cut((G/e2)/e1) for disjoint cut edges", true);
        L.lifting = L.add("hereditary-lifting[min]",
                          "cut(G/F, a) = crisp contraction of cut(G, a) over F when F lies in the a-cut", true);
        L.connectivity = L.add("contraction-connectivity-bound[min]",
                               "lambda of the merged vertex's component >= min(lambda before, 2)", true);
    }
    L.planar_3cc = L.add("3cc-determination[planar]", "planarity agrees with planarity of the 3-connected parts", true);
    L.sp_3cc = L.add("3cc-determination[series-parallel]",
                     "series-parallel agrees with series-parallel on the 3-connected parts", true);
    L.decomposition = L.add("decomposition-soundness",
                            "non-virtual edges of the 3-connected parts are the input edges, once each", true);
    L.closure[0] = L.add("minor-closure[planar,delete]", "planar is deletion-hereditary", true);
    L.closure[1] = L.add("minor-closure[planar,contract]", "planar is contraction-hereditary", true);
    L.closure[2] = L.add("minor-closure[series-parallel,delete]", "series-parallel is deletion-hereditary", true);
    L.closure[3] = L.add("minor-closure[series-parallel,contract]", "series-parallel is contraction-hereditary", true);
    return L;
}

// ---------------------------------------------------------------------------
// Per-graph evaluation

class Tally {
public:
    Tally(const Layout& layout, const CorpusGraph* source, std::size_t index, std::int64_t quantum)
        : source_(source), index_(index), quantum_(quantum) {
        for (const auto& f : layout.families) records_.push_back({f.id, f.claim, f.asserted, 0, 0, std::nullopt});
    }

    using Params = std::map<std::string, std::string>;

    // Counts one case; `graph` and `params` are only built for the first failure.
    void check(std::size_t which, bool ok, const std::function<Params()>& params = {},
               const FuzzyGraph* graph = nullptr) {
        if (which == none) return;
        auto& r = records_[which];
        ++r.cases;
        if (ok) return;
        ++r.failures;
        if (r.first_failure) return;
        Counterexample c;
        if (graph) {
            c.graph = serialize_fuzzy_graph(*graph);
        } else if (source_) {
            c.graph = serialize_fuzzy_graph(source_->graph);
        }
        if (source_) {
            c.parameters["corpus_index"] = std::to_string(index_);
            c.parameters["n"] = std::to_string(source_->n);
            c.parameters["density"] = format_double(source_->density);
            c.parameters["seed"] = std::to_string(source_->seed);
            c.parameters["quantum"] = std::to_string(quantum_);
        }
        if (params)
            for (auto& [k, v] : params()) c.parameters[k] = v;
        r.first_failure = std::move(c);
    }

    std::vector<TheoremRecord>& records() { return records_; }

private:
    const CorpusGraph* source_;
    std::size_t index_;
    std::int64_t quantum_;
    std::vector<TheoremRecord> records_;
};

using Params = Tally::Params;

Params at(const MembershipLevel& alpha, const EdgeKey& e, TNorm t) {
    return {{"alpha", alpha.to_string()}, {"edge", e.to_string()}, {"tnorm", std::string(t.name())}};
}

void check_commutation(Tally& tally, const Layout& L, const FuzzyGraph& g, const MembershipLevel& alpha,
                       const CrispGraph& cut, const EdgeKey& e, TNorm t) {
    const CrispGraph lhs = alpha_cut(contract_edge(g, e, t).graph, alpha);
    const CrispGraph rhs = crisp_contract(cut, e);
    tally.check(L.commutation[slot(t)], lhs == rhs, [&] { return at(alpha, e, t); }, &g);
    tally.check(L.inclusion[slot(t)], subset_edges(lhs, rhs), [&] { return at(alpha, e, t); }, &g);
}

void evaluate_graph(Tally& tally, const Layout& L, const FuzzyGraph& g, const std::vector<TNorm>& tnorms) {
    const auto levels = distinct_levels(g);
    std::vector<EdgeKey> edges;
    for (const auto& [e, mu] : g.edges()) edges.push_back(e);
    const bool with_min = L.neighborhood != none;
    const TNorm tmin(TNormKind::minimum);

    for (const auto& t : tnorms) {
        // Monotonicity: pointwise, then at every level.
        for (const auto& e : edges) {
            const Contraction c = contract_edge(g, e, t);
            const Label& w = c.record.merged;
            bool ok = true;
            for (const auto& v : g.vertices()) {
                const Label& x = v.first;
                if (x == e.u || x == e.v) continue;
                Membership after = c.graph.edge_membership(w, x);
                if (after > std::min(g.edge_membership(e.u, x), g.edge_membership(e.v, x))) ok = false;
                for (const auto& alpha : levels)
                    if (reaches(after, alpha) &&
                        !(reaches(g.edge_membership(e.u, x), alpha) && reaches(g.edge_membership(e.v, x), alpha)))
                        ok = false;
            }
            tally.check(L.monotonicity[slot(t)], ok,
                        [&] { return Params{{"edge", e.to_string()}, {"tnorm", std::string(t.name())}}; }, &g);
        }

        // Order independence over vertex-disjoint pairs.
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                const EdgeKey &a = edges[i], &b = edges[j];
                if (a.touches(b.u) || a.touches(b.v)) continue;
                bool ok = contract_set(g, {a, b}, t) == contract_set(g, {b, a}, t);
                tally.check(L.order[slot(t)], ok, [&] {
                    return Params{{"edges", a.to_string() + " " + b.to_string()}, {"tnorm", std::string(t.name())}};
                }, &g);
            }
    }

    for (const auto& alpha : levels) {
        const CrispGraph cut = alpha_cut(g, alpha);
        std::vector<EdgeKey> in_cut;
        for (const auto& e : edges)
            if (cut.has_edge(e)) in_cut.push_back(e);

        for (const auto& t : tnorms) {
            for (const auto& e : in_cut) check_commutation(tally, L, g, alpha, cut, e, t);

            for (const auto& e : edges) {
                if (cut.has_edge(e)) continue;
                const Contraction c = contract_edge(g, e, t);
                const CrispGraph after = alpha_cut(c.graph, alpha);
                const bool u_in = cut.has_vertex(e.u), v_in = cut.has_vertex(e.v);
                auto params = [&] { return at(alpha, e, t); };
                tally.check(L.unrestricted[slot(t)], isomorphic(after, cut), params, &g);
                if (u_in && v_in) continue;
                // The merged vertex stands for whichever endpoint survived.
                const Label survivor = u_in ? e.u : e.v;
                const Label& w = c.record.merged;
                CrispGraph renamed = relabel(after, [&](const Label& x) { return x == w ? survivor : x; });
                tally.check(L.restricted[slot(t)], renamed == cut, params, &g);
            }
        }

        if (!with_min) continue;

        for (const auto& e : edges) {
            const Contraction c = contract_edge(g, e, tmin);
            std::set<Label> expected;
            const auto nu = alpha_neighborhood(g, e.u, alpha), nv = alpha_neighborhood(g, e.v, alpha);
            std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                                  std::inserter(expected, expected.end()));
            tally.check(L.neighborhood, alpha_neighborhood(c.graph, c.record.merged, alpha) == expected,
                        [&] { return at(alpha, e, tmin); }, &g);
        }

        for (const auto& e : in_cut) {
            const Contraction c = contract_edge(g, e, tmin);
            CrispGraph expected;
            for (const auto& v : cut.vertices())
                if (v != e.u && v != e.v) expected.add_vertex(v);
            for (const auto& x : cut.edges())
                if (!x.touches(e.u) && !x.touches(e.v)) expected.add_edge(x.u, x.v);
            expected.add_vertex(c.record.merged);
            for (const auto& x : cut.neighbors(e.u))
                if (x != e.v && cut.has_edge(e.v, x)) expected.add_edge(c.record.merged, x);
            tally.check(L.intersection, alpha_cut(c.graph, alpha) == expected, [&] { return at(alpha, e, tmin); }, &g);
        }

        for (const auto& e : in_cut) {
            const std::set<Label> before = component_of(cut, e.u);
            const std::size_t lambda_before = edge_connectivity(induced(cut, before));
            const Contraction c = contract_edge(g, e, tmin);
            const CrispGraph after = alpha_cut(c.graph, alpha);
            if (!after.has_vertex(c.record.merged)) {
                tally.check(L.connectivity, false, [&] { return at(alpha, e, tmin); }, &g);
                continue;
            }
            const std::set<Label> comp = component_of(after, c.record.merged);
            if (comp.size() < 2) continue;  // no cut to measure
            const std::size_t lambda_after = edge_connectivity(induced(after, comp));
            tally.check(L.connectivity, lambda_after >= std::min<std::size_t>(lambda_before, 2), [&] {
                Params p = at(alpha, e, tmin);
                p["lambda_before"] = std::to_string(lambda_before);
                p["lambda_after"] = std::to_string(lambda_after);
                return p;
            }, &g);
        }

        for (std::size_t i = 0; i < in_cut.size(); ++i)
            for (std::size_t j = i + 1; j < in_cut.size(); ++j) {
                const EdgeKey &a = in_cut[i], &b = in_cut[j];
                if (a.touches(b.u) || a.touches(b.v)) continue;
                const CrispGraph ab = alpha_cut(contract_set(g, {a, b}, tmin), alpha);
                const CrispGraph ba = alpha_cut(contract_set(g, {b, a}, tmin), alpha);
                const CrispGraph crisp = crisp_contract_set(cut, {a, b});
                tally.check(L.triple, ab == crisp && crisp == ba, [&] {
                    return Params{{"alpha", alpha.to_string()}, {"edges", a.to_string() + " " + b.to_string()},
                                  {"tnorm", "min"}};
                }, &g);
            }

        // Lifting over windows of two and three consecutive cut edges.
        for (std::size_t len = 2; len <= 3; ++len)
            for (std::size_t i = 0; i + len <= in_cut.size(); ++i) {
                std::vector<EdgeKey> F(in_cut.begin() + static_cast<std::ptrdiff_t>(i),
                                       in_cut.begin() + static_cast<std::ptrdiff_t>(i + len));
                CrispGraph crisp;
                try {
                    crisp = crisp_contract_set(cut, F);
                } catch (const InvalidArgument&) {
                    continue;  // F collapses an edge of its own; not a contraction sequence
                }
                bool ok;
                try {
                    ok = alpha_cut(contract_set(g, F, tmin), alpha) == crisp;
                } catch (const InvalidArgument&) {
                    ok = false;  // an edge of F vanished on the fuzzy side
                }
                tally.check(L.lifting, ok, [&] {
                    std::string list;
                    for (const auto& e : F) list += (list.empty() ? "" : " ") + e.to_string();
                    return Params{{"alpha", alpha.to_string()}, {"edges", list}, {"tnorm", "min"}};
                }, &g);
            }
    }

    // Structural checks on connected cuts (and the support, which is the
    // cut at the smallest level).
    for (const auto& alpha : levels) {
        const CrispGraph cut = alpha_cut(g, alpha);
        if (cut.vertex_count() < 3 || !is_connected(cut)) continue;
        auto params = [&] { return Params{{"alpha", alpha.to_string()}}; };
        const auto planar = PropertySpec::parse("planar");
        const auto sp = PropertySpec::parse("series-parallel");
        tally.check(L.planar_3cc, check_property(planar, cut) == check_property_via_3cc(planar, cut), params, &g);
        tally.check(L.sp_3cc, check_property(sp, cut) == check_property_via_3cc(sp, cut), params, &g);

        std::vector<EdgeKey> real;
        for (const auto& part : triconnected_components(cut))
            for (const auto& e : part.graph.edges())
                if (!part.virtual_edges.contains(e)) real.push_back(e);
        std::sort(real.begin(), real.end());
        const bool once = std::adjacent_find(real.begin(), real.end()) == real.end();
        tally.check(L.decomposition,
                    once && std::set<EdgeKey>(real.begin(), real.end()) == cut.edges(), params, &g);
    }
}

void evaluate_globals(Tally& tally, const Layout& L, const SuiteOptions& options) {
    std::vector<Membership> values;
    for (std::int64_t i = 0; i <= 10; ++i) values.emplace_back(i, 10);
    for (const auto& t : options.tnorms) {
        for (const auto& a : values)
            for (const auto& b : values) {
                bool ok = t(a, b) == t(b, a) && t(a, Membership::one()) == a && t(a, b) <= std::min(a, b);
                for (const auto& c : values) {
                    ok = ok && t(t(a, b), c) == t(a, t(b, c));
                    if (b <= c) ok = ok && t(a, b) <= t(a, c);
                }
                tally.check(L.axioms[slot(t)], ok, [&] {
                    return Params{{"a", a.to_string()}, {"b", b.to_string()}, {"tnorm", std::string(t.name())}};
                });
            }
    }

    // The constructed triangle goes first so it is the reported case.
    const FuzzyGraph tri = product_commutation_counterexample();
    const MembershipLevel alpha = MembershipLevel::parse("0.85");
    const CrispGraph cut = alpha_cut(tri, alpha);
    for (const auto& t : options.tnorms)
        if (t.kind() != TNormKind::minimum) check_commutation(tally, L, tri, alpha, cut, EdgeKey("u", "v"), t);

    const std::array<std::pair<const char*, EdgeOperation>, 4> closures{{{"planar", EdgeOperation::deletion},
                                                                         {"planar", EdgeOperation::contraction},
                                                                         {"series-parallel", EdgeOperation::deletion},
                                                                         {"series-parallel", EdgeOperation::contraction}}};
    for (std::size_t i = 0; i < closures.size(); ++i) {
        const auto& [name, op] = closures[i];
        const HereditaryReport r = verify_hereditary(PropertySpec::parse(name), op, options.closure_n_max);
        FuzzyGraph witness = r.counterexample ? full_membership(*r.counterexample) : FuzzyGraph{};
        tally.check(L.closure[i], r.passed, [&] {
            Params p{{"n_max", std::to_string(options.closure_n_max)}, {"operation", std::string(to_string(op))}};
            if (r.counterexample_edge) p["edge"] = r.counterexample_edge->to_string();
            return p;
        }, &witness);
    }
}

void merge_into(std::vector<TheoremRecord>& total, std::vector<TheoremRecord>& part) {
    for (std::size_t i = 0; i < total.size(); ++i) {
        total[i].cases += part[i].cases;
        total[i].failures += part[i].failures;
        if (!total[i].first_failure && part[i].first_failure) total[i].first_failure = std::move(part[i].first_failure);
    }
}

}  // namespace

FuzzyGraph product_commutation_counterexample() {
    FuzzyGraph g;
    for (const char* v : {"u", "v", "x"}) g.set_vertex(v, Membership::one());
    const Membership high = Membership::parse("0.9");
    g.set_edge("u", "v", high);
    g.set_edge("u", "x", high);
    g.set_edge("v", "x", high);
    return g;
}

std::vector<CorpusGraph> theorem_corpus(const SuiteOptions& options) {
    if (options.n_max > corpus_vertex_bound)
        throw BoundExceeded("theorem corpus limited to " + std::to_string(corpus_vertex_bound) + " vertices");
    if (options.n_min > options.n_max) throw InvalidArgument("n_min exceeds n_max");
    if (options.quantum < 1) throw InvalidArgument("membership quantum must be positive");
    std::vector<CorpusGraph> out;
    for (std::size_t n = options.n_min; n <= options.n_max; ++n)
        for (std::size_t d = 0; d < options.densities.size(); ++d)
            for (std::size_t s = 0; s < options.seeds_per_cell; ++s) {
                CorpusGraph c;
                c.n = n;
                c.density = options.densities[d];
                c.seed = cell_seed(options.base_seed, n, d, s);
                c.graph = random_fuzzy_graph(n, c.density, c.seed, RandomGraphOptions{options.quantum});
                if (options.full_membership_only) c.graph = full_membership(support(c.graph));
                out.push_back(std::move(c));
            }
    return out;
}

bool SuiteReport::asserted_pass() const {
    return std::all_of(records.begin(), records.end(), [](const auto& r) { return !r.asserted || r.failures == 0; });
}

const TheoremRecord* SuiteReport::find(const std::string& id) const {
    for (const auto& r : records)
        if (r.id == id) return &r;
    return nullptr;
}

SuiteReport run_theorem_suite(const SuiteOptions& options) {
    if (options.closure_n_max > closure_bound)
        throw BoundExceeded("minor-closure checks limited to " + std::to_string(closure_bound) + " vertices");
    if (options.tnorms.empty()) throw InvalidArgument("at least one t-norm is required");
    const Layout layout = make_layout(options);
    const auto corpus = theorem_corpus(options);

    auto parts = parallel_map(corpus.size(), options.jobs, [&](std::size_t i) {
        Tally tally(layout, &corpus[i], i, options.quantum);
        evaluate_graph(tally, layout, corpus[i].graph, options.tnorms);
        return std::move(tally.records());
    });

    Tally globals(layout, nullptr, 0, options.quantum);
    evaluate_globals(globals, layout, options);

    SuiteReport report;
    report.corpus_size = corpus.size();
    report.records = std::move(globals.records());
    for (auto& part : parts) merge_into(report.records, part);
    return report;
}

std::string serialize_suite_report(const SuiteReport& report, const SuiteOptions& options) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["kind"] = "theorem-suite";
    ordered_json corpus;
    corpus["n_min"] = options.n_min;
    corpus["n_max"] = options.n_max;
    ordered_json densities = ordered_json::array();
    for (double d : options.densities) densities.push_back(format_double(d));
    corpus["densities"] = densities;
    corpus["seeds_per_cell"] = options.seeds_per_cell;
    corpus["base_seed"] = options.base_seed;
    corpus["quantum"] = options.quantum;
    corpus["full_membership_only"] = options.full_membership_only;
    corpus["graphs"] = report.corpus_size;
    ordered_json tnorms = ordered_json::array();
    for (const auto& t : options.tnorms) tnorms.push_back(std::string(t.name()));
    corpus["tnorms"] = tnorms;
    corpus["closure_n_max"] = options.closure_n_max;
    doc["corpus"] = corpus;
    doc["asserted_pass"] = report.asserted_pass();

    ordered_json records = ordered_json::array();
    for (const auto& r : report.records) {
        ordered_json rec;
        rec["id"] = r.id;
        rec["claim"] = r.claim;
        rec["kind"] = r.asserted ? "asserted" : "measured";
        rec["cases"] = r.cases;
        rec["failures"] = r.failures;
        if (r.first_failure) {
            ordered_json params = ordered_json::object();
            for (const auto& [k, v] : r.first_failure->parameters) params[k] = v;
            ordered_json first;
            first["parameters"] = params;
            first["graph"] = ordered_json::parse(r.first_failure->graph);
            rec["first_failure"] = first;
        } else {
            rec["first_failure"] = nullptr;
        }
        records.push_back(rec);
    }
    doc["records"] = records;
    return doc.dump(2) + "\n";
}

}  // namespace fuzzygraph

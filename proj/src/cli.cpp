#include "fuzzygraph/cli.hpp"

#include <filesystem>
#include <ostream>
#include <ranges>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuzzygraph/contraction.hpp"
#include "fuzzygraph/io.hpp"
#include "fuzzygraph/parallel.hpp"
#include "fuzzygraph/theorem_suite.hpp"

namespace fuzzygraph::cli {

using nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json edge_list(const std::vector<EdgeKey>& edges) {
    ordered_json out = ordered_json::array();
    for (const auto& e : edges) out.push_back({{"u", e.u}, {"v", e.v}});
    return out;
}

EdgeKey parse_edge_flag(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw InvalidArgument("edge must be given as U,V, got '" + text + "'");
    return EdgeKey(text.substr(0, comma), text.substr(comma + 1));
}

std::string edges_text(const std::vector<EdgeKey>& edges) {
    if (edges.empty()) return "(none)";
    std::string s;
    for (const auto& e : edges) s += (s.empty() ? "" : " ") + e.to_string();
    return s;
}

void print_crisp(std::ostream& out, const CrispGraph& g) {
    out << "vertices (" << g.vertex_count() << "):";
    for (const auto& v : g.vertices()) out << ' ' << v;
    out << "\nedges (" << g.edge_count() << "):";
    for (const auto& e : g.edges()) out << ' ' << e.to_string();
    out << '\n';
}

void print_fuzzy(std::ostream& out, const FuzzyGraph& g) {
    out << "vertices (" << g.vertex_count() << "):";
    for (const auto& [v, mu] : g.vertices()) out << ' ' << v << '=' << mu.to_string();
    out << "\nedges (" << g.edge_count() << "):";
    for (const auto& [e, mu] : g.edges()) out << ' ' << e.to_string() << '=' << mu.to_string();
    out << '\n';
}

bool is_crisp_file(const std::string& path) { return std::filesystem::path(path).extension() == ".cg"; }

void maybe_write(const std::string& path, const std::string& text) {
    if (!path.empty()) write_text_file(path, text);
}

FuzzyGraph load_fuzzy(const std::string& path) {
    FuzzyGraph g = parse_fuzzy_graph(read_text_file(path));
    require_valid(g);
    return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// Documents

std::string serialize_instance(const SolveInstance& instance) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["kind"] = "instance";
    doc["graph"] = ordered_json::parse(serialize_fuzzy_graph(instance.graph));
    doc["property"] = instance.property.name;
    doc["operation"] = std::string(to_string(instance.operation));
    doc["budget"] = instance.budget;
    doc["semantics"] = to_string(instance.semantics);
    doc["tnorm"] = std::string(instance.tnorm.name());
    return dump(doc);
}

SolveInstance parse_instance(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("malformed instance document: ") + e.what());
    }
    if (!doc.is_object() || doc.value("kind", "") != "instance")
        throw ParseError("not an instance document (kind must be \"instance\")");
    try {
        SolveInstance inst;
        inst.graph = parse_fuzzy_graph(doc.at("graph").dump());
        inst.property = PropertySpec::parse(doc.at("property").get<std::string>());
        inst.operation = parse_operation(doc.at("operation").get<std::string>());
        const auto budget = doc.at("budget");
        if (!budget.is_number_unsigned()) throw ParseError("budget must be a non-negative integer");
        inst.budget = budget.get<std::size_t>();
        inst.semantics = parse_semantics(doc.at("semantics").get<std::string>());
        inst.tnorm = TNorm::parse(doc.value("tnorm", "min"));
        return inst;
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("malformed instance document: ") + e.what());
    }
}

std::string serialize_solve_result(const SolveInstance& instance, const SolveResult& result) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["kind"] = "solve-result";
    doc["outcome"] = result.yes ? "YES" : "NO";
    doc["property"] = instance.property.name;
    doc["operation"] = std::string(to_string(instance.operation));
    doc["budget"] = instance.budget;
    doc["semantics"] = to_string(instance.semantics);
    doc["tnorm"] = std::string(instance.tnorm.name());
    doc["edges"] = edge_list(result.edges);
    doc["edge_count"] = result.edges.size();
    doc["subsets_examined"] = result.subsets_examined;
    if (instance.operation == EdgeOperation::deletion) doc["membership_removed"] = result.membership_removed.to_string();
    return dump(doc);
}

std::string serialize_equivalence_report(const EquivalenceReport& report) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["kind"] = "equivalence-report";
    doc["property"] = report.property;
    doc["operation"] = std::string(to_string(report.operation));
    doc["alpha"] = report.alpha;
    doc["instances"] = report.records.size();
    doc["agreements"] = report.agreements;
    doc["disagreements"] = report.disagreements;
    doc["skipped"] = report.skipped;
    doc["classical_yes"] = report.yes_count;
    doc["complete_agreement"] = report.complete_agreement();
    ordered_json mismatches = ordered_json::array();
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& r = report.records[i];
        if (r.agree()) continue;
        ordered_json m;
        m["index"] = i;
        m["budget"] = r.budget;
        if (r.skipped) {
            m["skipped"] = r.skip_reason;
        } else {
            m["classical"] = r.classical ? "YES" : "NO";
            m["fuzzy"] = r.fuzzy ? "YES" : "NO";
        }
        m["graph"] = ordered_json::parse(serialize_crisp_graph(r.graph));
        mismatches.push_back(m);
    }
    doc["mismatches"] = mismatches;
    return dump(doc);
}

// ---------------------------------------------------------------------------
// Subcommands

namespace {

struct Common {
    std::string out_path;
    std::size_t jobs = 0;
    [[nodiscard]] std::size_t effective_jobs() const { return jobs > 0 ? jobs : default_jobs(); }
};

int cmd_cut(const std::string& file, const std::string& alpha_text, const Common& c, std::ostream& out) {
    const FuzzyGraph g = load_fuzzy(file);
    const auto alpha = MembershipLevel::parse(alpha_text);
    const CrispGraph cut = alpha_cut(g, alpha);
    out << "alpha-cut at " << alpha.to_string() << '\n';
    print_crisp(out, cut);
    maybe_write(c.out_path, serialize_crisp_graph(cut));
    return ok;
}

int cmd_levels(const std::string& file, const Common& c, std::ostream& out) {
    const FuzzyGraph g = load_fuzzy(file);
    ordered_json levels = ordered_json::array();
    out << "distinct levels:";
    for (const auto& l : distinct_levels(g)) {
        out << ' ' << l.to_string();
        levels.push_back(l.to_string());
    }
    out << '\n';
    maybe_write(c.out_path, dump({{"schema_version", 1}, {"kind", "levels"}, {"levels", levels}}));
    return ok;
}

int cmd_contract(const std::string& file, const std::vector<std::string>& edge_flags, const std::string& tnorm,
                 const Common& c, std::ostream& out) {
    FuzzyGraph g = load_fuzzy(file);
    const TNorm t = TNorm::parse(tnorm);
    LabelTracker tracker(std::vector<Label>(std::views::keys(g.vertices()).begin(),
                                            std::views::keys(g.vertices()).end()));
    for (const auto& flag : edge_flags) {
        const EdgeKey e = tracker.resolve(parse_edge_flag(flag));
        Contraction step = contract_edge(g, e, t);
        const auto& r = step.record;
        out << "contract " << e.to_string() << " -> " << r.merged << " (mu_V " << r.merged_vertex_membership.to_string()
            << ", t-norm " << t.name() << ")\n";
        for (const auto& [x, mu] : r.updated_incidences) out << "  (" << r.merged << ',' << x << ") = " << mu.to_string() << '\n';
        tracker.merge(e.u, e.v, r.merged);
        g = std::move(step.graph);
    }
    print_fuzzy(out, g);
    maybe_write(c.out_path, serialize_fuzzy_graph(g));
    return ok;
}

int cmd_delete(const std::string& file, const std::vector<std::string>& edge_flags, const Common& c,
               std::ostream& out) {
    FuzzyGraph g = load_fuzzy(file);
    for (const auto& flag : edge_flags) g = delete_edge(g, parse_edge_flag(flag));
    print_fuzzy(out, g);
    maybe_write(c.out_path, serialize_fuzzy_graph(g));
    return ok;
}

int cmd_check(const std::string& file, const std::string& property, const std::string& alpha_text, bool via_3cc,
              const Common& c, std::ostream& out) {
    const PropertySpec p = PropertySpec::parse(property);
    auto verdict = [&](const CrispGraph& g) { return via_3cc ? check_property_via_3cc(p, g) : check_property(p, g); };
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["kind"] = "check";
    doc["property"] = p.name;
    bool holds = true;
    if (is_crisp_file(file)) {
        if (!alpha_text.empty()) throw InvalidArgument("--alpha applies to fuzzy graphs (.fg) only");
        holds = verdict(parse_crisp_graph(read_text_file(file)));
        out << p.name << ": " << (holds ? "YES" : "NO") << '\n';
    } else {
        const FuzzyGraph g = load_fuzzy(file);
        std::vector<MembershipLevel> levels;
        if (alpha_text.empty()) {
            levels = distinct_levels(g);
            doc["semantics"] = "all";
        } else {
            levels.push_back(MembershipLevel::parse(alpha_text));
            doc["semantics"] = "threshold:" + levels.front().to_string();
        }
        ordered_json per_level = ordered_json::array();
        for (const auto& a : levels) {
            bool v = verdict(alpha_cut(g, a));
            holds = holds && v;
            out << p.name << " at alpha " << a.to_string() << ": " << (v ? "YES" : "NO") << '\n';
            per_level.push_back({{"alpha", a.to_string()}, {"holds", v}});
        }
        doc["levels"] = per_level;
        if (levels.size() != 1) out << p.name << " at every level: " << (holds ? "YES" : "NO") << '\n';
    }
    doc["holds"] = holds;
    maybe_write(c.out_path, dump(doc));
    return holds ? ok : negative;
}

int cmd_verify_hereditary(const std::string& property, std::size_t nmax, const std::string& op_text, const Common& c,
                          std::ostream& out) {
    const PropertySpec p = PropertySpec::parse(property);
    const EdgeOperation op = parse_operation(op_text);
    const HereditaryReport r = verify_hereditary(p, op, nmax);
    out << p.name << " under " << to_string(op) << ", n <= " << nmax << ": " << (r.passed ? "closed" : "NOT closed")
        << (r.exhaustive ? " (exhaustive" : " (sampled") << ", " << r.graphs_checked << " graphs, "
        << r.operations_checked << " operations)\n";
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["kind"] = "hereditary-report";
    doc["property"] = p.name;
    doc["operation"] = std::string(to_string(op));
    doc["n_max"] = nmax;
    doc["passed"] = r.passed;
    doc["exhaustive"] = r.exhaustive;
    doc["graphs_checked"] = r.graphs_checked;
    doc["operations_checked"] = r.operations_checked;
    if (r.counterexample) {
        out << "counterexample: edge " << r.counterexample_edge->to_string() << " of\n";
        print_crisp(out, *r.counterexample);
        doc["counterexample"] = {{"graph", ordered_json::parse(serialize_crisp_graph(*r.counterexample))},
                                 {"edge", {{"u", r.counterexample_edge->u}, {"v", r.counterexample_edge->v}}}};
    } else {
        doc["counterexample"] = nullptr;
    }
    maybe_write(c.out_path, dump(doc));
    return r.passed ? ok : negative;
}

struct SolveFlags {
    std::string op, property, semantics, tnorm;
    std::optional<std::size_t> k;
    bool minimize = false;
};

int cmd_solve(const std::string& file, const SolveFlags& f, const Common& c, std::ostream& out) {
    const std::string text = read_text_file(file);
    SolveInstance inst;
    bool from_instance = false;
    try {
        auto doc = ordered_json::parse(text);
        from_instance = doc.is_object() && doc.contains("kind");
    } catch (const ordered_json::parse_error&) {
    }
    if (from_instance) {
        inst = parse_instance(text);
    } else {
        inst.graph = parse_fuzzy_graph(text);
        if (f.op.empty() || f.property.empty() || f.semantics.empty() || (!f.k && !f.minimize))
            throw InvalidArgument("solve on a graph file needs --op, --property, --k and --semantics");
    }
    require_valid(inst.graph);
    if (!f.op.empty()) inst.operation = parse_operation(f.op);
    if (!f.property.empty()) inst.property = PropertySpec::parse(f.property);
    if (!f.semantics.empty()) inst.semantics = parse_semantics(f.semantics);
    if (!f.tnorm.empty()) inst.tnorm = TNorm::parse(f.tnorm);
    if (f.k) inst.budget = *f.k;

    if (f.minimize) {
        const auto* threshold = std::get_if<ThresholdSemantics>(&inst.semantics);
        if (!threshold || inst.operation != EdgeOperation::deletion)
            throw InvalidArgument("--minimize-membership needs --op delete and threshold semantics");
        const auto r = solve_min_membership(inst.graph, inst.property, threshold->alpha);
        out << (r.feasible ? "FEASIBLE" : "INFEASIBLE") << ": delete " << edges_text(r.edges) << " (total membership "
            << r.removed_total.to_string() << ", " << r.subsets_examined << " sets examined)\n";
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["kind"] = "min-membership-result";
        doc["outcome"] = r.feasible ? "FEASIBLE" : "INFEASIBLE";
        doc["property"] = inst.property.name;
        doc["semantics"] = to_string(inst.semantics);
        doc["edges"] = edge_list(r.edges);
        doc["edge_count"] = r.edges.size();
        doc["membership_removed"] = r.removed_total.to_string();
        doc["subsets_examined"] = r.subsets_examined;
        maybe_write(c.out_path, dump(doc));
        return r.feasible ? ok : negative;
    }

    const SolveResult r = solve(inst);
    out << (r.yes ? "YES" : "NO") << ": " << inst.property.name << " by " << to_string(inst.operation)
        << ", k = " << inst.budget << ", semantics " << to_string(inst.semantics) << '\n';
    if (r.yes) {
        out << "edges: " << edges_text(r.edges) << '\n';
        if (inst.operation == EdgeOperation::deletion)
            out << "membership removed: " << r.membership_removed.to_string() << '\n';
    }
    out << "sets examined: " << r.subsets_examined << '\n';
    maybe_write(c.out_path, serialize_solve_result(inst, r));
    return r.yes ? ok : negative;
}

int cmd_reduce_embed(const std::string& file, std::size_t k, const std::string& property, const std::string& op,
                     const std::string& alpha, const Common& c, std::ostream& out) {
    const CrispGraph g = parse_crisp_graph(read_text_file(file));
    const auto artifact =
        embed_crisp(g, k, PropertySpec::parse(property), parse_operation(op), MembershipLevel::parse(alpha));
    out << "embedded " << g.vertex_count() << " vertices, " << g.edge_count() << " edges at membership 1; k = " << k
        << ", semantics " << to_string(artifact.target.semantics) << ", edge mapping " << artifact.edge_mapping << '\n';
    maybe_write(c.out_path, serialize_instance(artifact.target));
    return ok;
}

int cmd_reduce_verify(std::uint64_t seed, std::size_t count, std::size_t nmax, const std::string& corpus_kind,
                      const std::string& property, const std::string& op, const std::string& alpha, const Common& c,
                      std::ostream& out) {
    std::vector<CrispInstance> corpus;
    if (corpus_kind == "general") {
        corpus = generate_equivalence_corpus(count, nmax, seed);
    } else if (corpus_kind == "planar") {
        corpus = generate_planar_instances(count, nmax, seed);
    } else {
        throw InvalidArgument("corpus must be 'general' or 'planar'");
    }
    const auto report = verify_equivalence(corpus, PropertySpec::parse(property), parse_operation(op),
                                           MembershipLevel::parse(alpha), c.effective_jobs());
    out << "property         " << report.property << '\n'
        << "operation        " << to_string(report.operation) << '\n'
        << "alpha            " << report.alpha << '\n'
        << "instances        " << report.records.size() << '\n'
        << "agreements       " << report.agreements << '\n'
        << "disagreements    " << report.disagreements << '\n'
        << "skipped          " << report.skipped << '\n'
        << "classical YES    " << report.yes_count << '\n';
    if (report.first_disagreement) out << "first mismatch   #" << *report.first_disagreement << '\n';
    maybe_write(c.out_path, serialize_equivalence_report(report));
    return report.complete_agreement() ? ok : negative;
}

int cmd_gen(std::size_t n, double p, std::uint64_t seed, std::int64_t quantum, const Common& c, std::ostream& out) {
    const FuzzyGraph g = random_fuzzy_graph(n, p, seed, RandomGraphOptions{quantum});
    print_fuzzy(out, g);
    maybe_write(c.out_path, serialize_fuzzy_graph(g));
    return ok;
}

int cmd_verify_theorems(SuiteOptions options, const std::vector<std::string>& tnorms, const Common& c,
                        std::ostream& out) {
    if (!tnorms.empty()) {
        options.tnorms.clear();
        for (const auto& t : tnorms) options.tnorms.push_back(TNorm::parse(t));
    }
    options.jobs = c.effective_jobs();
    const SuiteReport report = run_theorem_suite(options);
    out << "corpus: " << report.corpus_size << " graphs, n " << options.n_min << ".." << options.n_max << '\n';
    for (const auto& r : report.records) {
        const char* status = r.failures == 0 ? "pass" : (r.asserted ? "FAIL" : "differs");
        out << (r.asserted ? "asserted " : "measured ") << status << "  " << r.id << "  " << r.failures << "/"
            << r.cases << '\n';
        if (r.first_failure) {
            out << "    first:";
            for (const auto& [k, v] : r.first_failure->parameters) out << ' ' << k << '=' << v;
            out << '\n';
        }
    }
    out << (report.asserted_pass() ? "all asserted checks pass" : "some asserted checks FAIL") << '\n';
    maybe_write(c.out_path, serialize_suite_report(report, options));
    return report.asserted_pass() ? ok : negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fuzzy graph contraction toolkit", "fuzzygraph"};
    app.require_subcommand(1);
    Common common;
    std::function<int()> action;

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", common.out_path, "write the machine-readable result here"); };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", common.jobs, "worker threads (default: FUZZYGRAPH_JOBS or processor count)")
            ->check(CLI::PositiveNumber);
    };

    std::string file, alpha, tnorm = "min", property, op;
    std::vector<std::string> edges;

    auto* cut = app.add_subcommand("cut", "alpha-cut of a fuzzy graph");
    cut->add_option("file", file, "fuzzy graph (.fg)")->required();
    cut->add_option("--alpha", alpha, "threshold in (0,1]")->required();
    add_out(cut);
    cut->callback([&] { action = [&] { return cmd_cut(file, alpha, common, out); }; });

    auto* levels = app.add_subcommand("levels", "distinct membership levels");
    levels->add_option("file", file)->required();
    add_out(levels);
    levels->callback([&] { action = [&] { return cmd_levels(file, common, out); }; });

    auto* contract = app.add_subcommand("contract", "contract edges in order");
    contract->add_option("file", file)->required();
    contract->add_option("--edge", edges, "U,V (repeatable; later refs follow merges)")->required();
    contract->add_option("--tnorm", tnorm, "min, product or lukasiewicz");
    add_out(contract);
    contract->callback([&] { action = [&] { return cmd_contract(file, edges, tnorm, common, out); }; });

    auto* del = app.add_subcommand("delete", "delete edges");
    del->add_option("file", file)->required();
    del->add_option("--edge", edges, "U,V (repeatable)")->required();
    add_out(del);
    del->callback([&] { action = [&] { return cmd_delete(file, edges, common, out); }; });

    bool via_3cc = false;
    auto* check = app.add_subcommand("check", "test a property (.cg directly, .fg on its cuts)");
    check->add_option("file", file)->required();
    check->add_option("--property", property)->required();
    check->add_option("--alpha", alpha, "single level; default is every distinct level");
    check->add_flag("--via-3cc", via_3cc, "decide on the 3-connected components");
    add_out(check);
    check->callback([&] { action = [&] { return cmd_check(file, property, alpha, via_3cc, common, out); }; });

    std::size_t nmax = 6;
    std::string hereditary_op = "contract";
    auto* hered = app.add_subcommand("verify-hereditary", "check closure under edge deletion or contraction");
    hered->add_option("--property", property)->required();
    hered->add_option("--nmax", nmax, "largest graph size");
    hered->add_option("--op", hereditary_op, "delete or contract");
    add_out(hered);
    hered->callback([&] { action = [&] { return cmd_verify_hereditary(property, nmax, hereditary_op, common, out); }; });

    SolveFlags sf;
    std::size_t k_value = 0;
    auto* solve_cmd = app.add_subcommand("solve", "edge deletion/contraction problem by enumeration");
    solve_cmd->add_option("file", file, "fuzzy graph (.fg) or instance document")->required();
    solve_cmd->add_option("--op", sf.op);
    solve_cmd->add_option("--property", sf.property);
    auto* k_opt = solve_cmd->add_option("--k", k_value, "edit budget");
    solve_cmd->add_option("--semantics", sf.semantics, "threshold:A or all");
    solve_cmd->add_option("--tnorm", sf.tnorm);
    solve_cmd->add_flag("--minimize-membership", sf.minimize, "minimize total deleted membership instead");
    add_out(solve_cmd);
    solve_cmd->callback([&] {
        if (k_opt->count() > 0) sf.k = k_value;
        action = [&] { return cmd_solve(file, sf, common, out); };
    });

    auto* reduce = app.add_subcommand("reduce", "classical-to-fuzzy embedding");
    reduce->require_subcommand(1);
    std::size_t k_embed = 0;
    auto* embed = reduce->add_subcommand("embed", "membership-1 embedding of a crisp instance");
    embed->add_option("file", file, "crisp graph (.cg)")->required();
    embed->add_option("--k", k_embed)->required();
    embed->add_option("--property", property)->required();
    embed->add_option("--op", op)->required();
    embed->add_option("--alpha", alpha)->required();
    add_out(embed);
    embed->callback([&] { action = [&] { return cmd_reduce_embed(file, k_embed, property, op, alpha, common, out); }; });

    std::uint64_t corpus_seed = 1;
    std::size_t count = 200, corpus_nmax = 7;
    std::string corpus_kind = "general";
    auto* verify = reduce->add_subcommand("verify", "compare fuzzy and classical verdicts on a seeded corpus");
    verify->add_option("--corpus-seed", corpus_seed)->required();
    verify->add_option("--count", count)->required();
    verify->add_option("--nmax", corpus_nmax, "largest instance size");
    verify->add_option("--corpus", corpus_kind, "general or planar");
    verify->add_option("--property", property)->required();
    verify->add_option("--op", op)->required();
    verify->add_option("--alpha", alpha)->required();
    add_out(verify);
    add_jobs(verify);
    verify->callback([&] {
        action = [&] {
            return cmd_reduce_verify(corpus_seed, count, corpus_nmax, corpus_kind, property, op, alpha, common, out);
        };
    });

    std::size_t gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1;
    std::int64_t quantum = 1000;
    auto* gen = app.add_subcommand("gen", "seeded random fuzzy graph");
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--p", gen_p)->required()->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", gen_seed)->required();
    gen->add_option("--quantum", quantum, "memberships are multiples of 1/quantum")->check(CLI::PositiveNumber);
    add_out(gen);
    gen->callback([&] { action = [&] { return cmd_gen(gen_n, gen_p, gen_seed, quantum, common, out); }; });

    SuiteOptions suite;
    std::vector<std::string> suite_tnorms;
    auto* theorems = app.add_subcommand("verify-theorems", "run the contraction invariant suite");
    theorems->add_option("--n-min", suite.n_min);
    theorems->add_option("--n-max", suite.n_max);
    theorems->add_option("--seeds", suite.seeds_per_cell, "graphs per (n, density) cell");
    theorems->add_option("--seed", suite.base_seed, "corpus seed");
    theorems->add_option("--density", suite.densities, "edge probabilities (repeatable)");
    theorems->add_option("--quantum", suite.quantum)->check(CLI::PositiveNumber);
    theorems->add_option("--tnorm", suite_tnorms, "t-norms to run (repeatable; default all)");
    theorems->add_option("--closure-nmax", suite.closure_n_max, "size for the minor-closure checks");
    theorems->add_flag("--full-membership", suite.full_membership_only, "set every membership to 1");
    add_out(theorems);
    add_jobs(theorems);
    theorems->callback([&] { action = [&] { return cmd_verify_theorems(suite, suite_tnorms, common, out); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return ok;
        }
        err << "error: " << e.what() << '\n' << app.help();
        return usage;
    }

    try {
        return action();
    } catch (const BoundExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return bound;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

}  // namespace fuzzygraph::cli

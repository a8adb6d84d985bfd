#include <doctest.h>

#include "fuzzygraph/theorem_suite.hpp"
#include "helpers.hpp"

using namespace fuzzygraph;
using namespace testing;

namespace {

SuiteOptions small() {
    SuiteOptions o;
    o.n_max = 5;
    o.seeds_per_cell = 4;
    o.closure_n_max = 5;
    return o;
}

}  // namespace

TEST_CASE("corpus is seeded and sized") {
    auto o = small();
    auto a = theorem_corpus(o), b = theorem_corpus(o);
    REQUIRE(a.size() == 3 * 3 * 4);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].graph == b[i].graph);
        CHECK(validate(a[i].graph).ok());
        for (const auto& [e, m] : a[i].graph.edges()) CHECK((m.value() * Rational(20)).denominator() == 1);
    }
    o.base_seed = 2;
    CHECK(theorem_corpus(o)[0].seed != a[0].seed);
    o.full_membership_only = true;
    for (const auto& c : theorem_corpus(o))
        for (const auto& [e, m] : c.graph.edges()) CHECK(m == Membership::one());
}

TEST_CASE("records that must hold") {
    const SuiteReport r = run_theorem_suite(small());
    for (const char* id : {"tnorm-axioms[min]", "contracted-cut-edges-included[min]", "contraction-monotone[product]",
                           "contraction-order-independent[lukasiewicz]", "neighborhood-intersection[min]",
                           "contraction-commutes-with-intersection-cut[min]", "3cc-determination[planar]",
                           "3cc-determination[series-parallel]", "decomposition-soundness",
                           "minor-closure[planar,contract]", "minor-closure[series-parallel,delete]"}) {
        CAPTURE(id);
        const TheoremRecord* rec = r.find(id);
        REQUIRE(rec);
        CHECK(rec->cases > 0);
        CHECK(rec->failures == 0);
    }
}

TEST_CASE("the constructed product case leads the measured report") {
    const SuiteReport r = run_theorem_suite(small());
    const TheoremRecord* product = r.find("contraction-commutes-with-cut[product]");
    REQUIRE(product);
    CHECK_FALSE(product->asserted);
    REQUIRE(product->first_failure);
    CHECK(product->first_failure->parameters.at("alpha") == "0.85");
    CHECK(product->first_failure->parameters.at("edge") == "(u,v)");
    CHECK(parse_fuzzy_graph(product->first_failure->graph) == product_commutation_counterexample());
    CHECK(r.find("contraction-commutes-with-cut[min]")->asserted);
}

TEST_CASE("failures carry reproduction parameters") {
    const SuiteReport r = run_theorem_suite(small());
    for (const auto& rec : r.records) {
        if (!rec.first_failure) continue;
        CAPTURE(rec.id);
        const auto& p = rec.first_failure->parameters;
        CHECK(p.contains("tnorm") + p.contains("n_max") + p.contains("a") > 0);
        CHECK_NOTHROW(parse_fuzzy_graph(rec.first_failure->graph));
        if (p.contains("seed")) {
            CHECK(p.contains("alpha") + p.contains("edge") + p.contains("edges") > 0);
        }
    }
}

TEST_CASE("report text does not depend on the number of workers") {
    auto o = small();
    o.jobs = 1;
    const std::string one = serialize_suite_report(run_theorem_suite(o), o);
    o.jobs = 3;
    CHECK(serialize_suite_report(run_theorem_suite(o), o) == one);
    CHECK(one.find("\"schema_version\": 1") != std::string::npos);
}

TEST_CASE("t-norm selection and bounds") {
    auto o = small();
    o.tnorms = {TNorm(TNormKind::product)};
    const SuiteReport r = run_theorem_suite(o);
    CHECK(r.find("neighborhood-intersection[min]") == nullptr);
    CHECK(r.find("contraction-order-independent[product]") != nullptr);
    o.n_max = 9;
    CHECK_THROWS_AS(run_theorem_suite(o), BoundExceeded);
    o = small();
    o.closure_n_max = 8;
    CHECK_THROWS_AS(run_theorem_suite(o), BoundExceeded);
    o = small();
    o.tnorms.clear();
    CHECK_THROWS_AS(run_theorem_suite(o), InvalidArgument);
}

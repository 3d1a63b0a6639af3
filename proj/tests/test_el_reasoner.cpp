// Copyright 2026 The TripleCheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "triplecheck/el_reasoner.hpp"
#include "triplecheck/errors.hpp"

using namespace triplecheck;
using namespace triplecheck::el;

namespace {

Ontology abc_ontology(std::vector<Axiom> tbox, std::set<std::string> concepts,
                      std::set<std::string> roles = {}) {
    Ontology o;
    o.concepts = std::move(concepts);
    o.roles = std::move(roles);
    o.tbox = std::move(tbox);
    o.validate();
    return o;
}

} // namespace

TEST_CASE("normalize keeps NF1 axioms unchanged") {
    auto o = abc_ontology({{Concept::named("a"), Concept::named("b")}}, {"a", "b"});
    auto nf = normalize(o);
    REQUIRE(nf.nf1.size() == 1);
    CHECK(nf.nf1[0].sub == "a");
    CHECK(nf.nf1[0].super == "b");
    CHECK(nf.nf2.empty());
    CHECK(nf.nf3.empty());
    CHECK(nf.nf4.empty());
}

TEST_CASE("normalize introduces gen_ names for complex fillers") {
    // a [= some r.(b and c)  ~>  a [= some r.gen_1, gen_1 [= b, gen_1 [= c
    auto o = abc_ontology(
        {{Concept::named("a"),
          Concept::some("r", Concept::conj({Concept::named("b"), Concept::named("c")}))}},
        {"a", "b", "c"}, {"r"});
    auto nf = normalize(o);
    REQUIRE(nf.nf3.size() == 1);
    CHECK(nf.nf3[0].sub == "a");
    CHECK(nf.nf3[0].role == "r");
    CHECK(nf.nf3[0].filler == "gen_1");
    REQUIRE(nf.nf1.size() == 2);
    CHECK(nf.nf1[0] == NormalizedTBox::Nf1{"gen_1", "b"});
    CHECK(nf.nf1[1] == NormalizedTBox::Nf1{"gen_1", "c"});
    CHECK(nf.nf2.empty());
    CHECK(nf.nf4.empty());
}

TEST_CASE("normalize of an empty TBox is empty") {
    auto nf = normalize(abc_ontology({}, {"a"}));
    CHECK(nf.nf1.empty());
    CHECK(nf.nf2.empty());
    CHECK(nf.nf3.empty());
    CHECK(nf.nf4.empty());
}

TEST_CASE("classify closes transitive NF1 chains") {
    auto o = abc_ontology({{Concept::named("a"), Concept::named("b")},
                           {Concept::named("b"), Concept::named("c")}},
                          {"a", "b", "c"});
    auto rel = classify(normalize(o));
    CHECK(rel.count({"a", "c"}) == 1);
    CHECK(rel.count({"a", "b"}) == 1);
    CHECK(rel.count({"c", "a"}) == 0);
}

TEST_CASE("classify derives subsumption through role edges") {
    // a [= some r.b, b [= c, some r.c [= d  |=  a [= d
    auto o = abc_ontology({{Concept::named("a"), Concept::some("r", Concept::named("b"))},
                           {Concept::named("b"), Concept::named("c")},
                           {Concept::some("r", Concept::named("c")), Concept::named("d")}},
                          {"a", "b", "c", "d"}, {"r"});
    auto rel = classify(normalize(o));
    CHECK(rel.count({"a", "d"}) == 1);

    oracle::ElOracle ref(o);
    CHECK(ref.subsumed("a", "d"));
    CHECK_FALSE(ref.subsumed("d", "a"));
}

TEST_CASE("classify of an empty TBox is reflexivity plus top") {
    auto rel = classify(normalize(abc_ontology({}, {"a", "b"})));
    SubsumptionRelation expected = {{"a", "a"}, {"a", kTop}, {"b", "b"}, {"b", kTop}};
    CHECK(rel == expected);
}

TEST_CASE("is_subsumed basics") {
    auto o = abc_ontology({{Concept::named("a"), Concept::named("b")}}, {"a", "b"});
    auto rel = classify(normalize(o));
    CHECK(is_subsumed("a", "a", rel));
    CHECK(is_subsumed("a", kTop, rel));
    CHECK(is_subsumed("a", "b", rel));
    CHECK_FALSE(is_subsumed("b", "a", rel));
    CHECK_THROWS_AS(is_subsumed("zzz", "a", rel), UnknownConceptError);
}

TEST_CASE("NF1-only classification equals graph closure") {
    testgen::Rng rng(42);
    for (int iter = 0; iter < 100; ++iter) {
        int n = testgen::pick(rng, 2, 12);
        std::set<std::string> concepts;
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) {
            names.push_back("c" + std::to_string(i));
            concepts.insert(names.back());
        }
        std::vector<std::pair<std::string, std::string>> edges;
        std::vector<Axiom> tbox;
        int m = testgen::pick(rng, 0, 20);
        for (int i = 0; i < m; ++i) {
            auto a = names[size_t(testgen::pick(rng, 0, n - 1))];
            auto b = names[size_t(testgen::pick(rng, 0, n - 1))];
            edges.emplace_back(a, b);
            tbox.push_back({Concept::named(a), Concept::named(b)});
        }
        auto rel = classify(normalize(abc_ontology(std::move(tbox), concepts)));
        auto expected = oracle::nf1_closure(concepts, edges);
        CHECK(rel == expected);
    }
}

TEST_CASE("classification is deterministic and idempotent") {
    testgen::Rng rng(99);
    auto o = testgen::random_el_ontology(rng, 6, 2);
    auto nf = normalize(o);
    auto rel1 = classify(nf);
    auto rel2 = classify(nf);
    CHECK(rel1 == rel2);
}

TEST_CASE("normalize preserves subsumption between declared concepts") {
    testgen::Rng rng(20260810);
    for (int iter = 0; iter < 150; ++iter) {
        auto o = testgen::random_el_ontology(rng, 6, 2);
        auto rel = classify(normalize(o));
        oracle::ElOracle ref(o);
        for (const auto& a : o.concepts) {
            for (const auto& b : o.concepts) {
                CAPTURE(iter);
                CAPTURE(a);
                CAPTURE(b);
                CHECK(rel.count({a, b}) == (ref.subsumed(a, b) ? 1u : 0u));
            }
        }
    }
}

TEST_CASE("ontology validation rejects reserved and undeclared ids") {
    Ontology o;
    o.concepts = {"gen_1"};
    CHECK_THROWS_AS(o.validate(), Error);

    Ontology t;
    t.concepts = {"top"};
    CHECK_THROWS_AS(t.validate(), Error);

    Ontology u;
    u.concepts = {"a"};
    u.tbox.push_back({Concept::named("a"), Concept::named("missing")});
    CHECK_THROWS_AS(u.validate(), Error);

    Ontology v;
    v.concepts = {"a"};
    v.tbox.push_back({Concept::named("a"), Concept::conj({Concept::named("a")})});
    CHECK_THROWS_AS(v.validate(), Error);
}

TEST_CASE("parse_ontology reads the JSON format and canonicalizes ids") {
    auto o = parse_ontology(R"({
        "concepts": ["HighConductivity", "conductor"],
        "roles": ["hasProperty"],
        "individuals": ["graphene", "hc1"],
        "tbox": [{"lhs": {"some": {"role": "hasProperty", "filler": {"named": "HighConductivity"}}},
                  "rhs": {"named": "conductor"}}],
        "assertions": [["hc1", "HighConductivity"], ["graphene", "hasProperty", "hc1"]]
    })");
    CHECK(o.concepts.count("high_conductivity") == 1);
    CHECK(o.roles.count("has_property") == 1);
    REQUIRE(o.tbox.size() == 1);
    CHECK(o.tbox[0].rhs == Concept::named("conductor"));
    REQUIRE(o.concept_assertions.size() == 1);
    CHECK(o.concept_assertions[0] == ConceptAssertion{"hc1", "high_conductivity"});
    REQUIRE(o.role_assertions.size() == 1);
    CHECK(o.role_assertions[0] == RoleAssertion{"graphene", "has_property", "hc1"});

    CHECK_THROWS_AS(parse_ontology(R"({"concepts":["a"],"tbox":[{"lhs":{"not":"a"},"rhs":{"named":"a"}}]})"),
                    Error);
    CHECK_THROWS_AS(parse_ontology("nope"), JsonSyntaxError);
}

TEST_CASE("direct_neighbors and asserted_instances") {
    auto o = parse_ontology(R"({
        "concepts": ["a", "b", "c", "d"],
        "roles": ["r"],
        "individuals": ["i", "j"],
        "tbox": [{"lhs": {"named": "a"}, "rhs": {"named": "b"}},
                 {"lhs": {"named": "a"}, "rhs": {"some": {"role": "r", "filler": {"named": "c"}}}}],
        "assertions": [["i", "a"], ["j", "a"], ["i", "b"]]
    })");
    CHECK(direct_neighbors("a", o) == std::set<std::string>{"b", "c"});
    CHECK(direct_neighbors("b", o) == std::set<std::string>{"a"});
    CHECK(direct_neighbors("d", o).empty());
    CHECK_THROWS_AS(direct_neighbors("zzz", o), UnknownConceptError);
    CHECK(asserted_instances("a", o) == std::set<std::string>{"i", "j"});
    CHECK(asserted_instances("d", o).empty());
}

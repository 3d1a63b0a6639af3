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

#include "support/oracles.hpp"
#include "triplecheck/errors.hpp"
#include "triplecheck/verifier.hpp"

using namespace triplecheck;
using namespace triplecheck::verifier;

namespace {

el::Ontology battery_ontology() {
    return el::parse_ontology(R"({
        "concepts": ["high_conductivity", "conductor"],
        "roles": ["has_property"],
        "individuals": ["graphene", "hc1"],
        "tbox": [{"lhs": {"some": {"role": "has_property",
                                   "filler": {"named": "high_conductivity"}}},
                  "rhs": {"named": "conductor"}}],
        "assertions": [["hc1", "high_conductivity"], ["graphene", "has_property", "hc1"]]
    })");
}

MatchMap battery_matches() {
    return {{"graphene", "graphene"},
            {"is_a", "is_a"},
            {"has_property", "has_property"},
            {"high_conductivity", "high_conductivity"},
            {"conductor", "conductor"}};
}

model::Triple id_triple(const std::string& s, const std::string& p, const std::string& o) {
    model::Triple t;
    t.subject = s;
    t.predicate = p;
    t.object = model::TripleObject::make_id(o);
    return t;
}

} // namespace

TEST_CASE("compile_ontology emits the documented facts and bridge rules") {
    auto ontology = el::parse_ontology(R"({
        "concepts": ["a", "b"],
        "individuals": ["i"],
        "tbox": [{"lhs": {"named": "a"}, "rhs": {"named": "b"}}],
        "assertions": [["i", "a"]]
    })");
    auto classified = el::classify(el::normalize(ontology));
    auto program = compile_ontology(classified, ontology);

    std::set<std::string> facts;
    int rule_count = 0;
    for (const auto& rule : program.rules) {
        if (rule.is_fact()) {
            facts.insert(asp::to_string(*rule.head));
        } else {
            ++rule_count;
        }
    }
    CHECK(facts == std::set<std::string>{"sub(a,a)", "sub(a,b)", "sub(a,top)", "sub(b,b)",
                                         "sub(b,top)", "inst(i,a)"});
    CHECK(rule_count == 2);

    // Solving the compiled program derives the inherited membership. The
    // program is definite, so its one stable model is the least model; an
    // independent fixpoint confirms both the model and the derived atom.
    auto result = asp::stable_models(program, 16);
    REQUIRE(result.models.size() == 1);
    CHECK(result.models[0].count(asp::Atom{"inst", {asp::Term::symbol("i"), asp::Term::symbol("b")}}));
    auto expected = oracle::definite_model(asp::ground(program));
    CHECK(expected.count("inst(i,b)") == 1);
    std::set<std::string> got;
    for (const auto& a : result.models[0]) got.insert(asp::to_string(a));
    CHECK(got == expected);
}

TEST_CASE("compile_ontology of an empty ontology is just the bridge rules") {
    el::Ontology empty;
    auto program = compile_ontology({}, empty);
    REQUIRE(program.rules.size() == 2);
    CHECK_FALSE(program.rules[0].is_fact());
    CHECK_FALSE(program.rules[1].is_fact());
}

TEST_CASE("compile_ontology turns NF4 axioms into some_sub facts") {
    auto ontology = battery_ontology();
    auto program = compile_ontology(el::classify(el::normalize(ontology)), ontology);
    bool found = false;
    for (const auto& rule : program.rules) {
        if (rule.is_fact() &&
            asp::to_string(*rule.head) == "some_sub(has_property,high_conductivity,conductor)") {
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("compile_triples maps ids and separates unmapped triples") {
    auto compiled = compile_triples({id_triple("graphene", "has_property", "high_conductivity")},
                                    battery_matches());
    REQUIRE(compiled.facts.size() == 1);
    CHECK(asp::to_string(compiled.facts[0]) == "triple(graphene,has_property,high_conductivity).");
    CHECK(compiled.unmapped.empty());

    auto missing = compile_triples({id_triple("graphene", "cures", "conductor")}, battery_matches());
    CHECK(missing.facts.empty());
    CHECK(missing.unmapped == std::vector<std::size_t>{0});

    CHECK(compile_triples({}, battery_matches()).facts.empty());
}

TEST_CASE("map_triple forms inst atoms for is_a and handles literals") {
    auto is_a = map_triple(id_triple("graphene", "is_a", "conductor"), battery_matches());
    REQUIRE(is_a.mapped);
    CHECK(asp::to_string(is_a.atom) == "inst(graphene,conductor)");

    model::Triple lit;
    lit.subject = "graphene";
    lit.predicate = "has_property";
    lit.object = model::TripleObject::make_literal("350", "S/cm");
    auto mapped = map_triple(lit, battery_matches());
    REQUIRE(mapped.mapped);
    CHECK(asp::to_string(mapped.atom) == "triple(graphene,has_property,\"350 S/cm\")");

    model::Triple num = lit;
    num.object = model::TripleObject::make_literal("350");
    CHECK(asp::to_string(map_triple(num, battery_matches()).atom) ==
          "triple(graphene,has_property,350)");
}

TEST_CASE("verify accepts entailed is_a claims with a derivation") {
    auto ontology = battery_ontology();
    auto kb = build_knowledge_base(el::classify(el::normalize(ontology)), ontology);
    auto verdicts =
        verify({id_triple("graphene", "is_a", "conductor")}, kb, battery_matches(), 64);
    REQUIRE(verdicts.size() == 1);
    CHECK(verdicts[0].status == Status::verified);
    REQUIRE(!verdicts[0].explanation.derived_by.empty());
    bool bridge_cited = false;
    for (const auto& line : verdicts[0].explanation.derived_by) {
        if (line.find("inst(graphene,conductor) :- rel(graphene,has_property,hc1)") == 0) {
            bridge_cited = true;
        }
    }
    CHECK(bridge_cited);
}

TEST_CASE("verify refutes claims that violate a domain constraint") {
    auto ontology = el::parse_ontology(R"({
        "concepts": ["patient", "disease"],
        "roles": ["has_diagnosis"],
        "individuals": ["patient1", "disease_a"],
        "assertions": [["patient1", "patient"], ["disease_a", "disease"]]
    })");
    auto rules = asp::parse_program(
        ":- triple(P, has_diagnosis, D), not supported(P, D).");
    auto kb = build_knowledge_base(el::classify(el::normalize(ontology)), ontology, rules);
    MatchMap matches = {{"patient1", "patient1"},
                        {"has_diagnosis", "has_diagnosis"},
                        {"disease_a", "disease_a"}};
    auto verdicts = verify({id_triple("patient1", "has_diagnosis", "disease_a")}, kb, matches, 64);
    REQUIRE(verdicts.size() == 1);
    CHECK(verdicts[0].status == Status::refuted);
    REQUIRE(verdicts[0].explanation.violated.size() == 1);
    CHECK(verdicts[0].explanation.violated[0].constraint ==
          ":- triple(patient1,has_diagnosis,disease_a), not supported(patient1,disease_a).");
    CHECK(verdicts[0].explanation.violated[0].witnesses ==
          std::vector<std::string>{"triple(patient1,has_diagnosis,disease_a)"});
}

TEST_CASE("verify returns unknown for unentailed consistent claims") {
    auto ontology = battery_ontology();
    auto kb = build_knowledge_base(el::classify(el::normalize(ontology)), ontology);
    auto verdicts =
        verify({id_triple("graphene", "has_property", "conductor")}, kb, battery_matches(), 64);
    REQUIRE(verdicts.size() == 1);
    CHECK(verdicts[0].status == Status::unknown);
    CHECK(!verdicts[0].explanation.note.empty());
}

TEST_CASE("verify marks triples with unmatched terms as unmapped") {
    auto ontology = battery_ontology();
    auto kb = build_knowledge_base(el::classify(el::normalize(ontology)), ontology);
    auto verdicts = verify({id_triple("graphene", "zaps", "conductor")}, kb, battery_matches(), 64);
    REQUIRE(verdicts.size() == 1);
    CHECK(verdicts[0].status == Status::unmapped);
    CHECK(verdicts[0].explanation.note.find("zaps") != std::string::npos);
}

TEST_CASE("verify of an empty triple list is empty") {
    auto ontology = battery_ontology();
    auto kb = build_knowledge_base(el::classify(el::normalize(ontology)), ontology);
    CHECK(verify({}, kb, battery_matches(), 64).empty());
}

TEST_CASE("a claim that is a knowledge-base fact is always verified") {
    auto ontology = battery_ontology();
    auto external = asp::parse_program("inst(graphene, conductor).");
    auto kb =
        build_knowledge_base(el::classify(el::normalize(ontology)), ontology, {}, external);
    auto verdicts = verify({id_triple("graphene", "is_a", "conductor")}, kb, battery_matches(), 64);
    REQUIRE(verdicts.size() == 1);
    CHECK(verdicts[0].status == Status::verified);
}

TEST_CASE("verify aborts on an inconsistent knowledge base") {
    auto ontology = battery_ontology();
    auto rules = asp::parse_program("bad. :- bad.");
    auto kb = build_knowledge_base(el::classify(el::normalize(ontology)), ontology, rules);
    CHECK_THROWS_AS(verify({id_triple("graphene", "is_a", "conductor")}, kb, battery_matches(), 64),
                    InconsistentKnowledgeBaseError);
}

TEST_CASE("no claim is both cautiously entailed and refutable") {
    auto ontology = battery_ontology();
    auto kb = build_knowledge_base(el::classify(el::normalize(ontology)), ontology);
    auto program = kb.combined();
    auto base = asp::stable_models(program, 64);
    REQUIRE(!base.models.empty());

    for (const auto& triple :
         {id_triple("graphene", "is_a", "conductor"), id_triple("hc1", "is_a", "high_conductivity"),
          id_triple("graphene", "has_property", "hc1"),
          id_triple("graphene", "has_property", "high_conductivity")}) {
        MatchMap matches = battery_matches();
        matches["hc1"] = "hc1";
        auto mapped = map_triple(triple, matches);
        REQUIRE(mapped.mapped);
        bool cautious = true;
        for (const auto& m : base.models) cautious = cautious && m.count(mapped.atom);
        auto with = program;
        asp::Rule fact;
        fact.head = mapped.atom;
        with.rules.push_back(fact);
        bool refutable = asp::stable_models(with, 64).models.empty();
        CHECK_FALSE((cautious && refutable));
    }
}

TEST_CASE("injecting an unrelated fact changes no verdict") {
    auto ontology = battery_ontology();
    auto kb = build_knowledge_base(el::classify(el::normalize(ontology)), ontology);
    std::vector<model::Triple> triples = {id_triple("graphene", "is_a", "conductor"),
                                          id_triple("graphene", "has_property", "conductor")};
    auto before = verify(triples, kb, battery_matches(), 64);

    auto unrelated = asp::parse_program("aux_marker(zz1).");
    auto kb2 = build_knowledge_base(el::classify(el::normalize(ontology)), ontology, unrelated);
    auto after = verify(triples, kb2, battery_matches(), 64);

    REQUIRE(before.size() == after.size());
    for (std::size_t i = 0; i < before.size(); ++i) {
        CHECK(before[i].status == after[i].status);
    }
}

TEST_CASE("knowledge-base loading rejects reserved-predicate misuse") {
    auto ontology = battery_ontology();
    auto classified = el::classify(el::normalize(ontology));
    CHECK_THROWS_AS(
        build_knowledge_base(classified, ontology, asp::parse_program("sub(a, b, c).")), Error);
    CHECK_THROWS_AS(
        build_knowledge_base(classified, ontology, {}, asp::parse_program("supported(a, b).")),
        Error);
    CHECK_THROWS_AS(build_knowledge_base(classified, ontology, {},
                                         asp::parse_program("inst(X, c) :- inst(X, d).")),
                    Error);
    // Consistent use of reserved predicates in expert rules is fine.
    CHECK_NOTHROW(build_knowledge_base(classified, ontology,
                                       asp::parse_program("supported(X, c) :- inst(X, c).")));
}

TEST_CASE("verdict reports are deterministic with status counts") {
    auto ontology = battery_ontology();
    auto kb = build_knowledge_base(el::classify(el::normalize(ontology)), ontology);
    std::vector<model::Triple> triples = {id_triple("graphene", "is_a", "conductor"),
                                          id_triple("graphene", "zaps", "conductor"),
                                          id_triple("graphene", "has_property", "conductor")};
    auto verdicts = verify(triples, kb, battery_matches(), 64);
    auto report = report_json(verdicts);
    CHECK(report["summary"]["verified"] == 1);
    CHECK(report["summary"]["unmapped"] == 1);
    CHECK(report["summary"]["unknown"] == 1);
    CHECK(report["summary"]["refuted"] == 0);
    CHECK(report["verdicts"].size() == 3);
    CHECK(report["verdicts"][0]["status"] == "verified");

    CHECK(report_to_string(verdicts) == report_to_string(verify(triples, kb, battery_matches(), 64)));
}

TEST_CASE("empty verdict list yields an all-zero summary") {
    auto report = report_json({});
    CHECK(report["summary"]["verified"] == 0);
    CHECK(report["summary"]["refuted"] == 0);
    CHECK(report["summary"]["unknown"] == 0);
    CHECK(report["summary"]["unmapped"] == 0);
    CHECK(report["verdicts"].empty());
}

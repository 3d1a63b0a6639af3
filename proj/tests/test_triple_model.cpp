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

#include "json.hpp"
#include "support/generators.hpp"
#include "triplecheck/errors.hpp"
#include "triplecheck/triple_model.hpp"

using namespace triplecheck;
using namespace triplecheck::model;

TEST_CASE("canonicalize applies case-fold, camelCase and separator splits") {
    CHECK(canonicalize("HighConductivity") == "high_conductivity");
    CHECK(canonicalize("heart attack") == "heart_attack");
    CHECK(canonicalize("isA") == "is_a");
    CHECK(canonicalize("HTTPServer") == "http_server");
    CHECK(canonicalize("patient1") == "patient1");
    CHECK(canonicalize("gen_1") == "gen_1");
    CHECK(canonicalize("  spaced   out  ") == "spaced_out");
    CHECK(canonicalize("has-Property") == "has_property");
}

TEST_CASE("canonicalize rejects inputs without alphanumeric content") {
    CHECK_THROWS_AS(canonicalize("   "), EmptyTermError);
    CHECK_THROWS_AS(canonicalize(""), EmptyTermError);
    CHECK_THROWS_AS(canonicalize("--!!--"), EmptyTermError);
}

TEST_CASE("canonicalize is idempotent") {
    testgen::Rng rng(20260810);
    for (int i = 0; i < 500; ++i) {
        std::string raw = testgen::random_word(rng, 1, 12, "aBc_ D-7x");
        std::string once;
        try {
            once = canonicalize(raw);
        } catch (const EmptyTermError&) {
            continue;
        }
        CAPTURE(raw);
        CHECK(canonicalize(once) == once);
        CHECK(is_canonical(once));
    }
}

TEST_CASE("parse_jsonld maps a flat node to triples") {
    auto doc = parse_jsonld(R"({"@context":{"ex":"http://ex.org/"},)"
                            R"("@id":"ex:graphene","ex:hasProperty":{"@id":"ex:highConductivity"}})");
    REQUIRE(doc.triples.size() == 1);
    CHECK(doc.triples[0].subject == "graphene");
    CHECK(doc.triples[0].predicate == "has_property");
    CHECK(doc.triples[0].object == TripleObject::make_id("high_conductivity"));
    CHECK(doc.context.at("ex") == "http://ex.org/");
}

TEST_CASE("parse_jsonld accepts a node with no predicates") {
    auto doc = parse_jsonld(R"({"@id":"ex:a"})");
    CHECK(doc.triples.empty());
}

TEST_CASE("parse_jsonld rejects constructs outside the subset") {
    SUBCASE("named graph") {
        try {
            parse_jsonld(R"({"@graph":[{"@id":"ex:a"}]})");
            FAIL("expected UnsupportedFeature");
        } catch (const UnsupportedFeatureError& e) {
            CHECK(e.path == "@graph");
        }
    }
    SUBCASE("reverse") {
        CHECK_THROWS_AS(parse_jsonld(R"({"@id":"ex:a","@reverse":{"ex:p":{"@id":"ex:b"}}})"),
                        UnsupportedFeatureError);
    }
    SUBCASE("blank node id") {
        CHECK_THROWS_AS(parse_jsonld(R"({"@id":"_:b0","ex:p":{"@id":"ex:b"}})"),
                        UnsupportedFeatureError);
    }
    SUBCASE("anonymous object node") {
        CHECK_THROWS_AS(parse_jsonld(R"({"@id":"ex:a","ex:p":{"ex:q":{"@id":"ex:b"}}})"),
                        UnsupportedFeatureError);
    }
    SUBCASE("malformed json") {
        CHECK_THROWS_AS(parse_jsonld("{"), JsonSyntaxError);
    }
    SUBCASE("node with predicates but no id") {
        CHECK_THROWS_AS(parse_jsonld(R"({"ex:p":{"@id":"ex:b"}})"), MissingIdError);
    }
}

TEST_CASE("parse_jsonld reads literals with unit suffixes") {
    auto doc = parse_jsonld(R"({"@id":"g","conductivity":"350 S/cm","note":"very stable","count":7})");
    REQUIRE(doc.triples.size() == 3);
    auto find = [&](const std::string& pred) {
        for (const auto& t : doc.triples)
            if (t.predicate == pred) return t.object;
        FAIL("predicate not found: ", pred);
        return TripleObject{};
    };
    CHECK(find("conductivity") == TripleObject::make_literal("350", "S/cm"));
    CHECK(find("note") == TripleObject::make_literal("very stable"));
    CHECK(find("count") == TripleObject::make_literal("7"));
}

TEST_CASE("serialize_jsonld writes an empty document as a bare context") {
    TripleDocument doc;
    auto text = serialize_jsonld(doc);
    auto j = nlohmann::json::parse(text);
    CHECK(j.is_object());
    CHECK(j.at("@context").empty());
    CHECK(j.size() == 1);
    auto back = parse_jsonld(text);
    CHECK(back == doc);
}

TEST_CASE("serialize_jsonld is byte-stable") {
    TripleDocument doc;
    doc.context["ex"] = "http://ex.org/";
    Triple t;
    t.subject = "graphene";
    t.predicate = "has_property";
    t.object = TripleObject::make_id("high_conductivity");
    doc.triples.push_back(t);
    CHECK(serialize_jsonld(doc) == serialize_jsonld(doc));
}

TEST_CASE("serialize_jsonld groups same-subject triples into one node") {
    TripleDocument doc;
    Triple a;
    a.subject = "graphene";
    a.predicate = "has_property";
    a.object = TripleObject::make_id("high_conductivity");
    Triple b;
    b.subject = "graphene";
    b.predicate = "is_a";
    b.object = TripleObject::make_id("conductor");
    doc.triples = {a, b};

    auto text = serialize_jsonld(doc);
    auto j = nlohmann::json::parse(text);
    REQUIRE(j.is_object());
    CHECK(j.at("@id") == "graphene");
    CHECK(j.contains("has_property"));
    CHECK(j.contains("is_a"));

    auto back = parse_jsonld(text);
    CHECK(back == doc.canonicalized());
}

TEST_CASE("parse/serialize round trip on random documents") {
    testgen::Rng rng(7);
    for (int i = 0; i < 120; ++i) {
        auto doc = testgen::random_document(rng);
        auto text = serialize_jsonld(doc);
        CAPTURE(text);
        auto back = parse_jsonld(text);
        CHECK(back == doc.canonicalized());
    }
}

namespace {

Vocabulary small_vocab() {
    Vocabulary v;
    for (auto [id, kind] : {std::pair{"patient1", TermKind::Concept},
                            std::pair{"has_symptom", TermKind::Relation},
                            std::pair{"fever", TermKind::Concept}}) {
        v.terms.emplace(id, Term{id, id, kind});
    }
    return v;
}

} // namespace

TEST_CASE("validate_vocabulary accepts resolvable triples") {
    TripleDocument doc;
    Triple t;
    t.subject = "patient1";
    t.predicate = "has_symptom";
    t.object = TripleObject::make_id("fever");
    doc.triples.push_back(t);
    auto report = validate_vocabulary(doc, small_vocab());
    CHECK(report.ok());
}

TEST_CASE("validate_vocabulary flags ids missing from the vocabulary") {
    TripleDocument doc;
    Triple t;
    t.subject = "patient1";
    t.predicate = "cures";
    t.object = TripleObject::make_id("fever");
    doc.triples.push_back(t);
    auto report = validate_vocabulary(doc, small_vocab());
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].triple_index == 0);
    CHECK(report.violations[0].role == TripleRole::predicate);
    CHECK(report.violations[0].id == "cures");
}

TEST_CASE("validate_vocabulary resolves synonyms") {
    auto vocab = small_vocab();
    vocab.synonyms["fever"].insert("High Temperature");
    TripleDocument doc;
    Triple t;
    t.subject = "patient1";
    t.predicate = "has_symptom";
    t.object = TripleObject::make_id("high_temperature");
    doc.triples.push_back(t);
    CHECK(validate_vocabulary(doc, vocab).ok());
}

TEST_CASE("validate_vocabulary on the empty document") {
    CHECK(validate_vocabulary(TripleDocument{}, small_vocab()).ok());
}

TEST_CASE("vocabulary file parsing") {
    auto vocab = parse_vocabulary(R"({
        "terms":[{"id":"symptom","label":"Symptom","kind":"concept"},
                 {"id":"linkedTo","label":"linked to","kind":"relation"}],
        "relationships":[["symptom","linkedTo","symptom"]],
        "synonyms":{"symptom":["sign"]}
    })");
    CHECK(vocab.terms.count("symptom") == 1);
    CHECK(vocab.terms.count("linked_to") == 1);
    REQUIRE(vocab.relationships.size() == 1);
    CHECK(vocab.relationships[0][1] == "linked_to");
    CHECK(vocab.resolves("sign"));

    CHECK_THROWS_AS(parse_vocabulary("not json"), JsonSyntaxError);
    CHECK_THROWS_AS(parse_vocabulary(R"({"terms":[{"id":"a"},{"id":"a"}]})"), Error);
    CHECK_THROWS_AS(
        parse_vocabulary(R"({"terms":[{"id":"a"}],"relationships":[["a","missing","a"]]})"), Error);
}

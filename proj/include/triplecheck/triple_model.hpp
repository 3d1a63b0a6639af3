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

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace triplecheck::model {

/// Canonical term id: case-folded, split on camelCase boundaries and
/// non-alphanumeric runs, tokens joined by "_". Idempotent.
/// Throws EmptyTermError when no alphanumeric content remains.
std::string canonicalize(std::string_view surface);

/// True iff `id` is already in canonical form (non-empty, [a-z0-9_] only,
/// and a fixpoint of canonicalize).
bool is_canonical(std::string_view id);

enum class TermKind { Concept, Relation, Attribute };

std::string to_string(TermKind kind);
TermKind term_kind_from_string(const std::string& text);

struct Term {
    std::string id;    // canonical
    std::string label; // original surface form
    TermKind kind = TermKind::Concept;

    auto operator<=>(const Term&) const = default;
};

/// Map concept/term id -> surface strings that name it.
using SynonymTable = std::map<std::string, std::set<std::string>>;

struct Vocabulary {
    std::map<std::string, Term> terms; // keyed by canonical id
    std::vector<std::array<std::string, 3>> relationships; // (subject, relation, object) templates
    SynonymTable synonyms;

    bool empty() const { return terms.empty(); }

    /// Membership test used by validation: id is a term id or resolves
    /// through a synonym entry (canonicalized comparison both ways).
    bool resolves(const std::string& id) const;

    /// Checks term-id uniqueness and that relationship templates reference
    /// declared ids. Throws triplecheck::Error on violation.
    void validate() const;
};

/// Parses the vocabulary file format:
/// {"terms":[{"id","label","kind"}...], "relationships":[[s,r,o]...], "synonyms":{id:[...]}}
Vocabulary parse_vocabulary(const std::string& json_text);
Vocabulary load_vocabulary(const std::string& path);

enum class Provenance { llm, expert, feature_extractor };

std::string to_string(Provenance p);

/// Object position of a triple: either a node id or a literal with an
/// optional unit tag ("350 S/cm" -> value "350", unit "S/cm").
struct TripleObject {
    enum class Kind { id, literal };
    Kind kind = Kind::id;
    std::string value; // id, or literal value
    std::string unit;  // empty unless literal carries a unit

    static TripleObject make_id(std::string id);
    static TripleObject make_literal(std::string value, std::string unit = "");

    auto operator<=>(const TripleObject&) const = default;
};

struct Triple {
    std::string subject;   // canonical term or individual id
    std::string predicate; // canonical term id
    TripleObject object;
    Provenance provenance = Provenance::llm;
    std::string source_ref; // optional

    auto operator<=>(const Triple&) const = default;
};

struct TripleDocument {
    std::map<std::string, std::string> context; // prefix -> IRI
    std::vector<Triple> triples;

    /// Copy with triples in canonical (sorted) order.
    TripleDocument canonicalized() const;

    bool operator==(const TripleDocument&) const = default;
};

/// Reads the supported JSON-LD subset: flat node objects with @id, an
/// @context of prefix->IRI string pairs, plain string/number literals and
/// {"@id": ...} references. Named graphs, blank nodes, @reverse and other
/// keywords are rejected with UnsupportedFeatureError carrying the JSON path.
TripleDocument parse_jsonld(const std::string& text);

/// Deterministic writer: triples grouped by subject, subjects and predicates
/// sorted; parse_jsonld(serialize_jsonld(d)) == d.canonicalized().
std::string serialize_jsonld(const TripleDocument& doc);

enum class TripleRole { subject, predicate, object };

std::string to_string(TripleRole role);

struct ValidationReport {
    struct Violation {
        std::size_t triple_index;
        TripleRole role;
        std::string id;

        auto operator<=>(const Violation&) const = default;
    };
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Lists, per triple, every subject/predicate/object id that the vocabulary
/// does not resolve. Literal objects are not checked. Violations are data,
/// not errors.
ValidationReport validate_vocabulary(const TripleDocument& doc, const Vocabulary& vocab);

} // namespace triplecheck::model

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

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace triplecheck::el {

/// Reserved name for the universal concept in ontology files and in the
/// classified relation.
inline constexpr const char* kTop = "top";

/// Prefix reserved for concepts introduced by normalization.
inline constexpr const char* kGeneratedPrefix = "gen_";

/// EL concept expression: named | top | conjunction | existential restriction.
struct Concept {
    enum class Kind { Named, Top, And, Some };

    Kind kind = Kind::Top;
    std::string name;               // Named: concept id
    std::string role;               // Some: role id
    std::vector<Concept> children;  // And: >= 2 conjuncts; Some: exactly the filler

    static Concept named(std::string id);
    static Concept top();
    static Concept conj(std::vector<Concept> conjuncts);
    static Concept some(std::string role, Concept filler);

    bool is_atomic() const { return kind == Kind::Named || kind == Kind::Top; }
    /// Atomic concepts are keyed by name; top uses kTop.
    const std::string& atom_name() const;

    bool operator==(const Concept&) const = default;
};

bool operator<(const Concept& a, const Concept& b);

std::string to_string(const Concept& c);

struct Axiom {
    Concept lhs;
    Concept rhs; // lhs subsumed by rhs

    bool operator==(const Axiom&) const = default;
};

struct ConceptAssertion {
    std::string individual;
    std::string concept_id;

    auto operator<=>(const ConceptAssertion&) const = default;
};

struct RoleAssertion {
    std::string subject;
    std::string role;
    std::string object;

    auto operator<=>(const RoleAssertion&) const = default;
};

struct Ontology {
    std::set<std::string> concepts;
    std::set<std::string> roles;
    std::set<std::string> individuals;
    std::vector<Axiom> tbox;
    std::vector<ConceptAssertion> concept_assertions;
    std::vector<RoleAssertion> role_assertions;

    /// Every id referenced by an axiom or assertion must be declared, and
    /// no declared id may use the reserved "gen_" prefix or the name "top".
    void validate() const;
};

/// Ontology file format:
/// {"concepts":[...], "roles":[...], "tbox":[{"lhs":expr,"rhs":expr}...],
///  "individuals":[...], "assertions":[[i,c] | [i,r,j] ...]}
/// where expr is {"named":id} | {"top":true} | {"and":[...]} |
/// {"some":{"role":id,"filler":expr}}. Ids are canonicalized on load.
Ontology parse_ontology(const std::string& json_text);
Ontology load_ontology(const std::string& path);

/// TBox rewritten into the four EL normal forms. The A/B slots hold named
/// concept ids or kTop; names starting with gen_ are normalization-fresh.
struct NormalizedTBox {
    struct Nf1 { std::string sub, super; auto operator<=>(const Nf1&) const = default; };
    struct Nf2 { std::string left, right, super; auto operator<=>(const Nf2&) const = default; };
    struct Nf3 { std::string sub, role, filler; auto operator<=>(const Nf3&) const = default; };
    struct Nf4 { std::string role, filler, super; auto operator<=>(const Nf4&) const = default; };

    std::vector<Nf1> nf1;
    std::vector<Nf2> nf2;
    std::vector<Nf3> nf3;
    std::vector<Nf4> nf4;

    std::set<std::string> declared_concepts; // original (non-generated) ids
    std::set<std::string> all_concepts;      // declared + generated
    std::set<std::string> roles;
};

NormalizedTBox normalize(const Ontology& ontology);

/// Saturated subsumption relation over declared named concepts; every pair
/// (a, a) and (a, top) is present for each declared a.
using SubsumptionRelation = std::set<std::pair<std::string, std::string>>;

SubsumptionRelation classify(const NormalizedTBox& tbox);

/// True iff (a, b) is in the saturated relation. Throws UnknownConceptError
/// for ids that are neither declared nor kTop.
bool is_subsumed(const std::string& a, const std::string& b, const SubsumptionRelation& classified);

/// Neighbor view used by structure matching: direct super/subconcepts and
/// existential fillers co-occurring with `concept_id` in TBox axioms.
std::set<std::string> direct_neighbors(const std::string& concept_id, const Ontology& ontology);

/// Individuals asserted (directly) to belong to `concept_id`.
std::set<std::string> asserted_instances(const std::string& concept_id, const Ontology& ontology);

} // namespace triplecheck::el

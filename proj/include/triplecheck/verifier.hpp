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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "triplecheck/asp.hpp"
#include "triplecheck/el_reasoner.hpp"
#include "triplecheck/triple_model.hpp"

namespace triplecheck::verifier {

/// Encoding predicates reserved for the ontology compilation; expert rule
/// files may use them only at these arities.
const std::map<std::string, std::size_t>& reserved_predicates();

/// Predicate id that turns a triple into a concept-membership claim.
inline constexpr const char* kIsA = "is_a";

/// Compiles a saturated classification and the ABox into ASP:
/// sub/2 facts per subsumption pair, inst/2 and rel/3 facts per assertion,
/// some_sub/3 facts per NF4 axiom, plus the two fixed bridge rules.
asp::Program compile_ontology(const el::SubsumptionRelation& classified,
                              const el::Ontology& ontology);

/// Accepted matches: triple term id -> ontology id (concepts, roles, or
/// individuals mapped to themselves).
using MatchMap = std::map<std::string, std::string>;

/// Triple rendered against a match map. When every id is mapped, `atom`
/// holds the claim: inst(s,o) for is_a predicates, triple(s,p,o) otherwise.
struct MappedTriple {
    bool mapped = false;
    asp::Atom atom;
    std::vector<std::string> unmapped_ids;
};

MappedTriple map_triple(const model::Triple& triple, const MatchMap& matches);

struct CompiledTriples {
    std::vector<asp::Rule> facts;        // one fact per fully mapped triple
    std::vector<std::size_t> unmapped;   // indices of triples left unmapped
};

CompiledTriples compile_triples(const std::vector<model::Triple>& triples, const MatchMap& matches);

struct KnowledgeBase {
    asp::Program ontology_program; // compiled facts + bridge rules
    asp::Program domain_rules;     // expert-supplied
    asp::Program external_facts;   // inst/2 and rel/3 facts from outside

    asp::Program combined() const;
};

/// Assembles and checks a knowledge base (reserved-predicate arities,
/// fact-only external input, cross-file arity consistency).
KnowledgeBase build_knowledge_base(const el::SubsumptionRelation& classified,
                                   const el::Ontology& ontology,
                                   const asp::Program& domain_rules = {},
                                   const asp::Program& external_facts = {});

/// Parses an expert rule file (.lp) and rejects reserved-predicate misuse.
asp::Program load_domain_rules(const std::string& path);

/// Parses an external concept-fact file: facts only, inst/2 and rel/3 only.
asp::Program load_external_facts(const std::string& path);

enum class Status { verified, refuted, unknown, unmapped };

std::string to_string(Status s);

struct Explanation {
    std::vector<std::string> derived_by; // ground rules deriving the claim
    struct ConstraintCite {
        std::string constraint;
        std::vector<std::string> witnesses;
    };
    std::vector<ConstraintCite> violated; // constraints rejecting the claim
    std::string note;                     // unknown / unmapped detail
};

struct Verdict {
    model::Triple triple;
    Status status = Status::unknown;
    Explanation explanation;
};

/// Per-triple verdicts against the knowledge base:
///  - verified: the claim atom holds in every stable model of the KB;
///  - refuted: KB + claim-as-fact has no stable model;
///  - unknown: neither;
///  - unmapped: some term had no accepted ontology match.
/// Throws InconsistentKnowledgeBaseError when the KB alone has no stable
/// model, and Error("ModelLimitExceeded") past `model_limit`.
std::vector<Verdict> verify(const std::vector<model::Triple>& triples, const KnowledgeBase& kb,
                            const MatchMap& matches, std::size_t model_limit = 1000);

/// Deterministic report: verdict entries in input order plus status counts.
nlohmann::json report_json(const std::vector<Verdict>& verdicts);
std::string report_to_string(const std::vector<Verdict>& verdicts);

} // namespace triplecheck::verifier

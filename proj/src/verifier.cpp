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

#include "triplecheck/verifier.hpp"

#include <algorithm>

#include "triplecheck/errors.hpp"

namespace triplecheck::verifier {

using asp::Atom;
using asp::Program;
using asp::Rule;
using asp::Term;

const std::map<std::string, std::size_t>& reserved_predicates() {
    static const std::map<std::string, std::size_t> reserved = {
        {"sub", 2}, {"inst", 2}, {"rel", 3}, {"some_sub", 3}, {"triple", 3}};
    return reserved;
}

namespace {

Rule fact(Atom atom) {
    Rule r;
    r.head = std::move(atom);
    return r;
}

Atom atom2(const char* pred, Term a, Term b) { return Atom{pred, {std::move(a), std::move(b)}}; }

Atom atom3(const char* pred, Term a, Term b, Term c) {
    return Atom{pred, {std::move(a), std::move(b), std::move(c)}};
}

Term id_term(const std::string& id) { return Term::constant_for_id(id); }

void check_reserved_use(const Program& program, const std::string& origin) {
    auto check = [&](const Atom& atom) {
        auto it = reserved_predicates().find(atom.predicate);
        if (it != reserved_predicates().end() && atom.args.size() != it->second) {
            throw Error("ReservedPredicate",
                        origin + " uses " + atom.predicate + "/" + std::to_string(atom.args.size()) +
                            "; reserved as " + atom.predicate + "/" + std::to_string(it->second));
        }
    };
    for (const auto& rule : program.rules) {
        if (rule.head) check(*rule.head);
        for (const auto& a : rule.positive) check(a);
        for (const auto& a : rule.negative) check(a);
    }
}

void check_arity_consistency(const Program& program) {
    std::map<std::string, std::size_t> arities;
    auto check = [&](const Atom& atom) {
        auto [it, fresh] = arities.try_emplace(atom.predicate, atom.args.size());
        if (!fresh && it->second != atom.args.size()) throw ArityMismatchError(atom.predicate);
    };
    for (const auto& rule : program.rules) {
        if (rule.head) check(*rule.head);
        for (const auto& a : rule.positive) check(a);
        for (const auto& a : rule.negative) check(a);
    }
}

} // namespace

asp::Program compile_ontology(const el::SubsumptionRelation& classified,
                              const el::Ontology& ontology) {
    Program out;
    for (const auto& [sub, super] : classified) {
        out.rules.push_back(fact(atom2("sub", id_term(sub), id_term(super))));
    }
    for (const auto& a : ontology.concept_assertions) {
        out.rules.push_back(fact(atom2("inst", id_term(a.individual), id_term(a.concept_id))));
    }
    for (const auto& a : ontology.role_assertions) {
        out.rules.push_back(
            fact(atom3("rel", id_term(a.subject), id_term(a.role), id_term(a.object))));
    }
    for (const auto& nf4 : normalize(ontology).nf4) {
        out.rules.push_back(fact(
            atom3("some_sub", id_term(nf4.role), id_term(nf4.filler), id_term(nf4.super))));
    }

    // inst(X,C2) :- inst(X,C1), sub(C1,C2).
    Rule up;
    up.head = atom2("inst", Term::variable("X"), Term::variable("C2"));
    up.positive = {atom2("inst", Term::variable("X"), Term::variable("C1")),
                   atom2("sub", Term::variable("C1"), Term::variable("C2"))};
    out.rules.push_back(std::move(up));

    // inst(X,C) :- rel(X,R,Y), inst(Y,D), some_sub(R,D,C).
    Rule via_role;
    via_role.head = atom2("inst", Term::variable("X"), Term::variable("C"));
    via_role.positive = {
        atom3("rel", Term::variable("X"), Term::variable("R"), Term::variable("Y")),
        atom2("inst", Term::variable("Y"), Term::variable("D")),
        atom3("some_sub", Term::variable("R"), Term::variable("D"), Term::variable("C"))};
    out.rules.push_back(std::move(via_role));

    return out;
}

MappedTriple map_triple(const model::Triple& triple, const MatchMap& matches) {
    MappedTriple out;
    auto lookup = [&](const std::string& id) -> std::optional<std::string> {
        auto it = matches.find(id);
        if (it == matches.end()) return std::nullopt;
        return it->second;
    };

    auto subject = lookup(triple.subject);
    auto predicate = lookup(triple.predicate);
    if (!subject) out.unmapped_ids.push_back(triple.subject);
    if (!predicate) out.unmapped_ids.push_back(triple.predicate);

    std::optional<Term> object_term;
    if (triple.object.kind == model::TripleObject::Kind::id) {
        if (auto object = lookup(triple.object.value)) {
            object_term = id_term(*object);
        } else {
            out.unmapped_ids.push_back(triple.object.value);
        }
    } else {
        // Literals need no ontology mapping: integers become integer
        // constants, everything else a quoted string (unit reattached).
        const auto& value = triple.object.value;
        bool integral = !value.empty() &&
                        value.find_first_not_of("0123456789", value[0] == '-' ? 1 : 0) ==
                            std::string::npos &&
                        value != "-";
        if (integral && triple.object.unit.empty()) {
            object_term = Term::number(std::stoll(value));
        } else {
            std::string text = value;
            if (!triple.object.unit.empty()) text += " " + triple.object.unit;
            object_term = Term::quoted(text);
        }
    }

    if (!out.unmapped_ids.empty()) return out;
    out.mapped = true;
    if (*predicate == kIsA && triple.object.kind == model::TripleObject::Kind::id) {
        out.atom = atom2("inst", id_term(*subject), *object_term);
    } else {
        out.atom = atom3("triple", id_term(*subject), id_term(*predicate), *object_term);
    }
    return out;
}

CompiledTriples compile_triples(const std::vector<model::Triple>& triples, const MatchMap& matches) {
    CompiledTriples out;
    for (std::size_t i = 0; i < triples.size(); ++i) {
        auto mapped = map_triple(triples[i], matches);
        if (mapped.mapped) {
            out.facts.push_back(fact(mapped.atom));
        } else {
            out.unmapped.push_back(i);
        }
    }
    return out;
}

asp::Program KnowledgeBase::combined() const {
    Program out = ontology_program;
    out.rules.insert(out.rules.end(), domain_rules.rules.begin(), domain_rules.rules.end());
    out.rules.insert(out.rules.end(), external_facts.rules.begin(), external_facts.rules.end());
    return out;
}

KnowledgeBase build_knowledge_base(const el::SubsumptionRelation& classified,
                                   const el::Ontology& ontology, const asp::Program& domain_rules,
                                   const asp::Program& external_facts) {
    KnowledgeBase kb;
    kb.ontology_program = compile_ontology(classified, ontology);
    check_reserved_use(domain_rules, "expert rule file");
    kb.domain_rules = domain_rules;
    for (const auto& rule : external_facts.rules) {
        bool ok = rule.is_fact() && rule.head->is_ground() &&
                  ((rule.head->predicate == "inst" && rule.head->args.size() == 2) ||
                   (rule.head->predicate == "rel" && rule.head->args.size() == 3));
        if (!ok) {
            throw Error("BadExternalFacts",
                        "external concept facts are restricted to ground inst/2 and rel/3 facts");
        }
    }
    kb.external_facts = external_facts;
    check_arity_consistency(kb.combined());
    return kb;
}

asp::Program load_domain_rules(const std::string& path) {
    Program p = asp::load_program(path);
    check_reserved_use(p, path);
    return p;
}

asp::Program load_external_facts(const std::string& path) {
    Program p = asp::load_program(path);
    for (const auto& rule : p.rules) {
        bool ok = rule.is_fact() && rule.head->is_ground() &&
                  ((rule.head->predicate == "inst" && rule.head->args.size() == 2) ||
                   (rule.head->predicate == "rel" && rule.head->args.size() == 3));
        if (!ok) {
            throw Error("BadExternalFacts",
                        path + ": external concept facts are restricted to ground inst/2 and rel/3 facts");
        }
    }
    return p;
}

std::string to_string(Status s) {
    switch (s) {
    case Status::verified: return "verified";
    case Status::refuted: return "refuted";
    case Status::unknown: return "unknown";
    case Status::unmapped: return "unmapped";
    }
    return "unknown";
}

namespace {

// Upper bound of derivable atoms: least model of the program with every
// negative literal deleted. Used to pick witnesses for explanations.
asp::AtomSet saturated_candidate(const Program& ground_program) {
    return asp::minimal_model(asp::reduct(ground_program, {})).atoms;
}

std::vector<Explanation::ConstraintCite> cite_violations(const Program& ground_program) {
    auto candidate = saturated_candidate(ground_program);
    std::vector<Explanation::ConstraintCite> cites;
    for (const auto& violation : asp::explain_violations(ground_program, candidate)) {
        Explanation::ConstraintCite cite;
        cite.constraint = asp::to_string(violation.constraint);
        for (const auto& w : violation.witnesses) cite.witnesses.push_back(asp::to_string(w));
        cites.push_back(std::move(cite));
    }
    return cites;
}

bool in_every_model(const Atom& atom, const std::vector<asp::AtomSet>& models) {
    return std::all_of(models.begin(), models.end(),
                       [&](const asp::AtomSet& m) { return m.count(atom) > 0; });
}

} // namespace

std::vector<Verdict> verify(const std::vector<model::Triple>& triples, const KnowledgeBase& kb,
                            const MatchMap& matches, std::size_t model_limit) {
    Program base_program = kb.combined();
    Program base_ground = asp::ground(base_program);
    auto base = asp::stable_models(base_ground, model_limit);
    if (base.truncated) {
        throw Error("ModelLimitExceeded",
                    "knowledge base has more than " + std::to_string(model_limit) +
                        " stable models; raise modelLimit");
    }
    if (base.models.empty()) {
        std::string details;
        for (const auto& cite : cite_violations(base_ground)) {
            if (!details.empty()) details += "; ";
            details += cite.constraint;
        }
        throw InconsistentKnowledgeBaseError(details);
    }

    std::vector<Verdict> verdicts;
    verdicts.reserve(triples.size());
    for (const auto& triple : triples) {
        Verdict verdict;
        verdict.triple = triple;

        auto mapped = map_triple(triple, matches);
        if (!mapped.mapped) {
            verdict.status = Status::unmapped;
            std::string note = "no accepted ontology match for:";
            for (const auto& id : mapped.unmapped_ids) note += " " + id;
            verdict.explanation.note = note;
            verdicts.push_back(std::move(verdict));
            continue;
        }

        if (in_every_model(mapped.atom, base.models)) {
            verdict.status = Status::verified;
            for (const auto& rule : asp::derivation(base_ground, base.models.front(), mapped.atom)) {
                verdict.explanation.derived_by.push_back(asp::to_string(rule));
            }
            verdicts.push_back(std::move(verdict));
            continue;
        }

        Program with_claim = base_program;
        with_claim.rules.push_back(fact(mapped.atom));
        Program claim_ground = asp::ground(with_claim);
        auto with_models = asp::stable_models(claim_ground, model_limit);
        if (with_models.models.empty()) {
            verdict.status = Status::refuted;
            verdict.explanation.violated = cite_violations(claim_ground);
            if (verdict.explanation.violated.empty()) {
                verdict.explanation.note =
                    "claim blocks every stable model without a single violated constraint";
            }
        } else {
            verdict.status = Status::unknown;
            verdict.explanation.note = "claim " + asp::to_string(mapped.atom) +
                                       " is consistent with the knowledge base but not entailed";
        }
        verdicts.push_back(std::move(verdict));
    }
    return verdicts;
}

namespace {

nlohmann::json triple_json(const model::Triple& t) {
    nlohmann::json j;
    j["subject"] = t.subject;
    j["predicate"] = t.predicate;
    if (t.object.kind == model::TripleObject::Kind::id) {
        j["object"] = {{"id", t.object.value}};
    } else {
        nlohmann::json o;
        o["value"] = t.object.value;
        if (!t.object.unit.empty()) o["unit"] = t.object.unit;
        j["object"] = o;
    }
    j["provenance"] = model::to_string(t.provenance);
    if (!t.source_ref.empty()) j["sourceRef"] = t.source_ref;
    return j;
}

} // namespace

nlohmann::json report_json(const std::vector<Verdict>& verdicts) {
    nlohmann::json entries = nlohmann::json::array();
    std::map<std::string, int> counts = {
        {"verified", 0}, {"refuted", 0}, {"unknown", 0}, {"unmapped", 0}};
    for (const auto& v : verdicts) {
        nlohmann::json e;
        e["triple"] = triple_json(v.triple);
        e["status"] = to_string(v.status);
        nlohmann::json explanation = nlohmann::json::object();
        if (!v.explanation.derived_by.empty()) explanation["derivedBy"] = v.explanation.derived_by;
        if (!v.explanation.violated.empty()) {
            nlohmann::json violated = nlohmann::json::array();
            for (const auto& cite : v.explanation.violated) {
                violated.push_back({{"constraint", cite.constraint}, {"witnesses", cite.witnesses}});
            }
            explanation["violated"] = violated;
        }
        if (!v.explanation.note.empty()) explanation["note"] = v.explanation.note;
        e["explanation"] = explanation;
        entries.push_back(std::move(e));
        counts[to_string(v.status)] += 1;
    }
    nlohmann::json report;
    report["verdicts"] = entries;
    report["summary"] = counts;
    return report;
}

std::string report_to_string(const std::vector<Verdict>& verdicts) {
    return report_json(verdicts).dump(2) + "\n";
}

} // namespace triplecheck::verifier

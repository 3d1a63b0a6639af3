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

#include "triplecheck/el_reasoner.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "triplecheck/errors.hpp"
#include "triplecheck/triple_model.hpp"

namespace triplecheck::el {

using nlohmann::json;

Concept Concept::named(std::string id) {
    Concept c;
    c.kind = Kind::Named;
    c.name = std::move(id);
    return c;
}

Concept Concept::top() {
    Concept c;
    c.kind = Kind::Top;
    return c;
}

Concept Concept::conj(std::vector<Concept> conjuncts) {
    Concept c;
    c.kind = Kind::And;
    c.children = std::move(conjuncts);
    return c;
}

Concept Concept::some(std::string role, Concept filler) {
    Concept c;
    c.kind = Kind::Some;
    c.role = std::move(role);
    c.children.push_back(std::move(filler));
    return c;
}

const std::string& Concept::atom_name() const {
    static const std::string top_name = kTop;
    return kind == Kind::Top ? top_name : name;
}

bool operator<(const Concept& a, const Concept& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.name != b.name) return a.name < b.name;
    if (a.role != b.role) return a.role < b.role;
    return std::lexicographical_compare(a.children.begin(), a.children.end(),
                                        b.children.begin(), b.children.end());
}

std::string to_string(const Concept& c) {
    switch (c.kind) {
    case Concept::Kind::Named: return c.name;
    case Concept::Kind::Top: return kTop;
    case Concept::Kind::And: {
        std::string out = "(";
        for (std::size_t i = 0; i < c.children.size(); ++i) {
            if (i) out += " and ";
            out += to_string(c.children[i]);
        }
        return out + ")";
    }
    case Concept::Kind::Some:
        return "(some " + c.role + " " + to_string(c.children[0]) + ")";
    }
    return "?";
}

namespace {

void collect_named(const Concept& c, std::set<std::string>& concepts, std::set<std::string>& roles) {
    if (c.kind == Concept::Kind::Named) concepts.insert(c.name);
    if (c.kind == Concept::Kind::Some) roles.insert(c.role);
    for (const auto& child : c.children) collect_named(child, concepts, roles);
}

void check_structure(const Concept& c) {
    if (c.kind == Concept::Kind::And && c.children.size() < 2) {
        throw Error("BadOntology", "conjunction needs at least 2 conjuncts");
    }
    if (c.kind == Concept::Kind::Some && c.children.size() != 1) {
        throw Error("BadOntology", "existential restriction needs exactly one filler");
    }
    if (c.kind == Concept::Kind::Named && c.name.empty()) {
        throw Error("BadOntology", "empty concept name");
    }
    for (const auto& child : c.children) check_structure(child);
}

void check_reserved(const std::string& id) {
    if (id.rfind(kGeneratedPrefix, 0) == 0) {
        throw Error("BadOntology", "id \"" + id + "\" uses the reserved gen_ prefix");
    }
    if (id == kTop) {
        throw Error("BadOntology", "\"top\" is reserved for the universal concept");
    }
}

} // namespace

void Ontology::validate() const {
    for (const auto& id : concepts) check_reserved(id);
    for (const auto& id : roles) check_reserved(id);
    for (const auto& id : individuals) check_reserved(id);

    auto require_concept = [&](const std::string& id) {
        if (!concepts.count(id)) throw Error("BadOntology", "undeclared concept \"" + id + "\"");
    };
    auto require_role = [&](const std::string& id) {
        if (!roles.count(id)) throw Error("BadOntology", "undeclared role \"" + id + "\"");
    };
    auto require_individual = [&](const std::string& id) {
        if (!individuals.count(id)) throw Error("BadOntology", "undeclared individual \"" + id + "\"");
    };

    for (const auto& axiom : tbox) {
        check_structure(axiom.lhs);
        check_structure(axiom.rhs);
        std::set<std::string> cs, rs;
        collect_named(axiom.lhs, cs, rs);
        collect_named(axiom.rhs, cs, rs);
        for (const auto& c : cs) require_concept(c);
        for (const auto& r : rs) require_role(r);
    }
    for (const auto& a : concept_assertions) {
        require_individual(a.individual);
        require_concept(a.concept_id);
    }
    for (const auto& a : role_assertions) {
        require_individual(a.subject);
        require_role(a.role);
        require_individual(a.object);
    }
}

namespace {

Concept concept_from_json(const json& j) {
    if (!j.is_object()) throw Error("BadOntology", "concept expression must be an object");
    if (j.contains("named")) {
        return Concept::named(model::canonicalize(j.at("named").get<std::string>()));
    }
    if (j.contains("top")) {
        return Concept::top();
    }
    if (j.contains("and")) {
        std::vector<Concept> conjuncts;
        for (const auto& c : j.at("and")) conjuncts.push_back(concept_from_json(c));
        return Concept::conj(std::move(conjuncts));
    }
    if (j.contains("some")) {
        const auto& s = j.at("some");
        return Concept::some(model::canonicalize(s.at("role").get<std::string>()),
                             concept_from_json(s.at("filler")));
    }
    throw Error("BadOntology",
                "unknown concept constructor in " + j.dump() +
                    " (supported: named, top, and, some; bottom/nominals/role chains are not)");
}

} // namespace

Ontology parse_ontology(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw JsonSyntaxError(e.what());
    }
    if (!j.is_object()) throw Error("BadOntology", "top level must be an object");

    Ontology o;
    for (const auto& c : j.value("concepts", json::array())) {
        o.concepts.insert(model::canonicalize(c.get<std::string>()));
    }
    for (const auto& r : j.value("roles", json::array())) {
        o.roles.insert(model::canonicalize(r.get<std::string>()));
    }
    for (const auto& i : j.value("individuals", json::array())) {
        o.individuals.insert(model::canonicalize(i.get<std::string>()));
    }
    for (const auto& ax : j.value("tbox", json::array())) {
        o.tbox.push_back({concept_from_json(ax.at("lhs")), concept_from_json(ax.at("rhs"))});
    }
    for (const auto& a : j.value("assertions", json::array())) {
        if (!a.is_array() || (a.size() != 2 && a.size() != 3)) {
            throw Error("BadOntology", "assertion must be [individual, concept] or [subject, role, object]");
        }
        if (a.size() == 2) {
            o.concept_assertions.push_back({model::canonicalize(a[0].get<std::string>()),
                                            model::canonicalize(a[1].get<std::string>())});
        } else {
            o.role_assertions.push_back({model::canonicalize(a[0].get<std::string>()),
                                         model::canonicalize(a[1].get<std::string>()),
                                         model::canonicalize(a[2].get<std::string>())});
        }
    }
    o.validate();
    return o;
}

Ontology load_ontology(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileNotFound", "cannot open ontology file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_ontology(buf.str());
}

// --- Normalization ----------------------------------------------------------

namespace {

class Normalizer {
public:
    explicit Normalizer(const Ontology& ontology) {
        out_.declared_concepts = ontology.concepts;
        out_.all_concepts = ontology.concepts;
        out_.roles = ontology.roles;
        for (const auto& axiom : ontology.tbox) queue_.push_back(axiom);
    }

    NormalizedTBox run() {
        while (!queue_.empty()) {
            Axiom axiom = std::move(queue_.front());
            queue_.pop_front();
            rewrite(axiom);
        }
        dedup();
        return std::move(out_);
    }

private:
    std::string fresh() {
        std::string id = kGeneratedPrefix + std::to_string(++counter_);
        out_.all_concepts.insert(id);
        return id;
    }

    static Concept flatten(const Concept& c) {
        if (c.kind != Concept::Kind::And) return c;
        std::vector<Concept> conjuncts;
        for (const auto& child : c.children) {
            Concept f = flatten(child);
            if (f.kind == Concept::Kind::And) {
                for (auto& g : f.children) conjuncts.push_back(std::move(g));
            } else {
                conjuncts.push_back(std::move(f));
            }
        }
        if (conjuncts.size() == 1) return conjuncts[0];
        return Concept::conj(std::move(conjuncts));
    }

    void rewrite(const Axiom& axiom) {
        Concept lhs = flatten(axiom.lhs);
        Concept rhs = flatten(axiom.rhs);

        // Split conjunctive right-hand sides first: B [= C and D.
        if (rhs.kind == Concept::Kind::And) {
            for (const auto& conjunct : rhs.children) queue_.push_back({lhs, conjunct});
            return;
        }

        if (lhs.is_atomic()) {
            if (rhs.is_atomic()) {
                out_.nf1.push_back({lhs.atom_name(), rhs.atom_name()});
                return;
            }
            // rhs is an existential restriction.
            const Concept& filler = rhs.children[0];
            if (filler.is_atomic()) {
                out_.nf3.push_back({lhs.atom_name(), rhs.role, filler.atom_name()});
            } else {
                std::string a = fresh();
                out_.nf3.push_back({lhs.atom_name(), rhs.role, a});
                queue_.push_back({Concept::named(a), filler});
            }
            return;
        }

        if (lhs.kind == Concept::Kind::Some) {
            const Concept& filler = lhs.children[0];
            if (!filler.is_atomic()) {
                std::string a = fresh();
                queue_.push_back({filler, Concept::named(a)});
                queue_.push_back({Concept::some(lhs.role, Concept::named(a)), rhs});
                return;
            }
            if (rhs.is_atomic()) {
                out_.nf4.push_back({lhs.role, filler.atom_name(), rhs.atom_name()});
            } else {
                std::string a = fresh();
                out_.nf4.push_back({lhs.role, filler.atom_name(), a});
                queue_.push_back({Concept::named(a), rhs});
            }
            return;
        }

        // lhs is a conjunction. Replace complex conjuncts by fresh names.
        std::vector<Concept> conjuncts = lhs.children;
        for (auto& conjunct : conjuncts) {
            if (!conjunct.is_atomic()) {
                std::string a = fresh();
                queue_.push_back({conjunct, Concept::named(a)});
                conjunct = Concept::named(a);
            }
        }
        // Binarize left-to-right.
        while (conjuncts.size() > 2) {
            std::string g = fresh();
            out_.nf2.push_back({conjuncts[0].atom_name(), conjuncts[1].atom_name(), g});
            std::vector<Concept> rest;
            rest.push_back(Concept::named(g));
            rest.insert(rest.end(), conjuncts.begin() + 2, conjuncts.end());
            conjuncts = std::move(rest);
        }
        if (rhs.is_atomic()) {
            out_.nf2.push_back({conjuncts[0].atom_name(), conjuncts[1].atom_name(), rhs.atom_name()});
        } else {
            std::string a = fresh();
            out_.nf2.push_back({conjuncts[0].atom_name(), conjuncts[1].atom_name(), a});
            queue_.push_back({Concept::named(a), rhs});
        }
    }

    void dedup() {
        auto uniq = [](auto& v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        };
        uniq(out_.nf1);
        uniq(out_.nf2);
        uniq(out_.nf3);
        uniq(out_.nf4);
    }

    NormalizedTBox out_;
    std::deque<Axiom> queue_;
    int counter_ = 0;
};

} // namespace

NormalizedTBox normalize(const Ontology& ontology) { return Normalizer(ontology).run(); }

// --- Classification ---------------------------------------------------------

SubsumptionRelation classify(const NormalizedTBox& tbox) {
    // Index concepts; kTop participates as an ordinary atom.
    std::vector<std::string> names(tbox.all_concepts.begin(), tbox.all_concepts.end());
    if (std::find(names.begin(), names.end(), kTop) == names.end()) names.push_back(kTop);
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = int(i);
    const int n = int(names.size());
    const int top = index[kTop];

    auto id_of = [&](const std::string& name) { return index.at(name); };

    // subsumers[a] = S(a); role_edges[r] = {(a, b)} for a [= some r. b.
    std::vector<std::set<int>> subsumers(n);
    for (int a = 0; a < n; ++a) {
        subsumers[a].insert(a);
        subsumers[a].insert(top);
    }
    std::map<std::string, std::set<std::pair<int, int>>> role_edges;

    // Saturate the completion rules to fixpoint. Domain is finite and every
    // rule only adds memberships, so this terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& ax : tbox.nf1) {
            int b = id_of(ax.sub), c = id_of(ax.super);
            for (int a = 0; a < n; ++a) {
                if (subsumers[a].count(b) && subsumers[a].insert(c).second) changed = true;
            }
        }
        for (const auto& ax : tbox.nf2) {
            int b1 = id_of(ax.left), b2 = id_of(ax.right), c = id_of(ax.super);
            for (int a = 0; a < n; ++a) {
                if (subsumers[a].count(b1) && subsumers[a].count(b2) &&
                    subsumers[a].insert(c).second) {
                    changed = true;
                }
            }
        }
        for (const auto& ax : tbox.nf3) {
            int b = id_of(ax.sub), c = id_of(ax.filler);
            auto& edges = role_edges[ax.role];
            for (int a = 0; a < n; ++a) {
                if (subsumers[a].count(b) && edges.insert({a, c}).second) changed = true;
            }
        }
        for (const auto& ax : tbox.nf4) {
            int d = id_of(ax.filler), c = id_of(ax.super);
            auto it = role_edges.find(ax.role);
            if (it == role_edges.end()) continue;
            for (const auto& [a, b] : it->second) {
                if (subsumers[b].count(d) && subsumers[a].insert(c).second) changed = true;
            }
        }
    }

    SubsumptionRelation relation;
    for (const auto& a : tbox.declared_concepts) {
        for (int bi : subsumers[size_t(id_of(a))]) {
            const std::string& b = names[size_t(bi)];
            if (b == kTop || tbox.declared_concepts.count(b)) relation.insert({a, b});
        }
    }
    return relation;
}

bool is_subsumed(const std::string& a, const std::string& b, const SubsumptionRelation& classified) {
    auto declared = [&](const std::string& id) {
        return id == kTop || classified.count({id, id}) > 0;
    };
    if (!declared(a)) throw UnknownConceptError(a);
    if (!declared(b)) throw UnknownConceptError(b);
    if (b == kTop) return true;
    if (a == kTop) return b == kTop;
    return classified.count({a, b}) > 0;
}

std::set<std::string> direct_neighbors(const std::string& concept_id, const Ontology& ontology) {
    if (!ontology.concepts.count(concept_id)) throw UnknownConceptError(concept_id);
    std::set<std::string> neighbors;
    for (const auto& axiom : ontology.tbox) {
        std::set<std::string> lhs_names, rhs_names, roles;
        collect_named(axiom.lhs, lhs_names, roles);
        collect_named(axiom.rhs, rhs_names, roles);
        if (lhs_names.count(concept_id)) neighbors.insert(rhs_names.begin(), rhs_names.end());
        if (rhs_names.count(concept_id)) neighbors.insert(lhs_names.begin(), lhs_names.end());
    }
    neighbors.erase(concept_id);
    return neighbors;
}

std::set<std::string> asserted_instances(const std::string& concept_id, const Ontology& ontology) {
    std::set<std::string> out;
    for (const auto& a : ontology.concept_assertions) {
        if (a.concept_id == concept_id) out.insert(a.individual);
    }
    return out;
}

} // namespace triplecheck::el

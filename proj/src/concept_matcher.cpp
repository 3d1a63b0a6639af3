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

#include "triplecheck/concept_matcher.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "triplecheck/errors.hpp"

namespace triplecheck::matcher {

std::size_t levenshtein(std::string_view a, std::string_view b) {
    if (a.size() > b.size()) std::swap(a, b);
    // Two-row dynamic program over the shorter string.
    std::vector<std::size_t> prev(a.size() + 1), cur(a.size() + 1);
    for (std::size_t i = 0; i <= a.size(); ++i) prev[i] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
        cur[0] = j;
        for (std::size_t i = 1; i <= a.size(); ++i) {
            std::size_t subst = prev[i - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[i] = std::min({prev[i] + 1, cur[i - 1] + 1, subst});
        }
        std::swap(prev, cur);
    }
    return prev[a.size()];
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) return 1.0;
    std::size_t common = 0;
    for (const auto& x : a) common += b.count(x);
    std::size_t uni = a.size() + b.size() - common;
    return double(common) / double(uni);
}

std::set<std::string> id_tokens(std::string_view id) {
    std::set<std::string> tokens;
    std::size_t start = 0;
    while (start <= id.size()) {
        std::size_t end = id.find('_', start);
        if (end == std::string_view::npos) end = id.size();
        if (end > start) tokens.insert(std::string(id.substr(start, end - start)));
        start = end + 1;
    }
    return tokens;
}

std::string to_string(Technique t) {
    switch (t) {
    case Technique::name: return "name";
    case Technique::structure: return "structure";
    case Technique::instance: return "instance";
    case Technique::linguistic: return "linguistic";
    case Technique::aggregate: return "aggregate";
    }
    return "name";
}

void Config::validate() const {
    for (double w : {w_name, w_structure, w_instance, w_linguistic}) {
        if (w < 0.0) throw Error("BadMatchConfig", "weights must be non-negative");
    }
    double sum = w_name + w_structure + w_instance + w_linguistic;
    if (std::abs(sum - 1.0) > 1e-9) {
        throw Error("BadMatchConfig", "weights must sum to 1 (got " + std::to_string(sum) + ")");
    }
    if (accept_threshold < 0.0 || accept_threshold > 1.0) {
        throw Error("BadMatchConfig", "acceptThreshold must be in [0,1]");
    }
}

namespace {

double name_score(const std::string& term_id, const std::string& concept_id) {
    std::size_t lev = levenshtein(term_id, concept_id);
    std::size_t maxlen = std::max(term_id.size(), concept_id.size());
    double edit = maxlen == 0 ? 1.0 : 1.0 - double(lev) / double(maxlen);
    double tok = jaccard(id_tokens(term_id), id_tokens(concept_id));
    return std::max(edit, tok);
}

void sort_candidates(std::vector<Candidate>& out) {
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.target_concept < b.target_concept;
    });
}

} // namespace

std::vector<Candidate> name_match(const model::Term& term, const el::Ontology& ontology) {
    if (ontology.concepts.empty()) throw EmptyOntologyError();
    std::vector<Candidate> out;
    for (const auto& concept_id : ontology.concepts) {
        Candidate c;
        c.source_term = term.id;
        c.target_concept = concept_id;
        c.technique = Technique::name;
        c.score = name_score(term.id, concept_id);
        out.push_back(std::move(c));
    }
    sort_candidates(out);
    return out;
}

double structure_match(const std::string& term_id, const std::set<std::string>& triple_neighbors,
                       const std::string& concept_id, const el::Ontology& ontology,
                       const std::map<std::string, std::string>& name_map) {
    (void)term_id;
    std::set<std::string> mapped;
    for (const auto& neighbor : triple_neighbors) {
        auto it = name_map.find(neighbor);
        if (it != name_map.end()) mapped.insert(it->second);
    }
    return jaccard(mapped, el::direct_neighbors(concept_id, ontology));
}

double instance_match(const std::set<std::string>& instances_a,
                      const std::set<std::string>& instances_b) {
    return jaccard(instances_a, instances_b);
}

double linguistic_match(const model::Term& term, const std::string& concept_id,
                        const model::SynonymTable& synonyms) {
    if (term.id == concept_id) return 1.0;
    std::string label_id;
    try {
        label_id = model::canonicalize(term.label);
    } catch (const EmptyTermError&) {
        label_id = term.id;
    }
    if (label_id == concept_id) return 1.0;

    auto canonical_set = [](const std::set<std::string>& surfaces) {
        std::set<std::string> out;
        for (const auto& s : surfaces) {
            try {
                out.insert(model::canonicalize(s));
            } catch (const EmptyTermError&) {
            }
        }
        return out;
    };

    if (auto it = synonyms.find(concept_id); it != synonyms.end()) {
        auto names = canonical_set(it->second);
        if (names.count(term.id) || names.count(label_id)) return 1.0;
    }
    if (auto it = synonyms.find(term.id); it != synonyms.end()) {
        auto names = canonical_set(it->second);
        if (names.count(concept_id)) return 1.0;
    }
    return 0.0;
}

double aggregate_score(double name, double structure, double instance, double linguistic,
                       const Config& config) {
    return config.w_name * name + config.w_structure * structure + config.w_instance * instance +
           config.w_linguistic * linguistic;
}

std::vector<Candidate> match(const model::Term& term, const el::Ontology& ontology,
                             const Context& context, const Config& config) {
    config.validate();
    if (ontology.concepts.empty()) throw EmptyOntologyError();

    std::vector<Candidate> out;
    for (const auto& concept_id : ontology.concepts) {
        double name = name_score(term.id, concept_id);
        double structure = structure_match(term.id, context.triple_neighbors, concept_id, ontology,
                                           context.name_map);
        double instance =
            instance_match(context.term_instances, el::asserted_instances(concept_id, ontology));
        double linguistic = linguistic_match(term, concept_id, context.synonyms);
        if (context.similarity) {
            linguistic = std::max(linguistic,
                                  std::clamp(context.similarity(term.id, concept_id), 0.0, 1.0));
        }

        Candidate c;
        c.source_term = term.id;
        c.target_concept = concept_id;
        c.technique = Technique::aggregate;
        c.score = aggregate_score(name, structure, instance, linguistic, config);
        c.accepted = c.score >= config.accept_threshold;
        out.push_back(std::move(c));
    }
    sort_candidates(out);
    return out;
}

std::string candidates_to_jsonl(const std::vector<Candidate>& candidates) {
    std::string out;
    for (const auto& c : candidates) {
        nlohmann::json j;
        j["sourceTerm"] = c.source_term;
        j["targetConcept"] = c.target_concept;
        j["technique"] = to_string(c.technique);
        j["score"] = c.score;
        if (c.technique == Technique::aggregate) j["accepted"] = c.accepted;
        out += j.dump();
        out += '\n';
    }
    return out;
}

model::SynonymTable parse_synonym_table(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonSyntaxError(e.what());
    }
    if (!j.is_object()) throw Error("BadSynonymTable", "top level must be an object");
    model::SynonymTable table;
    for (const auto& [key, arr] : j.items()) {
        auto& set = table[model::canonicalize(key)];
        for (const auto& s : arr) set.insert(s.get<std::string>());
    }
    return table;
}

model::SynonymTable load_synonym_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileNotFound", "cannot open synonym table " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_synonym_table(buf.str());
}

} // namespace triplecheck::matcher

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

#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "triplecheck/el_reasoner.hpp"
#include "triplecheck/triple_model.hpp"

namespace triplecheck::matcher {

/// Single-character insert/delete/substitute edit distance.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// |a n b| / |a u b|; 1.0 when both sets are empty.
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

/// Canonical-id tokenization: split on underscores.
std::set<std::string> id_tokens(std::string_view id);

enum class Technique { name, structure, instance, linguistic, aggregate };

std::string to_string(Technique t);

struct Candidate {
    std::string source_term;
    std::string target_concept;
    Technique technique = Technique::name;
    double score = 0.0;
    bool accepted = false; // set by match() for aggregate candidates
};

struct Config {
    double w_name = 0.4;
    double w_structure = 0.2;
    double w_instance = 0.2;
    double w_linguistic = 0.2;
    double accept_threshold = 0.75;

    /// Weights must be non-negative and sum to 1 within 1e-9; threshold in [0,1].
    void validate() const;
};

/// Optional hook for an external similarity provider (e.g. embeddings).
/// When set, its score is combined with the synonym-table score by max.
using SimilarityProvider = std::function<double(const std::string& term_id,
                                                const std::string& concept_id)>;

/// Per-term evidence assembled by the caller.
struct Context {
    std::set<std::string> triple_neighbors;        // ids co-occurring with the term
    std::map<std::string, std::string> name_map;   // accepted name matches, term -> concept
    std::set<std::string> term_instances;          // individuals observed for the term
    model::SynonymTable synonyms;
    SimilarityProvider similarity;                 // optional extension point
};

/// Name similarity against every named concept:
/// max(1 - lev/maxlen, jaccard of id tokens), sorted by score then concept id.
std::vector<Candidate> name_match(const model::Term& term, const el::Ontology& ontology);

/// Jaccard overlap between the term's mapped triple neighborhood and the
/// concept's direct ontology neighborhood.
double structure_match(const std::string& term_id, const std::set<std::string>& triple_neighbors,
                       const std::string& concept_id, const el::Ontology& ontology,
                       const std::map<std::string, std::string>& name_map);

double instance_match(const std::set<std::string>& instances_a,
                      const std::set<std::string>& instances_b);

/// 1.0 on a synonym-table hit (either direction, canonicalized) or id equality.
double linguistic_match(const model::Term& term, const std::string& concept_id,
                        const model::SynonymTable& synonyms);

/// Convex combination of the four technique scores under config weights.
double aggregate_score(double name, double structure, double instance, double linguistic,
                       const Config& config);

/// Weighted aggregate of the four techniques over every named concept,
/// sorted by score descending with lexicographic tie-break.
std::vector<Candidate> match(const model::Term& term, const el::Ontology& ontology,
                             const Context& context, const Config& config);

/// JSON-lines encoding of candidates (one object per line).
std::string candidates_to_jsonl(const std::vector<Candidate>& candidates);

/// Synonym table file: JSON map concept-id -> list of surface strings.
model::SynonymTable parse_synonym_table(const std::string& json_text);
model::SynonymTable load_synonym_table(const std::string& path);

} // namespace triplecheck::matcher

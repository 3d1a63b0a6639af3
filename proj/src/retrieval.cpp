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

#include "triplecheck/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "triplecheck/errors.hpp"
#include "triplecheck/triple_model.hpp"

namespace triplecheck::retrieval {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream stream(text);
    std::string word;
    while (stream >> word) {
        try {
            tokens.push_back(model::canonicalize(word));
        } catch (const EmptyTermError&) {
            // punctuation-only word
        }
    }
    return tokens;
}

Index build_index(const std::vector<Document>& corpus) {
    Index index;
    std::set<std::string> seen;
    long long total_length = 0;
    for (const auto& doc : corpus) {
        if (!seen.insert(doc.id).second) throw DuplicateDocIdError(doc.id);
        auto tokens = doc.tokens.empty() ? tokenize(doc.title + " " + doc.body) : doc.tokens;
        index.doc_lengths[doc.id] = int(tokens.size());
        total_length += long(tokens.size());

        std::map<std::string, int> tf;
        for (const auto& t : tokens) ++tf[t];
        for (const auto& [token, count] : tf) {
            index.postings[token].emplace_back(doc.id, count);
        }
    }
    index.doc_count = corpus.size();
    index.avg_doc_length = corpus.empty() ? 0.0 : double(total_length) / double(corpus.size());
    return index;
}

std::vector<Hit> retrieve(const Index& index, const std::string& query, std::size_t k) {
    if (index.doc_count == 0 || k == 0) return {};
    std::vector<std::string> raw = tokenize(query);
    std::set<std::string> terms(raw.begin(), raw.end());

    std::map<std::string, double> scores;
    for (const auto& term : terms) {
        auto it = index.postings.find(term);
        if (it == index.postings.end()) continue;
        double df = double(it->second.size());
        double n = double(index.doc_count);
        double idf = std::log((n - df + 0.5) / (df + 0.5) + 1.0);
        for (const auto& [doc_id, tf] : it->second) {
            double dl = double(index.doc_lengths.at(doc_id));
            double norm = index.avg_doc_length > 0.0
                              ? 1.0 - kB + kB * dl / index.avg_doc_length
                              : 1.0;
            scores[doc_id] += idf * (double(tf) * (kK1 + 1.0)) / (double(tf) + kK1 * norm);
        }
    }

    std::vector<Hit> hits;
    hits.reserve(scores.size());
    for (const auto& [doc_id, score] : scores) hits.push_back({doc_id, score});
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.doc_id < b.doc_id;
    });
    if (hits.size() > k) hits.resize(k);
    return hits;
}

std::string assemble_context(const std::vector<Hit>& hits,
                             const std::map<std::string, Document>& corpus, std::size_t budget) {
    std::string out;
    for (const auto& hit : hits) {
        auto it = corpus.find(hit.doc_id);
        if (it == corpus.end()) continue;
        const Document& doc = it->second;
        std::string block = doc.title.empty() ? doc.body : doc.title + "\n" + doc.body;
        std::size_t extra = block.size() + (out.empty() ? 0 : std::string(kContextDelimiter).size());
        if (out.size() + extra > budget) break; // whole documents only
        if (!out.empty()) out += kContextDelimiter;
        out += block;
    }
    return out;
}

std::vector<Document> parse_corpus(const std::string& jsonl_text) {
    std::vector<Document> corpus;
    std::istringstream stream(jsonl_text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw JsonSyntaxError("corpus line " + std::to_string(line_no) + ": " + e.what());
        }
        Document doc;
        doc.id = j.at("id").get<std::string>();
        doc.title = j.value("title", "");
        doc.body = j.value("body", "");
        corpus.push_back(std::move(doc));
    }
    return corpus;
}

std::vector<Document> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileNotFound", "cannot open corpus file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str());
}

std::map<std::string, Document> corpus_by_id(const std::vector<Document>& corpus) {
    std::map<std::string, Document> out;
    for (const auto& doc : corpus) out.emplace(doc.id, doc);
    return out;
}

} // namespace triplecheck::retrieval

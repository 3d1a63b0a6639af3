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
#include <string>
#include <vector>

namespace triplecheck::retrieval {

// BM25 parameters (fixed).
inline constexpr double kK1 = 1.2;
inline constexpr double kB = 0.75;

/// Context separator between documents: a line of exactly ---.
inline constexpr const char* kContextDelimiter = "\n---\n";

struct Document {
    std::string id;
    std::string title;
    std::string body;
    std::vector<std::string> tokens; // canonicalized, filled by build_index/tokenize
};

/// Whitespace split + per-word canonicalization (words without alphanumeric
/// content are dropped).
std::vector<std::string> tokenize(const std::string& text);

struct Index {
    // token -> (doc id, term frequency), postings in document order
    std::map<std::string, std::vector<std::pair<std::string, int>>> postings;
    std::map<std::string, int> doc_lengths;
    double avg_doc_length = 0.0;
    std::size_t doc_count = 0;
};

/// Throws DuplicateDocIdError on repeated ids. Tokenizes title + body.
Index build_index(const std::vector<Document>& corpus);

struct Hit {
    std::string doc_id;
    double score = 0.0;
};

/// BM25 ranking with idf = ln((N - df + 0.5)/(df + 0.5) + 1); documents
/// sharing no query token are excluded; ties break by doc id; at most k hits.
std::vector<Hit> retrieve(const Index& index, const std::string& query, std::size_t k);

/// Concatenates title + body of the hits in rank order, separated by the
/// delimiter line, keeping whole documents only and never exceeding `budget`.
std::string assemble_context(const std::vector<Hit>& hits,
                             const std::map<std::string, Document>& corpus, std::size_t budget);

/// Corpus file: JSON lines, one {"id","title","body"} object per line.
std::vector<Document> parse_corpus(const std::string& jsonl_text);
std::vector<Document> load_corpus(const std::string& path);

std::map<std::string, Document> corpus_by_id(const std::vector<Document>& corpus);

} // namespace triplecheck::retrieval

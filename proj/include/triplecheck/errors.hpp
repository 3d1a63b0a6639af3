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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace triplecheck {

/// Base class for all library errors. `kind()` is a stable machine-readable
/// tag ("JsonSyntax", "UnsafeRule", ...); `what()` is a human message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct EmptyTermError : Error {
    explicit EmptyTermError(const std::string& surface)
        : Error("EmptyTerm", "no alphanumeric content in \"" + surface + "\"") {}
};

struct JsonSyntaxError : Error {
    explicit JsonSyntaxError(const std::string& message) : Error("JsonSyntax", message) {}
};

struct UnsupportedFeatureError : Error {
    UnsupportedFeatureError(std::string path_in, const std::string& message)
        : Error("UnsupportedFeature", message + " at path \"" + path_in + "\""),
          path(std::move(path_in)) {}
    std::string path;
};

struct MissingIdError : Error {
    explicit MissingIdError(std::string path_in)
        : Error("MissingId", "node without @id at path \"" + path_in + "\""),
          path(std::move(path_in)) {}
    std::string path;
};

struct EmptyOntologyError : Error {
    EmptyOntologyError() : Error("EmptyOntology", "ontology declares no named concept") {}
};

struct UnknownConceptError : Error {
    explicit UnknownConceptError(std::string id_in)
        : Error("UnknownConcept", "concept \"" + id_in + "\" is not declared"), id(std::move(id_in)) {}
    std::string id;
};

struct SyntaxError : Error {
    SyntaxError(std::size_t line_in, std::size_t column_in, const std::string& message)
        : Error("SyntaxError",
                "line " + std::to_string(line_in) + ", col " + std::to_string(column_in) + ": " + message),
          line(line_in), column(column_in) {}
    std::size_t line;
    std::size_t column;
};

struct UnsafeRuleError : Error {
    UnsafeRuleError(std::size_t rule_index_in, std::string variable_in)
        : Error("UnsafeRule", "variable " + variable_in + " in rule " + std::to_string(rule_index_in) +
                              " does not occur in a positive body atom"),
          rule_index(rule_index_in), variable(std::move(variable_in)) {}
    std::size_t rule_index;
    std::string variable;
};

struct ArityMismatchError : Error {
    explicit ArityMismatchError(std::string predicate_in)
        : Error("ArityMismatch", "predicate \"" + predicate_in + "\" used with more than one arity"),
          predicate(std::move(predicate_in)) {}
    std::string predicate;
};

struct DuplicateDocIdError : Error {
    explicit DuplicateDocIdError(const std::string& id)
        : Error("DuplicateDocId", "document id \"" + id + "\" occurs twice") {}
};

struct EmptyVocabularyError : Error {
    EmptyVocabularyError() : Error("EmptyVocabulary", "vocabulary has no terms") {}
};

struct EndpointUnreachableError : Error {
    explicit EndpointUnreachableError(const std::string& url)
        : Error("EndpointUnreachable", "cannot reach " + url) {}
};

struct BadStatusError : Error {
    explicit BadStatusError(int status_in)
        : Error("BadStatus", "endpoint returned status " + std::to_string(status_in)), status(status_in) {}
    int status;
};

struct MalformedEnvelopeError : Error {
    explicit MalformedEnvelopeError(const std::string& message) : Error("MalformedEnvelope", message) {}
};

struct MockMissError : Error {
    explicit MockMissError(std::string hash_in)
        : Error("MockMiss", "no mock file for prompt hash " + hash_in), hash(std::move(hash_in)) {}
    std::string hash;
};

struct NoJsonFoundError : Error {
    NoJsonFoundError() : Error("NoJsonFound", "response contains no JSON object") {}
};

struct InconsistentKnowledgeBaseError : Error {
    explicit InconsistentKnowledgeBaseError(std::string details_in)
        : Error("InconsistentKnowledgeBase",
                "knowledge base has no stable model before any triple is added" +
                    (details_in.empty() ? std::string() : "; " + details_in)),
          details(std::move(details_in)) {}
    std::string details;
};

struct StageError : Error {
    StageError(std::string stage_in, const std::string& cause)
        : Error("StageError", "stage \"" + stage_in + "\": " + cause), stage(std::move(stage_in)) {}
    std::string stage;
};

} // namespace triplecheck

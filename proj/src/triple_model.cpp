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

#include "triplecheck/triple_model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "triplecheck/errors.hpp"

namespace triplecheck::model {

using nlohmann::json;

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alnum(char c) { return is_upper(c) || is_lower(c) || is_digit(c); }

char fold(char c) { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

// Splits one alphanumeric run on camelCase boundaries: lower/digit -> Upper,
// and the last of an Upper run followed by lower ("HTTPServer" -> http, server).
void split_camel(std::string_view run, std::vector<std::string>& out) {
    std::string token;
    for (std::size_t i = 0; i < run.size(); ++i) {
        bool boundary = false;
        if (i > 0 && is_upper(run[i])) {
            if (!is_upper(run[i - 1])) {
                boundary = true;
            } else if (i + 1 < run.size() && is_lower(run[i + 1])) {
                boundary = true;
            }
        }
        if (boundary && !token.empty()) {
            out.push_back(token);
            token.clear();
        }
        token.push_back(fold(run[i]));
    }
    if (!token.empty()) out.push_back(token);
}

} // namespace

std::string canonicalize(std::string_view surface) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < surface.size()) {
        if (!is_alnum(surface[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < surface.size() && is_alnum(surface[j])) ++j;
        split_camel(surface.substr(i, j - i), tokens);
        i = j;
    }
    if (tokens.empty()) throw EmptyTermError(std::string(surface));
    std::string id;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        if (k > 0) id.push_back('_');
        id += tokens[k];
    }
    return id;
}

bool is_canonical(std::string_view id) {
    if (id.empty()) return false;
    for (char c : id) {
        if (!(is_lower(c) || is_digit(c) || c == '_')) return false;
    }
    try {
        return canonicalize(id) == id;
    } catch (const EmptyTermError&) {
        return false;
    }
}

std::string to_string(TermKind kind) {
    switch (kind) {
    case TermKind::Concept: return "concept";
    case TermKind::Relation: return "relation";
    case TermKind::Attribute: return "attribute";
    }
    return "concept";
}

TermKind term_kind_from_string(const std::string& text) {
    if (text == "concept") return TermKind::Concept;
    if (text == "relation") return TermKind::Relation;
    if (text == "attribute") return TermKind::Attribute;
    throw Error("BadVocabulary", "unknown term kind \"" + text + "\"");
}

std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::llm: return "llm";
    case Provenance::expert: return "expert";
    case Provenance::feature_extractor: return "feature-extractor";
    }
    return "llm";
}

bool Vocabulary::resolves(const std::string& id) const {
    if (terms.count(id)) return true;
    for (const auto& [owner, surfaces] : synonyms) {
        if (owner == id) return true;
        for (const auto& s : surfaces) {
            try {
                if (canonicalize(s) == id) return true;
            } catch (const EmptyTermError&) {
            }
        }
    }
    return false;
}

void Vocabulary::validate() const {
    for (const auto& [id, term] : terms) {
        if (term.id != id || !is_canonical(id)) {
            throw Error("BadVocabulary", "term id \"" + id + "\" is not canonical");
        }
    }
    for (const auto& rel : relationships) {
        for (const auto& id : rel) {
            if (!terms.count(id)) {
                throw Error("BadVocabulary", "relationship references unknown term \"" + id + "\"");
            }
        }
    }
    for (const auto& [id, surfaces] : synonyms) {
        (void)surfaces;
        if (!is_canonical(id)) {
            throw Error("BadVocabulary", "synonym key \"" + id + "\" is not canonical");
        }
    }
}

Vocabulary parse_vocabulary(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw JsonSyntaxError(e.what());
    }
    if (!j.is_object()) throw Error("BadVocabulary", "top level must be an object");

    Vocabulary vocab;
    for (const auto& t : j.value("terms", json::array())) {
        Term term;
        term.id = canonicalize(t.at("id").get<std::string>());
        term.label = t.value("label", term.id);
        term.kind = term_kind_from_string(t.value("kind", "concept"));
        if (vocab.terms.count(term.id)) {
            throw Error("BadVocabulary", "duplicate term id \"" + term.id + "\"");
        }
        vocab.terms.emplace(term.id, term);
    }
    for (const auto& rel : j.value("relationships", json::array())) {
        if (!rel.is_array() || rel.size() != 3) {
            throw Error("BadVocabulary", "relationship templates must be [subject, relation, object]");
        }
        vocab.relationships.push_back({canonicalize(rel[0].get<std::string>()),
                                       canonicalize(rel[1].get<std::string>()),
                                       canonicalize(rel[2].get<std::string>())});
    }
    if (j.contains("synonyms")) {
        for (const auto& [key, arr] : j.at("synonyms").items()) {
            auto& set = vocab.synonyms[canonicalize(key)];
            for (const auto& s : arr) set.insert(s.get<std::string>());
        }
    }
    vocab.validate();
    return vocab;
}

Vocabulary load_vocabulary(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileNotFound", "cannot open vocabulary file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_vocabulary(buf.str());
}

TripleObject TripleObject::make_id(std::string id) {
    TripleObject o;
    o.kind = Kind::id;
    o.value = std::move(id);
    return o;
}

TripleObject TripleObject::make_literal(std::string value, std::string unit) {
    TripleObject o;
    o.kind = Kind::literal;
    o.value = std::move(value);
    o.unit = std::move(unit);
    return o;
}

TripleDocument TripleDocument::canonicalized() const {
    TripleDocument copy = *this;
    std::sort(copy.triples.begin(), copy.triples.end());
    return copy;
}

namespace {

// --- JSON-LD subset reader -------------------------------------------------

std::string join_path(const std::string& base, const std::string& key) {
    return base.empty() ? key : base + "/" + key;
}

std::string expand_id(const std::string& raw, const std::map<std::string, std::string>& context,
                      const std::string& path) {
    if (raw.rfind("_:", 0) == 0) {
        throw UnsupportedFeatureError(path, "blank node identifier");
    }
    auto colon = raw.find(':');
    if (colon != std::string::npos) {
        std::string prefix = raw.substr(0, colon);
        if (context.count(prefix)) {
            std::string local = raw.substr(colon + 1);
            return canonicalize(local);
        }
    }
    return canonicalize(raw);
}

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        if (is_digit(s[i])) {
            seen_digit = true;
        } else if (s[i] == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            return false;
        }
    }
    return seen_digit;
}

// "350 S/cm" -> ("350", "S/cm"); non-numeric strings stay whole.
TripleObject literal_from_string(const std::string& s) {
    auto space = s.find(' ');
    if (space != std::string::npos && space > 0 && space + 1 < s.size()) {
        std::string head = s.substr(0, space);
        if (looks_numeric(head)) {
            return TripleObject::make_literal(head, s.substr(space + 1));
        }
    }
    return TripleObject::make_literal(s);
}

TripleObject object_from_value(const json& value, const std::map<std::string, std::string>& context,
                               const std::string& path) {
    if (value.is_string()) {
        return literal_from_string(value.get<std::string>());
    }
    if (value.is_number()) {
        return TripleObject::make_literal(value.dump());
    }
    if (value.is_object()) {
        if (!value.contains("@id")) {
            throw UnsupportedFeatureError(path, "anonymous (blank) node object");
        }
        for (const auto& [k, v] : value.items()) {
            (void)v;
            if (k != "@id") {
                throw UnsupportedFeatureError(join_path(path, k), "nested node object");
            }
        }
        if (!value.at("@id").is_string()) {
            throw JsonSyntaxError("@id must be a string at " + path);
        }
        return TripleObject::make_id(
            expand_id(value.at("@id").get<std::string>(), context, join_path(path, "@id")));
    }
    throw UnsupportedFeatureError(path, "unsupported value type");
}

void merge_context(const json& ctx, std::map<std::string, std::string>& out, const std::string& path) {
    if (!ctx.is_object()) {
        throw UnsupportedFeatureError(path, "@context must map prefixes to IRI strings");
    }
    for (const auto& [prefix, iri] : ctx.items()) {
        if (!iri.is_string()) {
            throw UnsupportedFeatureError(join_path(path, prefix), "non-string @context entry");
        }
        auto it = out.find(prefix);
        if (it != out.end() && it->second != iri.get<std::string>()) {
            throw UnsupportedFeatureError(join_path(path, prefix), "conflicting prefix redefinition");
        }
        out[prefix] = iri.get<std::string>();
    }
}

void collect_context(const json& node, std::map<std::string, std::string>& context,
                     const std::string& path) {
    if (node.contains("@context")) {
        merge_context(node.at("@context"), context, join_path(path, "@context"));
    }
}

void parse_node(const json& node, const std::map<std::string, std::string>& context,
                const std::string& path, std::vector<Triple>& out) {
    if (!node.is_object()) {
        throw JsonSyntaxError("node at " + (path.empty() ? std::string("top level") : path) +
                              " is not an object");
    }
    // Reject subset violations before anything else so errors carry the path.
    for (const auto& [key, value] : node.items()) {
        (void)value;
        if (key == "@graph" || key == "@reverse") {
            throw UnsupportedFeatureError(join_path(path, key), "construct outside the supported subset");
        }
        if (!key.empty() && key[0] == '@' && key != "@id" && key != "@context") {
            throw UnsupportedFeatureError(join_path(path, key), "unsupported JSON-LD keyword");
        }
    }

    std::vector<std::pair<std::string, const json*>> predicates;
    for (const auto& [key, value] : node.items()) {
        if (key == "@id" || key == "@context") continue;
        predicates.emplace_back(key, &value);
    }

    if (!node.contains("@id")) {
        if (predicates.empty()) return; // context-only or empty node, no statements
        throw MissingIdError(path.empty() ? "." : path);
    }
    if (!node.at("@id").is_string()) {
        throw JsonSyntaxError("@id must be a string at " + join_path(path, "@id"));
    }
    std::string subject = expand_id(node.at("@id").get<std::string>(), context, join_path(path, "@id"));

    for (const auto& [key, valuep] : predicates) {
        const json& value = *valuep;
        std::string predicate = expand_id(key, context, join_path(path, key));
        if (value.is_array()) {
            std::size_t idx = 0;
            for (const auto& element : value) {
                Triple t;
                t.subject = subject;
                t.predicate = predicate;
                t.object = object_from_value(element, context,
                                             join_path(join_path(path, key), std::to_string(idx)));
                t.provenance = Provenance::llm;
                out.push_back(std::move(t));
                ++idx;
            }
        } else {
            Triple t;
            t.subject = subject;
            t.predicate = predicate;
            t.object = object_from_value(value, context, join_path(path, key));
            t.provenance = Provenance::llm;
            out.push_back(std::move(t));
        }
    }
}

} // namespace

TripleDocument parse_jsonld(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw JsonSyntaxError(e.what());
    }

    TripleDocument doc;
    if (j.is_object()) {
        collect_context(j, doc.context, "");
        parse_node(j, doc.context, "", doc.triples);
    } else if (j.is_array()) {
        std::size_t idx = 0;
        for (const auto& node : j) {
            collect_context(node, doc.context, std::to_string(idx));
            ++idx;
        }
        idx = 0;
        for (const auto& node : j) {
            parse_node(node, doc.context, std::to_string(idx), doc.triples);
            ++idx;
        }
    } else {
        throw JsonSyntaxError("top level must be a node object or an array of node objects");
    }
    return doc;
}

namespace {

json object_to_json(const TripleObject& o) {
    if (o.kind == TripleObject::Kind::id) {
        return json{{"@id", o.value}};
    }
    if (o.unit.empty()) return json(o.value);
    return json(o.value + " " + o.unit);
}

} // namespace

std::string serialize_jsonld(const TripleDocument& doc) {
    json context = json::object();
    for (const auto& [prefix, iri] : doc.context) context[prefix] = iri;

    // subject -> predicate -> sorted objects
    std::map<std::string, std::map<std::string, std::vector<TripleObject>>> grouped;
    for (const auto& t : doc.triples) {
        grouped[t.subject][t.predicate].push_back(t.object);
    }

    std::vector<json> nodes;
    for (auto& [subject, preds] : grouped) {
        json node = json::object();
        node["@id"] = subject;
        for (auto& [predicate, objects] : preds) {
            std::sort(objects.begin(), objects.end());
            if (objects.size() == 1) {
                node[predicate] = object_to_json(objects[0]);
            } else {
                json arr = json::array();
                for (const auto& o : objects) arr.push_back(object_to_json(o));
                node[predicate] = arr;
            }
        }
        nodes.push_back(std::move(node));
    }

    if (nodes.empty()) {
        json out = json::object();
        out["@context"] = context;
        return out.dump(2);
    }
    if (nodes.size() == 1) {
        nodes[0]["@context"] = context;
        return nodes[0].dump(2);
    }
    nodes[0]["@context"] = context;
    json out = json::array();
    for (auto& n : nodes) out.push_back(std::move(n));
    return out.dump(2);
}

std::string to_string(TripleRole role) {
    switch (role) {
    case TripleRole::subject: return "subject";
    case TripleRole::predicate: return "predicate";
    case TripleRole::object: return "object";
    }
    return "subject";
}

ValidationReport validate_vocabulary(const TripleDocument& doc, const Vocabulary& vocab) {
    ValidationReport report;
    for (std::size_t i = 0; i < doc.triples.size(); ++i) {
        const Triple& t = doc.triples[i];
        if (!vocab.resolves(t.subject)) {
            report.violations.push_back({i, TripleRole::subject, t.subject});
        }
        if (!vocab.resolves(t.predicate)) {
            report.violations.push_back({i, TripleRole::predicate, t.predicate});
        }
        if (t.object.kind == TripleObject::Kind::id && !vocab.resolves(t.object.value)) {
            report.violations.push_back({i, TripleRole::object, t.object.value});
        }
    }
    return report;
}

} // namespace triplecheck::model

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

#include <algorithm>

#include "json.hpp"
#include "triplecheck/asp.hpp"

namespace triplecheck::asp {

Term Term::number(std::int64_t v) {
    Term t;
    t.kind = Kind::Number;
    t.value = v;
    return t;
}

Term Term::symbol(std::string s) {
    Term t;
    t.kind = Kind::Symbol;
    t.text = std::move(s);
    return t;
}

Term Term::quoted(std::string s) {
    Term t;
    t.kind = Kind::String;
    t.text = std::move(s);
    return t;
}

Term Term::variable(std::string name) {
    Term t;
    t.kind = Kind::Variable;
    t.text = std::move(name);
    return t;
}

Term Term::constant_for_id(const std::string& id) {
    bool ident = !id.empty() && id[0] >= 'a' && id[0] <= 'z';
    for (std::size_t i = 1; ident && i < id.size(); ++i) {
        char c = id[i];
        ident = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    }
    return ident ? symbol(id) : quoted(id);
}

bool operator<(const Term& a, const Term& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind == Term::Kind::Number) return a.value < b.value;
    return a.text < b.text;
}

std::string to_string(const Term& t) {
    switch (t.kind) {
    case Term::Kind::Number: return std::to_string(t.value);
    case Term::Kind::Symbol:
    case Term::Kind::Variable: return t.text;
    case Term::Kind::String: {
        std::string out = "\"";
        for (char c : t.text) {
            if (c == '"' || c == '\\') out.push_back('\\');
            out.push_back(c);
        }
        out.push_back('"');
        return out;
    }
    }
    return t.text;
}

bool Atom::is_ground() const {
    return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

bool operator<(const Atom& a, const Atom& b) {
    if (a.predicate != b.predicate) return a.predicate < b.predicate;
    if (a.args.size() != b.args.size()) return a.args.size() < b.args.size();
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (a.args[i] < b.args[i]) return true;
        if (b.args[i] < a.args[i]) return false;
    }
    return false;
}

std::string to_string(const Atom& a) {
    std::string out = a.predicate;
    if (!a.args.empty()) {
        out.push_back('(');
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            if (i) out.push_back(',');
            out += to_string(a.args[i]);
        }
        out.push_back(')');
    }
    return out;
}

bool Rule::is_ground() const {
    auto ground_atoms = [](const std::vector<Atom>& atoms) {
        return std::all_of(atoms.begin(), atoms.end(), [](const Atom& a) { return a.is_ground(); });
    };
    return (!head || head->is_ground()) && ground_atoms(positive) && ground_atoms(negative);
}

bool operator<(const Rule& a, const Rule& b) {
    auto key = [](const Rule& r) {
        return std::tuple(r.head.has_value() ? 1 : 0, r.head ? *r.head : Atom{}, r.positive,
                          r.negative);
    };
    auto ka = key(a);
    auto kb = key(b);
    if (std::get<0>(ka) != std::get<0>(kb)) return std::get<0>(ka) < std::get<0>(kb);
    if (std::get<1>(ka) < std::get<1>(kb)) return true;
    if (std::get<1>(kb) < std::get<1>(ka)) return false;
    auto less_vec = [](const std::vector<Atom>& x, const std::vector<Atom>& y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                            [](const Atom& p, const Atom& q) { return p < q; });
    };
    if (less_vec(std::get<2>(ka), std::get<2>(kb))) return true;
    if (less_vec(std::get<2>(kb), std::get<2>(ka))) return false;
    return less_vec(std::get<3>(ka), std::get<3>(kb));
}

std::string to_string(const Rule& r) {
    std::string out;
    if (r.head) out += to_string(*r.head);
    if (!r.positive.empty() || !r.negative.empty()) {
        out += out.empty() ? ":- " : " :- ";
        bool first = true;
        for (const auto& a : r.positive) {
            if (!first) out += ", ";
            out += to_string(a);
            first = false;
        }
        for (const auto& a : r.negative) {
            if (!first) out += ", ";
            out += "not " + to_string(a);
            first = false;
        }
    }
    out.push_back('.');
    return out;
}

bool Program::is_ground() const {
    return std::all_of(rules.begin(), rules.end(), [](const Rule& r) { return r.is_ground(); });
}

std::string to_string(const Program& p) {
    std::string out;
    for (const auto& r : p.rules) {
        out += to_string(r);
        out.push_back('\n');
    }
    return out;
}

std::string models_to_jsonl(const SolveResult& result) {
    std::string out;
    for (const auto& model : result.models) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& atom : model) arr.push_back(to_string(atom));
        out += arr.dump();
        out.push_back('\n');
    }
    if (result.truncated) {
        out += nlohmann::json{{"truncated", true}}.dump();
        out.push_back('\n');
    }
    return out;
}

} // namespace triplecheck::asp

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
#include <map>
#include <set>

#include "triplecheck/asp.hpp"

namespace triplecheck::asp {

namespace {

void collect_constants(const Atom& atom, std::set<Term>& out) {
    for (const auto& t : atom.args) {
        if (t.is_ground()) out.insert(t);
    }
}

void collect_rule_variables(const Rule& rule, std::vector<std::string>& out) {
    std::set<std::string> seen;
    auto visit = [&](const Atom& atom) {
        for (const auto& t : atom.args) {
            if (t.kind == Term::Kind::Variable && seen.insert(t.text).second) {
                out.push_back(t.text);
            }
        }
    };
    if (rule.head) visit(*rule.head);
    for (const auto& a : rule.positive) visit(a);
    for (const auto& a : rule.negative) visit(a);
}

Atom substitute(const Atom& atom, const std::map<std::string, Term>& binding) {
    Atom out;
    out.predicate = atom.predicate;
    out.args.reserve(atom.args.size());
    for (const auto& t : atom.args) {
        if (t.kind == Term::Kind::Variable) {
            out.args.push_back(binding.at(t.text));
        } else {
            out.args.push_back(t);
        }
    }
    return out;
}

Rule substitute(const Rule& rule, const std::map<std::string, Term>& binding) {
    Rule out;
    if (rule.head) out.head = substitute(*rule.head, binding);
    for (const auto& a : rule.positive) out.positive.push_back(substitute(a, binding));
    for (const auto& a : rule.negative) out.negative.push_back(substitute(a, binding));
    return out;
}

} // namespace

Program ground(const Program& program, bool prune) {
    // Relevance pruning: a positive body atom whose predicate heads no rule
    // can never be derived, so the rule can never fire.
    std::set<std::string> defined;
    for (const auto& rule : program.rules) {
        if (rule.head) defined.insert(rule.head->predicate);
    }
    std::vector<const Rule*> kept;
    for (const auto& rule : program.rules) {
        bool hopeless = false;
        if (prune) {
            for (const auto& a : rule.positive) {
                if (!defined.count(a.predicate)) {
                    hopeless = true;
                    break;
                }
            }
        }
        if (!hopeless) kept.push_back(&rule);
    }

    std::set<Term> universe_set;
    for (const auto& rule : program.rules) {
        if (rule.head) collect_constants(*rule.head, universe_set);
        for (const auto& a : rule.positive) collect_constants(a, universe_set);
        for (const auto& a : rule.negative) collect_constants(a, universe_set);
    }
    std::vector<Term> universe(universe_set.begin(), universe_set.end());

    Program out;
    std::set<Rule> seen;
    auto emit = [&](Rule r) {
        if (seen.insert(r).second) out.rules.push_back(std::move(r));
    };

    for (const Rule* rule : kept) {
        std::vector<std::string> variables;
        collect_rule_variables(*rule, variables);
        if (variables.empty()) {
            emit(*rule);
            continue;
        }
        if (universe.empty()) continue; // no constants: no instances
        // Odometer over substitutions in sorted constant order.
        std::vector<std::size_t> index(variables.size(), 0);
        bool done = false;
        while (!done) {
            std::map<std::string, Term> binding;
            for (std::size_t i = 0; i < variables.size(); ++i) {
                binding[variables[i]] = universe[index[i]];
            }
            emit(substitute(*rule, binding));
            done = true;
            for (std::size_t pos = variables.size(); pos-- > 0;) {
                if (++index[pos] < universe.size()) {
                    done = false;
                    break;
                }
                index[pos] = 0;
            }
        }
    }
    return out;
}

} // namespace triplecheck::asp

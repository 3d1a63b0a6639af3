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

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace triplecheck::asp {

/// Term of a normal logic program: constant (lowercase symbol, quoted string,
/// or integer) or variable (uppercase-initial identifier).
struct Term {
    enum class Kind { Number, Symbol, String, Variable };

    Kind kind = Kind::Symbol;
    std::string text;      // symbol / string / variable spelling
    std::int64_t value = 0; // numbers only

    static Term number(std::int64_t v);
    static Term symbol(std::string s);
    static Term quoted(std::string s);
    static Term variable(std::string name);

    /// Symbol when `id` is a valid lowercase identifier, quoted string
    /// otherwise. Used when embedding canonical ids into programs.
    static Term constant_for_id(const std::string& id);

    bool is_ground() const { return kind != Kind::Variable; }

    bool operator==(const Term&) const = default;
};

/// Total order: numbers by value, then symbols, then strings (code-point
/// order), then variables. Fixes model and report ordering.
bool operator<(const Term& a, const Term& b);

std::string to_string(const Term& t);

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool is_ground() const;

    bool operator==(const Atom&) const = default;
};

bool operator<(const Atom& a, const Atom& b);

std::string to_string(const Atom& a);

/// `head :- positive, not negative.`; a missing head is an integrity
/// constraint. Safety: every variable of head/negative occurs in positive.
struct Rule {
    std::optional<Atom> head;
    std::vector<Atom> positive;
    std::vector<Atom> negative;

    bool is_constraint() const { return !head.has_value(); }
    bool is_fact() const { return head && positive.empty() && negative.empty(); }
    bool is_ground() const;

    bool operator==(const Rule&) const = default;
};

bool operator<(const Rule& a, const Rule& b);

std::string to_string(const Rule& r);

struct Program {
    std::vector<Rule> rules;

    bool is_ground() const;
    bool operator==(const Program&) const = default;
};

/// One rule per line, in program order.
std::string to_string(const Program& p);

/// Parses `rule := [atom] [":-" literal ("," literal)*] "."` with `%` line
/// comments. Enforces safety and one-arity-per-predicate at parse time.
/// Throws SyntaxError, UnsafeRuleError, ArityMismatchError.
Program parse_program(const std::string& text);
Program load_program(const std::string& path);

using AtomSet = std::set<Atom>;

/// Instantiates every rule over the program's constants. With `prune`,
/// rules whose positive body mentions a predicate that heads no rule are
/// dropped first; this never changes the stable models.
Program ground(const Program& program, bool prune = true);

/// Gelfond-Lifschitz transform of a ground program w.r.t. a candidate set.
Program reduct(const Program& ground_program, const AtomSet& candidate);

struct FixpointResult {
    AtomSet atoms;
    bool constraint_violated = false;
};

/// Least model of a positive ground program (constraints excluded from the
/// fixpoint, then checked against it). Throws on negative literals.
FixpointResult minimal_model(const Program& positive_ground);

struct SolveResult {
    std::vector<AtomSet> models; // sorted by the deterministic model order
    bool truncated = false;      // more than `limit` models exist
};

/// Enumerates all stable models (grounding first when needed), sorts them
/// lexicographically over sorted atoms, and returns at most `limit`.
SolveResult stable_models(const Program& program, std::size_t limit);

struct Violation {
    Rule constraint;
    std::vector<Atom> witnesses; // ground positive body atoms
};

/// Integrity constraints of a ground program whose body the candidate set
/// satisfies, in source order.
std::vector<Violation> explain_violations(const Program& ground_program, const AtomSet& candidate);

/// Ground rules used to derive `goal` in the fixpoint of the reduct of
/// `ground_program` w.r.t. `model`, dependency-first. Empty when `goal` is
/// not derivable.
std::vector<Rule> derivation(const Program& ground_program, const AtomSet& model, const Atom& goal);

/// One JSON array of atom strings per model, one model per line.
std::string models_to_jsonl(const SolveResult& result);

} // namespace triplecheck::asp

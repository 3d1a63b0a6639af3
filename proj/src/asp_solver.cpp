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
#include <stdexcept>

#include "triplecheck/asp.hpp"
#include "triplecheck/errors.hpp"

namespace triplecheck::asp {

Program reduct(const Program& ground_program, const AtomSet& candidate) {
    Program out;
    for (const auto& rule : ground_program.rules) {
        bool blocked = std::any_of(rule.negative.begin(), rule.negative.end(),
                                   [&](const Atom& a) { return candidate.count(a) > 0; });
        if (blocked) continue;
        Rule positive;
        positive.head = rule.head;
        positive.positive = rule.positive;
        out.rules.push_back(std::move(positive));
    }
    return out;
}

FixpointResult minimal_model(const Program& positive_ground) {
    for (const auto& rule : positive_ground.rules) {
        if (!rule.negative.empty()) {
            throw std::invalid_argument("minimal_model requires a positive program");
        }
    }
    FixpointResult result;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& rule : positive_ground.rules) {
            if (!rule.head || result.atoms.count(*rule.head)) continue;
            bool applicable = std::all_of(rule.positive.begin(), rule.positive.end(),
                                          [&](const Atom& a) { return result.atoms.count(a) > 0; });
            if (applicable) {
                result.atoms.insert(*rule.head);
                changed = true;
            }
        }
    }
    for (const auto& rule : positive_ground.rules) {
        if (rule.head) continue;
        bool satisfied = std::all_of(rule.positive.begin(), rule.positive.end(),
                                     [&](const Atom& a) { return result.atoms.count(a) > 0; });
        if (satisfied) {
            result.constraint_violated = true;
            break;
        }
    }
    return result;
}

namespace {

// Integer-indexed view of a ground program for the enumeration search.
struct Interned {
    std::vector<Atom> atoms;
    std::map<Atom, int> index;

    struct GroundRule {
        int head = -1; // -1: integrity constraint
        std::vector<int> positive;
        std::vector<int> negative;
    };
    std::vector<GroundRule> rules;
    std::vector<int> naf_atoms; // atoms occurring in some negative body (sorted, deduped)

    int intern(const Atom& atom) {
        auto it = index.find(atom);
        if (it != index.end()) return it->second;
        int id = int(atoms.size());
        atoms.push_back(atom);
        index.emplace(atom, id);
        return id;
    }

    explicit Interned(const Program& ground_program) {
        std::set<int> naf;
        for (const auto& rule : ground_program.rules) {
            GroundRule gr;
            if (rule.head) gr.head = intern(*rule.head);
            for (const auto& a : rule.positive) gr.positive.push_back(intern(a));
            for (const auto& a : rule.negative) {
                int id = intern(a);
                gr.negative.push_back(id);
                naf.insert(id);
            }
            rules.push_back(std::move(gr));
        }
        naf_atoms.assign(naf.begin(), naf.end());
    }
};

enum class Tv : unsigned char { Unknown, In, Out };

class Enumerator {
public:
    explicit Enumerator(const Program& ground_program) : prog_(ground_program) {
        state_.assign(prog_.atoms.size(), Tv::Unknown);
    }

    std::vector<std::vector<int>> run() {
        search();
        return std::move(models_);
    }

    const std::vector<Atom>& atoms() const { return prog_.atoms; }

private:
    // Least fixpoint over rules admitted by `admit`; constraints are skipped.
    std::vector<bool> fixpoint(bool optimistic) const {
        std::vector<bool> in(prog_.atoms.size(), false);
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& rule : prog_.rules) {
                if (rule.head < 0 || in[size_t(rule.head)]) continue;
                bool admitted = true;
                for (int n : rule.negative) {
                    Tv tv = state_[size_t(n)];
                    // Optimistic: only a definite In blocks the rule.
                    // Pessimistic: anything not yet Out blocks it.
                    if (optimistic ? tv == Tv::In : tv != Tv::Out) {
                        admitted = false;
                        break;
                    }
                }
                if (!admitted) continue;
                bool body = std::all_of(rule.positive.begin(), rule.positive.end(),
                                        [&](int p) { return in[size_t(p)]; });
                if (body) {
                    in[size_t(rule.head)] = true;
                    changed = true;
                }
            }
        }
        return in;
    }

    // Forces naf atoms that the bounds decide; false on contradiction.
    bool propagate() {
        while (true) {
            auto upper = fixpoint(true);
            for (int a : prog_.naf_atoms) {
                if (state_[size_t(a)] == Tv::In && !upper[size_t(a)]) return false;
            }
            auto lower = fixpoint(false);
            for (int a : prog_.naf_atoms) {
                if (state_[size_t(a)] == Tv::Out && lower[size_t(a)]) return false;
            }
            bool changed = false;
            for (int a : prog_.naf_atoms) {
                if (state_[size_t(a)] != Tv::Unknown) continue;
                if (!upper[size_t(a)]) {
                    state_[size_t(a)] = Tv::Out;
                    changed = true;
                } else if (lower[size_t(a)]) {
                    state_[size_t(a)] = Tv::In;
                    changed = true;
                }
            }
            if (!changed) return true;
        }
    }

    void check_leaf() {
        // Definite assignment: compute the reduct's least model and verify
        // the guess and the integrity constraints.
        auto model = fixpoint(false); // all naf atoms assigned: bounds agree
        for (int a : prog_.naf_atoms) {
            bool in = model[size_t(a)];
            if ((state_[size_t(a)] == Tv::In) != in) return;
        }
        for (const auto& rule : prog_.rules) {
            if (rule.head >= 0) continue;
            bool blocked = std::any_of(rule.negative.begin(), rule.negative.end(),
                                       [&](int n) { return state_[size_t(n)] == Tv::In; });
            if (blocked) continue;
            bool satisfied = std::all_of(rule.positive.begin(), rule.positive.end(),
                                         [&](int p) { return model[size_t(p)]; });
            if (satisfied) return; // constraint violated
        }
        std::vector<int> atoms;
        for (std::size_t i = 0; i < model.size(); ++i) {
            if (model[i]) atoms.push_back(int(i));
        }
        models_.push_back(std::move(atoms));
    }

    void search() {
        std::vector<Tv> saved = state_;
        if (!propagate()) {
            state_ = std::move(saved);
            return;
        }
        int branch = -1;
        for (int a : prog_.naf_atoms) {
            if (state_[size_t(a)] == Tv::Unknown) {
                branch = a;
                break;
            }
        }
        if (branch < 0) {
            check_leaf();
            state_ = std::move(saved);
            return;
        }
        std::vector<Tv> at_node = state_;
        state_[size_t(branch)] = Tv::Out;
        search();
        state_ = at_node;
        state_[size_t(branch)] = Tv::In;
        search();
        state_ = std::move(saved);
    }

    Interned prog_;
    std::vector<Tv> state_;
    std::vector<std::vector<int>> models_;
};

} // namespace

SolveResult stable_models(const Program& program, std::size_t limit) {
    Program grounded = program.is_ground() ? program : ground(program, true);
    Enumerator enumerator(grounded);
    auto raw = enumerator.run();

    std::vector<AtomSet> models;
    models.reserve(raw.size());
    for (const auto& ids : raw) {
        AtomSet m;
        for (int id : ids) m.insert(enumerator.atoms()[size_t(id)]);
        models.push_back(std::move(m));
    }
    std::sort(models.begin(), models.end(), [](const AtomSet& a, const AtomSet& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const Atom& x, const Atom& y) { return x < y; });
    });

    SolveResult result;
    result.truncated = models.size() > limit;
    if (result.truncated) models.resize(limit);
    result.models = std::move(models);
    return result;
}

std::vector<Violation> explain_violations(const Program& ground_program, const AtomSet& candidate) {
    std::vector<Violation> out;
    for (const auto& rule : ground_program.rules) {
        if (!rule.is_constraint()) continue;
        bool pos_ok = std::all_of(rule.positive.begin(), rule.positive.end(),
                                  [&](const Atom& a) { return candidate.count(a) > 0; });
        bool neg_ok = std::none_of(rule.negative.begin(), rule.negative.end(),
                                   [&](const Atom& a) { return candidate.count(a) > 0; });
        if (pos_ok && neg_ok) {
            out.push_back({rule, rule.positive});
        }
    }
    return out;
}

std::vector<Rule> derivation(const Program& ground_program, const AtomSet& model, const Atom& goal) {
    // Provenance fixpoint over the reduct w.r.t. the model: remember the
    // first rule that derives each atom, then walk the goal's dependencies.
    std::map<Atom, std::size_t> provenance;
    AtomSet derived;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < ground_program.rules.size(); ++i) {
            const Rule& rule = ground_program.rules[i];
            if (!rule.head || derived.count(*rule.head)) continue;
            bool blocked = std::any_of(rule.negative.begin(), rule.negative.end(),
                                       [&](const Atom& a) { return model.count(a) > 0; });
            if (blocked) continue;
            bool body = std::all_of(rule.positive.begin(), rule.positive.end(),
                                    [&](const Atom& a) { return derived.count(a) > 0; });
            if (body) {
                derived.insert(*rule.head);
                provenance.emplace(*rule.head, i);
                changed = true;
            }
        }
    }
    if (!derived.count(goal)) return {};

    std::vector<Rule> chain;
    AtomSet visited;
    auto walk = [&](auto&& self, const Atom& atom) -> void {
        if (!visited.insert(atom).second) return;
        const Rule& rule = ground_program.rules[provenance.at(atom)];
        for (const auto& dep : rule.positive) self(self, dep);
        chain.push_back(rule);
    };
    walk(walk, goal);
    return chain;
}

} // namespace triplecheck::asp

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

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "triplecheck/asp.hpp"
#include "triplecheck/errors.hpp"

namespace triplecheck::asp {

namespace {

struct Token {
    enum class Kind { Ident, Variable, Number, String, LParen, RParen, Comma, Dot, If, End };
    Kind kind = Kind::End;
    std::string text;
    std::int64_t value = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_trivia();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (pos_ >= text_.size()) return tok; // End

        char c = text_[pos_];
        if (c == '(') return single(Token::Kind::LParen);
        if (c == ')') return single(Token::Kind::RParen);
        if (c == ',') return single(Token::Kind::Comma);
        if (c == '.') return single(Token::Kind::Dot);
        if (c == ':') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                advance();
                advance();
                tok.kind = Token::Kind::If;
                return tok;
            }
            throw SyntaxError(line_, column_, "expected \":-\"");
        }
        if (c == '"') return lex_string(tok);
        if (c == '-' || is_digit(c)) return lex_number(tok);
        if (is_lower(c)) return lex_name(tok, Token::Kind::Ident);
        if (is_upper(c)) return lex_name(tok, Token::Kind::Variable);
        throw SyntaxError(line_, column_, std::string("unexpected character '") + c + "'");
    }

private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
    static bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
    static bool is_name_char(char c) {
        return is_lower(c) || is_upper(c) || is_digit(c) || c == '_';
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    Token single(Token::Kind kind) {
        Token tok;
        tok.kind = kind;
        tok.line = line_;
        tok.column = column_;
        advance();
        return tok;
    }

    Token lex_string(Token& tok) {
        advance(); // opening quote
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            char c = text_[pos_];
            if (c == '\n') throw SyntaxError(tok.line, tok.column, "unterminated string");
            if (c == '\\') {
                advance();
                if (pos_ >= text_.size()) break;
                char esc = text_[pos_];
                if (esc != '"' && esc != '\\') {
                    throw SyntaxError(line_, column_, "unsupported escape in string");
                }
                out.push_back(esc);
                advance();
            } else {
                out.push_back(c);
                advance();
            }
        }
        if (pos_ >= text_.size()) throw SyntaxError(tok.line, tok.column, "unterminated string");
        advance(); // closing quote
        tok.kind = Token::Kind::String;
        tok.text = std::move(out);
        return tok;
    }

    Token lex_number(Token& tok) {
        std::string digits;
        if (text_[pos_] == '-') {
            digits.push_back('-');
            advance();
            if (pos_ >= text_.size() || !is_digit(text_[pos_])) {
                throw SyntaxError(tok.line, tok.column, "expected digits after '-'");
            }
        }
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
            digits.push_back(text_[pos_]);
            advance();
        }
        tok.kind = Token::Kind::Number;
        try {
            tok.value = std::stoll(digits);
        } catch (const std::out_of_range&) {
            throw SyntaxError(tok.line, tok.column, "integer constant out of range");
        }
        return tok;
    }

    Token lex_name(Token& tok, Token::Kind kind) {
        std::string name;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) {
            name.push_back(text_[pos_]);
            advance();
        }
        tok.kind = kind;
        tok.text = std::move(name);
        return tok;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { shift(); }

    Program run() {
        Program program;
        while (current_.kind != Token::Kind::End) {
            program.rules.push_back(parse_rule());
            check_arities(program.rules.back());
            check_safety(program.rules.back(), program.rules.size() - 1);
        }
        return program;
    }

private:
    void shift() { current_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& message) {
        throw SyntaxError(current_.line, current_.column, message);
    }

    void expect(Token::Kind kind, const char* what) {
        if (current_.kind != kind) fail(std::string("expected ") + what);
        shift();
    }

    Rule parse_rule() {
        Rule rule;
        if (current_.kind == Token::Kind::Dot) fail("empty rule");
        if (current_.kind != Token::Kind::If) {
            if (current_.kind == Token::Kind::Ident && current_.text == "not") {
                fail("\"not\" is reserved and cannot head a rule");
            }
            rule.head = parse_atom();
        }
        if (current_.kind == Token::Kind::If) {
            shift();
            parse_literal(rule);
            while (current_.kind == Token::Kind::Comma) {
                shift();
                parse_literal(rule);
            }
        }
        expect(Token::Kind::Dot, "'.'");
        return rule;
    }

    void parse_literal(Rule& rule) {
        bool negated = false;
        if (current_.kind == Token::Kind::Ident && current_.text == "not") {
            negated = true;
            shift();
        }
        Atom atom = parse_atom();
        (negated ? rule.negative : rule.positive).push_back(std::move(atom));
    }

    Atom parse_atom() {
        if (current_.kind != Token::Kind::Ident) fail("expected predicate name");
        if (current_.text == "not") fail("\"not\" is reserved and cannot name a predicate");
        Atom atom;
        atom.predicate = current_.text;
        shift();
        if (current_.kind == Token::Kind::LParen) {
            shift();
            atom.args.push_back(parse_term());
            while (current_.kind == Token::Kind::Comma) {
                shift();
                atom.args.push_back(parse_term());
            }
            expect(Token::Kind::RParen, "')'");
        }
        return atom;
    }

    Term parse_term() {
        switch (current_.kind) {
        case Token::Kind::Ident: {
            Term t = Term::symbol(current_.text);
            shift();
            return t;
        }
        case Token::Kind::Variable: {
            Term t = Term::variable(current_.text);
            shift();
            return t;
        }
        case Token::Kind::Number: {
            Term t = Term::number(current_.value);
            shift();
            return t;
        }
        case Token::Kind::String: {
            Term t = Term::quoted(current_.text);
            shift();
            return t;
        }
        default: fail("expected term");
        }
    }

    void check_arities(const Rule& rule) {
        auto check = [&](const Atom& atom) {
            auto [it, fresh] = arities_.try_emplace(atom.predicate, atom.args.size());
            if (!fresh && it->second != atom.args.size()) {
                throw ArityMismatchError(atom.predicate);
            }
        };
        if (rule.head) check(*rule.head);
        for (const auto& a : rule.positive) check(a);
        for (const auto& a : rule.negative) check(a);
    }

    static void collect_variables(const Atom& atom, std::set<std::string>& out) {
        for (const auto& t : atom.args) {
            if (t.kind == Term::Kind::Variable) out.insert(t.text);
        }
    }

    void check_safety(const Rule& rule, std::size_t index) {
        std::set<std::string> positive_vars;
        for (const auto& a : rule.positive) collect_variables(a, positive_vars);
        std::set<std::string> needed;
        if (rule.head) collect_variables(*rule.head, needed);
        for (const auto& a : rule.negative) collect_variables(a, needed);
        for (const auto& v : needed) {
            if (!positive_vars.count(v)) throw UnsafeRuleError(index, v);
        }
    }

    Lexer lexer_;
    Token current_;
    std::map<std::string, std::size_t> arities_;
};

} // namespace

Program parse_program(const std::string& text) { return Parser(text).run(); }

Program load_program(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileNotFound", "cannot open program file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_program(buf.str());
}

} // namespace triplecheck::asp

#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qsr/calculus.hpp"
#include "qsr/model.hpp"
#include "qsr/network.hpp"

namespace qsr {

// Parse failure with position information. what() is pre-formatted as
// "origin:line:col: message".
class ParseError : public std::runtime_error {
public:
    ParseError(std::string origin, std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error(origin + ":" + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + message),
          origin_(std::move(origin)), line_(line), column_(column), message_(message) {}

    const std::string& origin() const { return origin_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::string origin_;
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

namespace detail {

struct Token {
    enum Kind { Word, Quoted, Open, Close } kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

// Splits one line into tokens. '#' starts a comment; quoted strings are only
// meaningful in headers but lexed uniformly.
inline void lex_line(std::string_view line, std::size_t line_no,
                     const std::string& origin, std::vector<Token>& out) {
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') return;
        if (c == ' ' || c == '\t' || c == '\r') { ++i; continue; }
        const std::size_t col = i + 1;
        if (c == '(') { out.push_back({Token::Open, "(", line_no, col}); ++i; continue; }
        if (c == ')') { out.push_back({Token::Close, ")", line_no, col}); ++i; continue; }
        if (c == '"') {
            std::size_t j = line.find('"', i + 1);
            if (j == std::string_view::npos)
                throw ParseError(origin, line_no, col, "unterminated string");
            out.push_back({Token::Quoted, std::string(line.substr(i + 1, j - i - 1)), line_no, col});
            i = j + 1;
            continue;
        }
        std::size_t j = i;
        while (j < line.size()) {
            const char d = line[j];
            if (d == ' ' || d == '\t' || d == '\r' || d == '(' || d == ')' || d == '#' || d == '"') break;
            ++j;
        }
        out.push_back({Token::Word, std::string(line.substr(i, j - i)), line_no, col});
        i = j;
    }
}

// Token stream over the whole document, with lookahead by line.
class Lines {
public:
    Lines(std::string_view text, std::string origin) : origin_(std::move(origin)) {
        std::size_t line_no = 1;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t nl = text.find('\n', pos);
            const std::string_view line =
                text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
            std::vector<Token> toks;
            lex_line(line, line_no, origin_, toks);
            if (!toks.empty()) lines_.push_back(std::move(toks));
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
            ++line_no;
        }
    }

    bool done() const { return next_ >= lines_.size(); }
    const std::vector<Token>& peek() const { return lines_[next_]; }
    const std::vector<Token>& take() { return lines_[next_++]; }
    const std::string& origin() const { return origin_; }

    [[noreturn]] void fail(const Token& at, const std::string& message) const {
        throw ParseError(origin_, at.line, at.column, message);
    }

    [[noreturn]] void fail_eof(const std::string& message) const {
        const std::size_t line = lines_.empty() ? 1 : lines_.back().back().line + 1;
        throw ParseError(origin_, line, 1, message);
    }

private:
    std::string origin_;
    std::vector<std::vector<Token>> lines_;
    std::size_t next_ = 0;
};

inline std::size_t resolve_token(const CalculusSpec& calc, const Lines& doc, const Token& tok) {
    if (tok.kind != Token::Word) doc.fail(tok, "expected relation token");
    if (auto idx = calc.index_of(tok.text)) return *idx;
    doc.fail(tok, "unknown relation '" + tok.text + "'");
}

// Parses "( tok tok ... )" starting at position i; returns the relation.
inline Relation parse_token_set(const CalculusSpec& calc, const Lines& doc,
                                const std::vector<Token>& toks, std::size_t& i) {
    if (i >= toks.size()) doc.fail(toks.back(), "expected '('");
    if (toks[i].kind != Token::Open) doc.fail(toks[i], "expected '('");
    ++i;
    Relation rel(calc.size());
    while (i < toks.size() && toks[i].kind != Token::Close) {
        rel.set(resolve_token(calc, doc, toks[i]));
        ++i;
    }
    if (i >= toks.size()) doc.fail(toks.back(), "missing ')'");
    ++i;
    return rel;
}

} // namespace detail

// Parses a .qcalc document:
//   calculus "<name>"
//   relations <tok> ...
//   identity <tok> | (<tok> ...) | none       (optional line; default none)
//   converse
//   <tok> (<tok> ...)                          one row per base relation
//   composition
//   <tok> <tok> (<tok> ...)                    one cell per ordered pair
inline CalculusSpec parse_calculus(std::string_view text, const std::string& origin = "<input>") {
    using detail::Token;
    detail::Lines doc(text, origin);

    if (doc.done()) doc.fail_eof("expected 'calculus \"<name>\"'");
    const auto& header = doc.take();
    if (header[0].kind != Token::Word || header[0].text != "calculus" ||
        header.size() != 2 || header[1].kind != Token::Quoted)
        doc.fail(header[0], "expected 'calculus \"<name>\"'");
    const std::string name = header[1].text;

    if (doc.done()) doc.fail_eof("expected 'relations' line");
    const auto& rel_line = doc.take();
    if (rel_line[0].kind != Token::Word || rel_line[0].text != "relations")
        doc.fail(rel_line[0], "expected 'relations' line");
    std::vector<std::string> names;
    for (std::size_t i = 1; i < rel_line.size(); ++i) {
        if (rel_line[i].kind != Token::Word) doc.fail(rel_line[i], "bad relation name");
        for (const auto& seen : names)
            if (seen == rel_line[i].text)
                doc.fail(rel_line[i], "duplicate relation name '" + rel_line[i].text + "'");
        names.push_back(rel_line[i].text);
    }
    if (names.empty()) doc.fail(rel_line[0], "empty base-relation list");
    const std::size_t n = names.size();

    // A scratch spec gives token lookup while the tables are being read.
    std::vector<Relation> scratch_conv(n, Relation(n));
    std::vector<Relation> scratch_comp(n * n, Relation(n));
    CalculusSpec lookup(name, std::vector<std::string>(names), std::nullopt,
                        scratch_conv, scratch_comp);

    std::optional<Relation> identity;
    if (!doc.done() && doc.peek()[0].kind == Token::Word && doc.peek()[0].text == "identity") {
        const auto& id_line = doc.take();
        if (id_line.size() < 2) doc.fail(id_line[0], "expected identity value");
        if (id_line[1].kind == Token::Word && id_line[1].text == "none") {
            identity = std::nullopt;
        } else if (id_line[1].kind == Token::Open) {
            std::size_t i = 1;
            Relation id = detail::parse_token_set(lookup, doc, id_line, i);
            if (id.none()) doc.fail(id_line[1], "declared identity is empty");
            identity = id;
        } else {
            identity = Relation::singleton(n, detail::resolve_token(lookup, doc, id_line[1]));
        }
    }

    if (doc.done()) doc.fail_eof("expected 'converse' section");
    const auto& conv_header = doc.take();
    if (conv_header[0].kind != Token::Word || conv_header[0].text != "converse")
        doc.fail(conv_header[0], "expected 'converse' section");

    std::vector<std::optional<Relation>> conv(n);
    for (std::size_t row = 0; row < n; ++row) {
        if (doc.done()) doc.fail_eof("missing converse entry");
        const auto& line = doc.take();
        const std::size_t r = detail::resolve_token(lookup, doc, line[0]);
        if (conv[r]) doc.fail(line[0], "duplicate converse entry for '" + names[r] + "'");
        std::size_t i = 1;
        conv[r] = detail::parse_token_set(lookup, doc, line, i);
        if (i != line.size()) doc.fail(line[i], "trailing tokens after converse entry");
    }

    if (doc.done()) doc.fail_eof("expected 'composition' section");
    const auto& comp_header = doc.take();
    if (comp_header[0].kind != Token::Word || comp_header[0].text != "composition")
        doc.fail(comp_header[0], "expected 'composition' section");

    std::vector<std::optional<Relation>> comp(n * n);
    for (std::size_t entry = 0; entry < n * n; ++entry) {
        if (doc.done()) {
            for (std::size_t i = 0; i < n * n; ++i)
                if (!comp[i])
                    doc.fail_eof("missing composition entry for '" + names[i / n] + " " +
                                 names[i % n] + "'");
        }
        const auto& line = doc.take();
        if (line.size() < 2) doc.fail(line[0], "expected '<tok> <tok> (<tok> ...)'");
        const std::size_t r = detail::resolve_token(lookup, doc, line[0]);
        const std::size_t s = detail::resolve_token(lookup, doc, line[1]);
        if (comp[r * n + s])
            doc.fail(line[0], "duplicate composition entry for '" + names[r] + " " + names[s] + "'");
        std::size_t i = 2;
        comp[r * n + s] = detail::parse_token_set(lookup, doc, line, i);
        if (i != line.size()) doc.fail(line[i], "trailing tokens after composition entry");
    }
    if (!doc.done()) doc.fail(doc.peek()[0], "unexpected content after composition table");

    std::vector<Relation> conv_final, comp_final;
    conv_final.reserve(n);
    comp_final.reserve(n * n);
    for (auto& c : conv) conv_final.push_back(std::move(*c));
    for (auto& c : comp) comp_final.push_back(std::move(*c));
    return CalculusSpec(name, std::move(names), std::move(identity),
                        std::move(conv_final), std::move(comp_final));
}

// Emits the normative .qcalc layout; parse_calculus(serialize_calculus(c)) == c.
inline std::string serialize_calculus(const CalculusSpec& calc) {
    std::ostringstream out;
    out << "calculus \"" << calc.name() << "\"\n";
    out << "relations";
    for (const auto& b : calc.base()) out << ' ' << b.name;
    out << '\n';
    if (calc.identity())
        out << "identity " << calc.tokens(*calc.identity()) << '\n';
    else
        out << "identity none\n";
    out << "converse\n";
    for (std::size_t i = 0; i < calc.size(); ++i)
        out << calc.base_name(i) << ' ' << calc.tokens(calc.base_converse(i)) << '\n';
    out << "composition\n";
    for (std::size_t i = 0; i < calc.size(); ++i)
        for (std::size_t j = 0; j < calc.size(); ++j)
            out << calc.base_name(i) << ' ' << calc.base_name(j) << ' '
                << calc.tokens(calc.cell(i, j)) << '\n';
    return out.str();
}

// Parses a .qmodel document for a known calculus:
//   universe <elem> ...
//   <tok> (a b) (a b) ...                      one row per base relation
inline FiniteModel parse_model(std::string_view text, const CalculusSpec& calc,
                               const std::string& origin = "<input>") {
    using detail::Token;
    detail::Lines doc(text, origin);
    const std::size_t n = calc.size();

    if (doc.done()) doc.fail_eof("expected 'universe' line");
    const auto& uni_line = doc.take();
    if (uni_line[0].kind != Token::Word || uni_line[0].text != "universe")
        doc.fail(uni_line[0], "expected 'universe' line");
    std::vector<std::string> universe;
    for (std::size_t i = 1; i < uni_line.size(); ++i) {
        if (uni_line[i].kind != Token::Word) doc.fail(uni_line[i], "bad universe element");
        for (const auto& seen : universe)
            if (seen == uni_line[i].text)
                doc.fail(uni_line[i], "duplicate universe element '" + uni_line[i].text + "'");
        universe.push_back(uni_line[i].text);
    }
    if (universe.empty()) doc.fail(uni_line[0], "empty universe");

    auto element = [&](const Token& tok) -> std::size_t {
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (universe[i] == tok.text) return i;
        doc.fail(tok, "unknown universe element '" + tok.text + "'");
    };

    std::vector<std::optional<PairSet>> phi(n);
    while (!doc.done()) {
        const auto& line = doc.take();
        const std::size_t r = detail::resolve_token(calc, doc, line[0]);
        if (phi[r]) doc.fail(line[0], "duplicate interpretation for '" + calc.base_name(r) + "'");
        PairSet pairs(universe.size());
        std::size_t i = 1;
        while (i < line.size()) {
            if (line[i].kind != Token::Open) doc.fail(line[i], "expected '(a b)' pair");
            if (i + 4 > line.size()) doc.fail(line[i], "incomplete pair");
            if (line[i + 3].kind != Token::Close) doc.fail(line[i + 3], "expected ')'");
            pairs.set(element(line[i + 1]), element(line[i + 2]));
            i += 4;
        }
        phi[r] = std::move(pairs);
    }
    for (std::size_t r = 0; r < n; ++r)
        if (!phi[r]) doc.fail_eof("no pair set given for '" + calc.base_name(r) + "'");

    FiniteModel model;
    model.name = origin;
    model.universe = std::move(universe);
    model.phi.reserve(n);
    for (auto& p : phi) model.phi.push_back(std::move(*p));
    return model;
}

inline std::string serialize_model(const FiniteModel& model, const CalculusSpec& calc) {
    std::ostringstream out;
    out << "universe";
    for (const auto& e : model.universe) out << ' ' << e;
    out << '\n';
    for (std::size_t r = 0; r < model.phi.size(); ++r) {
        out << calc.base_name(r);
        for (std::size_t a = 0; a < model.universe.size(); ++a)
            for (std::size_t b = 0; b < model.universe.size(); ++b)
                if (model.phi[r].test(a, b))
                    out << " (" << model.universe[a] << ' ' << model.universe[b] << ')';
        out << '\n';
    }
    return out.str();
}

// Parses a .qcsp document for a known calculus:
//   network <n>
//   <i> (<tok> ...) <j>                        0-based variables
// Unlisted pairs default to the universal relation; duplicates intersect.
inline ConstraintNetwork parse_network(std::string_view text, const CalculusSpec& calc,
                                       const std::string& origin = "<input>") {
    using detail::Token;
    detail::Lines doc(text, origin);

    if (doc.done()) doc.fail_eof("expected 'network <n>' line");
    const auto& header = doc.take();
    if (header[0].kind != Token::Word || header[0].text != "network" ||
        header.size() != 2 || header[1].kind != Token::Word)
        doc.fail(header[0], "expected 'network <n>' line");
    std::size_t n = 0;
    try {
        n = std::stoul(header[1].text);
    } catch (const std::exception&) {
        doc.fail(header[1], "bad variable count '" + header[1].text + "'");
    }
    if (n == 0) doc.fail(header[1], "network needs at least one variable");

    ConstraintNetwork net(n, calc.size());
    auto variable = [&](const Token& tok) -> std::size_t {
        std::size_t v = 0;
        try {
            v = std::stoul(tok.text);
        } catch (const std::exception&) {
            doc.fail(tok, "bad variable '" + tok.text + "'");
        }
        if (v >= n) doc.fail(tok, "variable index out of range: " + tok.text);
        return v;
    };

    while (!doc.done()) {
        const auto& line = doc.take();
        if (line.size() < 3) doc.fail(line[0], "expected '<i> (<tok> ...) <j>'");
        const std::size_t i = variable(line[0]);
        std::size_t pos = 1;
        const Relation rel = detail::parse_token_set(calc, doc, line, pos);
        if (pos + 1 != line.size()) doc.fail(line[0], "expected '<i> (<tok> ...) <j>'");
        const std::size_t j = variable(line[pos]);
        net.constrain(i, j, rel);
    }
    return net;
}

inline std::string serialize_network(const ConstraintNetwork& net, const CalculusSpec& calc) {
    std::ostringstream out;
    out << "network " << net.var_count << '\n';
    for (std::size_t i = 0; i < net.var_count; ++i)
        for (std::size_t j = 0; j < net.var_count; ++j)
            if (!net.at(i, j).is_full())
                out << i << ' ' << calc.tokens(net.at(i, j)) << ' ' << j << '\n';
    return out.str();
}

} // namespace qsr

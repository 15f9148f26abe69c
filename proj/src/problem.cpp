#include "covercheck/problem.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "covercheck/errors.hpp"

namespace covercheck {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    Lexer(const std::string& text, int line_offset, int col_offset)
        : text_(text), line_(line_offset), col_(col_offset) {}

    Token next() {
        skip_space();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::End, "", line, col};
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit = take_digits();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                advance();
                if (pos_ >= text_.size() ||
                    !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail(line, col, "expected digits after '/' in rational literal");
                lit += "/" + take_digits();
            }
            return {Token::Number, lit, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                id += text_[pos_];
                advance();
            }
            return {Token::Ident, id, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Token::Plus, "+", line, col};
            case '-': return {Token::Minus, "-", line, col};
            case '*': return {Token::Star, "*", line, col};
            case '^': return {Token::Caret, "^", line, col};
            case '(': return {Token::LParen, "(", line, col};
            case ')': return {Token::RParen, ")", line, col};
            default:
                fail(line, col, std::string("unexpected character '") + c + "'");
        }
        return {Token::End, "", line, col};  // unreachable
    }

    [[noreturn]] static void fail(int line, int col, const std::string& msg) {
        throw InputError("line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + msg);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') ++line_, col_ = 1;
        else ++col_;
        ++pos_;
    }
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }
    std::string take_digits() {
        std::string d;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            d += text_[pos_];
            advance();
        }
        return d;
    }
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_, col_;
};

class ExprParser {
public:
    ExprParser(const std::string& text, const VarTablePtr& table, int line_offset,
               int col_offset = 1)
        : lexer_(text, line_offset, col_offset), table_(table) {
        cur_ = lexer_.next();
    }

    Polynomial parse() {
        Polynomial p = expr();
        if (cur_.kind != Token::End)
            Lexer::fail(cur_.line, cur_.col, "unexpected '" + cur_.text + "'");
        return p;
    }

private:
    void bump() { cur_ = lexer_.next(); }
    bool eat(Token::Kind k) {
        if (cur_.kind != k) return false;
        bump();
        return true;
    }

    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            if (eat(Token::Plus)) p += term();
            else if (eat(Token::Minus)) p -= term();
            else return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (eat(Token::Star)) p *= factor();
        // A juxtaposed operand means a missing '*'.
        if (cur_.kind == Token::Ident || cur_.kind == Token::Number ||
            cur_.kind == Token::LParen)
            Lexer::fail(cur_.line, cur_.col,
                        "missing '*' before '" + cur_.text + "'");
        return p;
    }

    Polynomial factor() {
        if (eat(Token::Minus)) return -factor();
        Polynomial p = primary();
        if (eat(Token::Caret)) {
            Token e = cur_;
            if (e.kind != Token::Number || e.text.find('/') != std::string::npos)
                Lexer::fail(e.line, e.col, "exponent must be a nonnegative integer");
            bump();
            return p.pow(std::stoi(e.text));
        }
        return p;
    }

    Polynomial primary() {
        Token t = cur_;
        switch (t.kind) {
            case Token::Number:
                bump();
                return Polynomial::constant(table_, rational_from_string(t.text));
            case Token::Ident: {
                auto idx = table_->index_of(t.text);
                if (!idx)
                    Lexer::fail(t.line, t.col, "unknown variable '" + t.text + "'");
                bump();
                return Polynomial::variable(table_, *idx);
            }
            case Token::LParen: {
                bump();
                Polynomial p = expr();
                if (!eat(Token::RParen))
                    Lexer::fail(cur_.line, cur_.col, "expected ')'");
                return p;
            }
            default:
                Lexer::fail(t.line, t.col,
                            t.kind == Token::End ? "unexpected end of expression"
                                                 : "unexpected '" + t.text + "'");
        }
        return Polynomial(table_);  // unreachable
    }

    Lexer lexer_;
    VarTablePtr table_;
    Token cur_;
};

struct Section {
    std::string head;  // "fiber", "base", "order", "ideal", "radical", "point"
    std::string arg;   // point name
    std::string body;
    int line;
    int col;  // column of the body on the header line
};

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

// Matches "<keyword> [arg] :" at the start of a line; returns the rest.
std::optional<Section> match_section(const std::string& line, int lineno) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    auto take_word = [&]() -> std::string {
        std::string w;
        while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) ||
                                   line[i] == '_')) {
            w += line[i];
            ++i;
        }
        return w;
    };
    skip_ws();
    std::size_t mark = i;
    std::string head = take_word();
    static const char* kinds[] = {"fiber", "base", "order", "ideal", "radical", "point"};
    bool known = false;
    for (const char* k : kinds) known = known || head == k;
    if (!known) return std::nullopt;
    std::string arg;
    if (head == "point") {
        skip_ws();
        arg = take_word();
        if (arg.empty())
            throw InputError("line " + std::to_string(lineno) + ": point needs a name");
    }
    skip_ws();
    if (i >= line.size() || line[i] != ':') {
        if (head == "point")
            throw InputError("line " + std::to_string(lineno) +
                             ": expected ':' after point name");
        (void)mark;
        return std::nullopt;  // an expression may start with these letters
    }
    ++i;
    return Section{head, arg, line.substr(i), lineno, static_cast<int>(i) + 1};
}

std::vector<Polynomial> parse_generators(const std::string& body, int lineno, int colno,
                                         const VarTablePtr& table) {
    std::vector<Polynomial> gens;
    std::string chunk;
    int chunk_line = lineno, chunk_col = colno;
    bool fresh = true;
    auto flush = [&] {
        // Step past leading whitespace so positions point at the first token.
        std::size_t i = 0;
        int line = chunk_line, col = chunk_col;
        while (i < chunk.size() && std::isspace(static_cast<unsigned char>(chunk[i]))) {
            if (chunk[i] == '\n') ++line, col = 1;
            else ++col;
            ++i;
        }
        if (i == chunk.size()) {
            if (!fresh)
                throw InputError("line " + std::to_string(line) + ": empty generator");
            return;
        }
        gens.push_back(ExprParser(chunk.substr(i), table, line, col).parse());
        fresh = false;
    };
    int cur_line = lineno, cur_col = colno;
    for (char c : body) {
        if (c == '\n') ++cur_line, cur_col = 1;
        else ++cur_col;
        if (c == ';') {
            flush();
            fresh = false;
            chunk.clear();
            chunk_line = cur_line;
            chunk_col = cur_col;
            continue;
        }
        chunk += c;
    }
    if (!split_ws(chunk).empty()) flush();
    if (gens.empty())
        throw InputError("line " + std::to_string(lineno) + ": no generators given");
    return gens;
}

OrderKind parse_order_word(const std::string& w, int lineno) {
    if (w == "lex") return OrderKind::Lex;
    if (w == "grevlex") return OrderKind::Grevlex;
    throw InputError("line " + std::to_string(lineno) + ": unknown order '" + w +
                     "' (expected lex or grevlex)");
}

}  // namespace

const std::vector<Rational>* ProblemFile::find_point(const std::string& name) const {
    for (const auto& [pname, coords] : points)
        if (pname == name) return &coords;
    return nullptr;
}

Polynomial parse_polynomial(const std::string& text, const VarTablePtr& table) {
    return ExprParser(text, table, 1, 1).parse();
}

ProblemFile parse_problem(const std::string& text) {
    // Pass 1: cut the file into sections, keeping line numbers.
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (split_ws(line).empty()) {
            // Keep blank lines in the body so positions stay physical.
            if (!sections.empty()) sections.back().body += "\n";
            continue;
        }
        if (auto sec = match_section(line, lineno)) {
            sections.push_back(std::move(*sec));
        } else {
            if (sections.empty())
                throw InputError("line " + std::to_string(lineno) +
                                 ": content before any section");
            sections.back().body += "\n" + line;
        }
    }

    std::vector<std::string> fiber_names, base_names;
    bool saw_fiber = false, saw_base = false;
    std::optional<Section> ideal_sec, radical_sec, order_sec;
    std::vector<Section> point_secs;
    for (auto& sec : sections) {
        if (sec.head == "fiber") {
            if (saw_fiber) throw InputError("line " + std::to_string(sec.line) +
                                            ": duplicate fiber section");
            saw_fiber = true;
            fiber_names = split_ws(sec.body);
        } else if (sec.head == "base") {
            if (saw_base) throw InputError("line " + std::to_string(sec.line) +
                                           ": duplicate base section");
            saw_base = true;
            base_names = split_ws(sec.body);
        } else if (sec.head == "order") {
            if (order_sec) throw InputError("line " + std::to_string(sec.line) +
                                            ": duplicate order section");
            order_sec = sec;
        } else if (sec.head == "ideal") {
            if (ideal_sec) throw InputError("line " + std::to_string(sec.line) +
                                            ": duplicate ideal section");
            ideal_sec = sec;
        } else if (sec.head == "radical") {
            if (radical_sec) throw InputError("line " + std::to_string(sec.line) +
                                              ": duplicate radical section");
            radical_sec = sec;
        } else {
            point_secs.push_back(sec);
        }
    }
    if (!saw_fiber) throw InputError("missing fiber section");
    if (!saw_base) throw InputError("missing base section");
    if (fiber_names.empty() && base_names.empty())
        throw InputError("no variables declared");
    if (!ideal_sec) throw InputError("missing ideal section");

    ProblemFile pf;
    pf.source_text = text;
    std::vector<std::string> all = fiber_names;
    all.insert(all.end(), base_names.begin(), base_names.end());
    pf.table = VarTable::make(std::move(all), fiber_names.size());

    if (order_sec) {
        std::vector<std::string> words = split_ws(order_sec->body);
        if (words.empty() || words.size() > 2)
            throw InputError("line " + std::to_string(order_sec->line) +
                             ": order wants one or two of lex|grevlex");
        pf.fiber_order = parse_order_word(words[0], order_sec->line);
        pf.base_order = words.size() == 2 ? parse_order_word(words[1], order_sec->line)
                                          : pf.fiber_order;
    }

    pf.ideal_gens =
        parse_generators(ideal_sec->body, ideal_sec->line, ideal_sec->col, pf.table);
    if (radical_sec)
        pf.radical_gens = parse_generators(radical_sec->body, radical_sec->line,
                                           radical_sec->col, pf.table);

    for (const auto& sec : point_secs) {
        for (const auto& [name, coords] : pf.points)
            if (name == sec.arg)
                throw InputError("line " + std::to_string(sec.line) +
                                 ": duplicate point '" + sec.arg + "'");
        std::vector<std::string> words = split_ws(sec.body);
        if (words.size() != base_names.size())
            throw InputError("line " + std::to_string(sec.line) + ": point '" + sec.arg +
                             "' needs " + std::to_string(base_names.size()) +
                             " coordinates, got " + std::to_string(words.size()));
        std::vector<Rational> coords;
        for (const auto& w : words) coords.push_back(rational_from_string(w));
        pf.points.emplace_back(sec.arg, std::move(coords));
    }
    return pf;
}

}  // namespace covercheck

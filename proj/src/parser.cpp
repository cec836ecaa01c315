#include "coverforge/parser.hpp"

#include <cctype>

#include "coverforge/errors.hpp"

namespace coverforge {

namespace {

struct Token {
    enum Kind { Ident, Integer, Punct, End } kind = End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') { // comment to end of line
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
                continue;
            }
            if (c == '\n') {
                ++pos_;
                ++line_;
                col_ = 1;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                ++col_;
                continue;
            }
            break;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Token::End;
            tok_.text.clear();
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                ++col_;
            }
            tok_.kind = Token::Integer;
            tok_.text = src_.substr(start, pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
                ++col_;
            }
            tok_.kind = Token::Ident;
            tok_.text = src_.substr(start, pos_ - start);
            return;
        }
        tok_.kind = Token::Punct;
        tok_.text = std::string(1, c);
        ++pos_;
        ++col_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw parse_error(msg + (t.kind == Token::End ? " at end of input"
                                                  : " near '" + t.text + "'"),
                      t.line, t.col);
}

class PolyParser {
public:
    PolyParser(Lexer& lex, const RingPtr& ring) : lex_(lex), ring_(ring) {}

    Polynomial expression() {
        bool neg = false;
        if (is_punct("-")) {
            lex_.take();
            neg = true;
        } else if (is_punct("+")) {
            lex_.take();
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (is_punct("+") || is_punct("-")) {
            bool minus = lex_.take().text == "-";
            Polynomial t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

private:
    bool is_punct(const char* s) const {
        return lex_.peek().kind == Token::Punct && lex_.peek().text == s;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (is_punct("*")) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (is_punct("^")) {
            Token caret = lex_.take();
            if (lex_.peek().kind != Token::Integer)
                fail(lex_.peek().kind == Token::End ? caret : lex_.peek(),
                     "expected exponent");
            int e = std::stoi(lex_.take().text);
            base = base.pow(e);
        }
        return base;
    }

    Polynomial atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Integer) {
            Token num = lex_.take();
            if (is_punct("/")) {
                lex_.take();
                if (lex_.peek().kind != Token::Integer)
                    fail(lex_.peek(), "expected denominator");
                Token den = lex_.take();
                return Polynomial::constant(ring_,
                                            Rational::parse(num.text + "/" + den.text));
            }
            return Polynomial::constant(ring_, Rational::parse(num.text));
        }
        if (t.kind == Token::Ident) {
            Token name = lex_.take();
            int idx = ring_->index_of(name.text);
            if (idx < 0) fail(name, "unknown variable '" + name.text + "'");
            return Polynomial::variable(ring_, idx);
        }
        if (t.kind == Token::Punct && t.text == "(") {
            lex_.take();
            Polynomial inner = expression();
            if (!is_punct(")")) fail(lex_.peek(), "expected ')'");
            lex_.take();
            return inner;
        }
        fail(t, "expected a term");
    }

    Lexer& lex_;
    const RingPtr& ring_;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    Lexer lex(text);
    PolyParser parser(lex, ring);
    Polynomial p = parser.expression();
    if (lex.peek().kind != Token::End) fail(lex.peek(), "trailing input");
    return p;
}

ParsedProblem parse_problem(const std::string& text) {
    // Line-oriented: split first, then parse each piece with global positions.
    std::vector<std::pair<int, std::string>> lines; // (1-based line number, text)
    {
        int ln = 1;
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.emplace_back(ln, cur);
                cur.clear();
                ++ln;
            } else {
                cur += c;
            }
        }
        lines.emplace_back(ln, cur);
    }
    auto strip = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t\r");
        std::size_t b = s.find_last_not_of(" \t\r");
        if (a == std::string::npos) return std::string();
        return s.substr(a, b - a + 1);
    };

    ParsedProblem out;
    for (auto& [ln, raw] : lines) {
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (strip(line).empty()) continue;

        Lexer lex(line);
        Token head = lex.take();
        if (head.kind != Token::Ident)
            throw parse_error("expected a declaration", ln, head.col);

        if (head.text == "ring") {
            if (out.ring) throw parse_error("duplicate ring declaration", ln, head.col);
            std::vector<std::string> names;
            while (lex.peek().kind == Token::Ident) names.push_back(lex.take().text);
            if (names.empty())
                throw parse_error("ring declaration without variables", ln, lex.peek().col);
            if (lex.peek().kind != Token::Punct || lex.peek().text != ":")
                throw parse_error("expected ':' before term order", ln, lex.peek().col);
            lex.take();
            if (lex.peek().kind != Token::Ident)
                throw parse_error("expected term order name", ln, lex.peek().col);
            std::string order_text = lex.take().text;
            if (lex.peek().kind == Token::Punct && lex.peek().text == ":") {
                lex.take();
                if (lex.peek().kind != Token::Integer)
                    throw parse_error("expected block size", ln, lex.peek().col);
                order_text += ":" + lex.take().text;
            }
            TermOrder order;
            try {
                order = TermOrder::parse(order_text);
            } catch (const parse_error&) {
                throw parse_error("unknown term order '" + order_text + "'", ln, head.col);
            }
            out.ring = Ring::make(names, order);
            if (lex.peek().kind != Token::End)
                throw parse_error("trailing input after ring declaration", ln,
                                  lex.peek().col);
            continue;
        }

        // "name = ..." lines: generators, or the tracefree block.
        if (lex.peek().kind != Token::Punct || lex.peek().text != "=")
            throw parse_error("expected '=' after '" + head.text + "'", ln,
                              lex.peek().col);
        std::size_t eq = line.find('=');
        std::string rhs = line.substr(eq + 1);

        if (head.text == "tracefree") {
            std::string piece;
            auto flush = [&](std::size_t col) {
                std::string s = strip(piece);
                if (s.empty())
                    throw parse_error("empty trace-free form", ln, static_cast<int>(col));
                out.tracefree_texts.push_back(s);
                piece.clear();
            };
            for (std::size_t i = 0; i < rhs.size(); ++i) {
                if (rhs[i] == ';')
                    flush(eq + 1 + i);
                else
                    piece += rhs[i];
            }
            flush(eq + 1 + rhs.size());
            continue;
        }

        if (!out.ring)
            throw parse_error("generator before ring declaration", ln, head.col);
        try {
            out.generators.push_back(parse_polynomial(rhs, out.ring));
        } catch (parse_error& e) {
            throw parse_error(std::string(e.what()), ln, static_cast<int>(eq) + 1 + e.column);
        }
        out.generator_names.push_back(head.text);
    }
    if (!out.ring) throw parse_error("missing ring declaration", 1, 1);
    if (out.generators.empty()) throw parse_error("no generators", 1, 1);
    return out;
}

} // namespace coverforge

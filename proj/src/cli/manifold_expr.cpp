#include "s4embed/manifold_expr.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>
#include <vector>

namespace s4embed {

ParseError::ParseError(const std::string& message, std::size_t pos, std::string tok)
    : std::runtime_error(message + " at position " + std::to_string(pos) + (tok.empty() ? "" : " ('" + tok + "')")),
      position(pos),
      token(std::move(tok)) {}

namespace {

struct Token {
    enum Kind { Ident, Int, Punct, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(c)) {
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Ident, std::string(s.substr(start, i - start)), start});
        } else if (std::isdigit(c) || ((c == '-' || c == '+') && i + 1 < s.size() &&
                                       std::isdigit(static_cast<unsigned char>(s[i + 1])) && !out.empty() &&
                                       out.back().kind == Token::Punct && out.back().text != ")")) {
            ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Int, std::string(s.substr(start, i - start)), start});
        } else if (std::string_view("(),;+").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({Token::Punct, std::string(1, static_cast<char>(c)), start});
            ++i;
        } else {
            throw ParseError("unexpected character", start, std::string(1, static_cast<char>(c)));
        }
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    ManifoldExpr parse() {
        ManifoldExpr e{term()};
        while (peek().kind == Token::Punct && peek().text == "+") {
            const Token plus = next();
            auto* sum = std::get_if<LensSum>(&e.value);
            if (!sum) throw ParseError("connected sums are only supported between lens spaces", plus.pos, plus.text);
            const Token t = peek();
            Manifold rhs = term();
            const auto* r = std::get_if<LensSum>(&rhs);
            if (!r) throw ParseError("connected sums are only supported between lens spaces", t.pos, t.text);
            sum->summands.insert(sum->summands.end(), r->summands.begin(), r->summands.end());
        }
        if (peek().kind != Token::End) throw ParseError("unexpected trailing input", peek().pos, peek().text);
        return e;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    Token next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

    void expect(const char* p) {
        const Token t = next();
        if (t.kind != Token::Punct || t.text != p)
            throw ParseError(std::string("expected '") + p + "'", t.pos, t.text);
    }

    std::pair<std::int64_t, Token> integer() {
        const Token t = next();
        if (t.kind != Token::Int) throw ParseError("expected an integer", t.pos, t.text);
        std::int64_t v = 0;
        const char* b = t.text.data() + (t.text[0] == '+' ? 1 : 0);
        const auto [ptr, ec] = std::from_chars(b, t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v > (std::int64_t{1} << 40) ||
            v < -(std::int64_t{1} << 40))
            throw ParseError("integer out of range", t.pos, t.text);
        return {v, t};
    }

    Manifold term() {
        const Token t = next();
        if (t.kind != Token::Ident) throw ParseError("expected lens, seifert, pretzel or S3", t.pos, t.text);
        if (t.text == "S3") return LensSum{};
        if (t.text == "lens") return lens();
        if (t.text == "seifert") return seifert();
        if (t.text == "pretzel") return pretzel(t);
        throw ParseError("unknown manifold kind", t.pos, t.text);
    }

    Manifold lens() {
        expect("(");
        const auto [p, pt] = integer();
        expect(",");
        const auto [q, qt] = integer();
        expect(")");
        if (p < 2) throw ParseError("lens space needs p >= 2", pt.pos, pt.text);
        if (q <= 0 || q >= p) throw ParseError("lens space needs 0 < q < p", qt.pos, qt.text);
        if (std::gcd(p, q) != 1) throw ParseError("lens space needs gcd(p,q) = 1", qt.pos, qt.text);
        return LensSum{{{p, q}}};
    }

    Manifold seifert() {
        expect("(");
        SeifertManifold Y;
        const Token b = next();
        if (b.kind == Token::Ident && b.text == "S2") {
            Y.base = {BaseKind::Orientable, 0};
        } else if (b.kind == Token::Ident && (b.text == "O" || b.text == "N")) {
            expect("(");
            const auto [g, gt] = integer();
            expect(")");
            const bool orientable = b.text == "O";
            if (orientable ? g < 0 : g < 1)
                throw ParseError(orientable ? "genus must be >= 0" : "crosscap number must be >= 1", gt.pos, gt.text);
            Y.base = {orientable ? BaseKind::Orientable : BaseKind::NonOrientable, static_cast<int>(g)};
        } else {
            throw ParseError("expected base S2, O(g) or N(k)", b.pos, b.text);
        }
        expect(";");
        Y.r = integer().first;
        expect(";");
        if (peek().kind == Token::Punct && peek().text == ")") {
            next();
            return Y;
        }
        while (true) {
            expect("(");
            const auto [a, at] = integer();
            expect(",");
            const auto [bb, bt] = integer();
            expect(")");
            if (a < 2) throw ParseError("Seifert invariant needs a >= 2", at.pos, at.text);
            if (std::gcd(a, bb) != 1) throw ParseError("Seifert invariant needs gcd(a,b) = 1", bt.pos, bt.text);
            Y.fibres.push_back({a, bb});
            const Token sep = next();
            if (sep.kind == Token::Punct && sep.text == ")") break;
            if (sep.kind != Token::Punct || sep.text != ",") throw ParseError("expected ',' or ')'", sep.pos, sep.text);
        }
        return Y;
    }

    Manifold pretzel(const Token& head) {
        expect("(");
        PretzelCover P;
        while (true) {
            const auto [v, vt] = integer();
            if (v == 0) throw ParseError("pretzel strand must be nonzero", vt.pos, vt.text);
            P.strands.push_back(v);
            const Token sep = next();
            if (sep.kind == Token::Punct && sep.text == ")") break;
            if (sep.kind != Token::Punct || sep.text != ",") throw ParseError("expected ',' or ')'", sep.pos, sep.text);
        }
        if (P.strands.size() < 3 || P.strands.size() > 4)
            throw ParseError("pretzel needs 3 or 4 strands", head.pos, head.text);
        return P;
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

}  // namespace

ManifoldExpr parse_manifold(std::string_view text) { return Parser(text).parse(); }

std::string print_manifold(const ManifoldExpr& e) { return describe(e.value); }

}  // namespace s4embed

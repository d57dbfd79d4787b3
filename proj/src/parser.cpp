#include "tapecalc/parser.hpp"

#include <cctype>
#include <vector>

namespace tapecalc {

namespace {

enum class Tok { Name, Word, Number, LParen, RParen, LBracket, RBracket, Seq, Star, Plus, End };

struct Token {
    Tok         kind;
    std::string text;
    int         line;
    int         col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(tok_.line, tok_.col, expected,
                         "parse error at line " + std::to_string(tok_.line) + ", column " +
                             std::to_string(tok_.col) + ": expected " + expected + ", found '" +
                             (tok_.kind == Tok::End ? "end of input" : tok_.text) + "'");
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        tok_ = {Tok::End, "", line_, col_};
        if (pos_ >= text_.size())
            return;
        const char c  = text_[pos_];
        tok_.line     = line_;
        tok_.col      = col_;
        auto single = [&](Tok k) {
            tok_.kind = k;
            tok_.text = std::string(1, c);
            ++pos_;
            ++col_;
        };
        switch (c) {
        case '(': single(Tok::LParen); return;
        case ')': single(Tok::RParen); return;
        case '[': single(Tok::LBracket); return;
        case ']': single(Tok::RBracket); return;
        case ';': single(Tok::Seq); return;
        case '*': single(Tok::Star); return;
        case '+': single(Tok::Plus); return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
                ++pos_;
            tok_.kind = Tok::Number;
            tok_.text = text_.substr(start, pos_ - start);
            col_ += static_cast<int>(pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            bool        upper = true;
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                upper = upper && std::isupper(static_cast<unsigned char>(text_[pos_]));
                ++pos_;
            }
            tok_.kind = upper ? Tok::Word : Tok::Name;
            tok_.text = text_.substr(start, pos_ - start);
            col_ += static_cast<int>(pos_ - start);
            return;
        }
        throw ParseError(line_, col_, "token",
                         "parse error at line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ": stray character '" + std::string(1, c) +
                             "'");
    }

    const std::string& text_;
    std::size_t        pos_ = 0;
    int                line_ = 1;
    int                col_  = 1;
    Token              tok_{Tok::End, "", 1, 1};
};

class CircuitParser {
public:
    CircuitParser(Lexer& lx, SigPtr sig) : lx_(lx), sig_(std::move(sig)) {}

    Circuit expr() {
        Circuit c = term();
        while (lx_.peek().kind == Tok::Seq) {
            lx_.take();
            c = circ::seq(c, term());
        }
        return c;
    }

private:
    Circuit term() {
        Circuit c = factor();
        while (lx_.peek().kind == Tok::Star) {
            lx_.take();
            c = circ::par(c, factor());
        }
        return c;
    }

    Circuit factor() {
        const Token& t = lx_.peek();
        if (t.kind == Tok::LParen) {
            lx_.take();
            Circuit c = expr();
            if (lx_.peek().kind != Tok::RParen)
                lx_.fail("')'");
            lx_.take();
            return c;
        }
        if (t.kind != Tok::Name)
            lx_.fail("a circuit");
        Token name = lx_.take();
        if (name.text == "id")
            return circ::id_word(sig_, word());
        if (name.text == "id1")
            return circ::id_unit(sig_);
        if (name.text == "sym") {
            std::string a = word(), b = word();
            if (a.size() != 1 || b.size() != 1)
                throw ParseError(name.line, name.col, "single sorts",
                                 "sym takes two single sorts");
            return circ::sym(sig_, a[0], b[0]);
        }
        if (sig_->gens.count(name.text)) {
            if (sig_->gens.at(name.text).parametric)
                return circ::gen(sig_, name.text, rational());
            return circ::gen(sig_, name.text);
        }
        throw ParseError(name.line, name.col, "a generator",
                         "unknown generator '" + name.text + "' at line " +
                             std::to_string(name.line) + ", column " + std::to_string(name.col));
    }

    std::string word() {
        if (lx_.peek().kind != Tok::Word)
            lx_.fail("a sort word");
        return lx_.take().text;
    }

    Rational rational() {
        if (lx_.peek().kind != Tok::Number)
            lx_.fail("a probability");
        return Rational::parse(lx_.take().text);
    }

    Lexer& lx_;
    SigPtr sig_;
};

class TapeParser {
public:
    explicit TapeParser(Lexer& lx) : lx_(lx) {}

    BTape expr() {
        BTape t = term();
        while (lx_.peek().kind == Tok::Seq) {
            lx_.take();
            t = BTapeBuilder::seq(t, term());
        }
        return t;
    }

private:
    BTape term() {
        BTape t = factor();
        while (lx_.peek().kind == Tok::Plus) {
            lx_.take();
            t = BTapeBuilder::plus(t, factor());
        }
        return t;
    }

    BTape factor() {
        using TB       = BTapeBuilder;
        const Token& t = lx_.peek();
        if (t.kind == Tok::LParen) {
            lx_.take();
            BTape tp = expr();
            if (lx_.peek().kind != Tok::RParen)
                lx_.fail("')'");
            lx_.take();
            return tp;
        }
        if (t.kind == Tok::LBracket) {
            lx_.take();
            Circuit c = CircuitParser(lx_, pb_signature()).expr();
            if (lx_.peek().kind != Tok::RBracket)
                lx_.fail("']'");
            lx_.take();
            return lift_circuit(c);
        }
        if (t.kind != Tok::Name)
            lx_.fail("a tape");
        Token name = lx_.take();
        if (name.text == "idT")
            return TB::id(monomial());
        if (name.text == "id0")
            return TB::id0();
        if (name.text == "symT") {
            std::size_t u = monomial(), v = monomial();
            return TB::sigma(u, v);
        }
        if (name.text == "merge")
            return TB::codiag(monomial());
        if (name.text == "init")
            return TB::cobang(monomial());
        if (name.text == "kill")
            return TB::bang(monomial());
        if (name.text == "split") {
            Rational p = rational();
            return TB::diagp(monomial(), p);
        }
        throw ParseError(name.line, name.col, "a tape",
                         "unknown tape form '" + name.text + "' at line " +
                             std::to_string(name.line) + ", column " + std::to_string(name.col));
    }

    // A monomial over the Boolean base: a run of A's, or 1 for the unit.
    std::size_t monomial() {
        const Token& t = lx_.peek();
        if (t.kind == Tok::Number && t.text == "1") {
            lx_.take();
            return 0;
        }
        if (t.kind != Tok::Word)
            lx_.fail("a monomial (a word of A's or 1)");
        Token w = lx_.take();
        for (char c : w.text)
            if (c != 'A')
                throw ParseError(w.line, w.col, "sort A",
                                 "the Boolean base has the single sort A, found '" + w.text +
                                     "'");
        return w.text.size();
    }

    Rational rational() {
        if (lx_.peek().kind != Tok::Number)
            lx_.fail("a probability");
        return Rational::parse(lx_.take().text);
    }

    Lexer& lx_;
};

void expect_end(Lexer& lx) {
    if (lx.peek().kind != Tok::End)
        lx.fail("end of input");
}

std::string mono_str(std::size_t width) {
    return width == 0 ? "1" : std::string(width, 'A');
}

} // namespace

Circuit parse_circuit(const std::string& text, const SigPtr& sig) {
    Lexer   lx(text);
    Circuit c = CircuitParser(lx, sig).expr();
    expect_end(lx);
    return c;
}

BTape parse_tape(const std::string& text) {
    Lexer lx(text);
    BTape t = TapeParser(lx).expr();
    expect_end(lx);
    return t;
}

std::string print_circuit(const Circuit& c) { return circuit_str(c); }

Circuit circuit_for_table(const FnTable& t) {
    const SigPtr& sig = pb_signature();
    if (t == FnTable::identity(0))
        return circ::id_unit(sig);
    if (t == FnTable::identity(t.n))
        return circ::id_word(sig, std::string(t.n, 'A'));
    if (t == and_table())
        return circ::gen(sig, "and");
    if (t == not_table())
        return circ::gen(sig, "not");
    if (t == copy_table())
        return circ::gen(sig, "copy");
    if (t == discard_table())
        return circ::gen(sig, "discard");
    if (t == const_table(true))
        return circ::gen(sig, "flip1");
    if (t == const_table(false))
        return flip0_circuit();
    if (t == or_table())
        return or_gate();
    if (t == FnTable::symmetry(1, 1))
        return circ::sym(sig, 'A', 'A');
    return table_to_circuit(t);
}

std::string print_tape(const BTape& t) {
    using enum TapeKind;
    switch (t->kind) {
    case Id:     return "idT " + mono_str(t->u);
    case Id0:    return "id0";
    case Lift:   return "[ " + circuit_str(circuit_for_table(t->arrow)) + " ]";
    case Sigma:  return "symT " + mono_str(t->u) + " " + mono_str(t->v);
    case Seq:    return "(" + print_tape(t->lhs) + " ; " + print_tape(t->rhs) + ")";
    case Plus:   return "(" + print_tape(t->lhs) + " + " + print_tape(t->rhs) + ")";
    case Cobang: return "init " + mono_str(t->u);
    case Codiag: return "merge " + mono_str(t->u);
    case DiagP:  return "split " + t->p.str() + " " + mono_str(t->u);
    case Bang:   return "kill " + mono_str(t->u);
    }
    return "?";
}

} // namespace tapecalc

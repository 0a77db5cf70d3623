#include "setlogic/formula.hpp"

#include <algorithm>
#include <cctype>

namespace setlogic {

Formula Formula::atom(std::string name) {
    Formula f;
    f.kind_ = Kind::Atom;
    f.atom_ = std::move(name);
    return f;
}

Formula Formula::truth() {
    Formula f;
    f.kind_ = Kind::True;
    return f;
}

Formula Formula::falsity() {
    Formula f;
    f.kind_ = Kind::False;
    return f;
}

Formula Formula::negation(Formula child) {
    Formula f;
    f.kind_ = Kind::Not;
    f.children_.push_back(std::move(child));
    return f;
}

Formula Formula::knows(Formula child) {
    Formula f;
    f.kind_ = Kind::Knows;
    f.children_.push_back(std::move(child));
    return f;
}

Formula Formula::conjunction(Formula a, Formula b) {
    Formula f;
    f.kind_ = Kind::And;
    f.children_.push_back(std::move(a));
    f.children_.push_back(std::move(b));
    return f;
}

Formula Formula::disjunction(Formula a, Formula b) {
    Formula f;
    f.kind_ = Kind::Or;
    f.children_.push_back(std::move(a));
    f.children_.push_back(std::move(b));
    return f;
}

Formula Formula::implication(Formula a, Formula b) {
    Formula f;
    f.kind_ = Kind::Implies;
    f.children_.push_back(std::move(a));
    f.children_.push_back(std::move(b));
    return f;
}

Formula Formula::biconditional(Formula a, Formula b) {
    Formula f;
    f.kind_ = Kind::Iff;
    f.children_.push_back(std::move(a));
    f.children_.push_back(std::move(b));
    return f;
}

Formula Formula::conditional(Formula a, Formula b) {
    Formula f;
    f.kind_ = Kind::Cond;
    f.children_.push_back(std::move(a));
    f.children_.push_back(std::move(b));
    return f;
}

Formula Formula::box(Formula f) { return conditional(negation(std::move(f)), falsity()); }
Formula Formula::diamond(Formula f) { return negation(conditional(std::move(f), falsity())); }

std::vector<std::string> Formula::atoms() const {
    std::vector<std::string> out;
    if (kind_ == Kind::Atom) out.push_back(atom_);
    for (const auto& c : children_) {
        auto sub = c.atoms();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Formula::operator==(const Formula& other) const {
    if (kind_ != other.kind_ || atom_ != other.atom_ ||
        children_.size() != other.children_.size())
        return false;
    for (std::size_t i = 0; i < children_.size(); ++i)
        if (!(children_[i] == other.children_[i])) return false;
    return true;
}

namespace {

enum class Tok {
    Atom, True, False, Not, And, Or, Implies, Iff, Cond, Knows, Box, Dia, LParen, RParen, End
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_space();
        const int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Tok::End, "", line, col};
        char c = text_[pos_];
        if (c == '(') return advance({Tok::LParen, "(", line, col}, 1);
        if (c == ')') return advance({Tok::RParen, ")", line, col}, 1);
        if (c == '!') return advance({Tok::Not, "!", line, col}, 1);
        if (c == '&') return advance({Tok::And, "&", line, col}, 1);
        if (c == '|') return advance({Tok::Or, "|", line, col}, 1);
        if (c == 'K') return advance({Tok::Knows, "K", line, col}, 1);
        if (c == '~') {
            if (peek(1) == '>') return advance({Tok::Cond, "~>", line, col}, 2);
            throw ParseError(line, col, "expected '~>'");
        }
        if (c == '=') {
            if (peek(1) == '>') return advance({Tok::Implies, "=>", line, col}, 2);
            throw ParseError(line, col, "expected '=>'");
        }
        if (c == '<') {
            if (peek(1) == '=' && peek(2) == '>') return advance({Tok::Iff, "<=>", line, col}, 3);
            if (peek(1) == '>') return advance({Tok::Dia, "<>", line, col}, 2);
            throw ParseError(line, col, "expected '<=>' or '<>'");
        }
        if (c == '[') {
            if (peek(1) == ']') return advance({Tok::Box, "[]", line, col}, 2);
            throw ParseError(line, col, "expected '[]'");
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   ((text_[end] >= 'a' && text_[end] <= 'z') ||
                    (text_[end] >= '0' && text_[end] <= '9') || text_[end] == '_'))
                ++end;
            std::string word = text_.substr(pos_, end - pos_);
            Token t{Tok::Atom, word, line, col};
            if (word == "true") t.kind = Tok::True;
            if (word == "false") t.kind = Tok::False;
            return advance(t, end - pos_);
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    char peek(std::size_t ahead) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    Token advance(Token t, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) bump();
        return t;
    }

    void bump() {
        if (pos_ < text_.size()) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { shift(); }

    Formula parse() {
        Formula f = parse_iff();
        expect(Tok::End, "end of input");
        return f;
    }

private:
    void shift() { tok_ = lexer_.next(); }

    void expect(Tok kind, const char* what) {
        if (tok_.kind != kind)
            throw ParseError(tok_.line, tok_.col,
                             std::string("expected ") + what + ", found '" +
                                 (tok_.kind == Tok::End ? "end of input" : tok_.text) + "'");
        if (kind != Tok::End) shift();
    }

    Formula parse_iff() {
        Formula lhs = parse_implies();
        if (tok_.kind == Tok::Iff) {
            shift();
            return Formula::biconditional(std::move(lhs), parse_iff());
        }
        return lhs;
    }

    Formula parse_implies() {
        Formula lhs = parse_cond();
        if (tok_.kind == Tok::Implies) {
            shift();
            return Formula::implication(std::move(lhs), parse_implies());
        }
        return lhs;
    }

    Formula parse_cond() {
        Formula lhs = parse_or();
        if (tok_.kind != Tok::Cond) return lhs;
        shift();
        Formula rhs = parse_or();
        if (tok_.kind == Tok::Cond)
            throw ParseError(tok_.line, tok_.col,
                             "'~>' is non-associative; parenthesize the nested conditional");
        return Formula::conditional(std::move(lhs), std::move(rhs));
    }

    Formula parse_or() {
        Formula lhs = parse_and();
        while (tok_.kind == Tok::Or) {
            shift();
            lhs = Formula::disjunction(std::move(lhs), parse_and());
        }
        return lhs;
    }

    Formula parse_and() {
        Formula lhs = parse_unary();
        while (tok_.kind == Tok::And) {
            shift();
            lhs = Formula::conjunction(std::move(lhs), parse_unary());
        }
        return lhs;
    }

    Formula parse_modal_arg() {
        expect(Tok::LParen, "'('");
        Formula f = parse_iff();
        expect(Tok::RParen, "')'");
        return f;
    }

    Formula parse_unary() {
        switch (tok_.kind) {
            case Tok::Not: shift(); return Formula::negation(parse_unary());
            case Tok::Knows: shift(); return Formula::knows(parse_modal_arg());
            case Tok::Box: shift(); return Formula::box(parse_modal_arg());
            case Tok::Dia: shift(); return Formula::diamond(parse_modal_arg());
            case Tok::True: shift(); return Formula::truth();
            case Tok::False: shift(); return Formula::falsity();
            case Tok::Atom: {
                Formula f = Formula::atom(tok_.text);
                shift();
                return f;
            }
            case Tok::LParen: {
                shift();
                Formula f = parse_iff();
                expect(Tok::RParen, "')'");
                return f;
            }
            default:
                throw ParseError(tok_.line, tok_.col,
                                 "expected a formula, found '" +
                                     (tok_.kind == Tok::End ? "end of input" : tok_.text) + "'");
        }
    }

    Lexer lexer_;
    Token tok_{Tok::End, "", 1, 1};
};

// Binding levels, loosest first: <=> 1, => 2, ~> 3, | 4, & 5, unary 6.
int level_of(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Iff: return 1;
        case Formula::Kind::Implies: return 2;
        case Formula::Kind::Cond: return 3;
        case Formula::Kind::Or: return 4;
        case Formula::Kind::And: return 5;
        default: return 6;
    }
}

void print_into(const Formula& f, int min_level, std::string& out) {
    const int level = level_of(f);
    const bool parens = level < min_level;
    if (parens) out += '(';
    switch (f.kind()) {
        case Formula::Kind::Atom: out += f.atom_name(); break;
        case Formula::Kind::True: out += "true"; break;
        case Formula::Kind::False: out += "false"; break;
        case Formula::Kind::Not:
            out += '!';
            print_into(f.child(0), 6, out);
            break;
        case Formula::Kind::Knows:
            out += "K(";
            print_into(f.child(0), 1, out);
            out += ')';
            break;
        case Formula::Kind::And:
            print_into(f.child(0), 5, out);
            out += " & ";
            print_into(f.child(1), 6, out);
            break;
        case Formula::Kind::Or:
            print_into(f.child(0), 4, out);
            out += " | ";
            print_into(f.child(1), 5, out);
            break;
        case Formula::Kind::Cond:
            print_into(f.child(0), 4, out);
            out += " ~> ";
            print_into(f.child(1), 4, out);
            break;
        case Formula::Kind::Implies:
            print_into(f.child(0), 3, out);
            out += " => ";
            print_into(f.child(1), 2, out);
            break;
        case Formula::Kind::Iff:
            print_into(f.child(0), 2, out);
            out += " <=> ";
            print_into(f.child(1), 1, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const Formula& f) {
    std::string out;
    print_into(f, 1, out);
    return out;
}

}  // namespace setlogic

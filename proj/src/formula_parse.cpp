#include <cctype>
#include <string>

#include "modalkit/errors.hpp"
#include "modalkit/modal.hpp"

namespace modalkit {

namespace {

// Grammar (lowest precedence first):
//   implies := or ('->' implies)?
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '~' unary | '[]' pow? unary | '<>' pow? unary | primary
//   pow     := '^' digits
//   primary := atom | '(' implies ')'
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    FormulaPtr run() {
        FormulaPtr f = implies();
        skip_ws();
        if (pos_ != text_.size())
            throw input_error("formula: trailing input at offset " + std::to_string(pos_));
        return f;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    bool eat(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    FormulaPtr implies() {
        FormulaPtr lhs = disjunction();
        if (eat("->")) return mk_implies(std::move(lhs), implies());
        return lhs;
    }

    FormulaPtr disjunction() {
        FormulaPtr f = conjunction();
        while (true) {
            skip_ws();
            // '|' but not part of an unknown multi-char token
            if (pos_ < text_.size() && text_[pos_] == '|') {
                ++pos_;
                f = mk_or(std::move(f), conjunction());
            } else {
                return f;
            }
        }
    }

    FormulaPtr conjunction() {
        FormulaPtr f = unary();
        while (eat("&")) f = mk_and(std::move(f), unary());
        return f;
    }

    int repetition() {
        if (!eat("^")) return 1;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
            throw input_error("formula: expected digits after '^'");
        int m = 0;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
            m = m * 10 + (text_[pos_] - '0');
            if (m > 1'000'000) throw input_error("formula: repetition count too large");
            ++pos_;
        }
        return m;
    }

    FormulaPtr unary() {
        if (eat("~")) return mk_not(unary());
        if (eat("[]")) {
            int m = repetition();
            return box_pow(m, unary());
        }
        if (eat("<>")) {
            int m = repetition();
            return diamond_pow(m, unary());
        }
        return primary();
    }

    FormulaPtr primary() {
        skip_ws();
        if (eat("(")) {
            FormulaPtr f = implies();
            if (!eat(")")) throw input_error("formula: missing ')'");
            return f;
        }
        if (pos_ >= text_.size())
            throw input_error("formula: unexpected end of input");
        char c = text_[pos_];
        if (!std::isalpha((unsigned char)c) && c != '_')
            throw input_error(std::string("formula: unexpected character '") + c + "'");
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
            ++pos_;
        return mk_atom(std::string(text_.substr(start, pos_ - start)));
    }
};

int precedence(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::implication: return 1;
        case Formula::Kind::disjunction: return 2;
        case Formula::Kind::conjunction: return 3;
        default: return 4;  // unary and atoms bind tightest
    }
}

void print(const FormulaPtr& f, int parent_prec, std::string& out) {
    const int prec = precedence(f->kind);
    const bool parens = prec < parent_prec;
    if (parens) out += "(";
    switch (f->kind) {
        case Formula::Kind::atom:
            out += f->name;
            break;
        case Formula::Kind::negation:
            out += "~";
            print(f->lhs, 4, out);
            break;
        case Formula::Kind::conjunction:
            print(f->lhs, 3, out);
            out += " & ";
            print(f->rhs, 4, out);
            break;
        case Formula::Kind::disjunction:
            print(f->lhs, 2, out);
            out += " | ";
            print(f->rhs, 3, out);
            break;
        case Formula::Kind::implication:
            print(f->lhs, 2, out);
            out += " -> ";
            print(f->rhs, 1, out);
            break;
        case Formula::Kind::box:
        case Formula::Kind::diamond: {
            // fold runs of the same modality into a power
            Formula::Kind k = f->kind;
            int m = 0;
            FormulaPtr body = f;
            while (body->kind == k) {
                ++m;
                body = body->lhs;
            }
            out += (k == Formula::Kind::box) ? "[]" : "<>";
            if (m > 1) out += "^" + std::to_string(m);
            out += " ";
            print(body, 4, out);
            break;
        }
    }
    if (parens) out += ")";
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).run(); }

std::string to_text(const FormulaPtr& f) {
    std::string out;
    print(f, 0, out);
    return out;
}

}  // namespace modalkit

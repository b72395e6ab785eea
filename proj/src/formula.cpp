#include "qmirror/formula.hpp"

#include <cctype>

namespace qmirror::logic {

formula formula::atom(std::string name) {
    if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0])))
        throw validation_error("atom name must start with an uppercase letter");
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw validation_error("atom name must be alphanumeric");
    auto n = std::make_shared<node>();
    n->kind = connective::atom;
    n->name = std::move(name);
    return formula(std::move(n));
}

formula formula::orth(formula f) {
    if (f.kind() == connective::orth) return f.operand();
    auto n = std::make_shared<node>();
    n->kind = connective::orth;
    n->left = std::move(f.node_);
    return formula(std::move(n));
}

formula formula::conj(formula l, formula r) {
    auto n = std::make_shared<node>();
    n->kind = connective::conj;
    n->left = std::move(l.node_);
    n->right = std::move(r.node_);
    return formula(std::move(n));
}

formula formula::disj(formula l, formula r) {
    auto n = std::make_shared<node>();
    n->kind = connective::disj;
    n->left = std::move(l.node_);
    n->right = std::move(r.node_);
    return formula(std::move(n));
}

formula formula::implies(formula l, formula r) {
    auto n = std::make_shared<node>();
    n->kind = connective::implies;
    n->left = std::move(l.node_);
    n->right = std::move(r.node_);
    return formula(std::move(n));
}

formula formula::falsum() {
    auto n = std::make_shared<node>();
    n->kind = connective::falsum;
    return formula(std::move(n));
}

bool formula::operator==(const formula& other) const {
    if (node_ == other.node_) return true;
    if (kind() != other.kind()) return false;
    switch (kind()) {
    case connective::atom:
        return name() == other.name();
    case connective::falsum:
        return true;
    case connective::orth:
        return operand() == other.operand();
    case connective::conj:
    case connective::disj:
    case connective::implies:
        return left() == other.left() && right() == other.right();
    }
    return false;
}

namespace {

// Binding strength used for minimal parenthesization.
int precedence(connective k) {
    switch (k) {
    case connective::implies: return 1;
    case connective::disj: return 2;
    case connective::conj: return 3;
    case connective::orth: return 4;
    default: return 5;  // atoms and falsum never need parens
    }
}

void print(const formula& f, int parent_prec, std::string& out) {
    const int prec = precedence(f.kind());
    const bool parens = prec < parent_prec;
    if (parens) out += '(';
    switch (f.kind()) {
    case connective::atom:
        out += f.name();
        break;
    case connective::falsum:
        out += "_|_";
        break;
    case connective::orth:
        print(f.operand(), precedence(connective::orth) + 1, out);
        out += '^';
        break;
    case connective::conj:
        print(f.left(), prec, out);
        out += " & ";
        print(f.right(), prec + 1, out);
        break;
    case connective::disj:
        print(f.left(), prec, out);
        out += " (+) ";
        print(f.right(), prec + 1, out);
        break;
    case connective::implies:
        // Right associative.
        print(f.left(), prec + 1, out);
        out += " -> ";
        print(f.right(), prec, out);
        break;
    }
    if (parens) out += ')';
}

} // namespace

std::string formula::to_string() const {
    std::string out;
    print(*this, 0, out);
    return out;
}

formula formula::dual() const {
    switch (kind()) {
    case connective::atom:
        return *this;
    case connective::orth:
        return orth(operand().dual());
    case connective::conj:
        return disj(right().dual(), left().dual());
    case connective::disj:
        return conj(right().dual(), left().dual());
    default:
        throw validation_error("dual is defined only on the additive fragment");
    }
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over the grammar in the header.

namespace {

class parser {
public:
    explicit parser(std::string_view text) : text_(text) {}

    formula run() {
        formula f = parse_implies();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return f;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool match(std::string_view token) {
        skip_ws();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    formula parse_implies() {
        formula l = parse_disj();
        if (match("->")) return formula::implies(l, parse_implies());
        return l;
    }

    formula parse_disj() {
        formula l = parse_conj();
        while (match("(+)")) l = formula::disj(l, parse_conj());
        return l;
    }

    formula parse_conj() {
        formula l = parse_postfix();
        while (true) {
            skip_ws();
            // Don't eat the arrow's leading '-'.
            if (pos_ < text_.size() && text_[pos_] == '&') {
                ++pos_;
                l = formula::conj(l, parse_postfix());
            } else {
                return l;
            }
        }
    }

    formula parse_postfix() {
        formula f = parse_primary();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                f = formula::orth(f);
            } else {
                return f;
            }
        }
    }

    formula parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
        // "(+)" was consumed by parse_disj, so '(' here always groups.
        if (text_[pos_] == '(') {
            const std::size_t open = pos_++;
            formula f = parse_implies();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw parse_error("unclosed parenthesis", open);
            ++pos_;
            return f;
        }
        if (match("_|_")) return formula::falsum();
        const char c = text_[pos_];
        if (std::isupper(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                ++pos_;
            // "_|_" directly after an identifier would have been split off
            // by the alnum/underscore scan; no ambiguity.
            return formula::atom(std::string(text_.substr(start, pos_ - start)));
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

formula parse_formula(std::string_view text) { return parser(text).run(); }

} // namespace qmirror::logic

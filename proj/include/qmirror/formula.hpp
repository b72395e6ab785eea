// Formula syntax for the observer calculus.
//
// The fragment is additive: atoms, orthocomplement, the additive
// conjunction and disjunction, plus implication and falsum (used only by
// the classical observer). ASCII grammar:
//
//   atom        uppercase identifier        A, B2
//   orth        postfix ^                   A^
//   conjunction &                           A & A^
//   disjunction (+)                         A^ (+) A
//   implication ->   (right associative)    A -> _|_
//   falsum      _|_
//
// Binding, tightest first: ^  &  (+)  ->. Parentheses group.
// Orthocomplement is involutive: building (F^)^ yields F.

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "qmirror/common.hpp"

namespace qmirror::logic {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

enum class connective { atom, orth, conj, disj, implies, falsum };

class formula {
public:
    static formula atom(std::string name);
    static formula orth(formula f);  // normalizes (F^)^ = F
    static formula conj(formula l, formula r);
    static formula disj(formula l, formula r);
    static formula implies(formula l, formula r);
    static formula falsum();

    connective kind() const { return node_->kind; }
    const std::string& name() const { return node_->name; }

    // Operand of orth; left/right of the binary connectives.
    formula operand() const { return formula(node_->left); }
    formula left() const { return formula(node_->left); }
    formula right() const { return formula(node_->right); }

    bool operator==(const formula& other) const;
    bool operator!=(const formula& other) const { return !(*this == other); }

    std::string to_string() const;

    // Symmetry transform of the additive fragment: & and (+) trade places
    // and their operands reverse; atoms and orth pass through. Undefined
    // for -> and falsum.
    formula dual() const;

private:
    struct node {
        connective kind;
        std::string name;                 // atom only
        std::shared_ptr<const node> left;   // orth operand / binary left
        std::shared_ptr<const node> right;  // binary right
    };

    explicit formula(std::shared_ptr<const node> n) : node_(std::move(n)) {}

    std::shared_ptr<const node> node_;
};

formula parse_formula(std::string_view text);

} // namespace qmirror::logic

// Derivation trees and rule application.
//
// A tree node records its conclusion and the rule (or axiom) that produced
// it. apply_rule checks availability against the acting profile and premise
// shapes against the rule; use_axiom is the only path that touches the
// ledger. validate_tree replays those checks over a finished tree.

#pragma once

#include <vector>

#include "qmirror/observer.hpp"

namespace qmirror::logic {

// Instantiation arguments for rules whose conclusion is not determined by
// the premises alone.
struct rule_args {
    // identity: the formula X of X |- X.
    // and_left: the companion formula joined into the conjunction.
    // weakening_left / weakening_right: the formula added to the sequent.
    std::optional<formula> companion;

    // and_left: which conjunct the companion becomes.
    enum class side { left, right };
    side companion_side = side::right;
};

class derivation_tree {
public:
    derivation_tree(sequent conclusion, std::string rule,
                    std::vector<derivation_tree> children = {}, std::string note = "")
        : conclusion_(std::move(conclusion)), rule_(std::move(rule)),
          children_(std::move(children)), note_(std::move(note)) {}

    const sequent& conclusion() const { return conclusion_; }
    const std::string& rule() const { return rule_; }  // rule name or "axiom(<id>)"
    const std::string& note() const { return note_; }
    const std::vector<derivation_tree>& children() const { return children_; }

    // Indented transcript, one node per line, children beneath their parent.
    std::string to_text() const;

private:
    sequent conclusion_;
    std::string rule_;
    std::vector<derivation_tree> children_;
    std::string note_;
};

// Applies a rule of the profile to finished subtrees. The ledger is not
// touched here. Throws rule_not_available or pattern_mismatch.
derivation_tree apply_rule(const observer_profile& profile, rule_id rule,
                           std::vector<derivation_tree> premises,
                           const rule_args& args = {});

// Consumes one use from the ledger and returns the axiom leaf.
derivation_tree use_axiom(observer_profile& profile, std::string_view axiom_id);

// Recomputes every node's rule check. True exactly for trees assembled by
// apply_rule / use_axiom under this profile (ledger budgets are a temporal
// property and are not re-checked).
bool validate_tree(const derivation_tree& tree, const observer_profile& profile);

} // namespace qmirror::logic

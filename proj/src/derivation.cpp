#include "qmirror/derivation.hpp"

namespace qmirror::logic {

namespace {

void append_text(const derivation_tree& t, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += t.conclusion().to_string();
    out += "   [";
    out += t.rule();
    if (!t.note().empty()) {
        out += ", ";
        out += t.note();
    }
    out += "]\n";
    for (const derivation_tree& c : t.children()) append_text(c, depth + 1, out);
}

const formula& require_right(const sequent& s, const char* what) {
    if (s.left() || !s.right())
        throw pattern_mismatch(std::string(what) + ": premise must have the form |- X");
    return *s.right();
}

const formula& require_left(const sequent& s, const char* what) {
    if (s.right() || !s.left())
        throw pattern_mismatch(std::string(what) + ": premise must have the form X |-");
    return *s.left();
}

void require_arity(const std::vector<derivation_tree>& premises, std::size_t n,
                   const char* what) {
    if (premises.size() != n)
        throw pattern_mismatch(std::string(what) + ": expected " + std::to_string(n) +
                               " premise(s), got " + std::to_string(premises.size()));
}

const formula& require_companion(const rule_args& args, const char* what) {
    if (!args.companion)
        throw pattern_mismatch(std::string(what) + ": needs a formula argument");
    return *args.companion;
}

// Conclusion of a rule instance, or nullopt if the premises do not fit.
// Shared between forward application and whole-tree revalidation (which
// reconstructs the instantiation from the conclusion instead of args).
sequent conclude(rule_id rule, const std::vector<derivation_tree>& premises,
                 const rule_args& args) {
    switch (rule) {
    case rule_id::and_formation: {
        require_arity(premises, 2, "and_formation");
        const formula& x = require_right(premises[0].conclusion(), "and_formation");
        const formula& y = require_right(premises[1].conclusion(), "and_formation");
        return sequent::asserts(formula::conj(x, y));
    }
    case rule_id::oplus_formation: {
        require_arity(premises, 2, "oplus_formation");
        const formula& x = require_left(premises[0].conclusion(), "oplus_formation");
        const formula& y = require_left(premises[1].conclusion(), "oplus_formation");
        return sequent::refutes(formula::disj(x, y));
    }
    case rule_id::and_left: {
        require_arity(premises, 1, "and_left");
        const sequent& p = premises[0].conclusion();
        if (!p.left() || !p.right())
            throw pattern_mismatch("and_left: premise must have the form X |- Z");
        const formula& companion = require_companion(args, "and_left");
        const formula conj = args.companion_side == rule_args::side::right
                                 ? formula::conj(*p.left(), companion)
                                 : formula::conj(companion, *p.left());
        return sequent::both(conj, *p.right());
    }
    case rule_id::cut: {
        require_arity(premises, 2, "cut");
        const sequent& l = premises[0].conclusion();
        const sequent& r = premises[1].conclusion();
        if (!l.right() || !r.left())
            throw pattern_mismatch("cut: premises must share a cut formula");
        if (*l.right() != *r.left())
            throw pattern_mismatch("cut: cut formula differs between premises");
        if (l.left() && r.right()) return sequent::both(*l.left(), *r.right());
        if (l.left()) return sequent::refutes(*l.left());
        if (r.right()) return sequent::asserts(*r.right());
        return {};
    }
    case rule_id::identity: {
        require_arity(premises, 0, "identity");
        const formula& x = require_companion(args, "identity");
        return sequent::both(x, x);
    }
    case rule_id::falsum_definition: {
        require_arity(premises, 1, "falsum_definition");
        const formula& f = require_right(premises[0].conclusion(), "falsum_definition");
        if (f.kind() != connective::orth)
            throw pattern_mismatch("falsum_definition: premise must assert an orthocomplement");
        return sequent::asserts(formula::implies(f.operand(), formula::falsum()));
    }
    case rule_id::modus_ponens: {
        require_arity(premises, 2, "modus_ponens");
        const formula& x = require_right(premises[0].conclusion(), "modus_ponens");
        const formula& imp = require_right(premises[1].conclusion(), "modus_ponens");
        if (imp.kind() != connective::implies || imp.left() != x)
            throw pattern_mismatch("modus_ponens: second premise must be X -> Y for the asserted X");
        return sequent::asserts(imp.right());
    }
    case rule_id::weakening_left: {
        require_arity(premises, 1, "weakening_left");
        const formula& z = require_right(premises[0].conclusion(), "weakening_left");
        return sequent::both(require_companion(args, "weakening_left"), z);
    }
    case rule_id::weakening_right: {
        require_arity(premises, 1, "weakening_right");
        const formula& x = require_left(premises[0].conclusion(), "weakening_right");
        return sequent::both(x, require_companion(args, "weakening_right"));
    }
    }
    throw pattern_mismatch("unknown rule");
}

} // namespace

std::string derivation_tree::to_text() const {
    std::string out;
    append_text(*this, 0, out);
    return out;
}

derivation_tree apply_rule(const observer_profile& profile, rule_id rule,
                           std::vector<derivation_tree> premises, const rule_args& args) {
    if (!profile.has_rule(rule)) throw rule_not_available(profile.name, rule_name(rule));
    sequent conclusion = conclude(rule, premises, args);
    return derivation_tree(std::move(conclusion), std::string(rule_name(rule)),
                           std::move(premises));
}

derivation_tree use_axiom(observer_profile& profile, std::string_view axiom_id) {
    const axiom_entry& e = profile.axioms.consume(axiom_id);
    return derivation_tree(e.seq, "axiom(" + e.id + ")", {}, e.note);
}

namespace {

// Rebuilds the rule_args a node must have used, from its conclusion.
bool revalidate_node(const derivation_tree& t, const observer_profile& profile) {
    const std::string& r = t.rule();
    if (r.rfind("axiom(", 0) == 0 && r.back() == ')') {
        const std::string id = r.substr(6, r.size() - 7);
        const axiom_entry* e = profile.axioms.find(id);
        return e && e->seq == t.conclusion() && t.children().empty();
    }

    const std::optional<rule_id> rule = rule_from_name(r);
    if (!rule || !profile.has_rule(*rule)) return false;

    rule_args args;
    switch (*rule) {
    case rule_id::identity:
        if (!t.conclusion().left()) return false;
        args.companion = *t.conclusion().left();
        break;
    case rule_id::and_left: {
        // The conclusion fixes the conjunction; try the premise formula on
        // either side.
        if (!t.conclusion().left() ||
            t.conclusion().left()->kind() != connective::conj)
            return false;
        if (t.children().size() != 1 || !t.children()[0].conclusion().left())
            return false;
        const formula premise_formula = *t.children()[0].conclusion().left();
        const formula conj = *t.conclusion().left();
        if (conj.left() == premise_formula) {
            args.companion = conj.right();
            args.companion_side = rule_args::side::right;
        } else if (conj.right() == premise_formula) {
            args.companion = conj.left();
            args.companion_side = rule_args::side::left;
        } else {
            return false;
        }
        break;
    }
    case rule_id::weakening_left:
        if (!t.conclusion().left()) return false;
        args.companion = *t.conclusion().left();
        break;
    case rule_id::weakening_right:
        if (!t.conclusion().right()) return false;
        args.companion = *t.conclusion().right();
        break;
    default:
        break;
    }

    try {
        return conclude(*rule, t.children(), args) == t.conclusion();
    } catch (const pattern_mismatch&) {
        return false;
    }
}

} // namespace

bool validate_tree(const derivation_tree& tree, const observer_profile& profile) {
    if (!revalidate_node(tree, profile)) return false;
    for (const derivation_tree& c : tree.children())
        if (!validate_tree(c, profile)) return false;
    return true;
}

} // namespace qmirror::logic

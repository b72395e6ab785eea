#include "qmirror/observer.hpp"

#include <algorithm>

namespace qmirror::logic {

std::string_view observer_name(observer_id id) {
    switch (id) {
    case observer_id::P: return "P";
    case observer_id::G: return "G";
    case observer_id::A: return "A";
    }
    return "?";
}

observer_id observer_from_name(std::string_view name) {
    if (name == "P") return observer_id::P;
    if (name == "G") return observer_id::G;
    if (name == "A") return observer_id::A;
    throw validation_error("unknown observer '" + std::string(name) + "'");
}

bool can_communicate(observer_id x, observer_id y) {
    if (x == y) return true;
    // A@G and G@P hold; A@P does not. Symmetric by construction.
    const auto pair_holds = [](observer_id a, observer_id b) {
        return (a == observer_id::A && b == observer_id::G) ||
               (a == observer_id::G && b == observer_id::P);
    };
    return pair_holds(x, y) || pair_holds(y, x);
}

std::string_view rule_name(rule_id id) {
    switch (id) {
    case rule_id::and_formation: return "and_formation";
    case rule_id::oplus_formation: return "oplus_formation";
    case rule_id::and_left: return "and_left";
    case rule_id::cut: return "cut";
    case rule_id::identity: return "identity";
    case rule_id::falsum_definition: return "falsum_definition";
    case rule_id::modus_ponens: return "modus_ponens";
    case rule_id::weakening_left: return "weakening_left";
    case rule_id::weakening_right: return "weakening_right";
    }
    return "?";
}

std::optional<rule_id> rule_from_name(std::string_view name) {
    for (rule_id r : {rule_id::and_formation, rule_id::oplus_formation, rule_id::and_left,
                      rule_id::cut, rule_id::identity, rule_id::falsum_definition,
                      rule_id::modus_ponens, rule_id::weakening_left,
                      rule_id::weakening_right})
        if (rule_name(r) == name) return r;
    return std::nullopt;
}

rule_not_available::rule_not_available(observer_id profile, std::string_view rule)
    : std::runtime_error("rule '" + std::string(rule) + "' is not available to " +
                         std::string(observer_name(profile))) {}

axiom_exhausted::axiom_exhausted(std::string_view axiom_id)
    : std::runtime_error("axiom '" + std::string(axiom_id) +
                         "' is spent; no-cloning forbids another copy") {}

void axiom_ledger::add(std::string id, sequent seq, std::optional<std::uint64_t> uses,
                       std::string note) {
    if (find(id)) throw validation_error("duplicate axiom id '" + id + "'");
    entries_.push_back({std::move(id), std::move(seq), uses, std::move(note)});
}

const axiom_entry* axiom_ledger::find(std::string_view id) const {
    const auto it = std::find_if(entries_.begin(), entries_.end(),
                                 [&](const axiom_entry& e) { return e.id == id; });
    return it == entries_.end() ? nullptr : &*it;
}

const axiom_entry& axiom_ledger::consume(std::string_view id) {
    for (axiom_entry& e : entries_) {
        if (e.id != id) continue;
        if (e.remaining) {
            if (*e.remaining == 0) throw axiom_exhausted(id);
            --*e.remaining;
        }
        return e;
    }
    throw validation_error("axiom '" + std::string(id) + "' is not in the ledger");
}

void axiom_ledger::grant(std::string id, sequent seq, std::uint64_t uses,
                         std::string note) {
    for (axiom_entry& e : entries_) {
        if (e.id == id) {
            if (e.remaining) *e.remaining += uses;
            return;
        }
    }
    entries_.push_back({std::move(id), std::move(seq), uses, std::move(note)});
}

void axiom_ledger::make_unlimited() {
    for (axiom_entry& e : entries_) e.remaining.reset();
}

namespace {

// Sequents of the measurement-produced axioms over the working atom.
struct axiom_shapes {
    sequent truth;           // |- A & A^
    sequent falsity;         // A^ (+) A |-
    sequent measurable;      // A & A^ |- A & A^
    sequent measurable_sym;  // A^ (+) A |- A^ (+) A
};

axiom_shapes shapes_for(const std::string& atom) {
    const formula a = formula::atom(atom);
    const formula contradiction = formula::conj(a, formula::orth(a));
    const sequent truth = sequent::asserts(contradiction);
    const sequent measurable = sequent::both(contradiction, contradiction);
    // The falsity-side shapes are the symmetry images of the truth-side ones.
    return {truth, truth.dual(), measurable, measurable.dual()};
}

} // namespace

observer_profile make_insider_profile(const profile_options& opts) {
    observer_profile p;
    p.name = observer_id::P;
    p.rules = {rule_id::and_formation, rule_id::oplus_formation};

    const axiom_shapes s = shapes_for(opts.atom);
    const std::optional<std::uint64_t> once =
        opts.unlimited_axioms ? std::optional<std::uint64_t>{} : std::optional<std::uint64_t>{1};
    const std::optional<std::uint64_t> falsity_uses =
        opts.unlimited_axioms || !opts.falsity_single_use
            ? std::optional<std::uint64_t>{}
            : std::optional<std::uint64_t>{1};

    p.axioms.add(std::string(ax_truth), s.truth, once);
    p.axioms.add(std::string(ax_falsity), s.falsity, falsity_uses);
    // The transition axioms are not measurement-produced resources; they are
    // reusable, and their sequent arrow reads "by means of a U_2^D".
    p.axioms.add(std::string(ax_measurable), s.measurable, std::nullopt, "via U_2^D");
    p.axioms.add(std::string(ax_measurable_sym), s.measurable_sym, std::nullopt,
                 "via U_2^D");
    return p;
}

observer_profile make_quantum_profile(const profile_options& opts) {
    (void)opts;
    observer_profile g;
    g.name = observer_id::G;
    g.rules = {rule_id::and_formation, rule_id::oplus_formation, rule_id::and_left,
               rule_id::cut, rule_id::identity};
    return g;  // ledger starts empty; axioms arrive by issue_axiom
}

observer_profile make_classical_profile(const profile_options& opts) {
    (void)opts;
    observer_profile a;
    a.name = observer_id::A;
    a.rules = {rule_id::identity, rule_id::and_formation, rule_id::oplus_formation,
               rule_id::and_left, rule_id::cut, rule_id::falsum_definition,
               rule_id::modus_ponens, rule_id::weakening_left, rule_id::weakening_right};
    return a;
}

observer_profile make_profile(observer_id id, const profile_options& opts) {
    switch (id) {
    case observer_id::P: return make_insider_profile(opts);
    case observer_id::G: return make_quantum_profile(opts);
    case observer_id::A: return make_classical_profile(opts);
    }
    throw validation_error("unknown observer id");
}

void issue_axiom(observer_profile& from, observer_profile& to, std::string_view id) {
    if (!can_communicate(from.name, to.name))
        throw validation_error(std::string(observer_name(from.name)) + " cannot reach " +
                               std::string(observer_name(to.name)));
    const axiom_entry& e = from.axioms.consume(id);
    to.axioms.grant(e.id, e.seq, 1, e.note);
}

void receive_judgement(observer_id from, observer_profile& to, const sequent& s,
                       std::string id) {
    if (!can_communicate(from, to.name))
        throw validation_error(std::string(observer_name(from)) + " cannot reach " +
                               std::string(observer_name(to.name)));
    to.axioms.add(std::move(id), s, std::nullopt,
                  std::string("received from ") + std::string(observer_name(from)));
}

} // namespace qmirror::logic

#include "qmirror/scenarios.hpp"

#include <algorithm>
#include <set>

namespace qmirror::logic {

derivation_tree derive_cut_scenario(observer_profile& g, bool symmetric_variant,
                                    const std::string& atom) {
    if (g.name != observer_id::G)
        throw rule_not_available(g.name, "cut scenario is G's move");

    const formula a = formula::atom(atom);
    const formula goal = symmetric_variant ? formula::orth(a) : a;

    derivation_tree axiom_leaf = use_axiom(g, ax_truth);

    rule_args id_args;
    id_args.companion = goal;
    derivation_tree id = apply_rule(g, rule_id::identity, {}, id_args);

    // and_left rebuilds A & A^ around the identity's formula.
    rule_args al_args;
    al_args.companion = symmetric_variant ? a : formula::orth(a);
    al_args.companion_side =
        symmetric_variant ? rule_args::side::left : rule_args::side::right;
    derivation_tree left_rule = apply_rule(g, rule_id::and_left, {std::move(id)}, al_args);

    return apply_rule(g, rule_id::cut, {std::move(axiom_leaf), std::move(left_rule)});
}

cloning_outcome cloning_paradox_demo(bool allow_cloning, const std::string& atom) {
    profile_options opts;
    opts.atom = atom;
    opts.unlimited_axioms = allow_cloning;

    observer_profile p = make_insider_profile(opts);
    observer_profile g = make_quantum_profile(opts);
    issue_axiom(p, g, ax_truth);
    if (allow_cloning) g.axioms.make_unlimited();

    cloning_outcome out;
    out.trees.push_back(derive_cut_scenario(g, false, atom));

    if (!allow_cloning) {
        try {
            out.trees.push_back(derive_cut_scenario(g, true, atom));
        } catch (const axiom_exhausted& e) {
            out.halt = e.what();
            return out;
        }
        // A second use slipping through would be a broken ledger.
        throw validation_error("ledger failed to enforce single use");
    }

    out.trees.push_back(derive_cut_scenario(g, true, atom));
    derivation_tree both =
        apply_rule(g, rule_id::and_formation, {out.trees[0], out.trees[1]});
    out.trees.push_back(std::move(both));
    out.contradiction_reached = true;
    return out;
}

derivation_tree classical_collapse(const observer_profile& profile,
                                   const derivation_tree& asserts_a,
                                   const derivation_tree& asserts_a_orth) {
    if (profile.name != observer_id::A ||
        !profile.has_rule(rule_id::falsum_definition) ||
        !profile.has_rule(rule_id::modus_ponens))
        throw rule_not_available(profile.name, "falsum_definition");

    const sequent& sa = asserts_a.conclusion();
    const sequent& so = asserts_a_orth.conclusion();
    if (sa.left() || !sa.right() || so.left() || !so.right())
        throw pattern_mismatch("classical_collapse: premises must be |- A and |- A^");
    if (so.right()->kind() != connective::orth || so.right()->operand() != *sa.right())
        throw pattern_mismatch("classical_collapse: second premise must assert the "
                               "orthocomplement of the first");

    derivation_tree rewritten =
        apply_rule(profile, rule_id::falsum_definition, {asserts_a_orth});
    return apply_rule(profile, rule_id::modus_ponens, {asserts_a, std::move(rewritten)});
}

std::vector<sequent> post_measurement_judgements(int outcome, const std::string& atom) {
    if (outcome != 0 && outcome != 1)
        throw validation_error("basis index must be 0 or 1");
    const formula a = formula::atom(atom);
    const formula seen = outcome == 0 ? a : formula::orth(a);
    const formula other = outcome == 0 ? formula::orth(a) : a;
    return {sequent::asserts(formula::disj(seen, other)),
            sequent::refutes(formula::conj(seen, other))};
}

// -----------------------------------------------------------------------
// Forward-chaining search.

namespace {

void collect_subformulas(const formula& f, std::vector<formula>& out) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    switch (f.kind()) {
    case connective::orth:
        collect_subformulas(f.operand(), out);
        break;
    case connective::conj:
    case connective::disj:
    case connective::implies:
        collect_subformulas(f.left(), out);
        collect_subformulas(f.right(), out);
        break;
    default:
        break;
    }
}

using usage = std::map<std::string, std::uint64_t>;

usage combine(const usage& a, const usage& b) {
    usage u = a;
    for (const auto& [id, n] : b) u[id] += n;
    return u;
}

bool within_budget(const usage& u, const axiom_ledger& ledger) {
    for (const auto& [id, n] : u) {
        const axiom_entry* e = ledger.find(id);
        if (!e) return false;
        if (e->remaining && n > *e->remaining) return false;
    }
    return true;
}

// a dominates b: same sequent, no deeper, no hungrier.
bool dominates(const derived_fact& a, const derived_fact& b) {
    if (a.depth > b.depth) return false;
    for (const auto& [id, n] : a.uses) {
        const auto it = b.uses.find(id);
        if (it == b.uses.end() || n > it->second) return false;
    }
    return true;
}

class fact_store {
public:
    bool insert(derived_fact f) {
        auto& bucket = by_sequent_[f.seq.to_string()];
        for (const derived_fact& known : bucket)
            if (dominates(known, f)) return false;
        std::erase_if(bucket,
                      [&](const derived_fact& known) { return dominates(f, known); });
        bucket.push_back(std::move(f));
        return true;
    }

    std::vector<derived_fact> all() const {
        std::vector<derived_fact> out;
        for (const auto& [key, bucket] : by_sequent_)
            out.insert(out.end(), bucket.begin(), bucket.end());
        return out;
    }

private:
    std::map<std::string, std::vector<derived_fact>> by_sequent_;
};

} // namespace

std::vector<derived_fact> saturate(const observer_profile& profile,
                                   const std::vector<sequent>& premises,
                                   const search_options& opts) {
    // Instantiation universe: subformulas of the axioms and premises.
    std::vector<formula> universe;
    for (const axiom_entry& e : profile.axioms.entries()) {
        if (e.seq.left()) collect_subformulas(*e.seq.left(), universe);
        if (e.seq.right()) collect_subformulas(*e.seq.right(), universe);
    }
    for (const sequent& s : premises) {
        if (s.left()) collect_subformulas(*s.left(), universe);
        if (s.right()) collect_subformulas(*s.right(), universe);
    }

    fact_store store;

    for (const axiom_entry& e : profile.axioms.entries()) {
        derived_fact f{e.seq, {}, 0};
        if (e.remaining) {
            if (*e.remaining == 0) continue;
            f.uses[e.id] = 1;
        }
        store.insert(std::move(f));
    }
    for (const sequent& s : premises) store.insert({s, {}, 0});
    if (profile.has_rule(rule_id::identity))
        for (const formula& x : universe) store.insert({sequent::both(x, x), {}, 0});

    std::size_t added = 1;  // enter the loop
    while (added != 0) {
        added = 0;
        const std::vector<derived_fact> facts = store.all();

        const auto try_add = [&](sequent s, usage u, int depth) {
            if (depth > opts.max_depth) return;
            if (!within_budget(u, profile.axioms)) return;
            if (store.insert({std::move(s), std::move(u), depth})) ++added;
        };

        // Shape indices for the binary rules.
        std::vector<const derived_fact*> asserts_shaped;  //   |- X
        std::vector<const derived_fact*> refutes_shaped;  // X |-
        std::map<std::string, std::vector<const derived_fact*>> by_left;
        for (const derived_fact& f : facts) {
            if (!f.seq.left() && f.seq.right()) asserts_shaped.push_back(&f);
            if (f.seq.left() && !f.seq.right()) refutes_shaped.push_back(&f);
            if (f.seq.left()) by_left[f.seq.left()->to_string()].push_back(&f);
        }

        for (const derived_fact& f : facts) {
            if (profile.has_rule(rule_id::and_left) && f.seq.left() && f.seq.right()) {
                for (const formula& y : universe) {
                    try_add(sequent::both(formula::conj(*f.seq.left(), y), *f.seq.right()),
                            f.uses, f.depth + 1);
                    try_add(sequent::both(formula::conj(y, *f.seq.left()), *f.seq.right()),
                            f.uses, f.depth + 1);
                }
            }
            if (profile.has_rule(rule_id::falsum_definition) && !f.seq.left() &&
                f.seq.right() && f.seq.right()->kind() == connective::orth) {
                try_add(sequent::asserts(
                            formula::implies(f.seq.right()->operand(), formula::falsum())),
                        f.uses, f.depth + 1);
            }
            if (profile.has_rule(rule_id::weakening_left) && !f.seq.left() &&
                f.seq.right()) {
                for (const formula& x : universe)
                    try_add(sequent::both(x, *f.seq.right()), f.uses, f.depth + 1);
            }
            if (profile.has_rule(rule_id::weakening_right) && f.seq.left() &&
                !f.seq.right()) {
                for (const formula& z : universe)
                    try_add(sequent::both(*f.seq.left(), z), f.uses, f.depth + 1);
            }

            // cut: this fact supplies the left premise, the index the right.
            if (profile.has_rule(rule_id::cut) && f.seq.right()) {
                const auto it = by_left.find(f.seq.right()->to_string());
                if (it != by_left.end()) {
                    for (const derived_fact* g : it->second) {
                        const int depth = std::max(f.depth, g->depth) + 1;
                        sequent s;
                        if (f.seq.left() && g->seq.right())
                            s = sequent::both(*f.seq.left(), *g->seq.right());
                        else if (f.seq.left())
                            s = sequent::refutes(*f.seq.left());
                        else if (g->seq.right())
                            s = sequent::asserts(*g->seq.right());
                        try_add(std::move(s), combine(f.uses, g->uses), depth);
                    }
                }
            }
        }

        if (profile.has_rule(rule_id::and_formation)) {
            for (const derived_fact* f : asserts_shaped)
                for (const derived_fact* g : asserts_shaped)
                    try_add(sequent::asserts(
                                formula::conj(*f->seq.right(), *g->seq.right())),
                            combine(f->uses, g->uses), std::max(f->depth, g->depth) + 1);
        }
        if (profile.has_rule(rule_id::oplus_formation)) {
            for (const derived_fact* f : refutes_shaped)
                for (const derived_fact* g : refutes_shaped)
                    try_add(sequent::refutes(formula::disj(*f->seq.left(), *g->seq.left())),
                            combine(f->uses, g->uses), std::max(f->depth, g->depth) + 1);
        }
        if (profile.has_rule(rule_id::modus_ponens)) {
            for (const derived_fact* f : asserts_shaped)
                for (const derived_fact* g : asserts_shaped) {
                    const formula& imp = *g->seq.right();
                    if (imp.kind() == connective::implies && imp.left() == *f->seq.right())
                        try_add(sequent::asserts(imp.right()), combine(f->uses, g->uses),
                                std::max(f->depth, g->depth) + 1);
                }
        }
    }

    return store.all();
}

bool search_derives(const observer_profile& profile, const std::vector<sequent>& premises,
                    const sequent& goal, const search_options& opts) {
    // Iterative deepening: a goal reachable at low depth is found before the
    // breadth of the deeper closure is paid for.
    for (int d = 1; d <= opts.max_depth; ++d) {
        search_options bounded = opts;
        bounded.max_depth = d;
        for (const derived_fact& f : saturate(profile, premises, bounded))
            if (f.seq == goal) return true;
    }
    return false;
}

} // namespace qmirror::logic

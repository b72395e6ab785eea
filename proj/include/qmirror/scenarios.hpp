// Canned derivations of the observer calculus and the bounded proof search
// used to certify what each profile can and cannot reach.

#pragma once

#include <map>

#include "qmirror/derivation.hpp"

namespace qmirror::logic {

// G drops the truth axiom with the cut rule:
//
//   |- A & A^    A & A^ |- A   (by and_left over the identity A |- A)
//   ----------------------------------------------------------- cut
//   |- A
//
// Consumes one use of the truth axiom from g's ledger. The symmetric
// variant swaps in the identity A^ |- A^ and concludes |- A^.
derivation_tree derive_cut_scenario(observer_profile& g, bool symmetric_variant = false,
                                    const std::string& atom = "A");

// The no-cloning counterfactual. With cloning allowed the ledger is
// unlimited and G stacks two cut derivations into |- A and |- A^, then
// rebuilds the truth axiom |- A & A^ by and-formation: a contradiction
// reached by reasoning alone. With cloning forbidden the second cut hits
// the spent ledger and the run halts after |- A; the halt is the result.
struct cloning_outcome {
    std::vector<derivation_tree> trees;   // |- A [, |- A^, |- A & A^]
    bool contradiction_reached = false;
    std::string halt;                     // exhaustion report when blocked
};

cloning_outcome cloning_paradox_demo(bool allow_cloning, const std::string& atom = "A");

// A rewrites A^ as A -> _|_ and applies modus ponens, deriving falsum from
// |- A and |- A^. Profiles other than A lack the rules.
derivation_tree classical_collapse(const observer_profile& profile,
                                   const derivation_tree& asserts_a,
                                   const derivation_tree& asserts_a_orth);

// G's empirical conclusions after a standard measurement: instances of the
// excluded middle and non-contradiction, with A and A^ trading places for
// outcome 1.
std::vector<sequent> post_measurement_judgements(int outcome,
                                                 const std::string& atom = "A");

// -----------------------------------------------------------------------
// Bounded proof search.

struct search_options {
    int max_depth = 4;  // depth of the deepest derivation exercised here
};

// A reachable sequent together with the per-axiom uses its cheapest known
// derivation consumed and that derivation's depth (leaves are depth 0).
struct derived_fact {
    sequent seq;
    std::map<std::string, std::uint64_t> uses;
    int depth = 0;
};

// Exhaustive forward closure of the profile's rules over its axioms plus
// the given premises. Identity and companion instantiation draw from the
// subformula universe of axioms and premises. Budgeted axioms bound the
// per-branch use counts exactly as the ledger would.
std::vector<derived_fact> saturate(const observer_profile& profile,
                                   const std::vector<sequent>& premises,
                                   const search_options& opts = {});

bool search_derives(const observer_profile& profile, const std::vector<sequent>& premises,
                    const sequent& goal, const search_options& opts = {});

} // namespace qmirror::logic

// The three observers and their inference resources.
//
//   P  insider; performs reversible measurements. Paraconsistent symmetric
//      logic: holds the truth axiom |- A & A^ and the falsity axiom
//      A^ (+) A |-, each issued by a measurement and usable once (the
//      logical face of no-cloning), plus the reusable measurability axioms.
//   G  external quantum logician; performs projective measurements. Has
//      cut, &-left and the identity schema, but no falsum machinery.
//   A  external classical logician. Has the falsum definition and modus
//      ponens on top of the structural repertoire.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qmirror/sequent.hpp"

namespace qmirror::logic {

enum class observer_id { P, G, A };

std::string_view observer_name(observer_id id);
observer_id observer_from_name(std::string_view name);

// The meta relation "can communicate": holds for A@G and G@P, fails for
// A@P. Symmetric, not transitive. Observers trivially reach themselves.
bool can_communicate(observer_id x, observer_id y);

enum class rule_id {
    and_formation,      // |- X   |- Y   =>   |- X & Y
    oplus_formation,    // X |-   Y |-   =>   X (+) Y |-
    and_left,           // X |- Z   =>   X & Y |- Z   (companion either side)
    cut,                // L |- X   X |- R   =>   L |- R
    identity,           // X |- X
    falsum_definition,  // |- X^   =>   |- X -> _|_
    modus_ponens,       // |- X   |- X -> Y   =>   |- Y
    weakening_left,     // |- Z   =>   X |- Z
    weakening_right,    // X |-   =>   X |- Z
};

std::string_view rule_name(rule_id id);
std::optional<rule_id> rule_from_name(std::string_view name);

// Raised when a profile lacks the requested rule.
class rule_not_available : public std::runtime_error {
public:
    rule_not_available(observer_id profile, std::string_view rule);
};

// Raised when premises do not fit a rule's shape.
class pattern_mismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a spent single-use axiom is requested again.
class axiom_exhausted : public std::runtime_error {
public:
    explicit axiom_exhausted(std::string_view axiom_id);
};

// Linear axiom store. An entry without a use budget is reusable; a budgeted
// entry is decremented per use and refuses at zero.
struct axiom_entry {
    std::string id;
    sequent seq;
    std::optional<std::uint64_t> remaining;  // nullopt = unlimited
    std::string note;                        // printed next to the sequent
};

class axiom_ledger {
public:
    void add(std::string id, sequent seq, std::optional<std::uint64_t> uses,
             std::string note = "");

    const axiom_entry* find(std::string_view id) const;
    bool has(std::string_view id) const { return find(id) != nullptr; }

    // Decrements the budget (throws axiom_exhausted at zero) and returns
    // the axiom's sequent.
    const axiom_entry& consume(std::string_view id);

    // Adds budget to an existing entry, or creates it.
    void grant(std::string id, sequent seq, std::uint64_t uses, std::string note = "");

    // Lifts every budget; the no-cloning counterfactual.
    void make_unlimited();

    const std::vector<axiom_entry>& entries() const { return entries_; }

private:
    std::vector<axiom_entry> entries_;
};

// Well-known axiom ids.
inline constexpr std::string_view ax_truth = "truth";            // |- A & A^
inline constexpr std::string_view ax_falsity = "falsity";        // A^ (+) A |-
inline constexpr std::string_view ax_measurable = "measurable";  // A & A^ |- A & A^
inline constexpr std::string_view ax_measurable_sym = "measurable_sym";

struct observer_profile {
    observer_id name;
    std::set<rule_id> rules;
    axiom_ledger axioms;

    bool has_rule(rule_id r) const { return rules.count(r) != 0; }
};

struct profile_options {
    std::string atom = "A";
    // The no-cloning argument is stated for the truth axiom; by symmetry the
    // falsity axiom defaults to single-use as well. Switchable.
    bool falsity_single_use = true;
    bool unlimited_axioms = false;
};

observer_profile make_insider_profile(const profile_options& opts = {});    // P
observer_profile make_quantum_profile(const profile_options& opts = {});    // G
observer_profile make_classical_profile(const profile_options& opts = {});  // A

observer_profile make_profile(observer_id id, const profile_options& opts = {});

// Moves one use of an axiom from the issuer's ledger into the receiver's:
// issuing consumes the single resource on the issuing side.
void issue_axiom(observer_profile& from, observer_profile& to, std::string_view id);

// Records a communicated conclusion as a reusable entry in the receiver's
// ledger (classical information copies freely). Refuses when the two
// observers cannot communicate.
void receive_judgement(observer_id from, observer_profile& to, const sequent& s,
                       std::string id);

} // namespace qmirror::logic

// Sequents in the additive discipline: at most one formula per side.
// Text form "G |- D" with either side possibly empty.

#pragma once

#include <optional>

#include "qmirror/formula.hpp"

namespace qmirror::logic {

class sequent {
public:
    sequent() = default;

    static sequent asserts(formula f) { return sequent({}, std::move(f)); }
    static sequent refutes(formula f) { return sequent(std::move(f), {}); }
    static sequent both(formula l, formula r) { return sequent(std::move(l), std::move(r)); }

    const std::optional<formula>& left() const { return left_; }
    const std::optional<formula>& right() const { return right_; }

    bool operator==(const sequent& other) const {
        return left_ == other.left_ && right_ == other.right_;
    }
    bool operator!=(const sequent& other) const { return !(*this == other); }

    std::string to_string() const {
        std::string out;
        if (left_) out += left_->to_string() + " ";
        out += "|-";
        if (right_) out += " " + right_->to_string();
        return out;
    }

    // Symmetry transform: sides swap and each formula dualizes.
    sequent dual() const {
        sequent s;
        if (right_) s.left_ = right_->dual();
        if (left_) s.right_ = left_->dual();
        return s;
    }

private:
    sequent(std::optional<formula> l, std::optional<formula> r)
        : left_(std::move(l)), right_(std::move(r)) {}

    std::optional<formula> left_;
    std::optional<formula> right_;
};

sequent parse_sequent(std::string_view text);

} // namespace qmirror::logic

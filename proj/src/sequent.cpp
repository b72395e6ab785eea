#include "qmirror/sequent.hpp"

#include <cctype>

namespace qmirror::logic {

sequent parse_sequent(std::string_view text) {
    const std::size_t turnstile = text.find("|-");
    if (turnstile == std::string_view::npos)
        throw parse_error("sequent needs a '|-'", text.size());

    auto is_blank = [](std::string_view s) {
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) return false;
        return true;
    };

    const std::string_view lhs = text.substr(0, turnstile);
    const std::string_view rhs = text.substr(turnstile + 2);

    std::optional<formula> l, r;
    if (!is_blank(lhs)) l = parse_formula(lhs);
    if (!is_blank(rhs)) r = parse_formula(rhs);

    if (l && r) return sequent::both(*l, *r);
    if (l) return sequent::refutes(*l);
    if (r) return sequent::asserts(*r);
    return {};
}

} // namespace qmirror::logic

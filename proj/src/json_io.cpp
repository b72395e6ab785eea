#include "qmirror/json_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace qmirror::io {

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json_writer& json_writer::begin_object() {
    separate();
    out_ += '{';
    needs_comma_.push_back(false);
    return *this;
}

json_writer& json_writer::end_object() {
    out_ += '}';
    needs_comma_.pop_back();
    return *this;
}

json_writer& json_writer::begin_array() {
    separate();
    out_ += '[';
    needs_comma_.push_back(false);
    return *this;
}

json_writer& json_writer::end_array() {
    out_ += ']';
    needs_comma_.pop_back();
    return *this;
}

void json_writer::separate() {
    if (!needs_comma_.empty()) {
        if (needs_comma_.back()) out_ += ',';
        needs_comma_.back() = true;
    }
}

json_writer& json_writer::key(std::string_view name) {
    separate();
    out_ += '"';
    out_ += name;
    out_ += "\":";
    if (!needs_comma_.empty()) needs_comma_.back() = false;  // value follows
    return *this;
}

json_writer& json_writer::value(double x) {
    separate();
    out_ += format_real(x);
    return *this;
}

json_writer& json_writer::value(std::uint64_t x) {
    separate();
    out_ += std::to_string(x);
    return *this;
}

json_writer& json_writer::value(int x) {
    separate();
    out_ += std::to_string(x);
    return *this;
}

json_writer& json_writer::value(bool x) {
    separate();
    out_ += x ? "true" : "false";
    return *this;
}

json_writer& json_writer::value(std::string_view s) {
    separate();
    out_ += '"';
    for (char c : s) {
        switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out_ += buf;
            } else {
                out_ += c;
            }
        }
    }
    out_ += '"';
    return *this;
}

json_writer& json_writer::value(cx z) {
    begin_array();
    value(z.real());
    value(z.imag());
    return end_array();
}

void write_state(json_writer& w, const qubit_state& psi) {
    w.begin_object().field("a", psi.a()).field("b", psi.b()).end_object();
}

void write_diagonal(json_writer& w, const diagonal_unitary2& u) {
    w.begin_object().field("alpha", u.alpha()).field("phi", u.phase()).end_object();
}

void write_mat2(json_writer& w, const mat2& m) {
    w.begin_object().key("rows").begin_array();
    w.begin_array().value(m.e00()).value(m.e01()).end_array();
    w.begin_array().value(m.e10()).value(m.e11()).end_array();
    w.end_array().end_object();
}

void write_matn(json_writer& w, const fuzzy::matn& m) {
    w.begin_object().key("rows").begin_array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        w.begin_array();
        for (std::size_t j = 0; j < m.dim(); ++j) w.value(m.at(i, j));
        w.end_array();
    }
    w.end_array().end_object();
}

std::string state_json(const qubit_state& psi) {
    json_writer w;
    write_state(w, psi);
    return w.str();
}

std::string diagonal_json(const diagonal_unitary2& u) {
    json_writer w;
    write_diagonal(w, u);
    return w.str();
}

std::string mat2_json(const mat2& m) {
    json_writer w;
    write_mat2(w, m);
    return w.str();
}

// -----------------------------------------------------------------------
// Parsing.

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw validation_error("malformed JSON");
    return j;
}

cx read_complex(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw validation_error(std::string(what) + ": expected [re, im]");
    cx z{j[0].get<double>(), j[1].get<double>()};
    require_finite(z, what);
    return z;
}

} // namespace

qubit_state parse_state_json(const std::string& text) {
    const json j = parse_document(text);
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw validation_error(R"(state: expected { "a": [re,im], "b": [re,im] })");
    return {read_complex(j["a"], "state amplitude a"),
            read_complex(j["b"], "state amplitude b")};
}

diagonal_unitary2 parse_diagonal_json(const std::string& text) {
    const json j = parse_document(text);
    if (!j.is_object() || !j.contains("alpha") || !j.contains("phi") ||
        !j["phi"].is_number())
        throw validation_error(R"(diagonal unitary: expected { "alpha": [re,im], "phi": x })");
    return {read_complex(j["alpha"], "alpha"), j["phi"].get<double>()};
}

mat2 parse_mat2_json(const std::string& text) {
    const json j = parse_document(text);
    if (!j.is_object() || !j.contains("rows"))
        throw validation_error(R"(matrix: expected { "rows": [[..],[..]] })");
    const json& rows = j["rows"];
    if (!rows.is_array() || rows.size() != 2 || !rows[0].is_array() ||
        !rows[1].is_array() || rows[0].size() != 2 || rows[1].size() != 2)
        throw validation_error("matrix: rows must be a 2x2 grid of [re, im] entries");
    return {read_complex(rows[0][0], "entry (0,0)"), read_complex(rows[0][1], "entry (0,1)"),
            read_complex(rows[1][0], "entry (1,0)"), read_complex(rows[1][1], "entry (1,1)")};
}

cx parse_amplitude(const std::string& text) {
    const std::string s = [&] {
        std::string t;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        return t;
    }();
    if (s.empty()) throw validation_error("amplitude: empty string");

    // Polar form r@theta.
    if (const auto at = s.find('@'); at != std::string::npos) {
        try {
            std::size_t used = 0;
            const double r = std::stod(s.substr(0, at), &used);
            if (used != at) throw validation_error("amplitude: bad modulus");
            const std::string rest = s.substr(at + 1);
            const double t = std::stod(rest, &used);
            if (used != rest.size()) throw validation_error("amplitude: bad angle");
            return std::polar(r, t);
        } catch (const std::invalid_argument&) {
            throw validation_error("amplitude: malformed polar form, want r@theta");
        } catch (const std::out_of_range&) {
            throw validation_error("amplitude: polar component out of double range");
        }
    }

    // Cartesian: optional real part, optional signed imaginary part ending in i.
    double re = 0.0, im = 0.0;
    std::size_t pos = 0;
    auto read_signed = [&](double& out, bool& is_imag) {
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I')) {
            // bare i / +i / -i
            out = (s[start] == '-') ? -1.0 : 1.0;
            is_imag = true;
            ++pos;
            return;
        }
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(s.substr(start), &used);
        } catch (const std::invalid_argument&) {
            throw validation_error("amplitude: expected a number in '" + s + "'");
        } catch (const std::out_of_range&) {
            throw validation_error("amplitude: number out of double range");
        }
        pos = start + used;
        if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I')) {
            is_imag = true;
            ++pos;
        } else {
            is_imag = false;
        }
        out = v;
    };

    bool saw_real = false, saw_imag = false;
    while (pos < s.size()) {
        // The second component must arrive explicitly signed.
        if ((saw_real || saw_imag) && s[pos] != '+' && s[pos] != '-')
            throw validation_error("amplitude: parts must be joined by + or -");
        double v;
        bool is_imag;
        read_signed(v, is_imag);
        if (is_imag) {
            if (saw_imag) throw validation_error("amplitude: two imaginary parts");
            im = v;
            saw_imag = true;
        } else {
            if (saw_real) throw validation_error("amplitude: two real parts");
            re = v;
            saw_real = true;
        }
    }
    if (!saw_real && !saw_imag) throw validation_error("amplitude: nothing to parse");
    const cx z{re, im};
    require_finite(z, "amplitude");
    return z;
}

} // namespace qmirror::io

// JSON interchange.
//
// Output goes through a small writer that keeps keys in insertion order and
// prints reals with 17 significant digits, so identical inputs give byte-
// identical documents. Input parsing rides on nlohmann::json.
//
// Schemas:
//   state             { "a": [re, im], "b": [re, im] }
//   diagonal unitary  { "alpha": [re, im], "phi": x }
//   general matrix    { "rows": [[[re,im], ...], ...] }
//   fuzzy sphere      { "n": n, "k": k, "J": [matrix, matrix, matrix],
//                       "X": [matrix, matrix, matrix] }

#pragma once

#include <string>
#include <vector>

#include "qmirror/fuzzy_sphere.hpp"
#include "qmirror/qubit.hpp"

namespace qmirror::io {

std::string format_real(double x);  // 17 significant digits

// Insertion-ordered JSON writer.
class json_writer {
public:
    json_writer& begin_object();
    json_writer& end_object();
    json_writer& begin_array();
    json_writer& end_array();

    json_writer& key(std::string_view name);

    json_writer& value(double x);
    json_writer& value(std::uint64_t x);
    json_writer& value(int x);
    json_writer& value(bool x);
    json_writer& value(std::string_view s);
    json_writer& value(const char* s) { return value(std::string_view(s)); }
    json_writer& value(cx z);  // [re, im]

    // key/value in one go.
    template <typename T>
    json_writer& field(std::string_view name, T&& v) {
        key(name);
        return value(std::forward<T>(v));
    }

    const std::string& str() const { return out_; }

private:
    void separate();

    std::string out_;
    std::vector<bool> needs_comma_;  // one flag per open scope
};

void write_state(json_writer& w, const qubit_state& psi);
void write_diagonal(json_writer& w, const diagonal_unitary2& u);
void write_mat2(json_writer& w, const mat2& m);
void write_matn(json_writer& w, const fuzzy::matn& m);

std::string state_json(const qubit_state& psi);
std::string diagonal_json(const diagonal_unitary2& u);
std::string mat2_json(const mat2& m);

// Parsers (throw validation_error on malformed or non-finite input).
qubit_state parse_state_json(const std::string& text);
diagonal_unitary2 parse_diagonal_json(const std::string& text);
mat2 parse_mat2_json(const std::string& text);

// Command-line amplitude forms: cartesian "re", "re+imi" / "re-imi", or
// polar "r@theta" (radians). Examples: "0.6", "0.6+0.8i", "1@1.5708", "-i".
cx parse_amplitude(const std::string& text);

} // namespace qmirror::io

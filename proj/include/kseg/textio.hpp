#pragma once

#include <string>

#include <json.hpp>

#include "kseg/core.hpp"

namespace kseg {

// Expression grammar:
//   expr  := ['-'] term (('+'|'-') term)*
//   term  := number ['*' blade] | blade
//   blade := 'e' digit+            (compact form, n <= 9 only)
//          | 'e{' int (',' int)* '}'
// Blade indices are 1-based and must be strictly increasing; the parser
// rejects non-canonical blades rather than sorting them. Coefficients of
// repeated blades accumulate.
Element parse_element(const std::string& text, Signature sig);

// Canonical form: terms in ascending blade-mask order, zero coefficients
// omitted, "0" for the zero element, compact blade names when n <= 9.
// parse_element(print_element(u)) == u bit-exactly.
std::string print_element(const Element& u);

// Canonical name of a blade: compact when n <= 9, "e{...}" otherwise,
// "1" for the scalar blade (or "e{}" when `general` is set).
std::string blade_name(BladeMask mask, int n, bool general = false);

// JSON document: {"format": 1, "sig": [p, q], "coeffs": ...} where coeffs
// is a dense array of 2^n reals in mask order or a sparse object keyed by
// general-form blade names ("e{}" for the scalar).
nlohmann::json to_json(const Element& u, bool sparse = false);
Element from_json(const nlohmann::json& doc, int n_cap = Signature::kMaxGenerators);

} // namespace kseg

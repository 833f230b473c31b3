#pragma once

// Human-readable string syntax: regular letters are written as their symbol,
// indeterminate letters as {c1,c2,...} and the don't-care as *.
// Example: a{a,c}b{a,d}bb

#include "indet/alphabet.hpp"
#include "indet/errors.hpp"
#include "indet/indet_string.hpp"
#include "indet/letter.hpp"

#include <string>
#include <string_view>

namespace indet {

/// Throws ParseError with the byte offset of the problem. Brace contents may be
/// in any order; {a} is read as the regular letter a.
IndetString parse_text(std::string_view input, const Alphabet& alphabet);

std::string to_text(const Letter& letter, const Alphabet& alphabet);
std::string to_text(const IndetString& x);

/// Alphabet of the distinct symbols in `input`, ordered by code point.
Alphabet infer_alphabet(std::string_view input, unsigned code_width_bits = 8);

} // namespace indet

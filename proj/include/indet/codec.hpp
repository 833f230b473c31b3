#pragma once

// Integer-code representation of strings.
//
// Every letter becomes one code: 0 is the don't-care, 1..sigma a regular
// letter, and sigma+s the s-th indeterminate letter. The I table holds one
// (scope, loc) pair per indeterminate letter, loc being the 1-based start of
// its ascending character ranks in the L pool. Slots are assigned in order of
// first occurrence.
//
// Binary file layout (all integers little-endian):
//
//   offset  size  field
//   0       4     magic "IDS1"
//   4       1     code width w in bits (1..32)
//   5       1     flags; bit 0 set for an integer alphabet (no symbol table)
//   6       2     zero
//   8       4     sigma
//   12      4     sigma_star
//   16      4     number of I entries
//   20      4     length of L
//   24      8     n, number of codes
//   32            symbol table: sigma entries of (u8 byte length, UTF-8 bytes)
//                 I table: (u32 scope, u32 loc) per entry
//                 L: w-bit values, MSB first, zero-padded to a byte boundary
//                 codes: w-bit values, MSB first, zero-padded to a byte boundary

#include "indet/alphabet.hpp"
#include "indet/errors.hpp"
#include "indet/indet_string.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace indet {

struct IndetEntry {
    std::uint32_t scope = 0;
    std::uint32_t loc = 0;

    friend bool operator==(const IndetEntry&, const IndetEntry&) = default;
};

struct Encoding {
    std::vector<std::uint32_t> codes;
    std::vector<IndetEntry> i_table;
    std::vector<Rank> l_pool;

    friend bool operator==(const Encoding&, const Encoding&) = default;
};

/// Throws CapacityError when x has more distinct indeterminate letters than sigma_star.
Encoding encode(const IndetString& x);

/// Inverse of encode. Throws DecodeError on dangling codes, out-of-range,
/// unsorted, overlapping or duplicated L segments.
IndetString decode(const Encoding& encoding, const Alphabet& alphabet);

std::string write_binary(const Encoding& encoding, const Alphabet& alphabet);

struct BinaryContents {
    Alphabet alphabet;
    Encoding encoding;
};

/// Throws DecodeError on a malformed file.
BinaryContents read_binary(std::string_view bytes);

} // namespace indet

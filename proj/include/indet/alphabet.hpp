#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace indet {

/// Rank of a base character, 1..sigma. Rank 0 is never a character.
using Rank = std::uint32_t;

/// An ordered alphabet of base characters together with the letter code budget.
///
/// Codes are 0 for the don't-care, 1..sigma for regular letters and
/// sigma+1..sigma+sigma_star for indeterminate letters, so
/// sigma + sigma_star + 1 must fit in code_width_bits.
class Alphabet {
public:
    /// Symbol i (0-based) gets rank i+1. sigma_star defaults to the largest value the code width allows.
    static Alphabet from_symbols(std::vector<std::string> symbols, unsigned code_width_bits = 8,
                                 std::optional<std::uint64_t> sigma_star = std::nullopt);

    /// a,c,g,t with half-byte codes: 0 don't-care, 1..4 regular, 5..15 indeterminate.
    static Alphabet dna();

    /// The positive integers 1..sigma written in decimal.
    static Alphabet integers(std::uint64_t sigma, unsigned code_width_bits = 32,
                             std::optional<std::uint64_t> sigma_star = std::nullopt);

    std::size_t sigma() const noexcept { return sigma_; }
    std::uint64_t sigma_star() const noexcept { return sigma_star_; }
    unsigned code_width_bits() const noexcept { return code_width_bits_; }
    bool is_integer() const noexcept { return integer_; }

    std::optional<Rank> rank_of(std::string_view symbol) const;
    std::string symbol(Rank rank) const;

    /// Length in bytes of the longest symbol.
    std::size_t max_symbol_length() const noexcept { return max_symbol_length_; }

    /// Symbol table in rank order; empty for integer alphabets.
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.integer_ == b.integer_ && a.sigma_ == b.sigma_ && a.sigma_star_ == b.sigma_star_ &&
               a.code_width_bits_ == b.code_width_bits_ && a.symbols_ == b.symbols_;
    }

private:
    Alphabet() = default;
    void check_budget() const;

    std::vector<std::string> symbols_;
    std::unordered_map<std::string, Rank> ranks_;
    std::size_t sigma_ = 0;
    std::uint64_t sigma_star_ = 0;
    unsigned code_width_bits_ = 8;
    std::size_t max_symbol_length_ = 0;
    bool integer_ = false;
};

/// True for characters the text formats reserve: * { } , # and whitespace.
bool is_reserved_symbol_char(char c) noexcept;

} // namespace indet

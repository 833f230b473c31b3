#include "indet/alphabet.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace indet {

namespace {

std::uint64_t max_code(unsigned width) {
    if (width == 0 || width > 32)
        throw std::invalid_argument("code width must be in 1..32 bits, got " + std::to_string(width));
    return (std::uint64_t{1} << width) - 1;
}

std::uint64_t default_sigma_star(std::uint64_t sigma, unsigned width) {
    std::uint64_t top = max_code(width);
    if (sigma > top)
        throw std::invalid_argument("alphabet of size " + std::to_string(sigma) +
                                    " does not fit in " + std::to_string(width) + "-bit codes");
    return top - sigma;
}

} // namespace

bool is_reserved_symbol_char(char c) noexcept {
    switch (c) {
    case '*': case '{': case '}': case ',': case '#':
    case ' ': case '\t': case '\n': case '\r': case '\v': case '\f':
        return true;
    default:
        return false;
    }
}

void Alphabet::check_budget() const {
    std::uint64_t top = max_code(code_width_bits_);
    if (sigma_ == 0)
        throw std::invalid_argument("alphabet must contain at least one character");
    if (sigma_ > top || sigma_star_ > top - sigma_)
        throw std::invalid_argument("sigma + sigma_star + 1 codes do not fit in " +
                                    std::to_string(code_width_bits_) + " bits");
}

Alphabet Alphabet::from_symbols(std::vector<std::string> symbols, unsigned code_width_bits,
                                std::optional<std::uint64_t> sigma_star) {
    Alphabet a;
    a.code_width_bits_ = code_width_bits;
    a.sigma_ = symbols.size();
    a.sigma_star_ = sigma_star ? *sigma_star : default_sigma_star(symbols.size(), code_width_bits);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const std::string& s = symbols[i];
        if (s.empty())
            throw std::invalid_argument("empty alphabet symbol");
        for (char c : s)
            if (is_reserved_symbol_char(c))
                throw std::invalid_argument("alphabet symbol '" + s + "' uses a reserved character");
        if (!a.ranks_.emplace(s, static_cast<Rank>(i + 1)).second)
            throw std::invalid_argument("duplicate alphabet symbol '" + s + "'");
        a.max_symbol_length_ = std::max(a.max_symbol_length_, s.size());
    }
    a.symbols_ = std::move(symbols);
    a.check_budget();
    return a;
}

Alphabet Alphabet::dna() {
    return from_symbols({"a", "c", "g", "t"}, 4);
}

Alphabet Alphabet::integers(std::uint64_t sigma, unsigned code_width_bits,
                            std::optional<std::uint64_t> sigma_star) {
    Alphabet a;
    a.integer_ = true;
    a.code_width_bits_ = code_width_bits;
    a.sigma_ = static_cast<std::size_t>(sigma);
    a.sigma_star_ = sigma_star ? *sigma_star : default_sigma_star(sigma, code_width_bits);
    a.max_symbol_length_ = std::to_string(sigma).size();
    a.check_budget();
    return a;
}

std::optional<Rank> Alphabet::rank_of(std::string_view symbol) const {
    if (integer_) {
        if (symbol.empty() || symbol.front() == '0')
            return std::nullopt;
        std::uint64_t value = 0;
        auto [end, ec] = std::from_chars(symbol.data(), symbol.data() + symbol.size(), value);
        if (ec != std::errc{} || end != symbol.data() + symbol.size() || value == 0 || value > sigma_)
            return std::nullopt;
        return static_cast<Rank>(value);
    }
    auto it = ranks_.find(std::string(symbol));
    if (it == ranks_.end())
        return std::nullopt;
    return it->second;
}

std::string Alphabet::symbol(Rank rank) const {
    if (rank == 0 || rank > sigma_)
        throw std::out_of_range("rank " + std::to_string(rank) + " outside 1.." + std::to_string(sigma_));
    if (integer_)
        return std::to_string(rank);
    return symbols_[rank - 1];
}

} // namespace indet

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace indet {

/// Reflexive, symmetric m x m bit matrix. Every instance satisfies both
/// properties; from_rows() rejects input that does not.
class MatchMatrix {
public:
    /// The identity matrix.
    explicit MatchMatrix(std::size_t m);

    /// Throws std::invalid_argument if rows are ragged, contain values other
    /// than 0/1, or are not reflexive and symmetric.
    static MatchMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t size() const noexcept { return m_; }

    bool operator()(std::size_t i, std::size_t j) const noexcept {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }

    /// Sets (i,j) and (j,i).
    void connect(std::size_t i, std::size_t j) noexcept {
        bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
        bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }

    const std::uint64_t* row_words(std::size_t i) const noexcept { return bits_.data() + i * words_; }
    std::size_t words_per_row() const noexcept { return words_; }

    friend bool operator==(const MatchMatrix&, const MatchMatrix&) = default;

private:
    std::size_t m_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

} // namespace indet

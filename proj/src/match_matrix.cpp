#include "indet/match_matrix.hpp"

#include <stdexcept>
#include <string>

namespace indet {

MatchMatrix::MatchMatrix(std::size_t m) : m_(m), words_((m + 63) / 64), bits_(m * words_, 0) {
    for (std::size_t i = 0; i < m; ++i)
        connect(i, i);
}

MatchMatrix MatchMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t m = rows.size();
    for (std::size_t i = 0; i < m; ++i)
        if (rows[i].size() != m)
            throw std::invalid_argument("match matrix row " + std::to_string(i + 1) + " has wrong length");
    MatchMatrix out(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            int v = rows[i][j];
            if (v != 0 && v != 1)
                throw std::invalid_argument("match matrix entries must be 0 or 1");
            if (i == j && v != 1)
                throw std::invalid_argument("match matrix is not reflexive at " + std::to_string(i + 1));
            if (v != rows[j][i])
                throw std::invalid_argument("match matrix is not symmetric at (" + std::to_string(i + 1) +
                                            "," + std::to_string(j + 1) + ")");
            if (v)
                out.connect(i, j);
        }
    }
    return out;
}

} // namespace indet

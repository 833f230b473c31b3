#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>

namespace indet::cli {

struct FuzzOptions {
    std::uint64_t seed = 1;
    std::size_t count = 100;
    std::size_t max_m = 25;
    std::size_t max_n = 10;
    bool timing = false;
};

/// Three seeded suites: MP round trips, mp_array against oracle_mp, and
/// regular_check against oracle_is_regular. Prints one line per suite and a
/// shrunk reproduction for each failure. Returns 0 when all pass, 1 otherwise.
int run_fuzz(const FuzzOptions& options, std::ostream& out);

} // namespace indet::cli

#pragma once

#include <cstdint>
#include <ostream>

namespace makekex {

struct SelftestOptions {
    bool quick = false;
    std::uint64_t seed = 20240915;
    // Appends a suite that deliberately fails, to prove the harness and the
    // nonzero exit path work.
    bool inject_fault = false;
};

// Runs every property suite, one summary line each. Returns true when all
// pass.
bool run_selftest(const SelftestOptions& options, std::ostream& out);

} // namespace makekex

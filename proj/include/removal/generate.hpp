#pragma once

#include <cstdint>

#include "removal/triangle.hpp"

namespace removal {

// Seeded instance generators used by the CLI `construct` subcommand and the
// test suites.  All are deterministic functions of (params, sizes, seed).

// Sets of the requested sizes drawn uniformly without replacement.
TripleSystem random_system(const GroupParams& g, std::uint64_t size_x,
                           std::uint64_t size_y, std::uint64_t size_z,
                           std::uint64_t seed);

// Convenience: sizes picked so |X||Y| stays near pair_budget, then delegated
// to random_system.
TripleSystem random_system_budgeted(const GroupParams& g, std::uint64_t pair_budget,
                                    std::uint64_t seed);

// One random triangle (x, y, -(x+y)) as a singleton collection.
MatchedTriples random_singleton(const GroupParams& g, std::uint64_t seed);

}  // namespace removal

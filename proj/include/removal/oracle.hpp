#pragma once

#include <cstdint>
#include <vector>

#include "removal/procedures.hpp"
#include "removal/triangle.hpp"

namespace removal {

/// Node/time limits for the exhaustive searches.  Results are marked exact
/// only when the search ran to completion.
struct OracleBudget {
    std::uint64_t max_nodes = 50'000'000;
    double max_seconds = 120.0;
};

enum class OracleStatus { Exact, BudgetExhausted };

struct DeletionVertex {
    Role role;
    Point point;
};

/// Minimum hitting set of the 3-partite triangle hypergraph.
struct MinDeletionResult {
    std::uint64_t value = 0;      // = upper when exact
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    OracleStatus status = OracleStatus::Exact;
    std::vector<DeletionVertex> deleted;  // a witness of size `upper`
    std::uint64_t nodes = 0;
};

MinDeletionResult min_deletion_exact(const TripleSystem& sys, const OracleBudget& budget = {});

/// Maximum multicolored sum-free collection in F_p^n.
struct MaxMatchedResult {
    MatchedTriples best;
    OracleStatus status = OracleStatus::Exact;
    std::uint64_t nodes = 0;
    std::uint64_t cap = 0;  // sum-free cap used for pruning (0 if disabled)
};

MaxMatchedResult max_matched_exact(unsigned p, unsigned n, const OracleBudget& budget = {},
                                   bool use_sumfree_cap = true);

/// Audit of T >= (mdel/(3N))^{C_p} N^2 -- the removal bound read backwards at
/// eps = mdel/N.
struct RemovalBoundAudit {
    std::uint64_t triangles = 0;
    std::uint64_t min_deletion = 0;
    double rhs = 0;
    bool holds = false;
    bool solved = false;  // false when the deletion oracle ran out of budget
};

RemovalBoundAudit removal_bound_audit(const TripleSystem& sys, const OracleBudget& budget = {});

}  // namespace removal

#pragma once

#include <cstdint>
#include <vector>

#include "biquasile/diagram.hpp"

namespace bq {

struct Coloring {
    std::vector<int> assignment; // region r -> assignment[r-1] in 1..n
    bool operator==(const Coloring&) const = default;
};

inline constexpr std::int64_t kDefaultOracleBudget = 100'000'000;

// Budget for oracle_count: BIQUASILE_ORACLE_BUDGET env override, else default.
std::int64_t oracle_budget_from_env();

// Exact count by backtracking over regions; crossings whose x, a, b are bound
// force y through the division tables. jobs > 1 fans the first branching
// variable out to that many workers.
std::int64_t count_colorings(const MarkedGraphDiagram& d, const Biquasile& X,
                             MarkedSchema schema = kDefaultSchema, int jobs = 1);

// Plain exhaustive loop over all n^region_count assignments; reference
// semantics for count_colorings. Throws budget_error when the assignment
// count exceeds the budget.
std::int64_t oracle_count(const MarkedGraphDiagram& d, const Biquasile& X,
                          MarkedSchema schema = kDefaultSchema,
                          std::int64_t budget = -1 /* -1: env or default */);

// All satisfying assignments in lexicographic order.
std::vector<Coloring> list_colorings(const MarkedGraphDiagram& d, const Biquasile& X,
                                     MarkedSchema schema = kDefaultSchema);

bool check_coloring(const MarkedGraphDiagram& d, const Biquasile& X, const Coloring& f,
                    MarkedSchema schema = kDefaultSchema);

// Homogeneous system over Z_N in residue coordinates (element e represents
// residue e mod N). rows * f == 0 (mod modulus).
struct LinearSystem {
    int modulus = 0;
    int variables = 0;
    std::vector<std::vector<std::int64_t>> rows;
};

// Linearizes the constraint set for the Alexander biquasile with the given
// parameters; the crossing rule y = x*(a.b) becomes
// -d*s*n^2*x + n*d*a + n*s*b - y == 0 (mod N), and marked-vertex equations
// linearize shape-wise the same way.
LinearSystem build_linear_system(const MarkedGraphDiagram& d, int N, int dparam,
                                 int sparam, int nparam,
                                 MarkedSchema schema = kDefaultSchema);

// Smith normal form count: N^(r-k) * prod gcd(d_i, N) over the nonzero
// diagonal entries d_1..d_k.
std::int64_t count_solutions_linear(const LinearSystem& sys);

} // namespace bq

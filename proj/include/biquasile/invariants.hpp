#pragma once

#include <string>
#include <utility>
#include <vector>

#include "biquasile/boltzmann.hpp"

namespace bq {

std::int64_t counting_invariant(const MarkedGraphDiagram& d, const Biquasile& X,
                                MarkedSchema schema = kDefaultSchema, int jobs = 1);

struct InvariantTable {
    std::vector<std::string> diagram_names;
    std::vector<std::string> algebra_names;
    std::vector<std::vector<std::int64_t>> counts; // [algebra][diagram]

    std::string render() const;       // aligned plain-text table
    std::string machine_lines() const; // "diagram algebra count" per cell
};

InvariantTable invariant_table(const std::vector<MarkedGraphDiagram>& diagrams,
                               const std::vector<std::pair<std::string, Biquasile>>& algebras,
                               MarkedSchema schema = kDefaultSchema, int jobs = 1);

struct CompareEvidence {
    std::string invariant; // e.g. "count[X_1]" or "enhanced[w1]"
    std::string lhs, rhs;
    bool differs;
};

struct CompareVerdict {
    bool distinguished = false;
    std::vector<CompareEvidence> evidence;
    std::string render() const;
};

CompareVerdict compare(const MarkedGraphDiagram& d1, const MarkedGraphDiagram& d2,
                       const std::vector<std::pair<std::string, Biquasile>>& algebras,
                       const std::vector<std::pair<std::string, BoltzmannWeight>>& weights = {},
                       MarkedSchema schema = kDefaultSchema);

// True iff the enhanced multiset of d is a sub-multiset of the enhanced
// multiset of each resolution.
bool cobordism_inclusion_check(const MarkedGraphDiagram& d, const Biquasile& X,
                               const BoltzmannWeight& w,
                               MarkedSchema schema = kDefaultSchema);

} // namespace bq

#include "biquasile/invariants.hpp"

#include <iomanip>
#include <sstream>

namespace bq {

std::int64_t counting_invariant(const MarkedGraphDiagram& d, const Biquasile& X,
                                MarkedSchema schema, int jobs) {
    return count_colorings(d, X, schema, jobs);
}

std::string InvariantTable::render() const {
    std::vector<size_t> widths(diagram_names.size());
    size_t head = 0;
    for (const auto& a : algebra_names) head = std::max(head, a.size());
    for (size_t j = 0; j < diagram_names.size(); ++j) {
        widths[j] = diagram_names[j].size();
        for (size_t i = 0; i < counts.size(); ++i)
            widths[j] = std::max(widths[j], std::to_string(counts[i][j]).size());
    }
    std::ostringstream out;
    out << std::left << std::setw((int)head) << "" << std::right;
    for (size_t j = 0; j < diagram_names.size(); ++j)
        out << "  " << std::setw((int)widths[j]) << diagram_names[j];
    out << "\n";
    for (size_t i = 0; i < counts.size(); ++i) {
        out << std::left << std::setw((int)head) << algebra_names[i] << std::right;
        for (size_t j = 0; j < diagram_names.size(); ++j)
            out << "  " << std::setw((int)widths[j]) << counts[i][j];
        out << "\n";
    }
    return out.str();
}

std::string InvariantTable::machine_lines() const {
    std::ostringstream out;
    for (size_t i = 0; i < counts.size(); ++i)
        for (size_t j = 0; j < diagram_names.size(); ++j)
            out << diagram_names[j] << ' ' << algebra_names[i] << ' ' << counts[i][j]
                << "\n";
    return out.str();
}

InvariantTable invariant_table(const std::vector<MarkedGraphDiagram>& diagrams,
                               const std::vector<std::pair<std::string, Biquasile>>& algebras,
                               MarkedSchema schema, int jobs) {
    InvariantTable t;
    for (const auto& d : diagrams)
        t.diagram_names.push_back(d.name.empty() ? "?" : d.name);
    for (const auto& [name, X] : algebras) t.algebra_names.push_back(name);
    for (const auto& [name, X] : algebras) {
        std::vector<std::int64_t> row;
        for (const auto& d : diagrams)
            row.push_back(counting_invariant(d, X, schema, jobs));
        t.counts.push_back(std::move(row));
    }
    return t;
}

std::string CompareVerdict::render() const {
    std::ostringstream out;
    out << (distinguished ? "distinguished" : "not distinguished") << "\n";
    for (const auto& e : evidence)
        out << "  " << e.invariant << ": " << e.lhs << " vs " << e.rhs
            << (e.differs ? "  <-- differs" : "") << "\n";
    return out.str();
}

CompareVerdict compare(const MarkedGraphDiagram& d1, const MarkedGraphDiagram& d2,
                       const std::vector<std::pair<std::string, Biquasile>>& algebras,
                       const std::vector<std::pair<std::string, BoltzmannWeight>>& weights,
                       MarkedSchema schema) {
    CompareVerdict v;
    for (const auto& [name, X] : algebras) {
        const auto c1 = counting_invariant(d1, X, schema);
        const auto c2 = counting_invariant(d2, X, schema);
        v.evidence.push_back({"count[" + name + "]", std::to_string(c1),
                              std::to_string(c2), c1 != c2});
    }
    for (const auto& [wname, w] : weights) {
        for (const auto& [aname, X] : algebras) {
            if (X.order() != w.order) continue;
            const auto e1 = enhanced_invariant(d1, X, w, schema);
            const auto e2 = enhanced_invariant(d2, X, w, schema);
            v.evidence.push_back({"enhanced[" + aname + "," + wname + "]",
                                  e1.polynomial(), e2.polynomial(), !(e1 == e2)});
        }
    }
    for (const auto& e : v.evidence) v.distinguished = v.distinguished || e.differs;
    return v;
}

bool cobordism_inclusion_check(const MarkedGraphDiagram& d, const Biquasile& X,
                               const BoltzmannWeight& w, MarkedSchema schema) {
    const auto mine = enhanced_invariant(d, X, w, schema);
    for (int sign : {+1, -1}) {
        const auto res = enhanced_invariant(resolve(d, sign), X, w, schema);
        if (!mine.sub_multiset_of(res)) return false;
    }
    return true;
}

} // namespace bq

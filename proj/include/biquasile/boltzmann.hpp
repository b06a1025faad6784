#pragma once

#include <map>
#include <string>
#include <vector>

#include "biquasile/solver.hpp"

namespace bq {

// Map from ordered triples (x,a,b) in {1..order}^3 to Z_modulus.
struct BoltzmannWeight {
    int order = 0;
    int modulus = 1;
    std::vector<int> table; // order^3 values in 0..modulus-1

    int at(int x, int a, int b) const {
        return table[((x - 1) * order + (a - 1)) * order + (b - 1)];
    }
    void set(int x, int a, int b, int v) {
        table[((x - 1) * order + (a - 1)) * order + (b - 1)] =
            ((v % modulus) + modulus) % modulus;
    }

    BoltzmannWeight& operator+=(const BoltzmannWeight& o);
};

BoltzmannWeight zero_weight(int order, int modulus);

// chi_(x,a,b): value 1 at the triple, 0 elsewhere.
BoltzmannWeight indicator(int order, int modulus, int x, int a, int b);

struct WeightViolation {
    int axiom; // 1 or 2
    int x, y, a, b; // witness (y unused for axiom 1)
    std::string describe() const;
};

// Axiom (i): phi(x, a, a\(x\*x)) = 0 and phi(x, (x\*x)/b, b) = 0 for all x,a,b,
// with \* the left star division and \, / the dot divisions.
// Axiom (ii): phi(x,a,b) + phi(b, x*(a.b), y) + phi(x*(a.b), a, b.([x*(a.b)]*y)...
// the six-term crossing relation checked verbatim over all quadruples.
std::vector<WeightViolation> check_weight(const Biquasile& X, const BoltzmannWeight& w);

// Signed sum of phi over classical crossings (+ for X+, - for X-); marked
// vertices contribute zero. Throws domain_error on an invalid coloring.
int weight_of_coloring(const MarkedGraphDiagram& d, const Biquasile& X,
                       const BoltzmannWeight& w, const Coloring& f,
                       MarkedSchema schema = kDefaultSchema);

struct WeightedInvariant {
    int modulus = 1;
    std::map<int, std::int64_t> multiset; // weight value -> multiplicity

    std::int64_t cardinality() const;
    // Terms in descending exponent, canonical residues 0..m-1; the u^0 term
    // renders as a bare coefficient, e.g. "4u+4".
    std::string polynomial() const;
    bool sub_multiset_of(const WeightedInvariant& o) const;
    bool operator==(const WeightedInvariant&) const = default;
};

WeightedInvariant enhanced_invariant(const MarkedGraphDiagram& d, const Biquasile& X,
                                     const BoltzmannWeight& w,
                                     MarkedSchema schema = kDefaultSchema);

// File format: "order n modulus m" header, then "x a b v" lines for nonzero
// entries.
BoltzmannWeight parse_weight(const std::string& text);
std::string serialize_weight(const BoltzmannWeight& w);

} // namespace bq

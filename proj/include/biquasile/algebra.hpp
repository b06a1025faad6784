#pragma once

#include <functional>
#include <string>
#include <vector>

#include "biquasile/errors.hpp"

namespace bq {

// Operation table of a binary operation on {1..n}; row = left argument.
struct OpTable {
    int order = 0;
    std::vector<int> entries; // row-major, order*order, values in 1..order

    OpTable() = default;
    OpTable(int n, std::vector<int> e) : order(n), entries(std::move(e)) {}

    int at(int x, int y) const { return entries[(x - 1) * order + (y - 1)]; }
    void set(int x, int y, int v) { entries[(x - 1) * order + (y - 1)] = v; }

    bool operator==(const OpTable&) const = default;
};

// Throws domain_error on out-of-range entries (malformed table, distinct from false).
bool validate_latin(const OpTable& t);

// Two quasigroup operations with materialized division tables.
// star_ldiv.at(y, star.at(y, x)) == x, star_rdiv.at(star.at(x, y), y) == x,
// and likewise for dot.
struct Biquasile {
    OpTable star, dot;
    OpTable star_ldiv, star_rdiv, dot_ldiv, dot_rdiv;

    int order() const { return star.order; }

    int s(int x, int y) const { return star.at(x, y); }
    int d(int x, int y) const { return dot.at(x, y); }
    int sl(int y, int z) const { return star_ldiv.at(y, z); } // q with y*q = z
    int sr(int z, int y) const { return star_rdiv.at(z, y); } // q with q*y = z
    int dl(int y, int z) const { return dot_ldiv.at(y, z); }
    int dr(int z, int y) const { return dot_rdiv.at(z, y); }

    bool operator==(const Biquasile& o) const {
        return star == o.star && dot == o.dot;
    }
};

// Witness carried by an exchange-axiom rejection.
struct exchange_error : domain_error {
    int equation; // 1 or 2
    int x, y, a, b;
    exchange_error(int eq, int x_, int y_, int a_, int b_);
};

// Validates both tables, derives divisions, checks the exchange axiom over all
// quadruples. Throws domain_error / exchange_error on failure.
Biquasile make_biquasile(const OpTable& star, const OpTable& dot);

// x*y = -d*s*nn^2*x + nn*y, x.y = d*x + s*y mod N, elements 1..N with N for
// residue 0. Throws domain_error unless d, s, nn are units mod N.
Biquasile alexander_biquasile(int N, int d, int s, int nn);

// Yields every biquasile of the given order, lexicographic on the row-major
// concatenation of star then dot.
void enumerate_biquasiles(int order, const std::function<void(const Biquasile&)>& yield);

// Text block format: "order n" then n rows of 2n integers (star block, dot block).
std::string serialize_matrix(const Biquasile& b);
Biquasile parse_matrix(const std::string& text);

} // namespace bq

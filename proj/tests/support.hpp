#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "biquasile/invariants.hpp"

namespace support {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string fixture_path(const std::string& rel) {
    return std::string(FIXTURE_DIR) + "/" + rel;
}

inline bq::MarkedGraphDiagram load_diagram(const std::string& rel) {
    return bq::parse_diagram(slurp(fixture_path(rel)));
}

inline bq::Biquasile load_algebra(const std::string& rel) {
    return bq::parse_matrix(slurp(fixture_path(rel)));
}

inline bq::BoltzmannWeight load_weight(const std::string& rel) {
    return bq::parse_weight(slurp(fixture_path(rel)));
}

// Every .mgd fixture, table corpus first in column order.
inline std::vector<std::string> all_fixture_files() {
    std::vector<std::string> out;
    for (int i = 1; i <= 14; ++i) {
        static const char* names[] = {"01_2_1",      "02_6_1_0_1",   "03_8_1",
                                      "04_8_1_1_1",  "05_9_1",       "06_9_1_0_1",
                                      "07_10_1",     "08_10_2",      "09_10_3",
                                      "10_10_1_0_1", "11_10_2_0_1",  "12_10_1_1",
                                      "13_10_1_1_1", "14_10_1_0_0_1"};
        out.push_back(std::string("table/") + names[i - 1] + ".mgd");
    }
    for (const char* n :
         {"unknot", "sphere", "unlink2", "torus", "torus_sphere", "torus_stab",
          "hopf_l2a1", "hopf_l2a1_kink", "cobordism_l", "6_1", "9_1_0_1_rev",
          "2_1_kink"})
        out.push_back(std::string(n) + ".mgd");
    return out;
}

// Basis of the space of valid Boltzmann weights X^3 -> Z_m for prime m,
// computed as the nullspace of the axiom relations.
inline std::vector<bq::BoltzmannWeight> weight_basis(const bq::Biquasile& X, int m) {
    const int n = X.order();
    const int cols = n * n * n;
    auto idx = [n](int x, int a, int b) { return ((x - 1) * n + (a - 1)) * n + (b - 1); };
    std::vector<std::vector<int>> rows;
    for (int x = 1; x <= n; ++x)
        for (int a = 1; a <= n; ++a) {
            const int q = X.sl(x, x);
            std::vector<int> r1(cols, 0), r2(cols, 0);
            r1[idx(x, a, X.dl(a, q))] = 1;
            r2[idx(x, X.dr(q, a), a)] = 1;
            rows.push_back(r1);
            rows.push_back(r2);
        }
    auto S = [&](int x, int y) { return X.s(x, y); };
    auto D = [&](int x, int y) { return X.d(x, y); };
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    std::vector<int> r(cols, 0);
                    const int c = S(x, D(a, b));
                    const int bp = S(b, D(x, y));
                    r[idx(x, a, b)] += 1;
                    r[idx(b, c, y)] += 1;
                    r[idx(c, a, S(b, D(c, y)))] += 1;
                    r[idx(b, x, y)] -= 1;
                    r[idx(x, a, bp)] -= 1;
                    r[idx(bp, S(x, D(a, bp)), y)] -= 1;
                    rows.push_back(r);
                }
    for (auto& r : rows)
        for (int& v : r) v = ((v % m) + m) % m;
    // Gaussian elimination mod prime m
    auto inv = [m](int a) {
        int r = 1, base = a % m, e = m - 2;
        while (e) {
            if (e & 1) r = r * base % m;
            base = base * base % m;
            e >>= 1;
        }
        return r;
    };
    std::vector<int> pivots;
    size_t rank = 0;
    for (int col = 0; col < cols && rank < rows.size(); ++col) {
        size_t pr = rank;
        while (pr < rows.size() && rows[pr][col] == 0) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[rank], rows[pr]);
        const int f = inv(rows[rank][col]);
        for (int& v : rows[rank]) v = v * f % m;
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i][col]) {
                const int g = rows[i][col];
                for (int j = 0; j < cols; ++j)
                    rows[i][j] = ((rows[i][j] - g * rows[rank][j]) % m + m) % m;
            }
        pivots.push_back(col);
        ++rank;
    }
    std::vector<bq::BoltzmannWeight> basis;
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        bq::BoltzmannWeight w = bq::zero_weight(n, m);
        w.table[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            w.table[pivots[i]] = ((-rows[i][free]) % m + m) % m;
        basis.push_back(std::move(w));
    }
    return basis;
}

} // namespace support

#include "biquasile/boltzmann.hpp"

#include <sstream>

namespace bq {

BoltzmannWeight& BoltzmannWeight::operator+=(const BoltzmannWeight& o) {
    if (order != o.order || modulus != o.modulus)
        throw domain_error("weight shape mismatch");
    for (size_t i = 0; i < table.size(); ++i)
        table[i] = (table[i] + o.table[i]) % modulus;
    return *this;
}

BoltzmannWeight zero_weight(int order, int modulus) {
    if (order < 1 || modulus < 1) throw domain_error("bad weight dimensions");
    return {order, modulus, std::vector<int>(order * order * order, 0)};
}

BoltzmannWeight indicator(int order, int modulus, int x, int a, int b) {
    BoltzmannWeight w = zero_weight(order, modulus);
    for (int e : {x, a, b})
        if (e < 1 || e > order) throw domain_error("indicator triple out of range");
    w.set(x, a, b, 1);
    return w;
}

std::string WeightViolation::describe() const {
    std::ostringstream out;
    out << "axiom (" << (axiom == 1 ? "i" : "ii") << ") fails at (x";
    if (axiom == 2) out << ",y";
    out << ",a,b)=(" << x;
    if (axiom == 2) out << "," << y;
    out << "," << a << "," << b << ")";
    return out.str();
}

std::vector<WeightViolation> check_weight(const Biquasile& X, const BoltzmannWeight& w) {
    const int n = X.order();
    if (w.order != n) throw domain_error("weight order does not match algebra");
    if ((int)w.table.size() != n * n * n) throw domain_error("weight table not total");
    std::vector<WeightViolation> out;
    const int m = w.modulus;
    auto S = [&](int x, int y) { return X.s(x, y); };
    auto D = [&](int x, int y) { return X.d(x, y); };
    for (int x = 1; x <= n; ++x)
        for (int a = 1; a <= n; ++a) {
            const int q = X.sl(x, x); // x \* x
            if (w.at(x, a, X.dl(a, q)) % m != 0)
                out.push_back({1, x, 0, a, X.dl(a, q)});
            if (w.at(x, X.dr(q, a), a) % m != 0)
                out.push_back({1, x, 0, X.dr(q, a), a});
        }
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    const int c = S(x, D(a, b)); // x*(a.b)
                    const int lhs = w.at(x, a, b) + w.at(b, c, y) +
                                    w.at(c, a, S(b, D(c, y)));
                    const int bp = S(b, D(x, y)); // b*(x.y)
                    const int rhs = w.at(b, x, y) + w.at(x, a, bp) +
                                    w.at(bp, S(x, D(a, bp)), y);
                    if (((lhs - rhs) % m + m) % m != 0)
                        out.push_back({2, x, y, a, b});
                }
    return out;
}

int weight_of_coloring(const MarkedGraphDiagram& d, const Biquasile& X,
                       const BoltzmannWeight& w, const Coloring& f,
                       MarkedSchema schema) {
    if (!check_coloring(d, X, f, schema))
        throw domain_error("assignment is not a valid coloring");
    auto v = [&](int r) { return f.assignment[r - 1]; };
    int total = 0;
    for (const Vertex& vx : d.vertices) {
        if (vx.kind == VertexKind::MarkedVertex) continue;
        const int sign = vx.kind == VertexKind::PositiveCrossing ? 1 : -1;
        total += sign * w.at(v(vx.x), v(vx.a), v(vx.b));
    }
    return ((total % w.modulus) + w.modulus) % w.modulus;
}

std::int64_t WeightedInvariant::cardinality() const {
    std::int64_t total = 0;
    for (const auto& [_, c] : multiset) total += c;
    return total;
}

std::string WeightedInvariant::polynomial() const {
    if (multiset.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = multiset.rbegin(); it != multiset.rend(); ++it) {
        const auto [exp, coeff] = *it;
        if (!first) out << "+";
        first = false;
        if (exp == 0 || coeff != 1) out << coeff;
        if (exp >= 1) out << "u";
        if (exp >= 2) out << "^" << exp;
    }
    return out.str();
}

bool WeightedInvariant::sub_multiset_of(const WeightedInvariant& o) const {
    for (const auto& [v, c] : multiset) {
        auto it = o.multiset.find(v);
        if (it == o.multiset.end() || it->second < c) return false;
    }
    return true;
}

WeightedInvariant enhanced_invariant(const MarkedGraphDiagram& d, const Biquasile& X,
                                     const BoltzmannWeight& w, MarkedSchema schema) {
    WeightedInvariant inv{w.modulus, {}};
    for (const Coloring& f : list_colorings(d, X, schema))
        ++inv.multiset[weight_of_coloring(d, X, w, f, schema)];
    return inv;
}

BoltzmannWeight parse_weight(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0, n = -1, m = -1;
    BoltzmannWeight w;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (n < 0) {
            int ok = tok == "order";
            std::string mk;
            if (!ok || !(ls >> n) || !(ls >> mk) || mk != "modulus" || !(ls >> m) ||
                n < 1 || m < 1)
                throw parse_error("expected 'order n modulus m' header", line_no);
            w = zero_weight(n, m);
            continue;
        }
        int x, a, b, v;
        std::istringstream vs(line);
        if (!(vs >> x >> a >> b >> v))
            throw parse_error("expected 'x a b v' entry", line_no);
        if (x < 1 || x > n || a < 1 || a > n || b < 1 || b > n)
            throw parse_error("triple out of range", line_no);
        w.set(x, a, b, v);
    }
    if (n < 0) throw parse_error("missing 'order n modulus m' header");
    return w;
}

std::string serialize_weight(const BoltzmannWeight& w) {
    std::ostringstream out;
    out << "order " << w.order << " modulus " << w.modulus << "\n";
    for (int x = 1; x <= w.order; ++x)
        for (int a = 1; a <= w.order; ++a)
            for (int b = 1; b <= w.order; ++b)
                if (w.at(x, a, b))
                    out << x << ' ' << a << ' ' << b << ' ' << w.at(x, a, b) << "\n";
    return out.str();
}

} // namespace bq

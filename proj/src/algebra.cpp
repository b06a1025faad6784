#include "biquasile/algebra.hpp"

#include <numeric>
#include <sstream>

namespace bq {

bool validate_latin(const OpTable& t) {
    const int n = t.order;
    if (n <= 0 || (int)t.entries.size() != n * n)
        throw domain_error("malformed table: wrong entry count");
    for (int v : t.entries)
        if (v < 1 || v > n)
            throw domain_error("malformed table: entry " + std::to_string(v) +
                               " out of range 1.." + std::to_string(n));
    std::vector<char> seen(n + 1);
    for (int x = 1; x <= n; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int y = 1; y <= n; ++y)
            if (seen[t.at(x, y)]++) return false;
    }
    for (int y = 1; y <= n; ++y) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int x = 1; x <= n; ++x)
            if (seen[t.at(x, y)]++) return false;
    }
    return true;
}

exchange_error::exchange_error(int eq, int x_, int y_, int a_, int b_)
    : domain_error("exchange axiom equation " + std::to_string(eq) +
                   " fails at (x,y,a,b)=(" + std::to_string(x_) + "," +
                   std::to_string(y_) + "," + std::to_string(a_) + "," +
                   std::to_string(b_) + ")"),
      equation(eq), x(x_), y(y_), a(a_), b(b_) {}

static OpTable left_inverse(const OpTable& t) {
    // ldiv.at(x, t.at(x, y)) = y
    OpTable r(t.order, std::vector<int>(t.order * t.order));
    for (int x = 1; x <= t.order; ++x)
        for (int y = 1; y <= t.order; ++y)
            r.set(x, t.at(x, y), y);
    return r;
}

static OpTable right_inverse(const OpTable& t) {
    // rdiv.at(t.at(x, y), y) = x
    OpTable r(t.order, std::vector<int>(t.order * t.order));
    for (int x = 1; x <= t.order; ++x)
        for (int y = 1; y <= t.order; ++y)
            r.set(t.at(x, y), y, x);
    return r;
}

static bool exchange_holds(const Biquasile& q, int* witness) {
    const int n = q.order();
    auto S = [&](int x, int y) { return q.s(x, y); };
    auto D = [&](int x, int y) { return q.d(x, y); };
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    const int axy = S(a, D(x, y));
                    if (S(a, D(x, S(y, D(a, b)))) !=
                        S(axy, D(x, S(y, D(axy, b))))) {
                        witness[0] = 1; witness[1] = x; witness[2] = y;
                        witness[3] = a; witness[4] = b;
                        return false;
                    }
                    if (S(y, D(axy, b)) !=
                        S(S(y, D(a, b)), D(S(a, D(x, S(y, D(a, b)))), b))) {
                        witness[0] = 2; witness[1] = x; witness[2] = y;
                        witness[3] = a; witness[4] = b;
                        return false;
                    }
                }
    return true;
}

Biquasile make_biquasile(const OpTable& star, const OpTable& dot) {
    if (star.order != dot.order)
        throw domain_error("star and dot tables have different orders");
    if (!validate_latin(star)) throw domain_error("star table is not a Latin square");
    if (!validate_latin(dot)) throw domain_error("dot table is not a Latin square");
    Biquasile q{star, dot,
                left_inverse(star), right_inverse(star),
                left_inverse(dot), right_inverse(dot)};
    int w[5];
    if (!exchange_holds(q, w))
        throw exchange_error(w[0], w[1], w[2], w[3], w[4]);
    return q;
}

Biquasile alexander_biquasile(int N, int d, int s, int nn) {
    if (N < 1) throw domain_error("modulus must be positive");
    auto unit = [N](int u) { return std::gcd(((u % N) + N) % N, N) == 1; };
    for (int u : {d, s, nn})
        if (!unit(u))
            throw domain_error(std::to_string(u) + " is not a unit mod " + std::to_string(N));
    const long long cs = ((-(long long)d * s * nn * nn) % N + N) % N;
    OpTable star(N, std::vector<int>(N * N)), dot(N, std::vector<int>(N * N));
    auto rep = [N](long long v) { int r = (int)(((v % N) + N) % N); return r ? r : N; };
    for (int x = 1; x <= N; ++x)
        for (int y = 1; y <= N; ++y) {
            star.set(x, y, rep(cs * x + (long long)nn * y));
            dot.set(x, y, rep((long long)d * x + (long long)s * y));
        }
    return make_biquasile(star, dot);
}

namespace {

// Fills Latin squares of given order row by row in lexicographic order.
void latin_squares(int n, const std::function<void(const OpTable&)>& yield) {
    OpTable t(n, std::vector<int>(n * n, 0));
    std::vector<unsigned> row_used(n + 1, 0), col_used(n + 1, 0);
    std::function<void(int)> rec = [&](int cell) {
        if (cell == n * n) { yield(t); return; }
        const int r = cell / n + 1, c = cell % n + 1;
        for (int v = 1; v <= n; ++v) {
            const unsigned bit = 1u << v;
            if ((row_used[r] & bit) || (col_used[c] & bit)) continue;
            row_used[r] |= bit; col_used[c] |= bit;
            t.set(r, c, v);
            rec(cell + 1);
            row_used[r] &= ~bit; col_used[c] &= ~bit;
        }
    };
    rec(0);
}

} // namespace

void enumerate_biquasiles(int order, const std::function<void(const Biquasile&)>& yield) {
    if (order < 1) throw domain_error("order must be positive");
    std::vector<OpTable> squares;
    latin_squares(order, [&](const OpTable& t) { squares.push_back(t); });
    for (const OpTable& star : squares)
        for (const OpTable& dot : squares) {
            try {
                yield(make_biquasile(star, dot));
            } catch (const domain_error&) {
            }
        }
}

std::string serialize_matrix(const Biquasile& b) {
    std::ostringstream out;
    const int n = b.order();
    out << "order " << n << "\n";
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y) out << b.star.at(x, y) << ' ';
        for (int y = 1; y <= n; ++y) out << b.dot.at(x, y) << (y == n ? '\n' : ' ');
    }
    return out.str();
}

Biquasile parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0, n = -1;
    std::vector<std::vector<int>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (n < 0) {
            if (tok != "order") throw parse_error("expected 'order n' header", line_no);
            if (!(ls >> n) || n < 1) throw parse_error("bad order value", line_no);
            continue;
        }
        std::vector<int> row;
        std::istringstream vs(line);
        int v;
        while (vs >> v) row.push_back(v);
        if (!vs.eof() && vs.fail()) throw parse_error("non-integer entry", line_no);
        if ((int)row.size() != 2 * n)
            throw parse_error("expected " + std::to_string(2 * n) + " entries, got " +
                              std::to_string(row.size()), line_no);
        for (int e : row)
            if (e < 1 || e > n)
                throw parse_error("entry " + std::to_string(e) + " out of range 1.." +
                                  std::to_string(n), line_no);
        rows.push_back(std::move(row));
    }
    if (n < 0) throw parse_error("missing 'order n' header");
    if ((int)rows.size() != n)
        throw parse_error("expected " + std::to_string(n) + " rows, got " +
                          std::to_string(rows.size()));
    OpTable star(n, std::vector<int>(n * n)), dot(n, std::vector<int>(n * n));
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            star.set(x, y, rows[x - 1][y - 1]);
            dot.set(x, y, rows[x - 1][n + y - 1]);
        }
    return make_biquasile(star, dot); // re-validates
}

} // namespace bq

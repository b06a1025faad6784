#include "biquasile/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <numeric>

namespace bq {

std::int64_t oracle_budget_from_env() {
    if (const char* s = std::getenv("BIQUASILE_ORACLE_BUDGET")) {
        char* end = nullptr;
        const long long v = std::strtoll(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultOracleBudget;
}

namespace {

bool eval_equation(const Equation& e, const Biquasile& X, const std::vector<int>& f) {
    auto v = [&](int r) { return f[r - 1]; };
    switch (e.shape) {
        case EquationShape::StarDot:
            return v(e.z) == X.s(v(e.u), X.d(v(e.v), v(e.w)));
        case EquationShape::DotStar:
            return v(e.z) == X.d(v(e.u), X.s(v(e.v), v(e.w)));
        case EquationShape::Equal:
            return v(e.u) == v(e.z);
    }
    return false;
}

// Solves equation e for the single unbound slot holding region r; other
// slots must be bound in f. Returns the forced value.
int force_value(const Equation& e, int slot, const Biquasile& X, const std::vector<int>& f) {
    auto v = [&](int r) { return f[r - 1]; };
    if (e.shape == EquationShape::Equal)
        return slot == 0 ? v(e.z) : v(e.u);
    const bool sd = e.shape == EquationShape::StarDot;
    // StarDot: z = u*(v.w); DotStar: z = u.(v*w)
    switch (slot) {
        case 0: // u
            return sd ? X.sr(v(e.z), X.d(v(e.v), v(e.w)))
                      : X.dr(v(e.z), X.s(v(e.v), v(e.w)));
        case 1: { // v
            const int q = sd ? X.sl(v(e.u), v(e.z)) : X.dl(v(e.u), v(e.z));
            return sd ? X.dr(q, v(e.w)) : X.sr(q, v(e.w));
        }
        case 2: { // w
            const int q = sd ? X.sl(v(e.u), v(e.z)) : X.dl(v(e.u), v(e.z));
            return sd ? X.dl(v(e.v), q) : X.sl(v(e.v), q);
        }
        default: // z
            return sd ? X.s(v(e.u), X.d(v(e.v), v(e.w)))
                      : X.d(v(e.u), X.s(v(e.v), v(e.w)));
    }
}

int slot_count(const Equation& e) { return e.shape == EquationShape::Equal ? 2 : 4; }

int slot_region(const Equation& e, int slot) {
    return slot == 0 ? e.u : slot == 1 ? e.v : slot == 2 ? e.w : e.z;
}

struct Step {
    int region;
    int eq = -1;   // forcing equation index, -1 for a branching step
    int slot = -1; // slot of `region` in the forcing equation
    std::vector<int> checks; // equations fully bound once this step runs
};

// Static elimination plan; depends only on diagram structure.
std::vector<Step> make_plan(const std::vector<Equation>& eqs, int regions) {
    std::vector<char> bound(regions + 1, 0);
    std::vector<char> used(eqs.size(), 0);
    std::vector<Step> plan;
    auto region_slots = [&](const Equation& e, int r) {
        int cnt = 0;
        if (e.shape == EquationShape::Equal) {
            cnt = (e.u == r) + (e.z == r);
        } else {
            for (int s = 0; s < 4; ++s) cnt += slot_region(e, s) == r;
        }
        return cnt;
    };
    int remaining = regions;
    while (remaining > 0) {
        Step step{0, -1, -1, {}};
        for (size_t i = 0; i < eqs.size() && step.region == 0; ++i) {
            if (used[i]) continue;
            const Equation& e = eqs[i];
            int unbound_region = 0, unbound_slot = -1, unbound_slots = 0;
            for (int s = 0; s < slot_count(e); ++s) {
                const int r = slot_region(e, s == 1 && e.shape == EquationShape::Equal ? 3 : s);
                if (!bound[r]) {
                    ++unbound_slots;
                    unbound_region = r;
                    unbound_slot = e.shape == EquationShape::Equal ? (s == 0 ? 0 : 3)
                                                                   : s;
                }
            }
            if (unbound_slots == 1 && region_slots(e, unbound_region) == 1) {
                step = {unbound_region, (int)i, unbound_slot, {}};
                used[i] = 1;
            }
        }
        if (step.region == 0) { // branch on the lowest unbound region
            for (int r = 1; r <= regions; ++r)
                if (!bound[r]) { step.region = r; break; }
        }
        bound[step.region] = 1;
        --remaining;
        for (size_t i = 0; i < eqs.size(); ++i) {
            if (used[i]) continue;
            const Equation& e = eqs[i];
            bool all = true;
            for (int s = 0; s < slot_count(e); ++s)
                all = all && bound[slot_region(e, e.shape == EquationShape::Equal && s == 1 ? 3 : s)];
            if (all) {
                step.checks.push_back((int)i);
                used[i] = 1;
            }
        }
        plan.push_back(std::move(step));
    }
    return plan;
}

struct Searcher {
    const std::vector<Equation>& eqs;
    const std::vector<Step>& plan;
    const Biquasile& X;
    std::vector<int> f;
    std::int64_t count = 0;
    std::vector<Coloring>* sink = nullptr;

    void run(size_t depth) {
        if (depth == plan.size()) {
            ++count;
            if (sink) sink->push_back({f});
            return;
        }
        const Step& st = plan[depth];
        auto checks_ok = [&] {
            for (int c : st.checks)
                if (!eval_equation(eqs[c], X, f)) return false;
            return true;
        };
        if (st.eq >= 0) {
            f[st.region - 1] = force_value(eqs[st.eq], st.slot, X, f);
            if (checks_ok()) run(depth + 1);
            f[st.region - 1] = 0;
            return;
        }
        for (int v = 1; v <= X.order(); ++v) {
            f[st.region - 1] = v;
            if (checks_ok()) run(depth + 1);
        }
        f[st.region - 1] = 0;
    }
};

} // namespace

std::int64_t count_colorings(const MarkedGraphDiagram& d, const Biquasile& X,
                             MarkedSchema schema, int jobs) {
    const auto eqs = constraints(d, X, schema);
    const auto plan = make_plan(eqs, d.region_count);
    size_t first_branch = plan.size();
    for (size_t i = 0; i < plan.size(); ++i)
        if (plan[i].eq < 0) { first_branch = i; break; }
    if (jobs <= 1 || first_branch == plan.size()) {
        Searcher s{eqs, plan, X, std::vector<int>(d.region_count, 0)};
        s.run(0);
        return s.count;
    }
    // Parallel fan-out over the first branching region's values; the prefix of
    // the plan up to it is all forced steps from an empty assignment, which can
    // only exist if the prefix is empty, so each worker starts from scratch
    // with the branch value pinned.
    std::vector<std::future<std::int64_t>> parts;
    for (int v = 1; v <= X.order(); ++v) {
        parts.push_back(std::async(std::launch::async, [&, v]() -> std::int64_t {
            Searcher s{eqs, plan, X, std::vector<int>(d.region_count, 0)};
            // replay forced prefix, then pin the branch value
            std::function<std::int64_t(size_t)> go = [&](size_t depth) -> std::int64_t {
                if (depth == first_branch) {
                    const Step& st = plan[depth];
                    s.f[st.region - 1] = v;
                    for (int c : st.checks)
                        if (!eval_equation(eqs[c], X, s.f)) return 0;
                    s.count = 0;
                    s.run(depth + 1);
                    return s.count;
                }
                const Step& st = plan[depth];
                s.f[st.region - 1] = force_value(eqs[st.eq], st.slot, X, s.f);
                for (int c : st.checks)
                    if (!eval_equation(eqs[c], X, s.f)) return 0;
                return go(depth + 1);
            };
            return go(0);
        }));
    }
    std::int64_t total = 0;
    for (auto& p : parts) total += p.get();
    return total;
}

std::int64_t oracle_count(const MarkedGraphDiagram& d, const Biquasile& X,
                          MarkedSchema schema, std::int64_t budget) {
    if (budget < 0) budget = oracle_budget_from_env();
    const int n = X.order();
    long double space = 1;
    for (int r = 0; r < d.region_count; ++r) space *= n;
    if (space > (long double)budget)
        throw budget_error("search space " + std::to_string((double)space) +
                           " exceeds oracle budget " + std::to_string(budget));
    const auto eqs = constraints(d, X, schema);
    std::vector<int> f(d.region_count, 1);
    std::int64_t count = 0;
    for (;;) {
        bool ok = true;
        for (const Equation& e : eqs)
            if (!eval_equation(e, X, f)) { ok = false; break; }
        count += ok;
        int i = d.region_count - 1;
        while (i >= 0 && f[i] == n) f[i--] = 1;
        if (i < 0) break;
        ++f[i];
    }
    return count;
}

std::vector<Coloring> list_colorings(const MarkedGraphDiagram& d, const Biquasile& X,
                                     MarkedSchema schema) {
    const auto eqs = constraints(d, X, schema);
    const auto plan = make_plan(eqs, d.region_count);
    std::vector<Coloring> out;
    Searcher s{eqs, plan, X, std::vector<int>(d.region_count, 0), 0, &out};
    s.run(0);
    std::sort(out.begin(), out.end(), [](const Coloring& a, const Coloring& b) {
        return a.assignment < b.assignment;
    });
    return out;
}

bool check_coloring(const MarkedGraphDiagram& d, const Biquasile& X, const Coloring& f,
                    MarkedSchema schema) {
    if ((int)f.assignment.size() != d.region_count) return false;
    for (int v : f.assignment)
        if (v < 1 || v > X.order()) return false;
    for (const Equation& e : constraints(d, X, schema))
        if (!eval_equation(e, X, f.assignment)) return false;
    return true;
}

LinearSystem build_linear_system(const MarkedGraphDiagram& d, int N, int dparam,
                                 int sparam, int nparam, MarkedSchema schema) {
    const Biquasile X = alexander_biquasile(N, dparam, sparam, nparam); // validates units
    auto mod = [N](std::int64_t v) { return ((v % N) + N) % N; };
    const std::int64_t as = mod(-(std::int64_t)dparam * sparam * nparam * nparam);
    const std::int64_t bs = mod(nparam), ad = mod(dparam), bd = mod(sparam);
    LinearSystem sys{N, d.region_count, {}};
    for (const Equation& e : constraints(d, X, schema)) {
        std::vector<std::int64_t> row(d.region_count, 0);
        auto add = [&](int r, std::int64_t c) { row[r - 1] = mod(row[r - 1] + c); };
        switch (e.shape) {
            case EquationShape::StarDot: // z = u*(v.w)
                add(e.u, as); add(e.v, bs * ad); add(e.w, bs * bd); add(e.z, -1);
                break;
            case EquationShape::DotStar: // z = u.(v*w)
                add(e.u, ad); add(e.v, bd * as); add(e.w, bd * bs); add(e.z, -1);
                break;
            case EquationShape::Equal:
                add(e.u, 1); add(e.z, -1);
                break;
        }
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

namespace {

// Diagonalizes the matrix by row/column operations and returns the diagonal.
// All arithmetic is done modulo N: reducing an entry changes nothing in Z/N,
// keeps values small (no overflow), and the count below only needs gcd(d, N).
std::vector<std::int64_t> snf_diagonal(std::vector<std::vector<std::int64_t>> m,
                                       std::int64_t N) {
    const int rows = (int)m.size();
    const int cols = rows ? (int)m[0].size() : 0;
    auto reduce = [&](int t) {
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) m[i][j] = ((m[i][j] % N) + N) % N;
    };
    std::vector<std::int64_t> diag;
    int t = 0;
    while (t < rows && t < cols) {
        reduce(t);
        // smallest nonzero pivot; zero mod N means no constraint
        int pr = -1, pc = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pr < 0 || m[i][j] < m[pr][pc])) {
                    pr = i; pc = j;
                }
        if (pr < 0) break;
        std::swap(m[t], m[pr]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i)
                if (m[i][t] != 0) {
                    const std::int64_t q = m[i][t] / m[t][t];
                    for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                    if (m[i][t] != 0) { std::swap(m[t], m[i]); clean = false; }
                }
            for (int j = t + 1; j < cols; ++j)
                if (m[t][j] != 0) {
                    const std::int64_t q = m[t][j] / m[t][t];
                    for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                    if (m[t][j] != 0) {
                        for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                        clean = false;
                    }
                }
            reduce(t + 1);
        }
        diag.push_back(m[t][t]);
        ++t;
    }
    return diag;
}

} // namespace

std::int64_t count_solutions_linear(const LinearSystem& sys) {
    const auto diag = snf_diagonal(sys.rows, sys.modulus);
    std::int64_t count = 1;
    for (int i = 0; i < sys.variables - (int)diag.size(); ++i) count *= sys.modulus;
    for (std::int64_t dv : diag) count *= std::gcd(dv, (std::int64_t)sys.modulus);
    return count;
}

} // namespace bq

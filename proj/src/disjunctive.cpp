#include "disjdom/disjunctive.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "disjdom/isomorphism.hpp"

namespace disjdom {

bool is_2d_dominated(const Graph& g, const Bitset& s, int v) {
    if (s.size() != g.order()) throw std::invalid_argument("vertex set not tied to this graph");
    if (v < 0 || v >= g.order()) throw std::out_of_range("is_2d_dominated: vertex out of range");
    if (s.test(v)) return true;
    if (g.neighbors(v).intersects(s)) return true;
    return g.distance2(v).count_and(s) >= 2;
}

bool is_2dd_set(const Graph& g, const Bitset& s) {
    if (s.size() != g.order()) throw std::invalid_argument("vertex set not tied to this graph");
    for (int v = 0; v < g.order(); ++v) {
        if (s.test(v)) continue;
        if (g.neighbors(v).intersects(s)) continue;
        if (g.distance2(v).count_and(s) < 2) return false;
    }
    return true;
}

CoverageState compute_coverage(const Graph& g, const Bitset& s) {
    CoverageState cs;
    cs.status.resize(g.order());
    cs.witness_count.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
        cs.witness_count[v] = g.distance2(v).count_and(s);
        if (s.test(v))
            cs.status[v] = CoverStatus::InSet;
        else if (g.neighbors(v).intersects(s))
            cs.status[v] = CoverStatus::AdjacentCovered;
        else if (cs.witness_count[v] >= 2)
            cs.status[v] = CoverStatus::DisjunctiveCovered;
        else if (cs.witness_count[v] == 1)
            cs.status[v] = CoverStatus::OneWitness;
        else
            cs.status[v] = CoverStatus::Uncovered;
    }
    return cs;
}

Fingerprint fingerprint(const Graph& g) { return {g.order(), graph_fingerprint(g)}; }

Certificate make_certificate(const Graph& g, const Bitset& s) {
    Certificate c;
    c.graph = fingerprint(g);
    c.set = s;
    c.size = s.count();
    c.verified = is_2dd_set(g, s);
    return c;
}

std::string Certificate::to_record(const Graph& g) const {
    std::ostringstream out;
    out << to_graph6(g) << '\t' << size << '\t';
    bool sep = false;
    set.for_each([&](int v) {
        if (sep) out << ' ';
        out << v;
        sep = true;
    });
    out << '\t' << (verified ? 1 : 0);
    return out.str();
}

Certificate parse_certificate_record(const std::string& line, Graph* graph_out) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        fields.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    if (fields.size() != 4) throw std::invalid_argument("certificate record needs 4 tab-separated fields");
    Graph g = parse_graph6(fields[0]);
    Bitset s(g.order());
    std::istringstream vs(fields[2]);
    int v;
    while (vs >> v) s.set(v);
    Certificate c = make_certificate(g, s);
    int claimed = std::stoi(fields[1]);
    if (claimed != c.size) throw std::invalid_argument("certificate record size mismatch");
    if (graph_out) *graph_out = std::move(g);
    return c;
}

bool has_dominating_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) return true;
    return false;
}

int gamma_d2_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gamma_d2_cycle: n must be >= 3");
    if (n == 4) return 2;
    return (n + 3) / 4;
}

Bitset gamma_d2_cycle_set(int n) {
    int k = gamma_d2_cycle(n);
    Bitset s(n);
    if (n == 4) {
        s.set(0);
        s.set(2);
        return s;
    }
    for (int i = 0; i < k; ++i) s.set(4 * i);
    return s;
}

// --- exact solver ------------------------------------------------------------

namespace {

struct Searcher {
    const Graph& g;
    int n;
    Bitset in_set, forbidden, adjcov;
    std::vector<int> wit;       // distance-2 witnesses from the current set
    std::vector<int> chosen;
    std::uint64_t nodes = 0;
    std::uint64_t node_limit = 0;
    bool aborted = false;

    // scratch
    std::vector<int> tokens;

    explicit Searcher(const Graph& graph)
        : g(graph), n(graph.order()), in_set(n), forbidden(n), adjcov(n), wit(n, 0) {}

    bool covered(int v) const {
        return in_set.test(v) || adjcov.test(v) || wit[v] >= 2;
    }

    void apply(int c) {
        in_set.set(c);
        chosen.push_back(c);
        g.distance2(c).for_each([&](int w) { ++wit[w]; });
    }

    void undo(int c) {
        in_set.reset(c);
        chosen.pop_back();
        g.distance2(c).for_each([&](int w) { --wit[w]; });
    }

    // Sound lower bound on how many more vertices any extension needs.
    int lower_bound(const std::vector<int>& unc) {
        int total_deficit = 0;
        for (int v : unc) total_deficit += 2 - wit[v];

        // fractional multicover: each new u supplies deficit(v) units to
        // adjacent uncovered v and one unit per distance-2 uncovered v
        tokens.clear();
        Bitset uncmask(n);
        for (int v : unc) uncmask.set(v);
        Bitset unc_def2(n);
        for (int v : unc)
            if (wit[v] == 0) unc_def2.set(v);
        for (int u = 0; u < n; ++u) {
            if (in_set.test(u) || forbidden.test(u)) continue;
            int t = g.neighbors(u).count_and(uncmask) + g.neighbors(u).count_and(unc_def2) +
                    g.distance2(u).count_and(uncmask);
            if (uncmask.test(u)) t += unc_def2.test(u) ? 2 : 1;  // u covers itself
            if (t > 0) tokens.push_back(t);
        }
        std::sort(tokens.begin(), tokens.end(), std::greater<int>());
        int frac = 0, acc = 0;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            acc += tokens[i];
            if (acc >= total_deficit) {
                frac = static_cast<int>(i) + 1;
                break;
            }
        }
        if (acc < total_deficit) return n + 1;  // cannot be covered at all

        // disjoint candidate packing: uncovered vertices with pairwise
        // disjoint candidate sets each demand a distinct new vertex
        Bitset used(n);
        int pack = 0;
        for (int v : unc) {
            Bitset cand = g.neighbors(v) | g.distance2(v);
            cand.set(v);
            cand.subtract(forbidden);
            cand.subtract(in_set);
            if (cand.none()) return n + 1;  // v can never be covered
            if (!cand.intersects(used)) {
                ++pack;
                used |= cand;
            }
        }
        return std::max(frac, pack);
    }

    bool search(int k) {
        if (aborted) return false;
        if (node_limit && ++nodes > node_limit) {
            aborted = true;
            return false;
        }

        std::vector<int> unc;
        for (int v = 0; v < n; ++v)
            if (!covered(v)) unc.push_back(v);
        if (unc.empty()) return true;

        int r = k - static_cast<int>(chosen.size());
        if (r <= 0) return false;
        if (lower_bound(unc) > r) return false;

        // branch on the uncovered vertex with fewest available candidates
        int best_v = -1;
        long best_count = -1;
        Bitset best_cand(n);
        for (int v : unc) {
            Bitset cand = g.neighbors(v) | g.distance2(v);
            cand.set(v);
            cand.subtract(forbidden);
            cand.subtract(in_set);
            int c = cand.count();
            if (best_v < 0 || c < best_count) {
                best_v = v;
                best_count = c;
                best_cand = cand;
                if (c == 0) return false;
            }
        }

        std::vector<int> added_forbidden;
        bool found = false;
        Bitset saved_adjcov = adjcov;
        best_cand.for_each([&](int c) {
            if (found || aborted) return;
            apply(c);
            adjcov |= g.neighbors(c);
            if (search(k)) {
                found = true;
                return;  // keep state: chosen holds the solution
            }
            undo(c);
            adjcov = saved_adjcov;
            forbidden.set(c);
            added_forbidden.push_back(c);
        });
        for (int c : added_forbidden) forbidden.reset(c);
        return found;
    }

    int root_lower_bound() {
        std::vector<int> unc;
        for (int v = 0; v < n; ++v)
            if (!covered(v)) unc.push_back(v);
        if (unc.empty()) return 0;
        int lb = lower_bound(unc);
        return std::max(lb, 1);
    }
};

// Exact solve of one connected (or any) graph without component splitting.
SolveResult solve_whole(const Graph& g, int budget, std::uint64_t node_limit, bool minimum) {
    Searcher s(g);
    s.node_limit = node_limit;
    int lo = minimum ? s.root_lower_bound() : budget;
    if (lo > budget) return {SolveStatus::BudgetExceeded, std::nullopt};
    for (int k = lo; k <= budget; ++k) {
        Searcher fresh(g);
        fresh.node_limit = node_limit;
        if (fresh.search(k)) {
            Bitset set(g.order());
            for (int c : fresh.chosen) set.set(c);
            return {SolveStatus::Optimal, make_certificate(g, set)};
        }
        if (fresh.aborted) return {SolveStatus::BudgetExceeded, std::nullopt};
        if (!minimum) break;
    }
    return {SolveStatus::BudgetExceeded, std::nullopt};
}

}  // namespace

SolveResult gamma_d2(const Graph& g, const SolveOptions& opts) {
    if (g.order() == 0) throw std::invalid_argument("gamma_d2: empty graph");
    int budget = opts.budget.value_or(g.order());
    if (budget < 0) throw std::invalid_argument("gamma_d2: negative budget");

    std::vector<int> comp;
    int nc = g.components(comp);
    if (nc == 1) return solve_whole(g, budget, opts.node_limit, true);

    // gamma is additive over components; distance-2 witnesses cannot cross
    Bitset total(g.order());
    int used = 0;
    for (int c = 0; c < nc; ++c) {
        Bitset verts(g.order());
        std::vector<int> back;
        for (int v = 0; v < g.order(); ++v)
            if (comp[v] == c) {
                verts.set(v);
                back.push_back(v);
            }
        Graph sub = g.induced(verts);
        SolveResult r = solve_whole(sub, std::min(budget - used, sub.order()), opts.node_limit, true);
        if (!r.ok()) return {SolveStatus::BudgetExceeded, std::nullopt};
        r.cert().set.for_each([&](int v) { total.set(back[v]); });
        used += r.cert().size;
        if (used > budget) return {SolveStatus::BudgetExceeded, std::nullopt};
    }
    return {SolveStatus::Optimal, make_certificate(g, total)};
}

int gamma_d2_value(const Graph& g) {
    SolveResult r = gamma_d2(g);
    if (!r.ok()) throw std::runtime_error("gamma_d2_value: budget exceeded");
    return r.cert().size;
}

SolveResult find_2dd_set_within(const Graph& g, int k, std::uint64_t node_limit) {
    if (g.order() == 0) throw std::invalid_argument("find_2dd_set_within: empty graph");
    if (k < 0) return {SolveStatus::BudgetExceeded, std::nullopt};
    Searcher s(g);
    s.node_limit = node_limit;
    if (s.search(std::min(k, g.order()))) {
        Bitset set(g.order());
        for (int c : s.chosen) set.set(c);
        return {SolveStatus::Optimal, make_certificate(g, set)};
    }
    return {SolveStatus::BudgetExceeded, std::nullopt};
}

}  // namespace disjdom

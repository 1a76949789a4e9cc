#include "disjdom/enumeration.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "disjdom/isomorphism.hpp"
#include "disjdom/structure.hpp"

namespace disjdom {

namespace {

// Packed canonical codes use pair order (0,1),(0,2),...,(1,2),... with the
// first pair in the most significant bit (matching canonical_code_rows).
void decode_code(std::uint64_t code, int n, std::uint32_t* rows) {
    for (int v = 0; v < n; ++v) rows[v] = 0;
    int pairs = n * (n - 1) / 2;
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx) {
            if ((code >> (pairs - 1 - idx)) & 1) {
                rows[i] |= std::uint32_t(1) << j;
                rows[j] |= std::uint32_t(1) << i;
            }
        }
}

bool rows_claw_free(int n, const std::uint32_t* rows) {
    for (int v = 0; v < n; ++v) {
        std::uint32_t nv = rows[v];
        for (std::uint32_t ub = nv; ub;) {
            int u = __builtin_ctz(ub);
            ub &= ub - 1;
            for (std::uint32_t wb = ub; wb;) {
                int w = __builtin_ctz(wb);
                wb &= wb - 1;
                if (rows[u] & (std::uint32_t(1) << w)) continue;
                std::uint32_t rest = nv & ~rows[u] & ~rows[w] &
                                     ~(std::uint32_t(1) << u) & ~(std::uint32_t(1) << w);
                if (rest) return false;
            }
        }
    }
    return true;
}

Graph graph_from_rows(int n, const std::uint32_t* rows) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rows[i] & (std::uint32_t(1) << j)) e.emplace_back(i, j);
    return Graph(n, e);
}

void enumerate_exhaustive(const GenSpec& spec, const std::function<void(const Graph&)>& sink) {
    if (!spec.connected)
        throw std::invalid_argument("exhaustive enumeration supports connected graphs only");
    if (spec.n > spec.hard_cap)
        throw std::invalid_argument("exhaustive enumeration capped at n = " +
                                    std::to_string(spec.hard_cap));
    if (spec.n < 1) return;
    if (spec.n == 1) {
        if (!spec.min_degree2) sink(Graph(1));
        return;
    }

    std::array<std::uint32_t, 16> rows{};
    std::vector<std::uint64_t> level{canonical_code_rows(1, rows.data())};

    for (int k = 1; k < spec.n; ++k) {
        const bool final_level = (k + 1 == spec.n);
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> next;

        for (std::uint64_t parent : level) {
            decode_code(parent, k, rows.data());

            // Degree-2 feasibility at the last step: the new vertex must cover
            // every degree-<=1 parent vertex and itself have degree >= 2.
            std::uint32_t required = 0;
            if (final_level && spec.min_degree2) {
                for (int v = 0; v < k; ++v)
                    if (__builtin_popcount(rows[v]) <= 1) required |= std::uint32_t(1) << v;
            }
            const std::uint32_t full = (std::uint32_t(1) << k) - 1;
            const std::uint32_t free_bits = full & ~required;

            // iterate subsets of free_bits, OR required
            std::uint32_t sub = free_bits;
            while (true) {
                std::uint32_t s = sub | required;
                sub = (sub - 1) & free_bits;
                bool last = (s == required);
                if (s != 0) {
                    if (!final_level || !spec.min_degree2 || __builtin_popcount(s) >= 2) {
                        rows[k] = s;
                        for (int v = 0; v < k; ++v)
                            if (s & (std::uint32_t(1) << v)) rows[v] |= std::uint32_t(1) << k;

                        bool ok = true;
                        if (spec.claw_free && !rows_claw_free(k + 1, rows.data())) ok = false;
                        if (ok) {
                            std::uint64_t code = canonical_code_rows(k + 1, rows.data());
                            if (seen.insert(code).second) next.push_back(code);
                        }
                        for (int v = 0; v < k; ++v)
                            rows[v] &= ~(std::uint32_t(1) << k);
                    }
                }
                if (last) break;
            }
            rows[k] = 0;
        }
        level = std::move(next);
    }

    std::array<std::uint32_t, 16> out{};
    for (std::uint64_t code : level) {
        decode_code(code, spec.n, out.data());
        if (spec.min_degree2) {
            bool ok = true;
            for (int v = 0; v < spec.n; ++v)
                if (__builtin_popcount(out[v]) < 2) ok = false;
            if (!ok) continue;
        }
        sink(graph_from_rows(spec.n, out.data()));
    }
}

}  // namespace

void enumerate(const GenSpec& spec, const std::function<void(const Graph&)>& sink) {
    if (spec.mode == GenSpec::Mode::Exhaustive) {
        enumerate_exhaustive(spec, sink);
        return;
    }
    SplitMix64 rng(spec.seed);
    for (int i = 0; i < spec.count; ++i) {
        int m = spec.edges_min >= spec.edges_max ? spec.edges_min
                                                 : rng.range(spec.edges_min, spec.edges_max);
        Graph g = random_min_deg2(spec.n, m, rng.next());
        if (spec.claw_free && !is_claw_free(g)) {
            --i;  // resample; claw-free random sampling is rejection-based
            continue;
        }
        sink(g);
    }
}

Graph random_min_deg2(int n, int m, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_min_deg2: n must be >= 3");
    long long maxm = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n || m > maxm) throw std::invalid_argument("random_min_deg2: infeasible edge count");

    SplitMix64 rng(seed);

    for (int attempt = 0; attempt < 24; ++attempt) {
        GraphBuilder b(n);
        std::vector<int> deg(n, 0);
        int edges = 0;
        auto add = [&](int u, int v) {
            b.add_edge(u, v);
            ++deg[u];
            ++deg[v];
            ++edges;
        };

        // random recursive tree
        for (int v = 1; v < n; ++v) add(v, static_cast<int>(rng.below(v)));

        // repair degree-deficient vertices, pairing them up when possible
        while (true) {
            std::vector<int> deficient;
            for (int v = 0; v < n; ++v)
                if (deg[v] < 2) deficient.push_back(v);
            if (deficient.empty()) break;
            int v = deficient[0];
            std::vector<int> partners;
            for (int u : deficient)
                if (u != v && !b.has_edge(u, v)) partners.push_back(u);
            if (partners.empty()) {
                for (int u = 0; u < n; ++u)
                    if (u != v && !b.has_edge(u, v)) partners.push_back(u);
            }
            add(v, partners[rng.below(partners.size())]);
        }

        if (edges > m) continue;  // overshoot; retry with fresh randomness

        // top up with uniformly random non-edges
        while (edges < m) {
            int u = static_cast<int>(rng.below(n));
            int v = static_cast<int>(rng.below(n));
            if (u == v || b.has_edge(u, v)) continue;
            add(u, v);
        }
        return b.build();
    }

    // guaranteed fallback: random cycle plus random chords
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(perm[i], perm[(i + 1) % n]);
    int edges = n;
    while (edges < m) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v || b.has_edge(u, v)) continue;
        b.add_edge(u, v);
        ++edges;
    }
    return b.build();
}

}  // namespace disjdom

#pragma once

// Test-only oracles, kept independent of the library implementation paths
// they check: distances come from a fresh BFS, graph6 decoding is re-done
// bit by bit, and canonical codes / automorphisms come from full permutation
// sweeps.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "disjdom/graph.hpp"

namespace oracles {

struct MaskGraph {
    int n = 0;
    std::vector<std::uint32_t> nbr;  // distance 1
    std::vector<std::uint32_t> d2;   // distance exactly 2
};

inline MaskGraph mask_graph(const disjdom::Graph& g) {
    int n = g.order();
    if (n > 20) throw std::invalid_argument("oracle limited to n <= 20");
    MaskGraph m;
    m.n = n;
    m.nbr.assign(n, 0);
    m.d2.assign(n, 0);
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int u = 0; u < n; ++u)
                if (g.has_edge(v, u) && dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (dist[v] == 1) m.nbr[s] |= std::uint32_t(1) << v;
            if (dist[v] == 2) m.d2[s] |= std::uint32_t(1) << v;
        }
    }
    return m;
}

inline bool mask_is_2dd(const MaskGraph& m, std::uint32_t mask) {
    for (int v = 0; v < m.n; ++v) {
        if ((mask >> v) & 1) continue;
        if (m.nbr[v] & mask) continue;
        if (__builtin_popcount(m.d2[v] & mask) >= 2) continue;
        return false;
    }
    return true;
}

inline int brute_gamma_d2(const disjdom::Graph& g) {
    MaskGraph m = mask_graph(g);
    int best = m.n;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m.n); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc >= best) continue;
        if (mask_is_2dd(m, mask)) best = pc;
    }
    return best;
}

inline int brute_domination(const disjdom::Graph& g) {
    MaskGraph m = mask_graph(g);
    int best = m.n;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m.n); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc >= best) continue;
        bool ok = true;
        for (int v = 0; v < m.n && ok; ++v)
            if (!((mask >> v) & 1) && !(m.nbr[v] & mask)) ok = false;
        if (ok) best = pc;
    }
    return best;
}

// graph6 decode, redone from the published format rules
inline std::pair<int, std::vector<std::pair<int, int>>> independent_g6_decode(
    const std::string& s) {
    std::vector<int> vals;
    for (char c : s) vals.push_back(static_cast<unsigned char>(c) - 63);
    if (vals.empty() || vals[0] == 63) throw std::invalid_argument("oracle: big-header input");
    int n = vals[0];
    auto bit = [&](int b) { return (vals[1 + b / 6] >> (5 - b % 6)) & 1; };
    std::vector<std::pair<int, int>> edges;
    int b = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++b)
            if (bit(b)) edges.emplace_back(row, col);
    return {n, edges};
}

inline std::uint64_t pack_perm_code(const disjdom::Graph& g, const std::vector<int>& p) {
    int n = g.order();
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            code = (code << 1) | (g.has_edge(p[i], p[j]) ? 1 : 0);
    return (std::uint64_t(n) << 50) | code;
}

inline std::uint64_t brute_canonical_code(const disjdom::Graph& g) {
    int n = g.order();
    if (n > 8) throw std::invalid_argument("brute canonical limited to n <= 8");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t best = 0;
    do {
        best = std::max(best, pack_perm_code(g, p));
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline std::vector<std::vector<int>> brute_orbits(const disjdom::Graph& g) {
    int n = g.order();
    if (n > 8) throw std::invalid_argument("brute orbits limited to n <= 8");
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool aut = true;
        for (int i = 0; i < n && aut; ++i)
            for (int j = i + 1; j < n && aut; ++j)
                if (g.has_edge(i, j) != g.has_edge(p[i], p[j])) aut = false;
        if (aut)
            for (int i = 0; i < n; ++i)
                if (find(i) != find(p[i])) parent[find(p[i])] = find(i);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<int>> orbits;
    std::vector<int> where(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (where[r] < 0) {
            where[r] = static_cast<int>(orbits.size());
            orbits.emplace_back();
        }
        orbits[where[r]].push_back(v);
    }
    return orbits;
}

// count of automorphisms, for labeled-vs-unlabeled consistency checks
inline long long automorphism_count(const disjdom::Graph& g) {
    int n = g.order();
    if (n > 9) throw std::invalid_argument("automorphism_count limited to n <= 9");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    long long count = 0;
    do {
        bool aut = true;
        for (int i = 0; i < n && aut; ++i)
            for (int j = i + 1; j < n && aut; ++j)
                if (g.has_edge(i, j) != g.has_edge(p[i], p[j])) aut = false;
        if (aut) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

// Scans all labeled graphs on n vertices; pred receives adjacency rows.
template <typename Pred>
long long labeled_count(int n, Pred&& pred) {
    int pairs = n * (n - 1) / 2;
    if (pairs > 24) throw std::invalid_argument("labeled scan limited to 24 edge slots");
    long long count = 0;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<std::uint32_t> rows(n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << pairs); ++mask) {
        std::fill(rows.begin(), rows.end(), 0);
        for (int b = 0; b < pairs; ++b)
            if ((mask >> b) & 1) {
                rows[slots[b].first] |= std::uint32_t(1) << slots[b].second;
                rows[slots[b].second] |= std::uint32_t(1) << slots[b].first;
            }
        if (pred(rows)) ++count;
    }
    return count;
}

inline bool rows_connected(const std::vector<std::uint32_t>& rows) {
    int n = static_cast<int>(rows.size());
    if (n == 0) return true;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1) next |= rows[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (std::uint32_t(1) << n) - 1;
}

inline bool rows_min_deg2(const std::vector<std::uint32_t>& rows) {
    for (auto r : rows)
        if (__builtin_popcount(r) < 2) return false;
    return true;
}

}  // namespace oracles

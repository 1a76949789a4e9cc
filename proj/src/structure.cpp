#include "disjdom/structure.hpp"

#include <algorithm>
#include <functional>

namespace disjdom {

namespace {

void find_cuts(const Graph& g, std::vector<int>& cut_vertices,
               std::vector<std::pair<int, int>>& cut_edges) {
    int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<bool> is_cut(n, false);
    int timer = 0;

    // iterative DFS with child counting for the root rule
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<std::pair<int, int>> stack;  // (vertex, next neighbor to scan)
        stack.emplace_back(root, -1);
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            auto& [v, last] = stack.back();
            int u = g.neighbors(v).next(last);
            if (u < 0) {
                stack.pop_back();
                int p = parent[v];
                if (p >= 0) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) cut_edges.emplace_back(std::min(p, v), std::max(p, v));
                    if (p != root && low[v] >= disc[p]) is_cut[p] = true;
                }
                continue;
            }
            last = u;
            if (disc[u] < 0) {
                parent[u] = v;
                if (v == root) ++root_children;
                disc[u] = low[u] = timer++;
                stack.emplace_back(u, -1);
            } else if (u != parent[v]) {
                low[v] = std::min(low[v], disc[u]);
            }
        }
        if (root_children >= 2) is_cut[root] = true;
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) cut_vertices.push_back(v);
    std::sort(cut_edges.begin(), cut_edges.end());
}

// Walks from `from` through degree-2 vertices starting at `start`; returns the
// chain of degree-2 vertices and the terminating vertex (-1 when the walk
// closes back on `from`).
std::pair<std::vector<int>, int> walk_chain(const Graph& g, int from, int start) {
    std::vector<int> chain;
    int prev = from, cur = start;
    while (g.degree(cur) == 2) {
        chain.push_back(cur);
        int nxt = -1;
        g.neighbors(cur).for_each([&](int w) {
            if (w != prev) nxt = w;
        });
        if (nxt == from) return {chain, -1};
        prev = cur;
        cur = nxt;
    }
    return {chain, cur};
}

}  // namespace

StructureReport structure_report(const Graph& g) {
    return structure_report(g, {});
}

StructureReport structure_report(const Graph& g,
                                 const std::function<std::string(const Graph&)>& core_namer) {
    StructureReport rep;
    const int n = g.order();

    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) rep.leaves.push_back(v);
    for (int v = 0; v < n; ++v) {
        bool support = false;
        g.neighbors(v).for_each([&](int u) {
            if (g.degree(u) == 1) support = true;
        });
        if (support) rep.support_vertices.push_back(v);
    }

    find_cuts(g, rep.cut_vertices, rep.cut_edges);

    // Maximal linkages: chains of degree-2 vertices between non-degree-2
    // endpoints; a chain closing on its own endpoint is an attached cycle and
    // a fully degree-2 component is a bare cycle.
    std::vector<bool> seen(n, false);
    for (int v = 0; v < n; ++v) {
        if (seen[v] || g.degree(v) != 2) continue;
        int n0 = g.neighbors(v).first();
        int n1 = g.neighbors(v).next(n0);

        auto [left, aEnd] = walk_chain(g, v, n0);
        if (aEnd < 0) {
            // walk closed back on v through degree-2 vertices only: the
            // component is a bare cycle
            std::vector<int> cyc{v};
            cyc.insert(cyc.end(), left.begin(), left.end());
            for (int u : cyc) seen[u] = true;
            rep.cycle_components.push_back(std::move(cyc));
            continue;
        }
        auto [right, bEnd] = walk_chain(g, v, n1);
        if (bEnd < 0) continue;  // unreachable once aEnd >= 0

        Linkage l;
        std::vector<int> internal;
        internal.insert(internal.end(), left.rbegin(), left.rend());
        internal.push_back(v);
        internal.insert(internal.end(), right.begin(), right.end());
        l.a = aEnd;
        l.b = bEnd;
        if (l.b < l.a) {
            std::swap(l.a, l.b);
            std::reverse(internal.begin(), internal.end());
        }
        l.internal = std::move(internal);
        for (int u : l.internal) seen[u] = true;
        rep.linkages.push_back(std::move(l));
    }

    // Attached cycles were recorded as linkages with a == b; those hanging at
    // a vertex of degree >= 4 are pendant cycles.
    for (const Linkage& l : rep.linkages) {
        if (l.a != l.b || g.degree(l.a) < 4) continue;
        PendantCycle pc;
        pc.attachment = l.a;
        pc.cycle.push_back(l.a);
        pc.cycle.insert(pc.cycle.end(), l.internal.begin(), l.internal.end());
        pc.length = static_cast<int>(pc.cycle.size());
        rep.pendant_cycles.push_back(std::move(pc));
    }

    // Special pendant pieces: components of G - x joined to x by one edge,
    // shaped as a degree-2 tail leading to a cycle (tadpole C_{r,k} with leaf
    // x) or, when a namer is supplied, to a recognized catalog core.
    for (int x = 0; x < n; ++x) {
        if (g.degree(x) < 3) continue;
        Bitset rest(n);
        rest.set_all();
        rest.reset(x);
        Graph gx = g.induced(rest);
        // map: gx labels -> g labels
        std::vector<int> back;
        back.reserve(n - 1);
        for (int v = 0; v < n; ++v)
            if (v != x) back.push_back(v);

        std::vector<int> comp;
        int nc = gx.components(comp);
        std::vector<int> join_count(nc, 0);
        std::vector<int> join_vertex(nc, -1);
        g.neighbors(x).for_each([&](int w) {
            int wi = static_cast<int>(std::lower_bound(back.begin(), back.end(), w) - back.begin());
            ++join_count[comp[wi]];
            join_vertex[comp[wi]] = w;
        });
        for (int c = 0; c < nc; ++c) {
            if (join_count[c] != 1) continue;
            std::vector<int> piece;
            for (std::size_t i = 0; i < back.size(); ++i)
                if (comp[i] == c) piece.push_back(back[i]);
            auto [tail, u] = walk_chain(g, x, join_vertex[c]);
            if (u < 0) continue;  // closed back on x: attached cycle, handled above
            if (g.degree(u) < 3) continue;  // pendant path, not a gadget
            std::vector<int> core;
            for (int v : piece)
                if (std::find(tail.begin(), tail.end(), v) == tail.end()) core.push_back(v);

            PendantPiece pp;
            pp.attachment = x;
            pp.internal = piece;
            pp.tail = tail;
            pp.core = core;

            bool cycle_core = true;
            for (int v : core) {
                int within = 0;
                g.neighbors(v).for_each([&](int w) {
                    if (std::find(core.begin(), core.end(), w) != core.end()) ++within;
                });
                if (within != 2) cycle_core = false;
                if (v != u && g.degree(v) != 2) cycle_core = false;
            }
            if (cycle_core && core.size() >= 3) {
                pp.gadget = "C_{" + std::to_string(core.size()) + "," +
                            std::to_string(tail.size() + 1) + "}";
                rep.special_pendants.push_back(std::move(pp));
            } else if (core_namer) {
                Bitset cb(n);
                for (int v : core) cb.set(v);
                std::string name = core_namer(g.induced(cb));
                if (!name.empty()) {
                    pp.gadget = name + "+path" + std::to_string(tail.size() + 1);
                    rep.special_pendants.push_back(std::move(pp));
                }
            }
        }
    }

    return rep;
}

bool is_claw_free(const Graph& g) {
    int n = g.order();
    for (int v = 0; v < n; ++v) {
        const Bitset& nv = g.neighbors(v);
        std::vector<int> nb = nv.to_vector();
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], w = nb[j];
                if (g.has_edge(u, w)) continue;
                Bitset rem = nv;
                rem.subtract(g.neighbors(u));
                rem.subtract(g.neighbors(w));
                rem.reset(u);
                rem.reset(w);
                if (rem.any()) return false;
            }
        }
    }
    return true;
}

bool has_induced_c4(const Graph& g) {
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            Bitset common = g.neighbors(u);
            common &= g.neighbors(v);
            if (common.count() < 2) continue;
            bool found = false;
            common.for_each([&](int a) {
                if (found) return;
                Bitset rest = common;
                rest.subtract(g.neighbors(a));
                rest.reset(a);
                if (rest.any()) found = true;
            });
            if (found) return true;
        }
    return false;
}

}  // namespace disjdom

#include "disjdom/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace disjdom {

namespace {

// Iterated neighborhood refinement over one or two graphs with a shared
// signature table, so color ids are comparable across graphs.
std::vector<std::vector<int>> joint_refine(const std::vector<const Graph*>& graphs) {
    std::vector<std::vector<int>> colors;
    for (auto* g : graphs) colors.emplace_back(g->order(), 0);

    int classes = 1;
    while (true) {
        // signature = (own color, sorted neighbor colors)
        std::vector<std::vector<int>> sigs;
        for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
            const Graph& g = *graphs[gi];
            for (int v = 0; v < g.order(); ++v) {
                std::vector<int> sig;
                sig.push_back(colors[gi][v]);
                std::vector<int> nb;
                g.neighbors(v).for_each([&](int u) { nb.push_back(colors[gi][u]); });
                std::sort(nb.begin(), nb.end());
                sig.insert(sig.end(), nb.begin(), nb.end());
                sigs.push_back(std::move(sig));
            }
        }
        std::vector<std::vector<int>> uniq = sigs;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        int next_classes = static_cast<int>(uniq.size());

        std::size_t idx = 0;
        for (std::size_t gi = 0; gi < graphs.size(); ++gi)
            for (int v = 0; v < graphs[gi]->order(); ++v, ++idx)
                colors[gi][v] = static_cast<int>(
                    std::lower_bound(uniq.begin(), uniq.end(), sigs[idx]) - uniq.begin());

        if (next_classes == classes) break;
        classes = next_classes;
    }
    return colors;
}

bool extend_mapping(const Graph& g, const Graph& h, const std::vector<int>& order,
                    std::size_t pos, std::vector<int>& map, std::vector<bool>& used,
                    const std::vector<int>& cg, const std::vector<int>& ch) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < h.order(); ++w) {
        if (used[w] || ch[w] != cg[v]) continue;
        bool ok = true;
        for (std::size_t i = 0; i < pos && ok; ++i) {
            int pv = order[i];
            if (g.has_edge(v, pv) != h.has_edge(w, map[pv])) ok = false;
        }
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extend_mapping(g, h, order, pos + 1, map, used, cg, ch)) return true;
        used[w] = false;
        map[v] = -1;
    }
    return false;
}

bool mapped_isomorphic(const Graph& g, const Graph& h, int pin_u, int pin_v) {
    if (g.order() != h.order()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    int n = g.order();
    if (n == 0) return true;

    auto colors = joint_refine({&g, &h});
    const auto& cg = colors[0];
    const auto& ch = colors[1];
    {
        std::vector<int> a = cg, b = ch;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> class_size(n + 1, 0);
    for (int c : cg) ++class_size[c];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return class_size[cg[a]] < class_size[cg[b]]; });

    std::size_t start = 0;
    if (pin_u >= 0) {
        if (cg[pin_u] != ch[pin_v]) return false;
        map[pin_u] = pin_v;
        used[pin_v] = true;
        order.erase(std::find(order.begin(), order.end(), pin_u));
        order.insert(order.begin(), pin_u);
        start = 1;
    }
    return extend_mapping(g, h, order, start, map, used, cg, ch);
}

// --- canonical labeling search ----------------------------------------------

struct CanonState {
    int n = 0;
    std::array<std::uint32_t, kCanonicalMaxOrder> row{};
    std::vector<int> best_perm;          // position -> vertex
    std::vector<std::uint32_t> best_rows;  // relabeled adjacency under best_perm
    bool have_best = false;
    std::vector<std::vector<int>> autos;  // discovered automorphisms (vertex -> vertex)
};

std::uint32_t cell_mask(const std::vector<int>& cell) {
    std::uint32_t m = 0;
    for (int v : cell) m |= std::uint32_t(1) << v;
    return m;
}

void refine_partition(const CanonState& st, std::vector<std::vector<int>>& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::uint32_t> masks;
        masks.reserve(cells.size());
        for (auto& c : cells) masks.push_back(cell_mask(c));

        std::vector<std::vector<int>> next;
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            // signature = counts of neighbors in each current cell
            std::vector<std::pair<std::vector<int>, int>> tagged;
            tagged.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(masks.size());
                for (std::uint32_t m : masks)
                    sig.push_back(__builtin_popcount(st.row[v] & m));
                tagged.emplace_back(std::move(sig), v);
            }
            std::stable_sort(tagged.begin(), tagged.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::size_t i = 0;
            while (i < tagged.size()) {
                std::size_t j = i;
                std::vector<int> sub;
                while (j < tagged.size() && tagged[j].first == tagged[i].first) {
                    sub.push_back(tagged[j].second);
                    ++j;
                }
                std::sort(sub.begin(), sub.end());
                if (sub.size() != cell.size()) changed = true;
                next.push_back(std::move(sub));
                i = j;
            }
        }
        cells = std::move(next);
    }
}

void relabel_rows(const CanonState& st, const std::vector<int>& perm,
                  std::vector<std::uint32_t>& out) {
    out.assign(st.n, 0);
    std::array<int, kCanonicalMaxOrder> inv{};
    for (int i = 0; i < st.n; ++i) inv[perm[i]] = i;
    for (int i = 0; i < st.n; ++i) {
        std::uint32_t bits = st.row[perm[i]];
        while (bits) {
            int v = __builtin_ctz(bits);
            bits &= bits - 1;
            out[i] |= std::uint32_t(1) << inv[v];
        }
    }
}

// Lexicographic compare of upper-triangle bit strings, pair order
// (0,1),(0,2),...,(0,n-1),(1,2),...
int compare_rows(int n, const std::vector<std::uint32_t>& a,
                 const std::vector<std::uint32_t>& b) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int ba = (a[i] >> j) & 1;
            int bb = (b[i] >> j) & 1;
            if (ba != bb) return ba - bb;
        }
    return 0;
}

void canon_search(CanonState& st, std::vector<std::vector<int>> cells,
                  std::vector<int>& fixed) {
    refine_partition(st, cells);

    int target = -1;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].size() > 1) {
            target = static_cast<int>(i);
            break;
        }

    if (target < 0) {
        std::vector<int> perm;
        perm.reserve(st.n);
        for (auto& c : cells) perm.push_back(c[0]);
        std::vector<std::uint32_t> rows;
        relabel_rows(st, perm, rows);
        if (!st.have_best) {
            st.best_perm = perm;
            st.best_rows = rows;
            st.have_best = true;
            return;
        }
        int cmp = compare_rows(st.n, rows, st.best_rows);
        if (cmp > 0) {
            st.best_perm = perm;
            st.best_rows = rows;
        } else if (cmp == 0) {
            // equal codes: perm . best_perm^-1 is an automorphism
            std::vector<int> phi(st.n);
            for (int i = 0; i < st.n; ++i) phi[st.best_perm[i]] = perm[i];
            st.autos.push_back(std::move(phi));
        }
        return;
    }

    std::vector<int> tried;
    for (int v : cells[target]) {
        bool skip = false;
        for (const auto& phi : st.autos) {
            bool fixes = true;
            for (int u : fixed)
                if (phi[u] != u) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            if (std::find(tried.begin(), tried.end(), phi[v]) != tried.end()) {
                skip = true;
                break;
            }
        }
        tried.push_back(v);
        if (skip) continue;

        std::vector<std::vector<int>> child;
        child.reserve(cells.size() + 1);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (static_cast<int>(i) == target) {
                child.push_back({v});
                std::vector<int> rest;
                for (int u : cells[i])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            } else {
                child.push_back(cells[i]);
            }
        }
        fixed.push_back(v);
        canon_search(st, std::move(child), fixed);
        fixed.pop_back();
    }
}

CanonState run_canon_rows(int n, const std::uint32_t* rows) {
    if (n > kCanonicalMaxOrder)
        throw std::invalid_argument("canonical labeling limited to order <= " +
                                    std::to_string(kCanonicalMaxOrder));
    CanonState st;
    st.n = n;
    for (int v = 0; v < n; ++v) st.row[v] = rows[v];
    if (st.n == 0) {
        st.have_best = true;
        return st;
    }
    std::vector<int> all(st.n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> fixed;
    canon_search(st, {all}, fixed);
    return st;
}

CanonState run_canon(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder)
        throw std::invalid_argument("canonical labeling limited to order <= " +
                                    std::to_string(kCanonicalMaxOrder));
    std::array<std::uint32_t, kCanonicalMaxOrder> rows{};
    for (int v = 0; v < g.order(); ++v) {
        std::uint32_t bits = 0;
        g.neighbors(v).for_each([&](int u) { bits |= std::uint32_t(1) << u; });
        rows[v] = bits;
    }
    return run_canon_rows(g.order(), rows.data());
}

std::uint64_t pack_code(const CanonState& st) {
    std::uint64_t code = 0;
    for (int i = 0; i < st.n; ++i)
        for (int j = i + 1; j < st.n; ++j)
            code = (code << 1) | ((st.best_rows[i] >> j) & 1);
    return (std::uint64_t(st.n) << 50) | code;
}

}  // namespace

std::vector<int> refined_colors(const Graph& g) { return joint_refine({&g})[0]; }

bool are_isomorphic(const Graph& g, const Graph& h) { return mapped_isomorphic(g, h, -1, -1); }

bool isomorphic_with_pin(const Graph& g, const Graph& h, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= h.order())
        throw std::out_of_range("isomorphic_with_pin: pinned vertex out of range");
    return mapped_isomorphic(g, h, u, v);
}

std::uint64_t canonical_code(const Graph& g) {
    if (g.order() > 10)
        throw std::invalid_argument("canonical_code packing limited to order <= 10");
    return pack_code(run_canon(g));
}

std::uint64_t canonical_code_rows(int n, const std::uint32_t* rows) {
    if (n > 10) throw std::invalid_argument("canonical_code packing limited to order <= 10");
    return pack_code(run_canon_rows(n, rows));
}

Graph canonical_form(const Graph& g) {
    CanonState st = run_canon(g);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < st.n; ++i)
        for (int j = i + 1; j < st.n; ++j)
            if ((st.best_rows[i] >> j) & 1) e.emplace_back(i, j);
    return Graph(st.n, e);
}

std::vector<std::vector<int>> automorphism_orbits(const Graph& g) {
    int n = g.order();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto colors = refined_colors(g);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (colors[u] != colors[v]) continue;
            if (find(u) == find(v)) continue;
            if (isomorphic_with_pin(g, g, u, v)) parent[find(v)] = find(u);
        }
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

std::uint64_t graph_fingerprint(const Graph& g) {
    if (g.order() <= 10) return canonical_code(g);
    std::uint64_t h = 0xcbf29ce484222325ull ^ (std::uint64_t(g.order()) << 1);
    if (g.order() <= kCanonicalMaxOrder) {
        Graph c = canonical_form(g);
        for (auto [u, v] : c.edges()) {
            h ^= (std::uint64_t(u) << 32) | std::uint64_t(v);
            h *= 0x100000001b3ull;
        }
        return h;
    }
    auto colors = refined_colors(g);
    std::sort(colors.begin(), colors.end());
    for (int c : colors) {
        h ^= static_cast<std::uint64_t>(c) + 0x9e3779b9;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace disjdom

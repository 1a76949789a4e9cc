#include "disjdom/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace disjdom {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
    adj_.assign(n_, Bitset(n_));
    finish();
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
    adj_.assign(n_, Bitset(n_));
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
        adj_[u].set(v);
        adj_[v].set(u);
    }
    finish();
}

void Graph::finish() {
    deg_.resize(n_);
    for (int v = 0; v < n_; ++v) deg_[v] = adj_[v].count();
    dist2_.assign(n_, Bitset(n_));
    for (int v = 0; v < n_; ++v) {
        Bitset reach(n_);
        adj_[v].for_each([&](int u) { reach |= adj_[u]; });
        reach.subtract(adj_[v]);
        reach.reset(v);
        dist2_[v] = std::move(reach);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += deg_[v];
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return deg_[v];
}

int Graph::min_degree() const {
    int m = n_ == 0 ? 0 : deg_[0];
    for (int d : deg_) m = std::min(m, d);
    return m;
}

int Graph::max_degree() const {
    int m = 0;
    for (int d : deg_) m = std::max(m, d);
    return m;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d = deg_;
    std::sort(d.begin(), d.end());
    return d;
}

const Bitset& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

Bitset Graph::closed_neighborhood(int v) const {
    check_vertex(v);
    Bitset b = adj_[v];
    b.set(v);
    return b;
}

const Bitset& Graph::distance2(int v) const {
    check_vertex(v);
    return dist2_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Bitset Graph::vertex_set() const {
    Bitset b(n_);
    b.set_all();
    return b;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("with_edge: loop");
    auto e = edges();
    e.emplace_back(u, v);
    return Graph(n_, e);
}

Graph Graph::without_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("without_edge: not an edge");
    auto e = edges();
    e.erase(std::remove_if(e.begin(), e.end(),
                           [&](auto p) {
                               return (p.first == u && p.second == v) ||
                                      (p.first == v && p.second == u);
                           }),
            e.end());
    return Graph(n_, e);
}

Graph Graph::remove_vertices(const std::vector<int>& removed) const {
    std::vector<int> rm = removed;
    std::sort(rm.begin(), rm.end());
    rm.erase(std::unique(rm.begin(), rm.end()), rm.end());
    for (int v : rm) check_vertex(v);
    std::vector<int> newlabel(n_, -1);
    int next = 0;
    std::size_t ri = 0;
    for (int v = 0; v < n_; ++v) {
        if (ri < rm.size() && rm[ri] == v) {
            ++ri;
            continue;
        }
        newlabel[v] = next++;
    }
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : edges())
        if (newlabel[u] >= 0 && newlabel[v] >= 0) e.emplace_back(newlabel[u], newlabel[v]);
    return Graph(next, e);
}

Graph Graph::add_vertices(int extra) const {
    if (extra < 0) throw std::invalid_argument("add_vertices: negative");
    return Graph(n_ + extra, edges());
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabeled: bad permutation size");
    std::vector<bool> seen(n_, false);
    for (int p : perm) {
        if (p < 0 || p >= n_ || seen[p]) throw std::invalid_argument("relabeled: not a permutation");
        seen[p] = true;
    }
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : edges()) e.emplace_back(perm[u], perm[v]);
    return Graph(n_, e);
}

Graph Graph::subdivide_edge(int u, int v, int k) const {
    if (k < 1) throw std::invalid_argument("subdivide_edge: k must be >= 1");
    if (!has_edge(u, v)) throw std::invalid_argument("subdivide_edge: uv not an edge");
    auto e = edges();
    e.erase(std::remove_if(e.begin(), e.end(),
                           [&](auto p) {
                               return (p.first == u && p.second == v) ||
                                      (p.first == v && p.second == u);
                           }),
            e.end());
    int first = n_;
    e.emplace_back(u, first);
    for (int i = 1; i < k; ++i) e.emplace_back(first + i - 1, first + i);
    e.emplace_back(first + k - 1, v);
    return Graph(n_ + k, e);
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<int> comp;
    return components(comp) == 1;
}

int Graph::components(std::vector<int>& comp) const {
    comp.assign(n_, -1);
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            adj_[v].for_each([&](int u) {
                if (comp[u] < 0) {
                    comp[u] = count;
                    stack.push_back(u);
                }
            });
        }
        ++count;
    }
    return count;
}

std::vector<Graph> Graph::component_graphs() const {
    std::vector<int> comp;
    int k = components(comp);
    std::vector<Graph> out;
    out.reserve(k);
    for (int c = 0; c < k; ++c) {
        Bitset verts(n_);
        for (int v = 0; v < n_; ++v)
            if (comp[v] == c) verts.set(v);
        out.push_back(induced(verts));
    }
    return out;
}

Graph Graph::induced(const Bitset& verts) const {
    if (verts.size() != n_) throw std::invalid_argument("induced: set size mismatch");
    std::vector<int> newlabel(n_, -1);
    int next = 0;
    verts.for_each([&](int v) { newlabel[v] = next++; });
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : edges())
        if (newlabel[u] >= 0 && newlabel[v] >= 0) e.emplace_back(newlabel[u], newlabel[v]);
    return Graph(next, e);
}

bool Graph::operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != o.adj_[v]) return false;
    return true;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("GraphBuilder: negative order");
    seen_.assign(n, Bitset(n));
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("GraphBuilder: vertex out of range");
    if (u == v) throw std::invalid_argument("GraphBuilder: loop");
    if (seen_[u].test(v)) return;
    seen_[u].set(v);
    seen_[v].set(u);
    edges_.emplace_back(u, v);
}

bool GraphBuilder::has_edge(int u, int v) const { return seen_[u].test(v); }

Graph GraphBuilder::build() const { return Graph(n_, edges_); }

// --- graph6 ----------------------------------------------------------------

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

}  // namespace

Graph parse_graph6(const std::string& raw) {
    std::size_t pos = 0;
    std::string text = raw;
    const std::string prefix = ">>graph6<<";
    if (text.rfind(prefix, 0) == 0) {
        text = text.substr(prefix.size());
        pos = prefix.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    if (text.empty()) throw ParseError("empty graph6 input", pos);

    std::size_t i = 0;
    auto byte = [&](std::size_t j) -> int {
        unsigned char c = static_cast<unsigned char>(text[j]);
        if (c < kG6Lo || c > kG6Hi) throw ParseError("byte outside graph6 range", pos + j);
        return c - kG6Lo;
    };

    long long n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~') {
            // 8-byte header (n up to 2^36); far beyond supported orders.
            if (text.size() < 8) throw ParseError("truncated multi-byte order header", pos + text.size());
            n = 0;
            for (int k = 2; k < 8; ++k) n = (n << 6) | byte(k);
            i = 8;
        } else {
            if (text.size() < 4) throw ParseError("truncated multi-byte order header", pos + text.size());
            n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
            i = 4;
        }
    } else {
        n = byte(0);
        i = 1;
    }
    if (n > 1 << 20) throw ParseError("graph order too large", pos);

    const long long bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - i < need) throw ParseError("truncated adjacency bit stream", pos + text.size());
    if (text.size() - i > need) throw ParseError("trailing garbage after adjacency bits", pos + i + need);

    GraphBuilder b(static_cast<int>(n));
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int val = byte(i + bit / 6);
            int shift = 5 - (bit % 6);
            if ((val >> shift) & 1) b.add_edge(row, col);
        }
    }
    // Padding bits must be zero.
    for (long long pad = bits; pad < static_cast<long long>(need) * 6; ++pad) {
        int val = byte(i + pad / 6);
        if ((val >> (5 - pad % 6)) & 1)
            throw ParseError("nonzero padding bit", pos + i + pad / 6);
    }
    return b.build();
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
    } else {
        throw std::invalid_argument("to_graph6: order beyond supported header forms");
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) {
        acc <<= (6 - nbits);
        out.push_back(static_cast<char>(acc + kG6Lo));
    }
    return out;
}

// --- edge list ---------------------------------------------------------------

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header");
    GraphBuilder b(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated at edge " + std::to_string(i));
        b.add_edge(u, v);
    }
    return b.build();
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    auto e = g.edges();
    out << g.order() << ' ' << e.size() << '\n';
    for (auto [u, v] : e) out << u << ' ' << v << '\n';
    return out.str();
}

// --- named constructors ------------------------------------------------------

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(a.order() + u, a.order() + v);
    return Graph(a.order() + b.order(), e);
}

}  // namespace disjdom

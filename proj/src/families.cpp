#include "disjdom/families.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "disjdom/catalog.hpp"
#include "disjdom/structure.hpp"

namespace disjdom {

Graph tadpole(int s, int t) {
    if (s < 3) throw std::invalid_argument("tadpole: cycle length must be >= 3");
    if (t < 1) throw std::invalid_argument("tadpole: tail length must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < s; ++i) e.emplace_back(i, (i + 1) % s);
    e.emplace_back(0, s);
    for (int i = 1; i < t; ++i) e.emplace_back(s + i - 1, s + i);
    return Graph(s + t, e);
}

Graph subdivided_star(int t) {
    if (t < 2) throw std::invalid_argument("subdivided_star: needs t >= 2 arms");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= t; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, t + i);
    }
    return Graph(2 * t + 1, e);
}

GadgetKind parse_gadget_token(const std::string& token) {
    auto fail = [&]() -> GadgetKind {
        throw std::invalid_argument("unknown gadget token '" + token + "'");
    };
    if (token.size() < 2 || token[0] != 'c') fail();
    int s = token[1] - '0';
    if (s < 3 || s > 5) fail();
    if (token.size() == 2) return {s, 0};
    if (token.size() == 4 && token[2] == '-') {
        int t = token[3] - '0';
        if (t < 1 || t > 3) fail();
        return {s, t};
    }
    return fail();
}

Graph f_family(const std::vector<std::string>& gadget_tokens) {
    if (gadget_tokens.size() < 2)
        throw std::invalid_argument("f_family: needs at least two gadgets");
    std::vector<GadgetKind> kinds;
    for (const auto& tok : gadget_tokens) kinds.push_back(parse_gadget_token(tok));

    int order = 1;
    for (const auto& k : kinds) order += k.fresh_vertices();
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (const auto& k : kinds) {
        if (k.is_cycle()) {
            // cycle through the hub: hub, z_1, ..., z_{s-1}
            int first = next;
            for (int i = 0; i + 1 < k.s - 1; ++i) e.emplace_back(first + i, first + i + 1);
            e.emplace_back(0, first);
            e.emplace_back(first + k.s - 2, 0);
            next += k.s - 1;
        } else {
            // tadpole with its leaf identified with the hub:
            // cycle c_0..c_{s-1}, then tail y_1..y_{t-1}, then hub
            int c0 = next;
            for (int i = 0; i < k.s; ++i)
                e.emplace_back(c0 + i, c0 + (i + 1) % k.s);
            int prev = c0;  // attach tail at c_0
            for (int i = 0; i < k.t - 1; ++i) {
                int y = c0 + k.s + i;
                e.emplace_back(prev, y);
                prev = y;
            }
            e.emplace_back(prev, 0);
            next += k.fresh_vertices();
        }
    }
    return Graph(order, e);
}

Graph t_extremal(const Graph& f, const std::vector<TGadget>& choices) {
    if (f.order() < 2) throw std::invalid_argument("t_extremal: base must have order >= 2");
    if (!f.is_connected()) throw std::invalid_argument("t_extremal: base must be connected");
    if (static_cast<int>(choices.size()) != f.order())
        throw std::invalid_argument("t_extremal: one gadget choice per base vertex");

    auto e = f.edges();
    int next = f.order();
    for (int x = 0; x < f.order(); ++x) {
        if (choices[x] == TGadget::C42) {
            // x - y - c0, cycle c0..c3
            int y = next, c0 = next + 1;
            e.emplace_back(x, y);
            e.emplace_back(y, c0);
            for (int i = 0; i < 4; ++i) e.emplace_back(c0 + i, c0 + (i + 1) % 4);
            next += 5;
        } else {
            // x - c0, cycle c0..c4
            int c0 = next;
            e.emplace_back(x, c0);
            for (int i = 0; i < 5; ++i) e.emplace_back(c0 + i, c0 + (i + 1) % 5);
            next += 5;
        }
    }
    return Graph(next, e);
}

int g1_anchor_vertex(const Graph& g1) {
    std::vector<int> deg3;
    for (int v = 0; v < g1.order(); ++v)
        if (g1.degree(v) == 3) deg3.push_back(v);
    if (deg3.size() != 2)
        throw std::invalid_argument("g1_anchor_vertex: expected exactly two degree-3 vertices");
    Bitset common = g1.neighbors(deg3[0]);
    common &= g1.neighbors(deg3[1]);
    if (common.count() != 1)
        throw std::invalid_argument("g1_anchor_vertex: degree-3 vertices need a unique common neighbor");
    return common.first();
}

Graph u_extremal(int n) { return u_extremal(n, Catalog::instance().by_name("G1").graph); }

Graph u_extremal(int n, const Graph& g1) {
    if (n < 2) throw std::invalid_argument("u_extremal: n must be >= 2");
    int anchor = g1_anchor_vertex(g1);
    auto e = complete_graph(n).edges();
    int next = n;
    for (int i = 0; i < n; ++i) {
        for (auto [u, v] : g1.edges()) e.emplace_back(next + u, next + v);
        e.emplace_back(i, next + anchor);
        next += g1.order();
    }
    return Graph(next, e);
}

Graph gadget_graph(const std::string& name) {
    if (name == "C4") return cycle_graph(4);
    if (name == "C5") return cycle_graph(5);
    if (name == "C41" || name == "C_{4,1}") return tadpole(4, 1);
    if (name == "G3" || name == "G4" || name == "G5")
        return Catalog::instance().by_name(name).graph;
    throw std::invalid_argument("attach: unknown gadget '" + name + "'");
}

Graph attach(const Graph& h, int v, const std::string& gadget, int anchor) {
    if (v < 0 || v >= h.order()) throw std::out_of_range("attach: host vertex out of range");
    Graph piece = gadget_graph(gadget);
    if (anchor < 0 || anchor >= piece.order())
        throw std::invalid_argument("attach: anchor out of range");
    if ((gadget == "C41" || gadget == "C_{4,1}") && piece.degree(anchor) != 1)
        throw std::invalid_argument("attach: C_{4,1} must be joined at its leaf");
    Graph g = disjoint_union(h, piece);
    return g.with_edge(v, h.order() + anchor);
}

HVariant h_variant(int i) {
    auto g5_parts = []() {
        // G5 is a hub of degree 4 carrying an attached 4-cycle and 5-cycle;
        // classify via the closed chains at the hub.
        const Graph& g5 = Catalog::instance().by_name("G5").graph;
        int hub = -1;
        for (int v = 0; v < g5.order(); ++v)
            if (g5.degree(v) == 4) hub = v;
        StructureReport rep = structure_report(g5);
        std::vector<int> c4near, c4far, c5near, c5far;
        for (const auto& l : rep.linkages) {
            if (l.a != hub || l.b != hub) continue;
            if (l.internal.size() == 3) {
                c4near = {l.internal.front(), l.internal.back()};
                c4far = {l.internal[1]};
            } else if (l.internal.size() == 4) {
                c5near = {l.internal.front(), l.internal.back()};
                c5far = {l.internal[1], l.internal[2]};
            }
        }
        struct Parts {
            int hub, c4near, c4far, c5near, c5far;
        };
        if (hub < 0 || c4near.empty() || c5near.empty())
            throw std::runtime_error("catalog G5 does not have the expected hub shape");
        return Parts{hub, *std::min_element(c4near.begin(), c4near.end()), c4far[0],
                     *std::min_element(c5near.begin(), c5near.end()),
                     *std::min_element(c5far.begin(), c5far.end())};
    };
    auto g4_orbit = [](int which) {
        const Graph& g4 = Catalog::instance().by_name("G4").graph;
        std::vector<int> deg3;
        for (int v = 0; v < g4.order(); ++v)
            if (g4.degree(v) == 3) deg3.push_back(v);
        if (which == 0) return deg3.empty() ? 0 : deg3[0];
        for (int v = 0; v < g4.order(); ++v) {
            if (g4.degree(v) != 2) continue;
            bool near = false;
            g4.neighbors(v).for_each([&](int u) {
                if (g4.degree(u) == 3) near = true;
            });
            if ((which == 1) == near) return v;
        }
        throw std::runtime_error("catalog G4 does not have the expected orbits");
    };
    auto g3_rep = [](int want_deg) {
        const Graph& g3 = Catalog::instance().by_name("G3").graph;
        for (int v = 0; v < g3.order(); ++v)
            if (g3.degree(v) == want_deg) return v;
        throw std::runtime_error("catalog G3 does not have the expected degrees");
    };

    switch (i) {
        case 1: return {"C4", 0};
        case 2: return {"C5", 0};
        case 3: return {"C41", 4};  // the tadpole leaf
        case 4: return {"G4", g4_orbit(0)};
        case 5: return {"G4", g4_orbit(1)};
        case 6: return {"G4", g4_orbit(2)};
        case 7: return {"G5", g5_parts().c4near};
        case 8: return {"G5", g5_parts().c4far};
        case 9: return {"G5", g5_parts().hub};
        case 10: return {"G5", g5_parts().c5near};
        case 11: return {"G5", g5_parts().c5far};
        case 12: return {"G3", g3_rep(3)};
        case 13: return {"G3", g3_rep(2)};
        default: throw std::invalid_argument("h_variant: index must be in 1..13");
    }
}

Graph build_h_variant(const Graph& h, int v, int i) {
    HVariant hv = h_variant(i);
    return attach(h, v, hv.gadget, hv.anchor);
}

// --- family spec text syntax -------------------------------------------------

namespace {

[[noreturn]] void spec_error(const std::string& text, std::size_t pos, const std::string& msg) {
    throw std::invalid_argument("family spec '" + text + "': " + msg + " at position " +
                                std::to_string(pos));
}

std::vector<int> parse_int_list(const std::string& text, const std::string& part,
                                std::size_t base, char sep) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < part.size()) {
        std::size_t j = i;
        while (j < part.size() && part[j] != sep) ++j;
        try {
            out.push_back(std::stoi(part.substr(i, j - i)));
        } catch (...) {
            spec_error(text, base + i, "expected an integer");
        }
        i = j + 1;
    }
    return out;
}

Graph parse_base_graph(const std::string& text, const std::string& tok, std::size_t pos) {
    if (tok.rfind("path", 0) == 0) return path_graph(std::stoi(tok.substr(4)));
    if (tok.rfind("cycle", 0) == 0) return cycle_graph(std::stoi(tok.substr(5)));
    if (tok.rfind("complete", 0) == 0) return complete_graph(std::stoi(tok.substr(8)));
    if (tok.rfind("g6=", 0) == 0) return parse_graph6(tok.substr(3));
    spec_error(text, pos, "unknown base graph '" + tok + "'");
}

}  // namespace

Graph generate_from_spec(const std::string& text) {
    std::size_t colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    std::size_t base = colon == std::string::npos ? 0 : colon + 1;

    if (head == "cycle") return cycle_graph(std::stoi(rest));
    if (head == "path") return path_graph(std::stoi(rest));
    if (head == "complete") return complete_graph(std::stoi(rest));
    if (head == "star") return star_graph(std::stoi(rest));
    if (head == "biclique") {
        auto ab = parse_int_list(text, rest, base, ',');
        if (ab.size() != 2) spec_error(text, base, "biclique needs a,b");
        return complete_bipartite(ab[0], ab[1]);
    }
    if (head == "tadpole") {
        auto st = parse_int_list(text, rest, base, ',');
        if (st.size() != 2) spec_error(text, base, "tadpole needs s,t");
        return tadpole(st[0], st[1]);
    }
    if (head == "sstar" || head == "subdivided-star") return subdivided_star(std::stoi(rest));
    if (head == "f") {
        if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
            spec_error(text, base, "f needs a [tok,tok,...] gadget list");
        std::vector<std::string> toks;
        std::string body = rest.substr(1, rest.size() - 2);
        std::size_t i = 0;
        while (i <= body.size() && !body.empty()) {
            std::size_t j = body.find(',', i);
            toks.push_back(body.substr(i, j == std::string::npos ? j : j - i));
            if (j == std::string::npos) break;
            i = j + 1;
        }
        return f_family(toks);
    }
    if (head == "t") {
        std::size_t slash = rest.find('/');
        if (slash == std::string::npos) spec_error(text, base, "t needs base/choices");
        Graph f = parse_base_graph(text, rest.substr(0, slash), base);
        std::string choice_text = rest.substr(slash + 1);
        std::vector<TGadget> choices;
        std::size_t i = 0, k = 0;
        while (k < static_cast<std::size_t>(f.order())) {
            std::size_t j = choice_text.find(';', i);
            std::string c = choice_text.substr(i, j == std::string::npos ? j : j - i);
            TGadget g;
            if (c == "4,2") g = TGadget::C42;
            else if (c == "5,1") g = TGadget::C51;
            else spec_error(text, base + slash + 1 + i, "gadget must be 4,2 or 5,1");
            choices.push_back(g);
            ++k;
            if (j == std::string::npos) {
                // uniform fill with the single given choice
                while (choices.size() < static_cast<std::size_t>(f.order())) choices.push_back(g);
                break;
            }
            i = j + 1;
        }
        return t_extremal(f, choices);
    }
    if (head == "u") return u_extremal(std::stoi(rest));
    if (head == "attach" || head == "h") {
        // attach:<graph6>:v=2:gadget=C4:anchor=0   |   h:<i>:host=<graph6>:v=2
        std::vector<std::string> parts;
        std::size_t i = 0;
        while (true) {
            std::size_t j = rest.find(':', i);
            parts.push_back(rest.substr(i, j == std::string::npos ? j : j - i));
            if (j == std::string::npos) break;
            i = j + 1;
        }
        if (head == "attach") {
            if (parts.size() != 4) spec_error(text, base, "attach needs g6:v=:gadget=:anchor=");
            Graph h = parse_graph6(parts[0]);
            int v = std::stoi(parts[1].substr(parts[1].find('=') + 1));
            std::string gadget = parts[2].substr(parts[2].find('=') + 1);
            int anchor = std::stoi(parts[3].substr(parts[3].find('=') + 1));
            return attach(h, v, gadget, anchor);
        }
        if (parts.size() != 3) spec_error(text, base, "h needs i:host=g6:v=");
        int idx = std::stoi(parts[0]);
        Graph h = parse_graph6(parts[1].substr(parts[1].find('=') + 1));
        int v = std::stoi(parts[2].substr(parts[2].find('=') + 1));
        return build_h_variant(h, v, idx);
    }
    spec_error(text, 0, "unknown family '" + head + "'");
}

std::string family_spec_help() {
    return "family specs:\n"
           "  cycle:N | path:N | complete:N | star:LEAVES | biclique:A,B\n"
           "  tadpole:S,T            cycle C_S with a pendant path of T vertices\n"
           "  sstar:T                subdivided star (2T+1 vertices)\n"
           "  f:[c3,c5,c4-1,...]     hub family; cS = cycle, cS-T = tadpole gadget\n"
           "  t:path4/4,2            extremal family over a base graph; choices\n"
           "                         4,2 or 5,1, uniform or ;-separated per vertex\n"
           "  u:N                    claw-free extremal family over K_N\n"
           "  attach:G6:v=V:gadget=C4|C5|C41|G3|G4|G5:anchor=A\n"
           "  h:I:host=G6:v=V        attachment variant I in 1..13\n";
}

}  // namespace disjdom

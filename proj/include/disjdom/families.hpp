#pragma once

#include <string>
#include <vector>

#include "disjdom/graph.hpp"

namespace disjdom {

// Tadpole C_{s,t}: cycle C_s (labels 0..s-1) plus a pendant path of t new
// vertices hung off vertex 0; the unique leaf is s+t-1. Order s+t.
Graph tadpole(int s, int t);

// Star K_{1,t} with every edge subdivided once: center 0, supports 1..t,
// leaf t+i below support i. Order 2t+1.
Graph subdivided_star(int t);

// Gadget vocabulary for the hub family: "c3","c4","c5" are cycles attached by
// identifying one cycle vertex with the hub; "cS-T" (S in 3..5, T in 1..3) are
// tadpoles attached by identifying their leaf with the hub.
struct GadgetKind {
    int s = 0;
    int t = 0;   // 0 for a bare cycle
    bool is_cycle() const { return t == 0; }
    int fresh_vertices() const { return s + t - 1; }
};
GadgetKind parse_gadget_token(const std::string& token);

// Hub graph: single vertex 0 shared by all gadgets, gadget vertices appended
// in construction order. Requires at least two gadgets.
Graph f_family(const std::vector<std::string>& gadget_tokens);

enum class TGadget { C42, C51 };

// Extremal family: base f keeps its labels; each vertex x_i gets one gadget
// from {C_{4,2}, C_{5,1}} attached by identifying the gadget leaf with x_i.
// Order 6*|f|.
Graph t_extremal(const Graph& f, const std::vector<TGadget>& choices);

// Claw-free extremal family: complete graph K_n plus n copies of the catalog
// graph G1, copy i joined to clique vertex i at G1's distinguished vertex
// (the common neighbor of its two degree-3 vertices). Order n*(1+|G1|).
Graph u_extremal(int n);
Graph u_extremal(int n, const Graph& g1);

// Distinguished attachment vertex of G1 (unique common neighbor of the two
// degree-3 vertices). Throws if g1 lacks that shape.
int g1_anchor_vertex(const Graph& g1);

// Disjoint union of h and the named gadget plus one join edge from v to the
// gadget's anchor vertex. Gadget names: C4, C5, C41 (anchor must be its
// leaf), G3, G4, G5 (catalog graphs).
Graph attach(const Graph& h, int v, const std::string& gadget, int anchor);
Graph gadget_graph(const std::string& name);

// The thirteen attachment variants: gadget plus anchor orbit representative.
struct HVariant {
    std::string gadget;
    int anchor = 0;
};
HVariant h_variant(int i);  // 1..13
Graph build_h_variant(const Graph& h, int v, int i);

// CLI family-spec syntax, e.g. "tadpole:4,2", "f:[c3,c3,c4-1]",
// "t:path4/4,2", "u:3", "attach:<graph6>:v=2:gadget=C4:anchor=0".
Graph generate_from_spec(const std::string& text);
std::string family_spec_help();

}  // namespace disjdom

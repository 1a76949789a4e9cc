#pragma once

#include <functional>
#include <string>
#include <vector>

#include "disjdom/graph.hpp"

namespace disjdom {

// Maximal path whose internal vertices all have degree 2. For a chain closing
// back on its single attachment vertex (an attached cycle), a == b.
struct Linkage {
    int a = -1;
    int b = -1;
    std::vector<int> internal;  // listed from a's side
};

// Induced cycle meeting the rest of the graph in one cut vertex of degree >= 4.
struct PendantCycle {
    std::vector<int> cycle;  // attachment first, then around the cycle
    int attachment = -1;
    int length = 0;
};

// Hanging piece joined to its attachment vertex by a single edge, shaped like
// a small gadget: a tadpole C_{r,k} whose leaf is the attachment, or a
// catalog graph reached through a (possibly empty) degree-2 path.
struct PendantPiece {
    std::vector<int> internal;   // the piece without the attachment vertex
    int attachment = -1;
    std::string gadget;          // "C_{r,k}" or a catalog name such as "G4+path2"
    std::vector<int> tail;       // degree-2 path from the attachment (may be empty)
    std::vector<int> core;       // the cycle / catalog-shaped remainder
};

struct StructureReport {
    std::vector<int> leaves;
    std::vector<int> support_vertices;
    std::vector<Linkage> linkages;
    std::vector<int> cut_vertices;
    std::vector<std::pair<int, int>> cut_edges;
    std::vector<PendantCycle> pendant_cycles;
    std::vector<PendantPiece> special_pendants;
    std::vector<std::vector<int>> cycle_components;  // components that are bare cycles
};

StructureReport structure_report(const Graph& g);

// Variant with a callback naming non-cycle pendant cores (e.g. a catalog
// lookup); the namer returns "" for unrecognized cores.
StructureReport structure_report(const Graph& g,
                                 const std::function<std::string(const Graph&)>& core_namer);

// True iff g has no induced K_{1,3}.
bool is_claw_free(const Graph& g);

// True iff g has no induced 4-cycle.
bool has_induced_c4(const Graph& g);

}  // namespace disjdom

#pragma once

#include <cstdint>
#include <vector>

#include "disjdom/graph.hpp"

namespace disjdom {

// Adjacency-preserving bijection test via color refinement plus backtracking.
// Correct for any order; intended for n <= 16 (a size guard can reject larger
// inputs explicitly).
bool are_isomorphic(const Graph& g, const Graph& h);

// As above but with g-vertex u pinned to h-vertex v.
bool isomorphic_with_pin(const Graph& g, const Graph& h, int u, int v);

// Canonical form for small graphs (n <= kCanonicalMaxOrder): the
// lexicographically greatest upper-triangle bit string over all labelings,
// found by individualization-refinement search with automorphism pruning.
constexpr int kCanonicalMaxOrder = 16;

// Packed upper-triangle code of the canonical labeling; valid for n <= 10
// (45 bits plus order tag). Distinct orders never collide.
std::uint64_t canonical_code(const Graph& g);

// Hot path for the enumerator: same code computed from raw adjacency rows
// (bit u of rows[v] set iff edge vu), no Graph construction.
std::uint64_t canonical_code_rows(int n, const std::uint32_t* rows);

// Canonically relabeled copy (n <= kCanonicalMaxOrder).
Graph canonical_form(const Graph& g);

// Automorphism orbits, computed exactly: vertices u, v share an orbit iff an
// automorphism maps u to v. Deterministic representative = lowest vertex.
std::vector<std::vector<int>> automorphism_orbits(const Graph& g);

// Isomorphism-invariant fingerprint usable at any order: canonical bits for
// small graphs, refined-color multiset hash beyond.
std::uint64_t graph_fingerprint(const Graph& g);

// Stable colors from iterated neighborhood refinement (1-WL).
std::vector<int> refined_colors(const Graph& g);

}  // namespace disjdom

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "disjdom/graph.hpp"

namespace disjdom {

// v is 2D-dominated by S iff N[v] meets S or at least two members of S lie at
// distance exactly 2 from v.
bool is_2d_dominated(const Graph& g, const Bitset& s, int v);

// S is a 2DD-set iff every vertex outside S is 2D-dominated by S.
bool is_2dd_set(const Graph& g, const Bitset& s);

enum class CoverStatus : std::uint8_t {
    InSet,
    AdjacentCovered,
    DisjunctiveCovered,   // at least two distance-2 witnesses
    OneWitness,           // exactly one distance-2 witness, not covered
    Uncovered,
};

struct CoverageState {
    std::vector<CoverStatus> status;
    std::vector<int> witness_count;  // distance-2 witnesses in S per vertex

    bool all_covered() const {
        for (auto st : status)
            if (st == CoverStatus::OneWitness || st == CoverStatus::Uncovered) return false;
        return true;
    }
};

CoverageState compute_coverage(const Graph& g, const Bitset& s);

struct Fingerprint {
    int order = 0;
    std::uint64_t hash = 0;
    bool operator==(const Fingerprint& o) const { return order == o.order && hash == o.hash; }
};

Fingerprint fingerprint(const Graph& g);

struct Certificate {
    Fingerprint graph;
    Bitset set;
    int size = 0;
    bool verified = false;

    // One line: graph6, size, space-separated vertices, verified flag.
    std::string to_record(const Graph& g) const;
};

Certificate make_certificate(const Graph& g, const Bitset& s);

// One certificate record per line; throws on malformed records.
Certificate parse_certificate_record(const std::string& line, Graph* graph_out = nullptr);

enum class SolveStatus { Optimal, BudgetExceeded };

struct SolveResult {
    SolveStatus status = SolveStatus::Optimal;
    std::optional<Certificate> certificate;

    bool ok() const { return status == SolveStatus::Optimal; }
    const Certificate& cert() const { return certificate.value(); }
};

struct SolveOptions {
    // Largest set size considered; default n (V itself is always a 2DD-set).
    std::optional<int> budget;
    // Node expansion cap; 0 means unlimited. When exhausted the result is
    // BudgetExceeded rather than an answer.
    std::uint64_t node_limit = 0;
};

// Exact disjunctive domination number with a verified optimal certificate.
// Iterative deepening branch and bound; disconnected inputs are solved per
// component and summed. Deterministic: lowest-index tie-breaking throughout.
SolveResult gamma_d2(const Graph& g, const SolveOptions& opts = {});

// Convenience: the number alone (throws if the budget was exceeded).
int gamma_d2_value(const Graph& g);

// Finds any 2DD-set of size <= k, not necessarily minimum. Shares the solver
// machinery; useful when a size bound rather than the optimum is needed.
SolveResult find_2dd_set_within(const Graph& g, int k, std::uint64_t node_limit = 0);

// Closed form for cycles: 2 when n = 4, ceil(n/4) otherwise. Requires n >= 3.
int gamma_d2_cycle(int n);

// The optimal cycle set behind the closed form, on cycle_graph(n) labels.
Bitset gamma_d2_cycle_set(int n);

// True iff some vertex is adjacent to all others (gamma_d2 == 1).
bool has_dominating_vertex(const Graph& g);

}  // namespace disjdom

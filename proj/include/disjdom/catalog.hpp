#pragma once

#include <optional>
#include <string>
#include <vector>

#include "disjdom/graph.hpp"

namespace disjdom {

struct CatalogEntry {
    std::string name;      // "C4", "C5", "G1".."G6"
    Graph graph;
    int order = 0;
    int expected_gamma = 0;
    enum class Source { FigureTranscription, OracleDiscovered } source =
        Source::FigureTranscription;
};

// The eight forbidden graphs, loaded from a data file of graph6 lines with
// trailing "# name" comments. Path resolution: explicit argument, then the
// CATALOG_PATH environment variable, then the compiled-in default.
class Catalog {
public:
    static const Catalog& instance();          // default path, loaded once
    static Catalog load(const std::string& path);

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry& by_name(const std::string& name) const;

    // Name of the forbidden graph isomorphic to g, if any. Uses an
    // (order, degree sequence, edge count) prefilter before isomorphism.
    std::optional<std::string> is_forbidden(const Graph& g) const;

    // True iff some component of g is isomorphic to a forbidden graph;
    // outputs the first offending component and name.
    bool has_forbidden_component(const Graph& g, std::string* name = nullptr) const;

private:
    std::vector<CatalogEntry> entries_;
};

std::string default_catalog_path();

// Convenience free functions over the default catalog.
const std::vector<CatalogEntry>& forbidden_set();
std::optional<std::string> is_forbidden(const Graph& g);

// All isomorphism classes of connected graphs with min degree >= 2, order
// in [3, n_max], violating gamma^d_2 <= n/3 — found by exhaustive
// enumeration and exact solving, independently of the catalog file.
std::vector<Graph> discover_violators(int n_max);

// The five claw-free exceptions: K1, P2, P4, C4 and H3 (subdivided K_{1,3}
// plus an edge joining two support vertices).
std::vector<CatalogEntry> claw_free_exceptions();

// H3 built programmatically.
Graph h3_graph();

}  // namespace disjdom

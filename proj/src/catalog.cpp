#include "disjdom/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "disjdom/disjunctive.hpp"
#include "disjdom/enumeration.hpp"
#include "disjdom/families.hpp"
#include "disjdom/isomorphism.hpp"

namespace disjdom {

namespace {

const std::map<std::string, int>& expected_gamma_table() {
    static const std::map<std::string, int> t = {
        {"C4", 2}, {"C5", 2}, {"G1", 2}, {"G2", 2},
        {"G3", 2}, {"G4", 3}, {"G5", 3}, {"G6", 3},
    };
    return t;
}

}  // namespace

std::string default_catalog_path() {
    if (const char* env = std::getenv("CATALOG_PATH")) return env;
#ifdef DISJDOM_DEFAULT_CATALOG
    return DISJDOM_DEFAULT_CATALOG;
#else
    return "data/forbidden_catalog.g6";
#endif
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("catalog file missing: " + path);
    Catalog cat;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string g6 = line, name;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            g6 = line.substr(0, hash);
            name = line.substr(hash + 1);
        }
        auto strip = [](std::string& s) {
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
                s.pop_back();
            std::size_t i = 0;
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
            s = s.substr(i);
        };
        strip(g6);
        strip(name);
        if (g6.empty()) continue;
        CatalogEntry e;
        try {
            e.graph = parse_graph6(g6);
        } catch (const std::exception& ex) {
            throw std::runtime_error("catalog file corrupt at line " + std::to_string(lineno) +
                                     ": " + ex.what());
        }
        e.name = name.empty() ? ("entry" + std::to_string(lineno)) : name;
        e.order = e.graph.order();
        auto it = expected_gamma_table().find(e.name);
        e.expected_gamma = it == expected_gamma_table().end() ? -1 : it->second;
        cat.entries_.push_back(std::move(e));
    }
    if (cat.entries_.empty()) throw std::runtime_error("catalog file empty: " + path);
    return cat;
}

const Catalog& Catalog::instance() {
    static const Catalog cat = load(default_catalog_path());
    return cat;
}

const CatalogEntry& Catalog::by_name(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return e;
    throw std::out_of_range("no catalog entry named " + name);
}

std::optional<std::string> Catalog::is_forbidden(const Graph& g) const {
    for (const auto& e : entries_) {
        if (e.order != g.order()) continue;
        if (e.graph.edge_count() != g.edge_count()) continue;
        if (e.graph.degree_sequence() != g.degree_sequence()) continue;
        if (are_isomorphic(e.graph, g)) return e.name;
    }
    return std::nullopt;
}

bool Catalog::has_forbidden_component(const Graph& g, std::string* name) const {
    for (const Graph& comp : g.component_graphs()) {
        if (auto hit = is_forbidden(comp)) {
            if (name) *name = *hit;
            return true;
        }
    }
    return false;
}

const std::vector<CatalogEntry>& forbidden_set() { return Catalog::instance().entries(); }

std::optional<std::string> is_forbidden(const Graph& g) {
    return Catalog::instance().is_forbidden(g);
}

std::vector<Graph> discover_violators(int n_max) {
    if (n_max > 9) throw std::invalid_argument("discover_violators capped at n_max = 9");
    std::vector<Graph> out;
    for (int n = 3; n <= n_max; ++n) {
        GenSpec spec;
        spec.n = n;
        spec.connected = true;
        spec.min_degree2 = true;
        enumerate(spec, [&](const Graph& g) {
            if (3 * gamma_d2_value(g) > n) out.push_back(g);
        });
    }
    return out;
}

Graph h3_graph() {
    // subdivided star on three arms, plus an edge joining two supports
    Graph s = subdivided_star(3);
    return s.with_edge(1, 2);
}

std::vector<CatalogEntry> claw_free_exceptions() {
    std::vector<CatalogEntry> out;
    auto add = [&](const std::string& name, Graph g, int expected) {
        CatalogEntry e;
        e.name = name;
        e.order = g.order();
        e.graph = std::move(g);
        e.expected_gamma = expected;
        out.push_back(std::move(e));
    };
    add("K1", Graph(1), 1);
    add("P2", path_graph(2), 1);
    add("P4", path_graph(4), 2);
    add("C4", cycle_graph(4), 2);
    add("H3", h3_graph(), 3);
    return out;
}

}  // namespace disjdom

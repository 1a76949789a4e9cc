#include <doctest.h>

#include <set>
#include <vector>

#include "disjdom/disjunctive.hpp"
#include "disjdom/enumeration.hpp"
#include "disjdom/graph.hpp"
#include "disjdom/isomorphism.hpp"
#include "disjdom/structure.hpp"
#include "oracles.hpp"

using namespace disjdom;

namespace {

std::vector<Graph> collect(int n, bool deg2 = false, bool claw = false) {
    GenSpec spec;
    spec.n = n;
    spec.min_degree2 = deg2;
    spec.claw_free = claw;
    std::vector<Graph> out;
    enumerate(spec, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace

TEST_CASE("small exhaustive classes") {
    auto d3 = collect(3, true);
    REQUIRE(d3.size() == 1);
    CHECK(are_isomorphic(d3[0], cycle_graph(3)));

    auto d4 = collect(4, true);
    REQUIRE(d4.size() == 3);
    Graph diamond = complete_graph(4).without_edge(0, 1);
    int hits = 0;
    for (const auto& g : d4)
        if (are_isomorphic(g, cycle_graph(4)) || are_isomorphic(g, diamond) ||
            are_isomorphic(g, complete_graph(4)))
            ++hits;
    CHECK(hits == 3);
}

TEST_CASE("connected class counts match the literature") {
    const std::vector<long long> connected = {1, 1, 2, 6, 21, 112, 853};  // n = 1..7
    for (int n = 1; n <= 7; ++n) CHECK(static_cast<long long>(collect(n).size()) == connected[n - 1]);
}

TEST_CASE("class counts against the labeled-graph oracle") {
    // unlabeled count is recovered from the labeled count via automorphisms:
    // sum over classes of n!/|Aut| must equal the labeled count
    auto factorial = [](int n) {
        long long f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    for (int n = 3; n <= 6; ++n) {
        long long labeled_connected = oracles::labeled_count(
            n, [&](const std::vector<std::uint32_t>& rows) { return oracles::rows_connected(rows); });
        long long weighted = 0;
        for (const auto& g : collect(n)) weighted += factorial(n) / oracles::automorphism_count(g);
        CHECK(weighted == labeled_connected);

        long long labeled_deg2 = oracles::labeled_count(n, [&](const std::vector<std::uint32_t>& rows) {
            return oracles::rows_connected(rows) && oracles::rows_min_deg2(rows);
        });
        long long weighted_deg2 = 0;
        for (const auto& g : collect(n, true))
            weighted_deg2 += factorial(n) / oracles::automorphism_count(g);
        CHECK(weighted_deg2 == labeled_deg2);
    }
}

TEST_CASE("no duplicate classes and constraints hold") {
    for (int n = 4; n <= 7; ++n) {
        auto graphs = collect(n, true);
        std::set<std::uint64_t> codes;
        for (const auto& g : graphs) {
            CHECK(g.order() == n);
            CHECK(g.is_connected());
            CHECK(g.min_degree() >= 2);
            CHECK(codes.insert(canonical_code(g)).second);
        }
        // spot pairwise isomorphism checks at n <= 6
        if (n <= 6)
            for (std::size_t i = 0; i < graphs.size(); ++i)
                for (std::size_t j = i + 1; j < graphs.size(); ++j)
                    CHECK(!are_isomorphic(graphs[i], graphs[j]));
    }
}

TEST_CASE("claw-free filter") {
    auto all5 = collect(5);
    auto cf5 = collect(5, false, true);
    long long expect = 0;
    for (const auto& g : all5)
        if (is_claw_free(g)) ++expect;
    CHECK(static_cast<long long>(cf5.size()) == expect);
    for (const auto& g : cf5) CHECK(is_claw_free(g));
}

TEST_CASE("exhaustive mode caps and errors") {
    GenSpec spec;
    spec.n = 11;
    CHECK_THROWS(enumerate(spec, [](const Graph&) {}));
    spec.n = 4;
    spec.connected = false;
    CHECK_THROWS(enumerate(spec, [](const Graph&) {}));
}

TEST_CASE("random_min_deg2 postconditions and determinism") {
    SplitMix64 rng(3);
    for (int t = 0; t < 30; ++t) {
        int n = 3 + static_cast<int>(rng.below(20));
        int maxm = n * (n - 1) / 2;
        int m = n + static_cast<int>(rng.below(maxm - n + 1));
        std::uint64_t seed = rng.next();
        Graph g = random_min_deg2(n, m, seed);
        CHECK(g.order() == n);
        CHECK(g.edge_count() == m);
        CHECK(g.min_degree() >= 2);
        CHECK(g.is_connected());
        CHECK(random_min_deg2(n, m, seed) == g);
    }
    Graph g = random_min_deg2(10, 10, 12345);
    CHECK(g.min_degree() >= 2);
    CHECK_THROWS(random_min_deg2(10, 9, 1));
    CHECK_THROWS(random_min_deg2(10, 46, 1));
    CHECK_THROWS(random_min_deg2(2, 3, 1));
}

TEST_CASE("random mode emits the requested count") {
    GenSpec spec;
    spec.mode = GenSpec::Mode::Random;
    spec.n = 12;
    spec.count = 8;
    spec.seed = 99;
    spec.edges_min = 12;
    spec.edges_max = 20;
    int seen = 0;
    enumerate(spec, [&](const Graph& g) {
        CHECK(g.order() == 12);
        CHECK(g.min_degree() >= 2);
        ++seen;
    });
    CHECK(seen == 8);
}

TEST_CASE("edge-removal monotonicity, exhaustive through order 6") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& g : collect(n)) {
            int base = gamma_d2_value(g);
            for (auto [u, v] : g.edges()) {
                Graph h = g.without_edge(u, v);
                CHECK(base <= gamma_d2_value(h));
            }
        }
    }
}

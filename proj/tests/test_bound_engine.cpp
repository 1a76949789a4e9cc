#include <doctest.h>

#include "disjdom/bound_engine.hpp"
#include "disjdom/catalog.hpp"
#include "disjdom/disjunctive.hpp"
#include "disjdom/enumeration.hpp"
#include "disjdom/families.hpp"
#include "disjdom/graph.hpp"
#include "disjdom/isomorphism.hpp"

using namespace disjdom;

TEST_CASE("certify cycles") {
    CertifyResult r = certify_bound(cycle_graph(9));
    CHECK(r.certificate.verified);
    CHECK(r.certificate.size == 3);
    CHECK(r.trace.components.size() == 1);
    CHECK(r.trace.components[0].terminal_rule == RuleId::Cycle);

    CHECK(certify_bound(cycle_graph(3)).certificate.size == 1);
    CHECK(certify_bound(cycle_graph(8)).certificate.size == 2);
}

TEST_CASE("certify preconditions") {
    CHECK_THROWS_AS(certify_bound(path_graph(5)), CertifyError);
    CHECK_THROWS_AS(certify_bound(cycle_graph(4)), CertifyError);
    CHECK_THROWS_AS(certify_bound(Graph(2)), CertifyError);
    Graph with_forbidden = disjoint_union(cycle_graph(6), cycle_graph(5));
    try {
        certify_bound(with_forbidden);
        CHECK(false);
    } catch (const CertifyError& e) {
        CHECK(e.kind == CertifyErrorKind::ForbiddenComponent);
        CHECK(e.detail == "C5");
    }
}

TEST_CASE("certify components independently") {
    Graph g = disjoint_union(cycle_graph(3), cycle_graph(6));
    CertifyResult r = certify_bound(g);
    CHECK(r.certificate.size == 3);  // 1 + 2
    CHECK(r.trace.components.size() == 2);
    CHECK(3 * r.certificate.size <= g.order());
}

TEST_CASE("certify the extremal order-12 instance exactly") {
    Graph g12 = t_extremal(path_graph(2), std::vector<TGadget>(2, TGadget::C42));
    CertifyResult r = certify_bound(g12);
    CHECK(r.certificate.verified);
    CHECK(r.certificate.size == 4);  // == |G|/3, tight
}

TEST_CASE("linkage contraction rule") {
    // a long tadpole tail contracts toward the short one
    Graph t = tadpole(4, 5);
    auto step = find_linkage_step(t);
    REQUIRE(step.has_value());
    CHECK(step->rule == RuleId::ContractLinkage);
    CHECK(step->removed.size() == 3);
    Graph kernel = apply_step(t, *step);
    CHECK(kernel.order() == t.order() - 3);
    CHECK(are_isomorphic(kernel, tadpole(4, 2)));

    // lift: kernel optimum plus exactly one vertex, still valid
    Certificate kc = gamma_d2(kernel).cert();
    Bitset lifted = lift_step(t, *step, kc.set);
    CHECK(is_2dd_set(t, lifted));
    CHECK(lifted.count() == kc.size + 1);

    // C12 contracts toward C9 when treated as a raw linkage... cycles have no
    // endpoints, so the rule does not apply; the cycle terminal handles them
    CHECK(!find_linkage_step(cycle_graph(12)).has_value());

    // pendant C4/C5 chains are skipped (loop or multi-edge)
    Graph pc4 = f_family({"c4", "c4"});
    auto s2 = find_linkage_step(pc4);
    CHECK(!s2.has_value());
}

TEST_CASE("strip rule on a pendant 4-cycle") {
    // two 4-cycles at one degree-4 vertex
    Graph g = f_family({"c4", "c4", "c3"});
    auto step = find_pendant_step(g);
    REQUIRE(step.has_value());
    CHECK(step->rule == RuleId::StripPendant);
    Graph kernel = apply_step(g, *step);
    CHECK(kernel.order() == g.order() - 3);
    Certificate kc = gamma_d2(kernel).cert();
    Bitset lifted = lift_step(g, *step, kc.set);
    CHECK(is_2dd_set(g, lifted));
    CHECK(3 * static_cast<int>(lifted.count()) <= g.order());
}

TEST_CASE("keeper rule anchors the attachment vertex") {
    // hub with a C_{4,2} keeper and a pendant triangle
    Graph g = f_family({"c4-2", "c3", "c3-2"});
    auto step = find_pendant_step(g);
    REQUIRE(step.has_value());
    CHECK(step->rule == RuleId::KeepAnchor);
    Graph kernel = apply_step(g, *step);
    Certificate kc = gamma_d2(kernel).cert();
    Bitset lifted = lift_step(g, *step, kc.set);
    CHECK(is_2dd_set(g, lifted));
}

TEST_CASE("pair rule replaces two gadgets by a triangle") {
    Graph g = f_family({"c3", "c3", "c3", "c3"});
    auto step = find_pendant_step(g);
    REQUIRE(step.has_value());
    CHECK(step->rule == RuleId::PairReplace);
    Graph kernel = apply_step(g, *step);
    CHECK(kernel.order() == g.order() - 2);  // two triangles out, one in
    Certificate kc = gamma_d2(kernel).cert();
    Bitset lifted = lift_step(g, *step, kc.set);
    CHECK(is_2dd_set(g, lifted));
}

TEST_CASE("rule-level soundness on randomized hosts") {
    SplitMix64 rng(61);
    const char* pieceables[] = {"c3", "c5", "c3-2", "c3-3", "c4-1", "c5-3",
                                "c4-2", "c5-1", "c3-1", "c4-3", "c5-2", "c4"};
    int linkage_checked = 0, pendant_checked = 0;
    for (int t = 0; t < 220; ++t) {
        int n = 6 + static_cast<int>(rng.below(7));
        Graph host = random_min_deg2(n, n + static_cast<int>(rng.below(4)), rng.next());

        Graph g;
        if (t % 2 == 0) {
            // graft a long path between two random vertices
            int u = static_cast<int>(rng.below(n));
            int v = static_cast<int>(rng.below(n));
            if (u == v) continue;
            int len = 3 + static_cast<int>(rng.below(3));
            auto e = host.edges();
            int first = n;
            e.emplace_back(u, first);
            for (int i = 1; i < len; ++i) e.emplace_back(first + i - 1, first + i);
            e.emplace_back(first + len - 1, v);
            g = Graph(n + len, e);
            auto step = find_linkage_step(g);
            if (!step) continue;
            Graph kernel = apply_step(g, *step);
            if (Catalog::instance().has_forbidden_component(kernel)) continue;
            SolveResult kr = gamma_d2(kernel);
            Bitset lifted = lift_step(g, *step, kr.cert().set);
            CHECK(is_2dd_set(g, lifted));
            CHECK(static_cast<int>(lifted.count()) <=
                  kr.cert().size + static_cast<int>(step->removed.size()) / 3);
            ++linkage_checked;
        } else {
            // hang one or two random gadget pieces on a random vertex
            int x = static_cast<int>(rng.below(n));
            std::vector<std::string> toks;
            int count = 1 + static_cast<int>(rng.below(2));
            for (int i = 0; i < count; ++i) toks.push_back(pieceables[rng.below(12)]);
            auto e = host.edges();
            int next = n;
            for (const auto& tok : toks) {
                GadgetKind k = parse_gadget_token(tok);
                if (k.is_cycle()) {
                    int first = next;
                    for (int i = 0; i + 1 < k.s - 1; ++i) e.emplace_back(first + i, first + i + 1);
                    e.emplace_back(x, first);
                    e.emplace_back(first + k.s - 2, x);
                    next += k.s - 1;
                } else {
                    int c0 = next;
                    for (int i = 0; i < k.s; ++i) e.emplace_back(c0 + i, c0 + (i + 1) % k.s);
                    int prev = c0;
                    for (int i = 0; i < k.t - 1; ++i) {
                        int y = c0 + k.s + i;
                        e.emplace_back(prev, y);
                        prev = y;
                    }
                    e.emplace_back(prev, x);
                    next += k.fresh_vertices();
                }
            }
            g = Graph(next, e);
            auto step = find_pendant_step(g);
            if (!step) continue;
            Graph kernel = apply_step(g, *step);
            if (Catalog::instance().has_forbidden_component(kernel)) continue;
            SolveResult kr = gamma_d2(kernel);
            Bitset lifted = lift_step(g, *step, kr.cert().set);
            CHECK(is_2dd_set(g, lifted));
            int removed_net = static_cast<int>(step->removed.size()) - step->fresh_count;
            CHECK(3 * (static_cast<int>(lifted.count()) - kr.cert().size) <= removed_net);
            ++pendant_checked;
        }
    }
    CHECK(linkage_checked > 40);
    CHECK(pendant_checked > 40);
}

TEST_CASE("trace round trip and replay") {
    Graph g = f_family({"c4-2", "c3", "c3"});
    CertifyResult r = certify_bound(g);
    std::string text = trace_to_text(r.trace);
    ReductionTrace back = trace_from_text(text);
    Certificate replayed = replay_trace(g, back);
    CHECK(replayed.verified);
    CHECK(replayed.size == r.certificate.size);
    CHECK(replayed.set == r.certificate.set);

    // a tampered terminal set must fail
    ReductionTrace bad = trace_from_text(text);
    Bitset empty(bad.components[0].terminal_set.size());
    bad.components[0].terminal_set = empty;
    CHECK_THROWS(replay_trace(g, bad));
}

TEST_CASE("irreducible kernel reporting") {
    // a twice-subdivided K4 has no applicable rule and order 16 > 12
    Graph g = complete_graph(4);
    for (auto [u, v] : complete_graph(4).edges()) {
        // subdivide each original edge twice; rebuild by spec each time
        (void)u;
        (void)v;
    }
    Graph k4s2 = complete_graph(4);
    auto orig = k4s2.edges();
    for (auto [u, v] : orig) k4s2 = k4s2.subdivide_edge(u, v, 2);
    CHECK(k4s2.order() == 16);
    CHECK(k4s2.min_degree() == 2);

    CertifyOptions opts;
    opts.search_node_limit = 0;  // disable the bounded search
    try {
        certify_bound(k4s2, opts);
        CHECK(false);
    } catch (const CertifyError& e) {
        CHECK(e.kind == CertifyErrorKind::IrreducibleKernel);
        CHECK(parse_graph6(e.detail).order() == 16);
    }

    // with the bounded search enabled the same graph certifies
    CertifyResult r = certify_bound(k4s2);
    CHECK(r.certificate.verified);
    CHECK(3 * r.certificate.size <= 16);
    CHECK(r.trace.components[0].terminal_rule == RuleId::BoundedSearch);
}

TEST_CASE("engine agrees with the solver on small graphs") {
    for (int n = 3; n <= 8; ++n) {
        GenSpec spec;
        spec.n = n;
        spec.min_degree2 = true;
        enumerate(spec, [&](const Graph& g) {
            if (Catalog::instance().is_forbidden(g)) return;
            CertifyResult r = certify_bound(g);
            CHECK(r.certificate.verified);
            CHECK(3 * r.certificate.size <= n);
            CHECK(r.certificate.size >= gamma_d2_value(g));
        });
    }
}

TEST_CASE("subdivision lift") {
    SplitMix64 rng(71);
    int checked = 0;
    for (int t = 0; t < 120; ++t) {
        int n = 6 + static_cast<int>(rng.below(7));
        Graph g = random_min_deg2(n, n + static_cast<int>(rng.below(5)), rng.next());
        Certificate c = gamma_d2(g).cert();
        auto edges = g.edges();
        auto [u, v] = edges[rng.below(edges.size())];
        Graph sub = g.subdivide_edge(u, v, 3);
        Bitset lifted = lift_subdivision(g, u, v, c.set);
        CHECK(is_2dd_set(sub, lifted));
        CHECK(static_cast<int>(lifted.count()) == c.size + 1);
        ++checked;
    }
    CHECK(checked == 120);
}

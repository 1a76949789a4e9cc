#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "disjdom/disjunctive.hpp"
#include "disjdom/graph.hpp"

namespace disjdom {

// Reduction rules used to certify gamma^d_2(G) <= floor(n/3) for graphs with
// minimum degree 2 and no forbidden component. Each rule removes vertices
// (and possibly adds replacement vertices), and states how to lift a kernel
// certificate back across the step within the n/3 budget.
enum class RuleId {
    Components,
    Cycle,
    BaseCase,
    ContractLinkage,
    StripPendant,
    KeepAnchor,
    PairReplace,
    FallbackExact,
    BoundedSearch,
};

std::string rule_name(RuleId r);

struct ReductionStep {
    RuleId rule = RuleId::ContractLinkage;
    // All labels below refer to the graph the step applies to (pre-step).
    std::vector<int> removed;   // vertices deleted, sorted ascending
    int anchor = -1;            // attachment vertex x, or linkage endpoint u
    int join_to = -1;           // linkage contraction: vertex joined to anchor
    std::vector<int> chain;     // linkage contraction: x1,x2,x3 from anchor side
    std::vector<int> lift_add;  // vertices added to the certificate on lift
    std::vector<int> exchange_remove;  // keeper rule: kept-gadget internals
    std::vector<int> exchange_add;     // keeper rule: {x, far vertex}
    int fresh_count = 0;        // pair rule: replacement vertices appended
    std::string note;           // gadget names, for reports and serialization
};

// Applies one step: removes `removed`, relabels order-preservingly, appends
// `fresh_count` new vertices and the replacement edges (pair rule), or joins
// anchor-join_to (linkage rule).
Graph apply_step(const Graph& g, const ReductionStep& step);

// Lifts a certificate across one step: kernel-labeled set -> pre-step set.
// Verifies nothing; callers re-verify with is_2dd_set.
Bitset lift_step(const Graph& pre, const ReductionStep& step, const Bitset& post_set);

struct ComponentTrace {
    std::vector<ReductionStep> steps;
    RuleId terminal_rule = RuleId::BaseCase;
    Bitset terminal_set;  // certificate on the final kernel, kernel labels
};

struct ReductionTrace {
    std::vector<std::vector<int>> component_vertices;  // original labels
    std::vector<ComponentTrace> components;
};

std::string trace_to_text(const ReductionTrace& trace);
ReductionTrace trace_from_text(const std::string& text);

// Independent validation: replays every step forward from g, checks the
// terminal set on each kernel, lifts back up re-verifying at every level, and
// returns the certificate for g.
Certificate replay_trace(const Graph& g, const ReductionTrace& trace);

struct CertifyOptions {
    int kernel_cap = 12;
    // Node budget for the bounded search on kernels beyond the cap; the
    // search looks for any set of size <= floor(n/3), so slack usually makes
    // it cheap. 0 disables the rule.
    std::uint64_t search_node_limit = 4000000;
};

struct CertifyResult {
    Certificate certificate;  // verified on the input graph
    ReductionTrace trace;
};

enum class CertifyErrorKind {
    MinDegree,          // delta(G) < 2 (offending vertex reported)
    TooSmall,           // order < 3
    ForbiddenComponent, // a component is isomorphic to a forbidden graph
    IrreducibleKernel,  // kernel exceeds the cap and no rule applies
    BoundViolation,     // exact optimum above floor(n/3); inconsistency event
};

struct CertifyError : std::runtime_error {
    CertifyError(CertifyErrorKind k, const std::string& what, std::string payload = "")
        : std::runtime_error(what), kind(k), detail(std::move(payload)) {}
    CertifyErrorKind kind;
    std::string detail;  // offending vertex/component or kernel graph6
};

// Constructive certificate of gamma^d_2(G) <= floor(|G|/3) via the reduction
// pipeline: components -> cycle -> base case -> linkage contraction ->
// pendant gadget rules -> exact solve at or below the kernel cap -> bounded
// search. Preconditions: |G| >= 3, delta >= 2, no forbidden component.
CertifyResult certify_bound(const Graph& g, const CertifyOptions& opts = {});

// Rule finders, exposed for rule-level tests. Each returns the step it would
// apply, or nullopt when the rule does not apply (including when every
// candidate would create a forbidden component).
std::optional<ReductionStep> find_linkage_step(const Graph& g);
std::optional<ReductionStep> find_pendant_step(const Graph& g);

// Lemma-style lift across a 3-subdivision: given a 2DD-set of g and an edge
// uv, returns a 2DD-set of g.subdivide_edge(u, v, 3) with exactly one more
// vertex.
Bitset lift_subdivision(const Graph& g, int u, int v, const Bitset& s);

}  // namespace disjdom

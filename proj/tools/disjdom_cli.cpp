#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "disjdom/bound_engine.hpp"
#include "disjdom/catalog.hpp"
#include "disjdom/disjunctive.hpp"
#include "disjdom/enumeration.hpp"
#include "disjdom/families.hpp"
#include "disjdom/graph.hpp"
#include "disjdom/isomorphism.hpp"
#include "disjdom/structure.hpp"

namespace {

using namespace disjdom;

struct RunReport {
    std::string command;
    long long graphs = 0;
    std::vector<std::string> counterexamples;
    double wall_seconds = 0;

    int finish(std::ostream& err, const std::string& out_path) {
        std::ostringstream r;
        r << "command=" << command << "\tgraphs=" << graphs
          << "\tcounterexamples=" << counterexamples.size() << "\twall_s=" << wall_seconds
          << '\n';
        for (const auto& c : counterexamples) r << "counterexample\t" << c << '\n';
        if (out_path.empty()) {
            err << r.str();
        } else {
            std::ofstream f(out_path);
            f << r.str();
        }
        return counterexamples.empty() ? 0 : 1;
    }
};

std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    std::string line;
    if (path.empty() || path == "-") {
        while (std::getline(std::cin, line)) lines.push_back(line);
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        while (std::getline(in, line)) lines.push_back(line);
    }
    return lines;
}

// Runs jobs over [0, count) on a small pool; results must be stored by index.
void parallel_for(int jobs, std::size_t count, const std::function<void(std::size_t)>& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

int cmd_solve(const std::string& in_path, const std::string& out_path, int jobs,
              const std::string& format, const std::string& input_format, int budget) {
    std::vector<std::string> lines;
    if (input_format == "edgelist") {
        // the edge-list format is multi-line: one graph per input
        std::string all;
        for (const auto& l : read_lines(in_path)) all += l + "\n";
        lines.push_back(all);
    } else {
        lines = read_lines(in_path);
    }
    std::vector<std::string> out(lines.size());
    std::vector<std::string> errors(lines.size());
    parallel_for(jobs, lines.size(), [&](std::size_t i) {
        if (lines[i].empty()) return;
        try {
            Graph g = input_format == "edgelist" ? parse_edge_list(lines[i])
                                                 : parse_graph6(lines[i]);
            SolveOptions opts;
            if (budget >= 0) opts.budget = budget;
            SolveResult r = gamma_d2(g, opts);
            if (!r.ok()) {
                out[i] = to_graph6(g) + "\tbudget-exceeded";
                return;
            }
            if (format == "text") {
                std::ostringstream s;
                s << to_graph6(g) << " n=" << g.order() << " gamma2d=" << r.cert().size
                  << " set=" << r.cert().set.to_string();
                out[i] = s.str();
            } else {
                out[i] = r.cert().to_record(g);
            }
        } catch (const std::exception& ex) {
            errors[i] = ex.what();
        }
    });
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!out_path.empty()) {
        f.open(out_path);
        os = &f;
    }
    bool failed = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!errors[i].empty()) {
            std::cerr << "line " << (i + 1) << ": " << errors[i] << '\n';
            failed = true;
        } else if (!out[i].empty()) {
            *os << out[i] << '\n';
        }
    }
    return failed ? 2 : 0;
}

int cmd_certify(const std::string& in_path, const std::string& out_path, int kernel_cap,
                bool with_trace, bool validate) {
    auto lines = read_lines(in_path);
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!out_path.empty()) {
        f.open(out_path);
        os = &f;
    }
    bool failed = false;
    CertifyOptions opts;
    opts.kernel_cap = kernel_cap;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        try {
            Graph g = parse_graph6(lines[i]);
            CertifyResult r = certify_bound(g, opts);
            if (validate) replay_trace(g, r.trace);
            *os << r.certificate.to_record(g) << '\n';
            if (with_trace) *os << trace_to_text(r.trace);
        } catch (const CertifyError& ex) {
            std::cerr << "line " << (i + 1) << ": " << ex.what();
            if (ex.kind == CertifyErrorKind::IrreducibleKernel)
                std::cerr << " kernel=" << ex.detail;
            std::cerr << '\n';
            failed = true;
        } catch (const std::exception& ex) {
            std::cerr << "line " << (i + 1) << ": " << ex.what() << '\n';
            failed = true;
        }
    }
    return failed ? 2 : 0;
}

// Pulls graphs of one order either from the internal enumerator or from an
// externally supplied graph6 stream (so a trusted external generator can be
// substituted; counts must agree).
std::vector<Graph> order_batch(int n, bool deg2, bool claw_free,
                               const std::vector<Graph>* external) {
    std::vector<Graph> batch;
    if (external) {
        for (const Graph& g : *external) {
            if (g.order() != n || !g.is_connected()) continue;
            if (deg2 && g.min_degree() < 2) continue;
            if (claw_free && !is_claw_free(g)) continue;
            batch.push_back(g);
        }
        return batch;
    }
    GenSpec spec;
    spec.n = n;
    spec.min_degree2 = deg2;
    spec.claw_free = claw_free;
    enumerate(spec, [&](const Graph& g) { batch.push_back(g); });
    return batch;
}

int cmd_check_bound(const std::string& theorem, int n_max, int kernel_cap, bool certify,
                    int jobs, const std::string& out_path, const std::string& source_path) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "check-bound " + theorem;
    std::mutex mu;
    auto violation = [&](const Graph& g, const std::string& why) {
        std::lock_guard<std::mutex> lock(mu);
        rep.counterexamples.push_back(to_graph6(g) + " " + why);
    };

    std::vector<Graph> external_graphs;
    const std::vector<Graph>* external = nullptr;
    if (!source_path.empty()) {
        for (const auto& line : read_lines(source_path))
            if (!line.empty()) external_graphs.push_back(parse_graph6(line));
        external = &external_graphs;
    }

    if (theorem == "prop2.1") {
        if (n_max < 3) n_max = 24;
        for (int n = 3; n <= n_max; ++n) {
            Graph c = cycle_graph(n);
            int got = gamma_d2_value(c);
            if (got != gamma_d2_cycle(n))
                violation(c, "cycle formula mismatch: solver " + std::to_string(got));
            ++rep.graphs;
        }
    } else if (theorem == "lemma2.2" || theorem == "t2.6") {
        int cap = theorem == "lemma2.2" ? std::min(n_max <= 0 ? 8 : n_max, 8)
                                        : (n_max <= 0 ? 9 : n_max);
        CertifyOptions copts;
        copts.kernel_cap = kernel_cap;
        for (int n = 3; n <= cap; ++n) {
            std::vector<Graph> batch = order_batch(n, true, false, external);
            parallel_for(jobs, batch.size(), [&](std::size_t i) {
                const Graph& g = batch[i];
                if (Catalog::instance().is_forbidden(g)) return;
                int gamma = gamma_d2_value(g);
                if (3 * gamma > n) violation(g, "gamma " + std::to_string(gamma) + " > n/3");
                if (certify) {
                    try {
                        CertifyResult r = certify_bound(g, copts);
                        if (r.certificate.size < gamma)
                            violation(g, "certificate smaller than optimum");
                    } catch (const CertifyError& ex) {
                        violation(g, std::string("certify failed: ") + ex.what());
                    }
                }
            });
            rep.graphs += static_cast<long long>(batch.size());
        }
    } else if (theorem == "t1.1") {
        int cap = n_max <= 0 ? 9 : n_max;
        for (int n = 5; n <= cap; ++n) {
            std::vector<Graph> batch = order_batch(n, false, false, external);
            parallel_for(jobs, batch.size(), [&](std::size_t i) {
                int gamma = gamma_d2_value(batch[i]);
                if (2 * gamma > n - 1)
                    violation(batch[i], "gamma " + std::to_string(gamma) + " > (n-1)/2");
            });
            rep.graphs += static_cast<long long>(batch.size());
        }
    } else if (theorem == "t1.2") {
        int cap = n_max <= 0 ? 9 : n_max;
        auto exceptions = claw_free_exceptions();
        for (int n = 1; n <= cap; ++n) {
            std::vector<Graph> batch = order_batch(n, false, true, external);
            parallel_for(jobs, batch.size(), [&](std::size_t i) {
                const Graph& g = batch[i];
                int gamma = gamma_d2_value(g);
                bool is_exception = false;
                for (const auto& e : exceptions)
                    if (e.order == n && are_isomorphic(e.graph, g)) is_exception = true;
                if (5 * gamma > 2 * n && !is_exception)
                    violation(g, "gamma " + std::to_string(gamma) + " > 2n/5");
                if (5 * gamma <= 2 * n && is_exception)
                    violation(g, "listed exception does not violate the bound");
            });
            rep.graphs += static_cast<long long>(batch.size());
        }
    } else {
        std::cerr << "unknown theorem '" << theorem << "'\n";
        return 2;
    }

    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep.finish(std::cerr, out_path);
}

int cmd_discover_forbidden(int n_max, bool require_match) {
    auto found = discover_violators(n_max);
    const auto& cat = Catalog::instance();
    bool all_matched = true;
    for (const Graph& g : found) {
        auto name = cat.is_forbidden(g);
        std::cout << to_graph6(canonical_form(g)) << "\t"
                  << (name ? *name : std::string("unmatched")) << '\n';
        if (!name) all_matched = false;
    }
    bool complete = found.size() == cat.entries().size();
    if (require_match && (!all_matched || !complete)) {
        std::cerr << "discovered " << found.size() << " classes; catalog has "
                  << cat.entries().size() << (all_matched ? "" : "; some unmatched") << '\n';
        return 1;
    }
    return 0;
}

int cmd_generate(const std::string& spec) {
    std::cout << to_graph6(generate_from_spec(spec)) << '\n';
    return 0;
}

int cmd_enumerate(int n, bool deg2, bool claw_free, int random_count, std::uint64_t seed,
                  int edges_min, int edges_max, const std::string& out_path) {
    GenSpec spec;
    spec.n = n;
    spec.min_degree2 = deg2;
    spec.claw_free = claw_free;
    if (random_count > 0) {
        spec.mode = GenSpec::Mode::Random;
        spec.count = random_count;
        spec.seed = seed;
        spec.edges_min = edges_min > 0 ? edges_min : n;
        spec.edges_max = edges_max > 0 ? edges_max : spec.edges_min;
    }
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!out_path.empty()) {
        f.open(out_path);
        os = &f;
    }
    long long emitted = 0;
    enumerate(spec, [&](const Graph& g) {
        *os << to_graph6(g) << '\n';
        ++emitted;
    });
    std::cerr << "n=" << n << "\tclasses=" << emitted << "\tmin_deg2=" << (deg2 ? 1 : 0)
              << "\tclaw_free=" << (claw_free ? 1 : 0)
              << "\tmode=" << (random_count > 0 ? "random" : "exhaustive") << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"disjunctive domination toolkit"};
    app.require_subcommand(1);

    std::string catalog_path;
    app.add_option("--catalog-path", catalog_path,
                   "forbidden-graph catalog file (overrides CATALOG_PATH)");

    std::string in_path, out_path, format = "records", input_format = "g6";
    int jobs = 1, budget = -1, kernel_cap = 12, n_max = 0;

    auto* solve = app.add_subcommand("solve", "exact gamma^d_2 per input graph");
    solve->add_option("--in", in_path, "graph6 lines (default stdin)");
    solve->add_option("--out", out_path, "output file (default stdout)");
    solve->add_option("--jobs", jobs, "worker count");
    solve->add_option("--budget", budget, "maximum set size considered");
    solve->add_option("--format", format)->check(CLI::IsMember({"records", "text"}));
    solve->add_option("--input-format", input_format)->check(CLI::IsMember({"g6", "edgelist"}));

    bool with_trace = false, validate = false;
    auto* certify = app.add_subcommand("certify", "constructive n/3 certificates");
    certify->add_option("--in", in_path, "graph6 lines (default stdin)");
    certify->add_option("--out", out_path, "output file (default stdout)");
    certify->add_option("--kernel-cap", kernel_cap, "largest kernel solved exactly");
    certify->add_flag("--trace", with_trace, "emit the reduction trace");
    certify->add_flag("--validate", validate, "replay each trace as a self-check");

    std::string theorem, source_path;
    bool do_certify = false;
    auto* check = app.add_subcommand("check-bound", "exhaustive bound verification");
    check->add_option("--theorem", theorem, "t1.1 | t1.2 | t2.6 | lemma2.2 | prop2.1")
        ->required();
    check->add_option("--n-max", n_max, "largest order to sweep");
    check->add_option("--kernel-cap", kernel_cap, "kernel cap for --certify");
    check->add_flag("--certify", do_certify, "also run the reduction engine (t2.6, lemma2.2)");
    check->add_option("--jobs", jobs, "worker count");
    check->add_option("--out", out_path, "report file (default stderr)");
    check->add_option("--source", source_path,
                      "graph6 stream to sweep instead of the internal enumerator");

    int disc_n_max = 8;
    bool require_match = false;
    auto* disc = app.add_subcommand("discover-forbidden", "enumerate bound violators");
    disc->add_option("--n-max", disc_n_max, "largest order (<= 9)");
    disc->add_flag("--require-catalog-match", require_match,
                   "fail unless the discovered set matches the catalog");

    std::string spec;
    auto* gen = app.add_subcommand("generate", "construct a named family member");
    gen->add_option("--spec", spec, "family spec; see --help-specs")->required();
    bool help_specs = false;
    gen->add_flag("--help-specs", help_specs);

    int enum_n = 0, random_count = 0, edges_min = 0, edges_max = 0;
    std::uint64_t seed = 1;
    bool deg2 = false, claw_free = false;
    auto* enu = app.add_subcommand("enumerate", "graph6 stream of graph classes or samples");
    enu->add_option("--n", enum_n, "order")->required();
    enu->add_flag("--min-deg2", deg2, "restrict to minimum degree 2");
    enu->add_flag("--claw-free", claw_free, "restrict to claw-free graphs");
    enu->add_option("--random", random_count, "emit seeded random samples instead");
    enu->add_option("--seed", seed, "random mode seed");
    enu->add_option("--edges-min", edges_min, "random mode: minimum edges");
    enu->add_option("--edges-max", edges_max, "random mode: maximum edges");
    enu->add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (!catalog_path.empty()) setenv("CATALOG_PATH", catalog_path.c_str(), 1);

    try {
        if (solve->parsed())
            return cmd_solve(in_path, out_path, jobs, format, input_format, budget);
        if (certify->parsed())
            return cmd_certify(in_path, out_path, kernel_cap, with_trace, validate);
        if (check->parsed())
            return cmd_check_bound(theorem, n_max, kernel_cap, do_certify, jobs, out_path,
                                   source_path);
        if (disc->parsed()) return cmd_discover_forbidden(disc_n_max, require_match);
        if (gen->parsed()) {
            if (help_specs) {
                std::cout << family_spec_help();
                return 0;
            }
            return cmd_generate(spec);
        }
        if (enu->parsed())
            return cmd_enumerate(enum_n, deg2, claw_free, random_count, seed, edges_min,
                                 edges_max, out_path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 0;
}

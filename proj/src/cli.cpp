#include "graphrecover/cli.hpp"

#include "graphrecover/cliques.hpp"
#include "graphrecover/errors.hpp"
#include "graphrecover/generators.hpp"
#include "graphrecover/graph_algorithms.hpp"
#include "graphrecover/io.hpp"
#include "graphrecover/lemma_checks.hpp"
#include "graphrecover/parallel.hpp"
#include "graphrecover/recovery.hpp"
#include "graphrecover/similarity.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace graphrecover {

namespace {

/// Human-readable lines first, then one key=value line per metric.
class Report {
public:
    explicit Report(std::ostream &out) : out_(out) {}
    Report(const Report &) = delete;
    ~Report() { finish(); }

    void say(const std::string &line) { out_ << line << '\n'; }

    void value(const std::string &key, const std::string &v) { values_.emplace_back(key, v); }
    void value(const std::string &key, const char *v) { values_.emplace_back(key, v); }
    void value(const std::string &key, bool v) { values_.emplace_back(key, v ? "true" : "false"); }
    template <typename T>
    void value(const std::string &key, T v)
    {
        values_.emplace_back(key, std::to_string(v));
    }

    void finish()
    {
        for (const auto &[k, v] : values_)
            out_ << k << '=' << v << '\n';
        values_.clear();
        out_.flush();
    }

private:
    std::ostream &out_;
    std::vector<std::pair<std::string, std::string>> values_;
};

template <typename Range>
std::string join(const Range &r, const char *sep = ",")
{
    std::ostringstream s;
    bool first = true;
    for (const auto &x : r) {
        if (!first)
            s << sep;
        s << x;
        first = false;
    }
    return s.str();
}

PatternedInstance load_checked(const std::string &prefix, bool reduce, std::ostream &err)
{
    auto inst = load_instance(prefix);
    if (const auto conflict = find_forbidden_twins(inst.pg.pattern)) {
        if (!reduce) {
            err << "warning: " << prefix << ".pattern is not reduced: nodes " << conflict->first << " and "
                << conflict->second << " are mergeable twins (rerun with --reduce to merge them)\n";
        } else {
            auto reduced = reduce_pattern(inst.pg, {});
            err << "note: reduced pattern from " << inst.pg.pattern.size() << " to "
                << reduced.pg.pattern.size() << " nodes\n";
            inst.pg = std::move(reduced.pg);
            inst.K = inst.pg.pattern.size();
            inst.H = apply_pattern(inst.pg);
        }
    }
    return inst;
}

struct GenArgs {
    std::size_t n = 0;
    std::size_t d = 1;
    std::size_t K = 1;
    std::uint64_t seed = 1;
    double skew = 0.0;
    std::string pattern_file;
    std::string family = "planted";
    std::vector<std::size_t> parts;
    double p = 0.5;
    std::string out;
};

int cmd_gen(const GenArgs &a, std::ostream &out)
{
    PatternedInstance inst;
    if (a.family == "reduction") {
        if (a.parts.empty())
            throw std::invalid_argument("--family reduction needs --parts");
        const auto kp = gen_kpartite(a.parts, a.p, a.seed);
        inst = gen_multicolored_reduction(kp, a.seed);
    } else {
        PlantedOptions opts;
        opts.skew = a.skew;
        if (!a.pattern_file.empty())
            opts.pattern = load_pattern(a.pattern_file);
        inst = gen_planted(a.n, a.d, a.K, a.seed, opts);
    }
    save_instance(a.out, inst);

    const auto sizes = inst.pg.part_sizes();
    const std::size_t d_actual = degeneracy(inst.G()).value;
    Report r(out);
    r.say("wrote " + a.out + ".{graph,pattern,partition,applied}");
    r.say("G: " + std::to_string(inst.G().order()) + " vertices, " + std::to_string(inst.G().edge_count()) +
          " edges, " + std::to_string(d_actual) + "-degenerate");
    r.say("pattern: " + std::to_string(inst.pg.pattern.size()) + " nodes, " +
          std::to_string(inst.pg.pattern.loop_count()) + " loops, " +
          std::to_string(inst.pg.pattern.edge_count()) + " edges");
    r.say("part sizes: " + join(sizes, " "));
    r.value("family", a.family);
    r.value("seed", a.seed);
    r.value("n", inst.G().order());
    r.value("edges", inst.G().edge_count());
    r.value("d", inst.d);
    r.value("d_actual", d_actual);
    r.value("K", inst.pg.pattern.size());
    r.value("part_sizes", join(sizes));
    r.value("applied_edges", inst.H.edge_count());
    return exit_ok;
}

struct ApplyArgs {
    std::string instance;
    std::string graph;
    std::string pattern;
    std::string partition;
    std::string out;
    bool reduce = false;
};

int cmd_apply(const ApplyArgs &a, std::ostream &out, std::ostream &err)
{
    PartitionedGraph pg;
    if (!a.instance.empty()) {
        pg = load_checked(a.instance, a.reduce, err).pg;
    } else {
        if (a.graph.empty() || a.pattern.empty() || a.partition.empty())
            throw std::invalid_argument("apply needs --instance or all of --graph, --pattern, --partition");
        pg.graph = load_edge_list(a.graph);
        pg.pattern = load_pattern(a.pattern);
        pg.assignment = load_partition(a.partition, pg.graph.order(), pg.pattern.size());
        if (const auto conflict = find_forbidden_twins(pg.pattern)) {
            if (a.reduce)
                pg = std::move(reduce_pattern(pg, {}).pg);
            else
                err << "warning: " << a.pattern << " is not reduced: nodes " << conflict->first << " and "
                    << conflict->second << " are mergeable twins (rerun with --reduce to merge them)\n";
        }
    }
    const std::string target = !a.out.empty() ? a.out : a.instance + ".applied";
    if (target == ".applied")
        throw std::invalid_argument("apply needs --out");
    const Graph h = apply_pattern(pg);
    save_edge_list(target, h);
    Report r(out);
    r.say("wrote " + target);
    r.value("n", h.order());
    r.value("edges", h.edge_count());
    return exit_ok;
}

struct RecoverArgs {
    std::string input;
    std::size_t d = 1;
    std::size_t K = 1;
    std::string out;
    std::string blowup;
    std::string truth;
};

int cmd_recover(const RecoverArgs &a, std::ostream &out)
{
    const Graph input = load_edge_list(a.input);
    RecoveryConfig cfg{a.d, a.K};
    const auto outcome = recover(input, cfg);
    save_edge_list(a.out, outcome.H);
    if (!a.blowup.empty())
        save_edge_list(a.blowup, outcome.F);

    Report r(out);
    r.say("recovered " + std::to_string(input.order()) + " vertices with d = " + std::to_string(a.d) +
          ", K = " + std::to_string(a.K) + "; wrote " + a.out);
    if (outcome.below_threshold)
        r.say("below threshold: n < 1100dK^5 = " + std::to_string(cfg.loop_threshold()) +
              ", output equals input");
    r.say("discovered sets: " + std::to_string(outcome.discovered_sets.size()) + ", residual |W|: " +
          std::to_string(outcome.residual_W.count()));
    r.value("n", input.order());
    r.value("d", a.d);
    r.value("K", a.K);
    r.value("loop_threshold", cfg.loop_threshold());
    r.value("below_threshold", outcome.below_threshold);
    r.value("discovered_sets", outcome.discovered_sets.size());
    r.value("removals", outcome.removal_log.size());
    r.value("residual_W", outcome.residual_W.count());
    r.value("iterations", outcome.iterations);
    r.value("aborted", outcome.aborted);
    r.value("F_edges", outcome.F.edge_count());
    r.value("H_edges", outcome.H.edge_count());
    if (a.truth.empty())
        return exit_ok;

    const auto truth = load_instance(a.truth);
    const auto v = verify_against_truth(outcome, truth, cfg);
    r.say("against truth " + a.truth + ": " + std::to_string(v.graph_disagreement.count()) +
          " disagreeing vertices, bound 4000dK^6 = " + std::to_string(v.bound) + (v.pass() ? ", pass" : ", FAIL"));
    if (!v.input_matches)
        r.say("warning: the input is not the applied graph of " + a.truth);
    r.value("input_matches", v.input_matches);
    r.value("disagreement", v.graph_disagreement.count());
    r.value("blowup_disagreement", v.blowup_disagreement.count());
    r.value("bound", v.bound);
    r.value("within_bound", v.within_bound);
    r.value("sets_match", v.sets_match);
    r.value("agree_outside", v.agree_outside);
    r.value("set_count_ok", v.set_count_ok);
    r.value("worst_set_distance", v.worst_set_distance);
    r.value("sets_perfect", v.sets_perfect);
    r.value("H_degeneracy", v.H_degeneracy);
    r.value("pass", v.pass());
    return v.pass() ? exit_ok : exit_bound_violated;
}

struct VerifyArgs {
    std::string recovered;
    std::string truth;
    std::size_t d = 1;
    std::size_t K = 1;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out)
{
    const Graph h = load_edge_list(a.recovered);
    const auto truth = load_instance(a.truth);
    if (h.order() != truth.G().order())
        throw std::invalid_argument("recovered graph has " + std::to_string(h.order()) + " vertices, truth has " +
                                    std::to_string(truth.G().order()));
    const RecoveryConfig cfg{a.d, a.K};
    cfg.validate();
    const auto dis = disagreement_vertices(h, truth.G());
    const std::size_t bound = cfg.disagreement_bound();
    const bool pass = dis.count() <= bound;
    Report r(out);
    r.say(a.recovered + " vs " + a.truth + ".graph: " + std::to_string(dis.count()) +
          " disagreeing vertices, bound 4000dK^6 = " + std::to_string(bound) + (pass ? ", pass" : ", FAIL"));
    r.value("n", h.order());
    r.value("disagreement", dis.count());
    r.value("bound", bound);
    r.value("degeneracy", degeneracy(h).value);
    r.value("pass", pass);
    return pass ? exit_ok : exit_bound_violated;
}

struct LemmaArgs {
    std::string instance;
    int which = 1;
    std::optional<std::size_t> d;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    bool reduce = false;
};

int cmd_check_lemma(const LemmaArgs &a, std::ostream &out, std::ostream &err)
{
    const auto inst = load_checked(a.instance, a.reduce, err);
    Report r(out);
    bool pass = false;
    if (a.which == 1) {
        const auto rep = check_lemma_infract(inst.pg, a.d);
        r.say("perfect-vertex counts with threshold 80dK^3 = " + std::to_string(rep.threshold));
        std::size_t eligible = 0;
        for (const auto &p : rep.parts) {
            r.say("  part " + std::to_string(p.node) + ": size " + std::to_string(p.size) + ", perfect " +
                  std::to_string(p.perfect) + ", required " + std::to_string(p.eligible ? p.required : 0) +
                  (p.eligible ? "" : " (small part)") + (p.pass ? "" : ", FAIL"));
            eligible += p.eligible ? 1 : 0;
        }
        r.value("lemma", 1);
        r.value("d", rep.d);
        r.value("K", rep.K);
        r.value("threshold", rep.threshold);
        r.value("max_part", rep.max_part);
        r.value("eligible_parts", eligible);
        pass = rep.pass;
    } else if (a.which == 2) {
        const std::size_t d = a.d ? *a.d : degeneracy(inst.G()).value;
        const auto samples = outconst_samples(inst.pg, a.samples, std::max<std::size_t>(d, 1), a.seed);
        const auto rep = check_lemma_outconst(inst.pg, samples, a.d);
        std::size_t failures = 0;
        std::size_t worst = 0;
        for (const auto &s : rep.samples) {
            failures += s.pass ? 0 : 1;
            worst = std::max(worst, s.outside);
        }
        r.say(std::to_string(rep.samples.size()) + " sample sets, similarity threshold 160dK^3 = " +
              std::to_string(rep.similarity_threshold) + ", outside bound 330dK^4 = " +
              std::to_string(rep.outside_bound));
        r.say("largest count outside the best part: " + std::to_string(worst));
        r.value("lemma", 2);
        r.value("d", rep.d);
        r.value("K", rep.K);
        r.value("samples", rep.samples.size());
        r.value("failures", failures);
        r.value("max_outside", worst);
        r.value("bound", rep.outside_bound);
        pass = rep.pass;
    } else if (a.which == 3) {
        const auto rep = check_lemma_maxdeg(inst.pg, a.d);
        r.say("top vertex " + std::to_string(rep.vertex) + " of the 160dK^3-similarity graph has degree " +
              std::to_string(rep.similarity_degree) + "; distance " + std::to_string(rep.distance) +
              " to node " + std::to_string(rep.best_node) + ", bound 570dK^4 = " +
              std::to_string(rep.perfect_bound));
        r.value("lemma", 3);
        r.value("d", rep.d);
        r.value("K", rep.K);
        r.value("vertex", rep.vertex);
        r.value("similarity_degree", rep.similarity_degree);
        r.value("best_node", rep.best_node);
        r.value("distance", rep.distance);
        r.value("bound", rep.perfect_bound);
        pass = rep.pass;
    } else {
        throw std::invalid_argument("--which must be 1, 2 or 3");
    }
    r.say(pass ? "pass" : "FAIL");
    r.value("pass", pass);
    return pass ? exit_ok : exit_bound_violated;
}

struct CliqueArgs {
    std::string instance;
    std::string input;
    std::size_t k = 1;
    std::optional<std::size_t> d;
    std::size_t K = 1;
    bool reduce = false;
};

int cmd_clique(const CliqueArgs &a, std::ostream &out, std::ostream &err)
{
    CliqueQuery q;
    q.k = a.k;
    Graph h;
    if (!a.input.empty()) {
        // No witness given: recover one, then search its exact pattern form.
        if (!a.instance.empty())
            throw std::invalid_argument("clique takes --instance or --input, not both");
        if (!a.d)
            throw std::invalid_argument("clique --input needs --d");
        h = load_edge_list(a.input);
        const RecoveryConfig cfg{*a.d, a.K};
        q.pg = witness_from_recovery(h, recover(h, cfg));
        q.d = degeneracy(q.pg.graph).value;
    } else {
        if (a.instance.empty())
            throw std::invalid_argument("clique needs --instance or --input");
        auto inst = load_checked(a.instance, a.reduce, err);
        q.d = a.d ? *a.d : inst.d;
        q.pg = std::move(inst.pg);
        h = std::move(inst.H);
    }
    const auto result = find_clique_detailed(q);
    if (result.clique && !is_clique(h, *result.clique))
        throw std::logic_error("clique witness failed re-verification");
    Report r(out);
    r.say(result.clique ? "clique: " + join(result.clique->members(), " ") : "none");
    if (!a.input.empty()) {
        r.say("recovered witness: " + std::to_string(q.pg.pattern.size()) + " parts, " + std::to_string(q.d) +
              "-degenerate");
        r.value("witness_K", q.pg.pattern.size());
    }
    r.value("k", a.k);
    r.value("d", q.d);
    r.value("found", result.clique.has_value());
    r.value("branch", result.branch == CliqueBranch::large_loop_part ? "large_loop_part" : "product_search");
    if (result.branch == CliqueBranch::large_loop_part)
        r.value("node", result.node);
    else
        r.value("part_cliques", join(result.part_clique_counts));
    return exit_ok;
}

struct SimilarityArgs {
    std::string graph;
    std::optional<std::size_t> k;
    std::size_t d = 1;
    std::size_t K = 1;
};

int cmd_similarity_stats(const SimilarityArgs &a, std::ostream &out)
{
    const Graph h = load_edge_list(a.graph);
    const std::size_t k = a.k ? *a.k : bounds::similarity(a.d, a.K);
    const VertexSet w = VertexSet::full(h.order());
    const SimilarityIndex index(h, w);
    const auto deg = index.degrees(k);
    Report r(out);
    r.value("n", h.order());
    r.value("threshold", k);
    r.value("centers", index.center_count());
    r.value("sparse", index.sparse_count());
    r.value("dense", index.dense_count());
    if (deg.empty()) {
        r.say("empty graph");
        return exit_ok;
    }
    const auto top = std::max_element(deg.begin(), deg.end());
    const double mean = static_cast<double>(std::accumulate(deg.begin(), deg.end(), std::size_t{0})) /
                        static_cast<double>(deg.size());
    const std::size_t isolated = static_cast<std::size_t>(std::count(deg.begin(), deg.end(), 0));
    r.say(std::to_string(k) + "-similarity graph on " + std::to_string(h.order()) + " vertices: max degree " +
          std::to_string(*top) + " at vertex " + std::to_string(top - deg.begin()));
    std::ostringstream m;
    m << mean;
    r.value("max_degree", *top);
    r.value("max_vertex", static_cast<std::size_t>(top - deg.begin()));
    r.value("mean_degree", m.str());
    r.value("isolated", isolated);
    return exit_ok;
}

struct DegeneracyArgs {
    std::string graph;
    bool order = false;
};

int cmd_degeneracy(const DegeneracyArgs &a, std::ostream &out)
{
    const Graph g = load_edge_list(a.graph);
    const auto d = degeneracy(g);
    Report r(out);
    r.say(a.graph + " is " + std::to_string(d.value) + "-degenerate");
    if (a.order)
        r.say("elimination order: " + join(d.elimination_order, " "));
    r.value("n", g.order());
    r.value("edges", g.edge_count());
    r.value("max_degree", g.max_degree());
    r.value("degeneracy", d.value);
    return exit_ok;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Pattern complementation, recovery and clique workbench", "graphrecover"};
    app.require_subcommand(1);
    std::optional<std::size_t> threads;
    app.add_option("--threads", threads, "Worker threads (default: GRAPHRECOVER_THREADS or all cores)")
        ->check(CLI::PositiveNumber);

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Generate an instance bundle");
    gen_cmd->add_option("--n", gen.n, "Vertex count");
    gen_cmd->add_option("--d", gen.d, "Degeneracy bound")->capture_default_str();
    gen_cmd->add_option("--K", gen.K, "Pattern node count")->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "Seed")->capture_default_str();
    gen_cmd->add_option("--skew", gen.skew, "Part-size skew (0 = uniform)")->capture_default_str();
    gen_cmd->add_option("--pattern", gen.pattern_file, "Use this pattern file instead of sampling one");
    gen_cmd->add_option("--family", gen.family, "planted or reduction")
        ->check(CLI::IsMember({"planted", "reduction"}))
        ->capture_default_str();
    gen_cmd->add_option("--parts", gen.parts, "Part sizes of the k-partite input (reduction)")->delimiter(',');
    gen_cmd->add_option("--p", gen.p, "Inter-part edge probability (reduction)")->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "Output prefix")->required();

    ApplyArgs apply;
    auto *apply_cmd = app.add_subcommand("apply", "Compute G^R from graph, pattern and partition");
    apply_cmd->add_option("--instance", apply.instance, "Instance prefix");
    apply_cmd->add_option("--graph", apply.graph, "Edge-list file");
    apply_cmd->add_option("--pattern", apply.pattern, "Pattern file");
    apply_cmd->add_option("--partition", apply.partition, "Partition file");
    apply_cmd->add_option("--out", apply.out, "Output edge list (default PREFIX.applied)");
    apply_cmd->add_flag("--reduce", apply.reduce, "Reduce a pattern that has mergeable twins");

    RecoverArgs rec;
    auto *rec_cmd = app.add_subcommand("recover", "Approximate G from G^R");
    rec_cmd->add_option("--input", rec.input, "Edge list of G^R")->required();
    rec_cmd->add_option("--d", rec.d, "Degeneracy bound")->required();
    rec_cmd->add_option("--K", rec.K, "Pattern size bound")->required();
    rec_cmd->add_option("--out", rec.out, "Recovered graph H")->required();
    rec_cmd->add_option("--blowup", rec.blowup, "Also write the blow-up approximation F");
    rec_cmd->add_option("--truth", rec.truth, "Instance prefix of the planted truth");

    VerifyArgs ver;
    auto *ver_cmd = app.add_subcommand("verify", "Compare a recovered graph against the planted G");
    ver_cmd->add_option("--recovered", ver.recovered, "Recovered edge list")->required();
    ver_cmd->add_option("--truth", ver.truth, "Instance prefix")->required();
    ver_cmd->add_option("--d", ver.d, "Degeneracy bound")->required();
    ver_cmd->add_option("--K", ver.K, "Pattern size bound")->required();

    LemmaArgs lem;
    auto *lem_cmd = app.add_subcommand("check-lemma", "Check a structural bound on an instance");
    lem_cmd->add_option("--instance", lem.instance, "Instance prefix")->required();
    lem_cmd->add_option("--which", lem.which, "1: perfect vertices, 2: similar sets, 3: similarity maximum")
        ->check(CLI::Range(1, 3))
        ->required();
    lem_cmd->add_option("--d", lem.d, "Degeneracy bound (default: actual)");
    lem_cmd->add_option("--samples", lem.samples, "Sample sets for check 2")->capture_default_str();
    lem_cmd->add_option("--seed", lem.seed, "Sample seed for check 2")->capture_default_str();
    lem_cmd->add_flag("--reduce", lem.reduce, "Reduce a pattern that has mergeable twins");

    CliqueArgs clq;
    auto *clq_cmd = app.add_subcommand("clique", "Find a k-clique of the applied graph");
    clq_cmd->add_option("--instance", clq.instance, "Instance prefix (witness given)");
    clq_cmd->add_option("--input", clq.input, "Edge list of G^R alone; a witness is recovered first");
    clq_cmd->add_option("--k", clq.k, "Clique size")->required()->check(CLI::PositiveNumber);
    clq_cmd->add_option("--d", clq.d, "Degeneracy bound (default: actual; recovery d with --input)");
    clq_cmd->add_option("--K", clq.K, "Recovery pattern size bound with --input")->capture_default_str();
    clq_cmd->add_flag("--reduce", clq.reduce, "Reduce a pattern that has mergeable twins");

    SimilarityArgs sim;
    auto *sim_cmd = app.add_subcommand("similarity-stats", "Degree statistics of the similarity graph");
    sim_cmd->add_option("--graph", sim.graph, "Edge-list file")->required();
    sim_cmd->add_option("--k", sim.k, "Similarity threshold (default 160dK^3)");
    sim_cmd->add_option("--d", sim.d, "d for the default threshold")->capture_default_str();
    sim_cmd->add_option("--K", sim.K, "K for the default threshold")->capture_default_str();

    DegeneracyArgs deg;
    auto *deg_cmd = app.add_subcommand("degeneracy", "Degeneracy of an edge list");
    deg_cmd->add_option("--graph", deg.graph, "Edge-list file")->required();
    deg_cmd->add_flag("--order", deg.order, "Print the elimination order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (threads)
            set_thread_count(*threads);
        if (gen_cmd->parsed()) {
            if (gen.family == "planted" && gen_cmd->count("--n") == 0)
                throw std::invalid_argument("gen needs --n");
            return cmd_gen(gen, out);
        }
        if (apply_cmd->parsed())
            return cmd_apply(apply, out, err);
        if (rec_cmd->parsed())
            return cmd_recover(rec, out);
        if (ver_cmd->parsed())
            return cmd_verify(ver, out);
        if (lem_cmd->parsed())
            return cmd_check_lemma(lem, out, err);
        if (clq_cmd->parsed())
            return cmd_clique(clq, out, err);
        if (sim_cmd->parsed())
            return cmd_similarity_stats(sim, out);
        if (deg_cmd->parsed())
            return cmd_degeneracy(deg, out);
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const PreconditionError &e) {
        err << "precondition unmet (" << e.bound() << "): " << e.what() << '\n';
        return exit_precondition;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

} // namespace graphrecover

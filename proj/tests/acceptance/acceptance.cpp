// Acceptance runner. `acceptance AC<n>` runs one criterion, no argument runs
// all of them. Each prints one "AC<n> PASS|FAIL ..." line; the exit status is
// non-zero when any selected criterion fails.

#include "graphrecover/cli.hpp"
#include "graphrecover/cliques.hpp"
#include "graphrecover/generators.hpp"
#include "graphrecover/graph_algorithms.hpp"
#include "graphrecover/io.hpp"
#include "graphrecover/lemma_checks.hpp"
#include "graphrecover/parallel.hpp"
#include "graphrecover/pattern.hpp"
#include "graphrecover/recovery.hpp"
#include "graphrecover/similarity.hpp"

#include "oracles.hpp"
#include "temp_dir.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace graphrecover;

namespace {

/// Collects failures; the first few are echoed in the summary line.
class Outcome {
public:
    void check(bool ok, const std::string &what)
    {
        ++checks_;
        if (ok)
            return;
        if (failures_.size() < 5)
            failures_.push_back(what);
        ++failed_;
    }
    void note(const std::string &s) { notes_.push_back(s); }

    bool pass() const { return failed_ == 0 && checks_ > 0; }
    std::string summary() const
    {
        std::ostringstream s;
        s << checks_ << " checks";
        if (failed_ > 0)
            s << ", " << failed_ << " failed";
        for (const auto &n : notes_)
            s << "; " << n;
        for (const auto &f : failures_)
            s << "; fail: " << f;
        return s.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

std::string str(std::size_t v) { return std::to_string(v); }

/// u-perfect sets built from pattern adjacency one vertex at a time.
std::vector<VertexSet> perfect_sets_naive(const PartitionedGraph &pg)
{
    const std::size_t n = pg.graph.order();
    std::vector<VertexSet> sets(pg.pattern.size(), VertexSet(n));
    for (Node u = 0; u < pg.pattern.size(); ++u)
        for (Vertex v = 0; v < n; ++v)
            if (pg.pattern.adjacent(u, pg.assignment[v]))
                sets[u].insert(v);
    return sets;
}

std::size_t distance_without_self(const Graph &h, Vertex v, const VertexSet &target)
{
    std::size_t c = 0;
    for (Vertex x = 0; x < h.order(); ++x)
        if (x != v && h.adjacent(v, x) != target.contains(x))
            ++c;
    return c;
}

PlantedOptions loop_node()
{
    PlantedOptions o;
    o.pattern = Pattern(1);
    o.pattern->set_loop(0);
    return o;
}

void ac1(Outcome &o)
{
    Rng rng(1001);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = rng.below(201);
        const std::size_t k = 1 + rng.below(5);
        const std::size_t d = rng.below(4);
        auto pg = oracle::random_partitioned(n, k, d, rng);
        const Graph g = pg.graph;
        const Graph h = apply_pattern(pg);
        o.check(h == oracle::apply_pattern_pairwise(pg), "pairwise flip, case " + str(t));
        pg.graph = h;
        o.check(apply_pattern(pg) == g, "involution, case " + str(t));
    }
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng.below(12);
        const Graph g = oracle::random_graph(n, rng.unit(), rng);
        SubsetList subsets;
        const std::size_t k = rng.below(4);
        for (std::size_t i = 0; i < k; ++i)
            subsets.push_back(oracle::random_set(n, rng.unit(), rng));
        const Graph expected = oracle::complement_sequentially(g, subsets);
        const auto pg = subsets_to_pattern(g, subsets);
        o.check(is_pattern(pg.pattern) && pg.pattern.size() <= (std::size_t{1} << k),
                "subsets_to_pattern shape, case " + str(t));
        o.check(apply_pattern(pg) == expected, "subsets to pattern, case " + str(t));
        o.check(oracle::complement_sequentially(g, pattern_to_subsets(pg)) == expected,
                "pattern to subsets, case " + str(t));
    }
}

void ac2(Outcome &o)
{
    Rng rng(2002);
    for (int t = 0; t < 200; ++t) {
        const std::size_t k = 1 + rng.below(6);
        auto pg = oracle::random_partitioned(1 + rng.below(50), k, rng.below(4), rng, false);
        std::vector<Node> removed;
        for (Node u = 0; u < k; ++u)
            if (rng.below(4) == 0)
                removed.push_back(u);
        const auto red = reduce_pattern(pg, removed);
        VertexSet w(pg.graph.order());
        for (Vertex v = 0; v < pg.graph.order(); ++v)
            if (std::find(removed.begin(), removed.end(), pg.assignment[v]) == removed.end())
                w.insert(v);
        o.check(red.original_vertex == w.members(), "surviving vertices, case " + str(t));
        o.check(is_pattern(red.pg.pattern), "reduced pattern valid, case " + str(t));
        const auto restricted = induced_subgraph(oracle::apply_pattern_pairwise(pg), w);
        o.check(apply_pattern(red.pg) == restricted.graph, "G^R[W] = G[W]^R0, case " + str(t));
    }
}

void ac3(Outcome &o)
{
    std::size_t eligible = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t k = 1 + seed % 3;
        const auto inst = gen_planted(10000, 1, k, 3000 + seed);
        const auto rep = check_lemma_infract(inst.pg, 1);
        o.check(rep.pass, "lemma report, seed " + str(seed));
        // Independent recount.
        const auto sets = perfect_sets_naive(inst.pg);
        const std::size_t threshold = 80 * k * k * k;
        std::vector<std::size_t> perfect(inst.pg.pattern.size(), 0);
        for (Vertex v = 0; v < 10000; ++v) {
            auto target = sets[inst.pg.assignment[v]];
            target.erase(v);
            if (symmetric_difference_size(inst.H.neighborhood(v), target) <= threshold)
                ++perfect[inst.pg.assignment[v]];
        }
        const auto sizes = inst.pg.part_sizes();
        const std::size_t big = *std::max_element(sizes.begin(), sizes.end());
        const std::size_t kk = inst.pg.pattern.size();
        for (Node u = 0; u < kk; ++u) {
            o.check(rep.parts[u].perfect == perfect[u], "count mismatch, seed " + str(seed));
            if (4 * kk * sizes[u] < big)
                continue;
            ++eligible;
            // perfect >= (1 - 1/(10K)) |V_u|  <=>  10K perfect >= (10K - 1) |V_u|
            o.check(10 * kk * perfect[u] >= (10 * kk - 1) * sizes[u],
                    "part " + str(u) + " seed " + str(seed) + ": " + str(perfect[u]) + "/" + str(sizes[u]));
        }
    }
    o.note(str(eligible) + " eligible parts");
}

void ac4(Outcome &o)
{
    auto one = [&](std::size_t n, std::size_t k, std::uint64_t seed, bool naive_top) {
        const auto inst = gen_planted(n, 1, k, seed);
        const auto rep = check_lemma_maxdeg(inst.pg, 1);
        const std::size_t bound = 570 * k * k * k * k;
        o.check(rep.pass, "report, K=" + str(k) + " seed " + str(seed));
        const auto sets = perfect_sets_naive(inst.pg);
        std::size_t best = ~std::size_t{0};
        for (const auto &s : sets)
            best = std::min(best, distance_without_self(inst.H, rep.vertex, s));
        o.check(best == rep.distance, "distance recount, K=" + str(k) + " seed " + str(seed));
        o.check(best <= bound, "perfect, K=" + str(k) + " seed " + str(seed) + ": " + str(best));
        if (naive_top) {
            const auto w = VertexSet::full(n);
            const std::size_t threshold = 160 * k * k * k;
            Vertex arg = 0;
            std::size_t top = 0;
            for (Vertex v = 0; v < n; ++v) {
                const std::size_t deg = similarity_degree(inst.H, w, v, threshold);
                if (v == 0 || deg > top) {
                    top = deg;
                    arg = v;
                }
            }
            o.check(arg == rep.vertex && top == rep.similarity_degree, "top vertex, seed " + str(seed));
        }
    };
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        one(1100, 1, 4000 + seed, true);
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        one(35200, 2, 4100 + seed, false);
}

void ac5(Outcome &o)
{
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const RecoveryConfig cfg{1, 1};
        const auto inst = gen_planted(5000, 1, 1, 5000 + seed, loop_node());
        const auto out = recover(inst.H, cfg);
        const auto rep = verify_against_truth(out, inst, cfg);
        const auto dis = oracle::disagreement_naive(out.H, inst.G());
        o.check(dis == rep.graph_disagreement, "disagreement recount, seed " + str(seed));
        o.check(dis.count() <= 4000, "K=1 bound, seed " + str(seed) + ": " + str(dis.count()));
        o.check(out.discovered_sets.size() <= 1, "K=1 set count, seed " + str(seed));
        o.check(rep.pass(), "K=1 verification, seed " + str(seed));
        o.note("K=1 seed " + str(seed) + " |dis|=" + str(dis.count()));
    }
    {
        const RecoveryConfig cfg{1, 2};
        const auto inst = gen_planted(40000, 1, 2, 5100);
        const auto out = recover(inst.H, cfg);
        const auto rep = verify_against_truth(out, inst, cfg);
        const Graph blowup = perfect_blowup(inst.pg.pattern, inst.pg.assignment);
        o.check(out.discovered_sets.size() <= 2, "K=2 set count " + str(out.discovered_sets.size()));
        o.check(oracle::agree_without(out.F, blowup, rep.blowup_disagreement), "K=2 F = E^R outside U*");
        o.check(rep.graph_disagreement == rep.blowup_disagreement, "K=2 disagreement sets");
        o.check(rep.input_matches, "K=2 input");
        o.note("K=2 sets=" + str(out.discovered_sets.size()) + " |U*|=" + str(rep.blowup_disagreement.count()) +
               " residual=" + str(out.residual_W.count()));
    }
}

void ac6(Outcome &o)
{
    Rng rng(6006);
    std::size_t found = 0;
    std::size_t asked = 0;
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + rng.below(15);
        const std::size_t d = rng.below(3);
        const auto pg = oracle::random_partitioned(n, 1 + rng.below(3), d, rng);
        const Graph h = oracle::apply_pattern_pairwise(pg);
        for (std::size_t k = 1; k <= n + 1; ++k) {
            const auto clique = find_clique({k, pg, d});
            const bool expected = oracle::has_clique_bruteforce(h, k);
            o.check(clique.has_value() == expected, "decision, case " + str(t) + " k=" + str(k));
            if (clique)
                o.check(clique->count() == k && oracle::is_clique_naive(h, clique->members()),
                        "witness, case " + str(t) + " k=" + str(k));
            found += expected ? 1 : 0;
            ++asked;
        }
    }
    o.note(str(found) + "/" + str(asked) + " queries have a clique");
}

void ac7(Outcome &o)
{
    Rng rng(7007);
    std::size_t yes = 0;
    for (int t = 0; t < 100; ++t) {
        std::vector<std::size_t> sizes(4);
        for (auto &s : sizes)
            s = 1 + rng.below(3);
        const auto kp = gen_kpartite(sizes, 0.3 + 0.6 * rng.unit(), rng.next());
        const auto inst = gen_multicolored_reduction(kp, rng.next());
        const bool source = oracle::has_multicolored_clique(kp);
        const bool target = oracle::has_clique_bruteforce(oracle::apply_pattern_pairwise(inst.pg), 10);
        o.check(source == target, "case " + str(t));
        yes += source ? 1 : 0;
    }
    o.note(str(yes) + "/100 inputs have a multicoloured 4-clique");
}

void ac8(Outcome &o)
{
    Rng rng(8008);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng.below(8);
        const Graph g = oracle::random_graph(n, rng.unit(), rng);
        o.check(degeneracy(g).value == oracle::degeneracy_bruteforce(g), "case " + str(t));
    }
}

std::string slurp(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "graphrecover");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    set_thread_count(0);
    return code;
}

void ac9(Outcome &o)
{
    testutil::TempDir dir;
    const std::string many = str(std::max<std::size_t>(4, std::thread::hardware_concurrency()));
    const std::vector<std::string> exts{".graph", ".pattern", ".partition", ".applied"};
    const std::vector<std::vector<std::string>> gens{
        {"--n", "3000", "--d", "3", "--K", "4", "--seed", "99"},
        {"--n", "2000", "--d", "1", "--K", "3", "--seed", "5", "--skew", "0.7"},
        {"--family", "reduction", "--parts", "3,2,3,1", "--p", "0.5", "--seed", "11"},
    };
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::vector<std::pair<std::string, std::string>> runs{{"1", "a"}, {"1", "b"}, {many, "c"}};
        for (const auto &[threads, tag] : runs) {
            auto args = std::vector<std::string>{"--threads", threads, "gen"};
            args.insert(args.end(), gens[g].begin(), gens[g].end());
            args.push_back("--out");
            args.push_back(dir / (tag + str(g)));
            o.check(cli(args) == exit_ok, "gen exit, family " + str(g));
        }
        for (const auto &ext : exts) {
            const auto a = slurp(dir / ("a" + str(g) + ext));
            o.check(!a.empty(), "gen output " + ext);
            o.check(a == slurp(dir / ("b" + str(g) + ext)), "two runs differ, " + ext);
            o.check(a == slurp(dir / ("c" + str(g) + ext)), "thread counts differ, " + ext);
        }
    }

    o.check(cli({"gen", "--n", "2500", "--d", "1", "--K", "1", "--seed", "12", "--out", dir / "r"}) == exit_ok,
            "gen for recover");
    std::ofstream(dir / "loop.pattern") << "1\nloop 0\n";
    o.check(cli({"gen", "--n", "2500", "--d", "1", "--pattern", dir / "loop.pattern", "--seed", "13", "--out",
                 dir / "q"}) == exit_ok,
            "gen complement for recover");
    for (const std::string prefix : {"r", "q"}) {
        for (const auto &[threads, tag] : std::vector<std::pair<std::string, std::string>>{{"1", "1"}, {many, "m"}})
            o.check(cli({"--threads", threads, "recover", "--input", dir / (prefix + ".applied"), "--d", "1", "--K",
                         "1", "--out", dir / (prefix + "H" + tag), "--blowup", dir / (prefix + "F" + tag)}) ==
                        exit_ok,
                    "recover exit " + prefix);
        o.check(slurp(dir / (prefix + "H1")) == slurp(dir / (prefix + "Hm")), "recovered graph differs " + prefix);
        o.check(slurp(dir / (prefix + "F1")) == slurp(dir / (prefix + "Fm")), "blow-up differs " + prefix);
    }
    o.check(load_edge_list(dir / "qF1").edge_count() > 0, "complement recovery is non-trivial");
    o.note("threads 1 vs " + many);
}

struct Criterion {
    const char *name;
    const char *title;
    std::function<void(Outcome &)> run;
};

} // namespace

int main(int argc, char **argv)
{
    const std::vector<Criterion> all{
        {"AC1", "involution and subset round trips", ac1},
        {"AC2", "reduction commutes with restriction", ac2},
        {"AC3", "perfect-vertex counts, d=1, n=10^4", ac3},
        {"AC4", "similarity maximum is perfect", ac4},
        {"AC5", "end-to-end recovery", ac5},
        {"AC6", "clique decisions match exhaustive search", ac6},
        {"AC7", "4-partite reduction correctness", ac7},
        {"AC8", "degeneracy matches brute force", ac8},
        {"AC9", "determinism across runs and thread counts", ac9},
    };
    std::vector<const Criterion *> selected;
    for (int i = 1; i < argc; ++i) {
        const auto it = std::find_if(all.begin(), all.end(), [&](const Criterion &c) { return argv[i] == std::string(c.name); });
        if (it == all.end()) {
            std::cerr << "unknown criterion " << argv[i] << '\n';
            return 1;
        }
        selected.push_back(&*it);
    }
    if (selected.empty())
        for (const auto &c : all)
            selected.push_back(&c);

    bool ok = true;
    for (const Criterion *c : selected) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c->run(o);
        } catch (const std::exception &e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.precision(3);
        line << c->name << (o.pass() ? " PASS " : " FAIL ") << c->title << " (" << o.summary() << "; " << secs
             << " s)";
        std::cout << line.str() << std::endl;
        ok = ok && o.pass();
    }
    return ok ? 0 : 1;
}

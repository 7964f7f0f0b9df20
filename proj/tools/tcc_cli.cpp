// Command-line front end: instance generation, protocol runs with bit
// accounting, scaling sweeps as CSV, and the library's verification suites.
// Exit codes: 0 success, 1 verification/protocol failure, 2 usage error.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tcc/cis.hpp"
#include "tcc/fooling.hpp"
#include "tcc/gssigma.hpp"
#include "tcc/gt.hpp"
#include "tcc/king_protocol.hpp"
#include "tcc/maxsum.hpp"
#include "tcc/pmf.hpp"
#include "tcc/query_king.hpp"
#include "tcc/rank_game.hpp"
#include "tcc/rng.hpp"
#include "tcc/verify.hpp"

using namespace tcc;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    std::cout << path << "\n";
}

int thread_budget() {
    if (const char* env = std::getenv("TOURNEYCC_THREADS")) {
        int k = std::atoi(env);
        if (k >= 1) return k;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

/// Run fn(i) for i in [0, count) on up to thread_budget() threads. Results
/// must be written to caller-owned slots indexed by i.
void parallel_for(int64_t count, const std::function<void(int64_t)>& fn) {
    int threads = std::min<int64_t>(thread_budget(), count);
    if (threads <= 1) {
        for (int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int64_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int64_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

struct RunReport {
    int64_t output = 0;
    const Transcript* tr = nullptr;
};

void print_report(const std::string& label, int64_t output, const Transcript& tr, bool dump) {
    std::cout << label << "=" << output << " bits_alice=" << tr.bits_alice << " bits_bob=" << tr.bits_bob
              << " bits_total=" << tr.total_bits() << " rounds=" << tr.rounds << "\n";
    if (dump) std::cout << tr.dump();
}

int cmd_gen(const std::string& type, int n, uint64_t seed, const std::string& set_str,
            const std::string& sigma_str, int sigma_index, const std::string& family,
            const std::string& out_prefix) {
    auto emit_partition = [&](int verts) {
        if (family.empty()) return;
        EdgePartition p = family == "all-alice"     ? all_alice_partition(verts)
                          : family == "split-halves" ? split_halves_partition(verts)
                                                      : random_partition(verts, derive_seed(seed, 0x70ULL));
        write_file(out_prefix + ".part", serialize(p));
    };
    if (type == "random") {
        write_file(out_prefix + ".tour", serialize(random_tournament(n, seed)));
        emit_partition(n);
        return 0;
    }
    if (type == "transitive") {
        Permutation sigma = sigma_str.empty() ? Permutation::identity(n) : Permutation{parse_int_list(sigma_str)};
        write_file(out_prefix + ".tour", serialize(transitive_from_permutation(sigma)));
        emit_partition(n);
        return 0;
    }
    if (type == "gssigma") {
        VertexSet s = parse_vertex_set(set_str);
        Permutation sigma = sigma_str.empty() ? Permutation::identity(n) : Permutation{parse_int_list(sigma_str)};
        GSSigma g = build_gssigma(n, s, sigma);
        write_file(out_prefix + ".tour", serialize(g.t));
        write_file(out_prefix + ".part", serialize(g.p));
        return 0;
    }
    if (type == "fooling") {
        std::vector<int> sigma;
        if (!sigma_str.empty()) {
            sigma = parse_int_list(sigma_str);
        } else {
            auto set = greedy_fooling_set(n);
            if (sigma_index < 0 || size_t(sigma_index) >= set.size())
                throw CLI::ValidationError("--sigma-index out of range (set size " + std::to_string(set.size()) + ")");
            sigma = set[size_t(sigma_index)];
        }
        FoolingInput f = fooling_input(n, sigma);
        write_file(out_prefix + ".tour", serialize(f.t));
        write_file(out_prefix + ".part", serialize(f.p));
        return 0;
    }
    throw CLI::ValidationError("unknown --type " + type);
}

int cmd_run(const std::string& protocol, const std::string& tour_path, const std::string& part_path,
            const std::string& graph_path, const std::string& clique_str, const std::string& indep_str,
            const std::string& a_str, const std::string& b_str, uint64_t x, uint64_t y, uint64_t universe,
            uint64_t seed, bool dump) {
    if (protocol == "king" || protocol == "src" || protocol == "mod-det" || protocol == "mod-rand") {
        if (tour_path.empty()) throw CLI::ValidationError("--tournament is required for " + protocol);
        Tournament t = parse_tournament(read_file(tour_path));
        EdgePartition p = part_path.empty() ? all_alice_partition(t.n()) : parse_partition(read_file(part_path));
        if (protocol == "king") {
            KingResult r = king_protocol(t, p);
            print_report("king", r.king, r.tr, dump);
        } else if (protocol == "src") {
            SrcResult r = src_protocol(t, p);
            print_report("source", r.source, r.tr, dump);
            if (r.source == 0) std::cout << "(no source)\n";
        } else {
            MaxsumResult r = mod_protocol(t, p, protocol == "mod-det" ? ModMode::det : ModMode::rand, seed);
            print_report("mod", r.index, r.tr, dump);
        }
        return 0;
    }
    if (protocol == "cis") {
        if (graph_path.empty()) throw CLI::ValidationError("--graph is required for cis");
        UndirectedGraph g = parse_graph(read_file(graph_path));
        CISInstance inst{g, parse_vertex_set(clique_str), parse_vertex_set(indep_str)};
        CisResult r = cis_protocol(inst);
        print_report("intersection", r.vertex, r.tr, dump);
        return 0;
    }
    if (protocol == "maxsum-det" || protocol == "maxsum-rand") {
        if (a_str.empty() || b_str.empty()) throw CLI::ValidationError("--a and --b are required for maxsum");
        DegreeVector a = parse_int_list(a_str), b = parse_int_list(b_str);
        MaxsumResult r =
            protocol == "maxsum-det" ? maxsum_det(a, b) : maxsum_rand(a, b, derive_seed(seed, 0x6d78ULL));
        print_report("index", r.index, r.tr, dump);
        return 0;
    }
    if (protocol == "gt") {
        uint64_t N = universe ? universe : std::max(x, y);
        GtResult r = gt_protocol(x, y, N, derive_seed(seed, 0x6774ULL));
        print_report("gt", r.bit, r.tr, dump);
        return 0;
    }
    throw CLI::ValidationError("unknown --protocol " + protocol);
}

struct SweepRow {
    int n = 0;
    int trial = 0;
    uint64_t seed = 0;
    uint64_t bits = 0;
    bool correct = false;
};

SweepRow sweep_one(const std::string& protocol, int n, int trial, uint64_t base_seed,
                   const std::string& family) {
    SweepRow row;
    row.n = n;
    row.trial = trial;
    row.seed = derive_seed(base_seed, uint64_t(n), uint64_t(trial));
    RunOptions light;
    light.record_messages = false;

    if (protocol == "gt") {
        uint64_t N = uint64_t(1) << std::min(n, 62);
        Rng rng(row.seed);
        uint64_t x = rng.below(N) + 1, y = rng.below(N) + 1;
        GtResult r = gt_protocol(x, y, N, derive_seed(row.seed, 1), light);
        row.bits = r.tr.total_bits();
        row.correct = (r.bit == 1) == (x >= y);
        return row;
    }
    if (protocol == "maxsum-det" || protocol == "maxsum-rand") {
        Rng rng(row.seed);
        DegreeVector a(size_t(n), 0), b(size_t(n), 0);
        for (int k = 0; k < n; ++k) {
            a[size_t(k)] = int(rng.below(uint64_t(n)));
            b[size_t(k)] = int(rng.below(uint64_t(n)));
        }
        MaxsumResult r = protocol == "maxsum-det" ? maxsum_det(a, b, light)
                                                  : maxsum_rand(a, b, derive_seed(row.seed, 2), light);
        row.bits = r.tr.total_bits();
        int got = a[size_t(r.index - 1)] + b[size_t(r.index - 1)];
        int best = 0;
        for (int k = 0; k < n; ++k) best = std::max(best, a[size_t(k)] + b[size_t(k)]);
        row.correct = got == best;
        return row;
    }

    Tournament t = random_tournament(n, row.seed);
    EdgePartition p = family == "all-alice"     ? all_alice_partition(n)
                      : family == "split-halves" ? split_halves_partition(n)
                                                  : random_partition(n, derive_seed(row.seed, 3));
    if (protocol == "king") {
        KingResult r = king_protocol(t, p, light);
        row.bits = r.tr.total_bits();
        row.correct = is_king(t, r.king);
    } else if (protocol == "src") {
        SrcResult r = src_protocol(t, p, light);
        row.bits = r.tr.total_bits();
        row.correct = r.source == source_of(t);
    } else if (protocol == "mod-det" || protocol == "mod-rand") {
        MaxsumResult r =
            mod_protocol(t, p, protocol == "mod-det" ? ModMode::det : ModMode::rand, derive_seed(row.seed, 4), light);
        row.bits = r.tr.total_bits();
        VertexSet mod = max_out_degree_set(t);
        row.correct = std::binary_search(mod.begin(), mod.end(), r.index);
    } else {
        throw CLI::ValidationError("unknown sweep protocol " + protocol);
    }
    return row;
}

int cmd_sweep(const std::string& protocol, const std::vector<int>& sizes, int trials, uint64_t seed,
              const std::string& family) {
    std::cout << "n,trial,seed,bits,correct\n";
    for (int n : sizes) {
        std::vector<SweepRow> rows(size_t(trials), SweepRow{});
        parallel_for(trials, [&](int64_t i) { rows[size_t(i)] = sweep_one(protocol, n, int(i), seed, family); });
        for (const SweepRow& r : rows)
            std::cout << r.n << "," << r.trial << "," << r.seed << "," << r.bits << "," << (r.correct ? 1 : 0)
                      << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, int max_n) {
    SuiteResult r;
    if (suite == "kings")
        r = verify_kings(max_n ? max_n : 5);
    else if (suite == "source-cis")
        r = verify_source_cis(max_n ? max_n : 4);
    else if (suite == "gssigma")
        r = verify_gssigma(max_n ? max_n : 4);
    else if (suite == "fooling")
        r = verify_fooling();
    else if (suite == "pmf")
        r = verify_pmf(max_n ? max_n : 6);
    else if (suite == "rank")
        r = verify_rank();
    else if (suite == "query")
        r = verify_query(max_n ? max_n : 5);
    else
        throw CLI::ValidationError("unknown suite " + suite);
    std::cout << "suite=" << r.name << " checked=" << r.checked << " failed=" << r.failed << "\n";
    for (const std::string& note : r.notes) std::cout << "  " << note << "\n";
    return r.ok() ? 0 : 1;
}

int cmd_rank_game(int n, const std::string& prover, const std::string& delayer, int trials, uint64_t seed) {
    if (prover != "alg3") throw CLI::ValidationError("unknown prover " + prover);
    std::cout << "trial,seed,score,queries,output,valid\n";
    uint64_t max_score = 0, total_queries = 0;
    std::vector<uint64_t> score_hist(size_t(n), 0);
    for (int trial = 0; trial < trials; ++trial) {
        uint64_t s = derive_seed(seed, uint64_t(trial));
        DelayerFn fn;
        if (delayer == "defer")
            fn = delayer_defer_first(n - 1);
        else if (delayer == "adversarial")
            fn = delayer_defer_first(0);
        else if (delayer == "random")
            fn = delayer_random(s);
        else
            throw CLI::ValidationError("unknown delayer " + delayer);
        GameResult g = play_rank_game_alg3(n, fn);
        std::cout << trial << "," << s << "," << g.delayer_score << "," << g.queries << "," << g.prover_output
                  << "," << (g.valid ? 1 : 0) << "\n";
        if (!g.valid) return 1;
        ++score_hist[size_t(g.delayer_score)];
        max_score = std::max(max_score, uint64_t(g.delayer_score));
        total_queries += uint64_t(g.queries);
    }
    std::cerr << "max_score=" << max_score << " mean_queries=" << double(total_queries) / double(trials)
              << " cap=" << n - 1 << " score_histogram=";
    bool first = true;
    for (size_t score = 0; score < score_hist.size(); ++score)
        if (score_hist[score]) {
            std::cerr << (first ? "" : ",") << score << ":" << score_hist[score];
            first = false;
        }
    std::cerr << "\n";
    return 0;
}

int cmd_query_king(int n, uint64_t seed, int trials) {
    std::cout << "trial,seed,queries,king,valid\n";
    uint64_t total = 0, worst = 0;
    bool all_valid = true;
    std::vector<QueryKingResult> results(size_t(trials), QueryKingResult{});
    std::vector<char> valid(size_t(trials), 0);
    parallel_for(trials, [&](int64_t i) {
        uint64_t s = derive_seed(seed, uint64_t(i));
        Tournament t = random_tournament(n, s);
        CountingOracle oracle(t);
        Rng rng(derive_seed(s, 0x71ULL));
        results[size_t(i)] = randomized_king_query(oracle, rng);
        valid[size_t(i)] = is_king(t, results[size_t(i)].king) ? 1 : 0;
    });
    for (int trial = 0; trial < trials; ++trial) {
        const QueryKingResult& q = results[size_t(trial)];
        std::cout << trial << "," << derive_seed(seed, uint64_t(trial)) << "," << q.queries << "," << q.king << ","
                  << int(valid[size_t(trial)]) << "\n";
        total += q.queries;
        worst = std::max(worst, q.queries);
        all_valid = all_valid && valid[size_t(trial)];
    }
    std::cerr << "mean_queries=" << double(total) / double(trials) << " max_queries=" << worst << "\n";
    return all_valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-party protocols on tournaments: kings, sources, max out-degree"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate tournament / partition files");
    std::string gen_type = "random", gen_set, gen_sigma, gen_family, gen_out = "instance";
    int gen_n = 8, gen_sigma_index = 0;
    uint64_t gen_seed = 0;
    gen->add_option("--type", gen_type, "random|transitive|gssigma|fooling");
    gen->add_option("--n", gen_n, "vertex count (base n for gssigma, even n for fooling)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--set", gen_set, "S as comma-separated labels (gssigma)");
    gen->add_option("--sigma", gen_sigma, "permutation ranks, comma-separated");
    gen->add_option("--sigma-index", gen_sigma_index, "index into the greedy fooling set");
    gen->add_option("--partition-family", gen_family,
                    "also write a partition file: random|all-alice|split-halves");
    gen->add_option("--out", gen_out, "output path prefix");

    // run
    auto* run = app.add_subcommand("run", "run one protocol and report bits");
    std::string run_protocol, run_tour, run_part, run_graph, run_clique, run_indep, run_a, run_b;
    uint64_t run_x = 1, run_y = 1, run_universe = 0, run_seed = 0;
    bool run_dump = false;
    run->add_option("--protocol", run_protocol, "king|src|cis|mod-det|mod-rand|maxsum-det|maxsum-rand|gt")
        ->required();
    run->add_option("--tournament", run_tour, "tournament file");
    run->add_option("--partition", run_part, "partition file (default: all pairs to Alice)");
    run->add_option("--graph", run_graph, "graph file (cis)");
    run->add_option("--clique", run_clique, "Bob's clique, comma-separated (cis)");
    run->add_option("--indep", run_indep, "Alice's independent set, comma-separated (cis)");
    run->add_option("--a", run_a, "Alice's vector, comma-separated (maxsum)");
    run->add_option("--b", run_b, "Bob's vector, comma-separated (maxsum)");
    run->add_option("--x", run_x, "Alice's operand (gt)");
    run->add_option("--y", run_y, "Bob's operand (gt)");
    run->add_option("--universe", run_universe, "operand universe N (gt; default max(x,y))");
    run->add_option("--seed", run_seed, "public randomness seed");
    run->add_flag("--dump-transcript", run_dump, "print sender,length,bits per message");

    // sweep
    auto* sweep = app.add_subcommand(
        "sweep", "scaling sweep; CSV on stdout with header n,trial,seed,bits,correct (correct is 0/1)");
    std::string sweep_protocol, sweep_sizes = "64,128,256", sweep_family = "random";
    int sweep_trials = 10;
    uint64_t sweep_seed = 0;
    sweep->add_option("--protocol", sweep_protocol, "king|src|mod-det|mod-rand|maxsum-det|maxsum-rand|gt")
        ->required();
    sweep->add_option("--n", sweep_sizes, "comma-separated sizes");
    sweep->add_option("--trials", sweep_trials, "trials per size");
    sweep->add_option("--seed", sweep_seed, "base seed (trial seeds derive from it)");
    sweep->add_option("--partition-family", sweep_family, "random|all-alice|split-halves");

    // verify
    auto* verify = app.add_subcommand("verify", "run a module invariant suite");
    std::string verify_suite;
    int verify_max_n = 0;
    verify->add_option("--suite", verify_suite, "kings|source-cis|gssigma|fooling|pmf|rank|query")->required();
    verify->add_option("--max-n", verify_max_n, "exhaustive sweep bound (suite default if omitted)");

    // rank-game
    auto* rank = app.add_subcommand(
        "rank-game", "prover-delayer plays; CSV header trial,seed,score,queries,output,valid; summary on stderr");
    int rank_n = 8, rank_trials = 1;
    std::string rank_prover = "alg3", rank_delayer = "defer";
    uint64_t rank_seed = 0;
    rank->add_option("--n", rank_n, "variables are the pairs of an n-vertex tournament");
    rank->add_option("--prover", rank_prover, "alg3");
    rank->add_option("--delayer", rank_delayer, "defer|random|adversarial");
    rank->add_option("--trials", rank_trials, "independent plays");
    rank->add_option("--seed", rank_seed, "delayer seed");

    // query-king
    auto* query = app.add_subcommand(
        "query-king", "query-model king search; CSV header trial,seed,queries,king,valid; summary on stderr");
    int query_n = 64, query_trials = 10;
    uint64_t query_seed = 0;
    query->add_option("--n", query_n, "vertex count");
    query->add_option("--seed", query_seed, "base seed");
    query->add_option("--trials", query_trials, "independent runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2; --help exits 0
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_type, gen_n, gen_seed, gen_set, gen_sigma, gen_sigma_index, gen_family, gen_out);
        if (run->parsed())
            return cmd_run(run_protocol, run_tour, run_part, run_graph, run_clique, run_indep, run_a, run_b, run_x,
                           run_y, run_universe, run_seed, run_dump);
        if (sweep->parsed())
            return cmd_sweep(sweep_protocol, parse_int_list(sweep_sizes), sweep_trials, sweep_seed, sweep_family);
        if (verify->parsed()) return cmd_verify(verify_suite, verify_max_n);
        if (rank->parsed()) return cmd_rank_game(rank_n, rank_prover, rank_delayer, rank_trials, rank_seed);
        if (query->parsed()) return cmd_query_king(query_n, query_seed, query_trials);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

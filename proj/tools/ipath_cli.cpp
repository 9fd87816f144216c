#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ipath/errors.hpp"
#include "ipath/generators.hpp"
#include "ipath/interval_io.hpp"
#include "ipath/matching.hpp"
#include "ipath/oracle.hpp"
#include "ipath/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

// Thrown by command handlers to leave with a specific exit code.
struct Exit {
    int code;
};

ipath::IntervalGraph load_graph(const std::string& path) {
    if (path == "-") {
        return ipath::read_intervals(std::cin);
    }
    return ipath::read_intervals_file(path);
}

ipath::SimpleGraph load_edges(const std::string& path) {
    if (path == "-") {
        return ipath::read_edge_list(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw ipath::ParseError("cannot open '" + path + "'");
    }
    return ipath::read_edge_list(in);
}

std::string join(const ipath::Path& path) {
    std::string out;
    for (ipath::VertexId v : path) {
        out += ' ';
        out += std::to_string(v);
    }
    return out;
}

nlohmann::json stats_json(const ipath::PipelineStats& s) {
    return {{"n", s.n},
            {"m", s.m},
            {"d_size", s.d_size},
            {"kappa", s.kappa},
            {"a_size", s.a_size},
            {"b_size", s.b_size},
            {"t_preprocess_ns", s.t_preprocess_ns},
            {"t_reduce1_ns", s.t_reduce1_ns},
            {"t_reduce2_ns", s.t_reduce2_ns},
            {"t_dp_ns", s.t_dp_ns},
            {"t_lift_ns", s.t_lift_ns},
            {"lift_retries", s.lift_retries}};
}

// ---- gen ----

struct GenOptions {
    std::string kind = "random";
    int n = 0;
    int k = 0;
    std::uint64_t seed = 1;
};

int run_gen(const GenOptions& o) {
    ipath::GeneratorSpec spec{ipath::parse_generator_kind(o.kind), o.n, o.k, o.seed};
    ipath::write_intervals(std::cout, ipath::generate(spec));
    return kExitOk;
}

// ---- solve ----

struct SolveOptions {
    std::string file;
    bool verify = false;
    bool json = false;
};

int run_solve(const SolveOptions& o) {
    const ipath::IntervalGraph graph = load_graph(o.file);
    const ipath::PathResult result = ipath::longest_path(graph);
    std::optional<std::int64_t> oracle;
    if (o.verify) {
        if (graph.size() <= ipath::kOracleLimit) {
            oracle = ipath::to_int64(ipath::brute_longest_path(graph).weight);
        } else {
            std::cerr << "note: oracle skipped, n = " << graph.size() << " exceeds "
                      << ipath::kOracleLimit << "\n";
        }
    }
    if (o.json) {
        nlohmann::json doc{{"length", result.length},
                           {"path", result.path},
                           {"stats", stats_json(result.stats)}};
        if (oracle) {
            doc["oracle_length"] = *oracle;
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << result.length << join(result.path) << "\n";
    }
    if (oracle && *oracle != result.length) {
        std::cerr << "verification failed: oracle length " << *oracle << ", pipeline length "
                  << result.length << "\n";
        return kExitVerify;
    }
    return kExitOk;
}

// ---- reduce ----

struct ReduceOptions {
    std::string file;
    int stage = 0;
};

int run_reduce(const ReduceOptions& o) {
    const ipath::IntervalGraph graph = load_graph(o.file);
    if (graph.empty()) {
        ipath::write_intervals(std::cout, graph);
        return kExitOk;
    }
    ipath::PipelineTrace trace;
    ipath::longest_path(graph, &trace);
    const ipath::Stage1Result& s1 = trace.stage1;
    std::vector<char> in_d(s1.g_sharp.size(), 0);
    for (ipath::VertexId d : s1.D) {
        in_d[d] = 1;
    }
    auto role = [&](ipath::VertexId sharp) -> std::string {
        if (in_d[sharp]) {
            return "D";
        }
        return s1.in_a[sharp] ? "A" : "U";
    };
    std::vector<std::string> notes;
    if (o.stage == 1) {
        for (ipath::VertexId v = 0; v < s1.g_sharp.size(); ++v) {
            notes.push_back(role(v));
        }
        ipath::write_intervals(std::cout, s1.g_sharp, notes);
    } else {
        const ipath::Stage2Result& s2 = trace.stage2;
        for (ipath::VertexId v = 0; v < s2.special.graph.size(); ++v) {
            if (s2.origin[v] != ipath::kNoVertex) {
                notes.push_back(role(s2.origin[v]));
            } else {
                notes.push_back("U clone of group " + std::to_string(s2.group_of[v]));
            }
        }
        ipath::write_intervals(std::cout, s2.special.graph, notes);
    }
    return kExitOk;
}

// ---- bench ----

struct BenchOptions {
    std::vector<int> n_list;
    std::vector<int> k_list;
    int reps = 1;
    std::string csv;
    std::uint64_t seed = 1;
    std::string kind = "planted";
    bool verify = false;
};

struct BenchRow {
    int n = 0;
    std::uint64_t seed = 0;
    ipath::PathResult result;
    std::optional<std::int64_t> oracle;
};

unsigned worker_count() {
    if (const char* env = std::getenv("FPT_IP_THREADS")) {
        try {
            const int value = std::stoi(env);
            if (value >= 1) {
                return static_cast<unsigned>(value);
            }
        } catch (const std::logic_error&) {
        }
        std::cerr << "warning: ignoring FPT_IP_THREADS='" << env << "'\n";
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run_bench(const BenchOptions& o) {
    if (o.n_list.empty() || o.k_list.empty() || o.reps < 1) {
        std::cerr << "error: --n-list and --k-list must be nonempty and --reps positive\n";
        return kExitUsage;
    }
    const auto kind = ipath::parse_generator_kind(o.kind);
    std::vector<ipath::GeneratorSpec> specs;
    for (int n : o.n_list) {
        for (int k : o.k_list) {
            for (int r = 0; r < o.reps; ++r) {
                specs.push_back({kind, n, k, o.seed + specs.size()});
            }
        }
    }
    for (const auto& spec : specs) {
        if (spec.n < 1 || spec.k < 0) {
            std::cerr << "error: n must be positive and k nonnegative\n";
            return kExitUsage;
        }
    }

    std::vector<BenchRow> rows(specs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> mismatch{false};
    std::vector<std::exception_ptr> failures(specs.size());
    auto work = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            try {
                const ipath::IntervalGraph g = ipath::generate(specs[i]);
                rows[i].n = g.size();
                rows[i].seed = specs[i].seed;
                rows[i].result = ipath::longest_path(g);
                if (o.verify && g.size() <= ipath::kOracleLimit) {
                    rows[i].oracle = ipath::to_int64(ipath::brute_longest_path(g).weight);
                    if (*rows[i].oracle != rows[i].result.length) {
                        mismatch = true;
                    }
                }
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::min<std::size_t>(worker_count(), specs.size());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(work);
    }
    work();
    for (auto& th : pool) {
        th.join();
    }
    for (auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    std::ofstream file;
    if (!o.csv.empty()) {
        file.open(o.csv);
        if (!file) {
            std::cerr << "error: cannot write '" << o.csv << "'\n";
            return kExitUsage;
        }
    }
    std::ostream& out = o.csv.empty() ? std::cout : file;
    out << "instance_id,n,m,seed,d_size,kappa,b_size,answer_length,t_preprocess_ns,"
           "t_reduce1_ns,t_reduce2_ns,t_dp_ns,t_lift_ns,oracle_length\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& s = rows[i].result.stats;
        out << i << ',' << rows[i].n << ',' << s.m << ',' << rows[i].seed << ',' << s.d_size
            << ',' << s.kappa << ',' << s.b_size << ',' << rows[i].result.length << ','
            << s.t_preprocess_ns << ',' << s.t_reduce1_ns << ',' << s.t_reduce2_ns << ','
            << s.t_dp_ns << ',' << s.t_lift_ns << ',';
        if (rows[i].oracle) {
            out << *rows[i].oracle;
        }
        out << '\n';
    }
    return mismatch ? kExitVerify : kExitOk;
}

// ---- match ----

struct MatchOptions {
    std::string file;
    int k = 0;
};

int run_match(const MatchOptions& o) {
    if (o.k < 1) {
        std::cerr << "error: --k must be positive\n";
        return kExitUsage;
    }
    const ipath::SimpleGraph graph = load_edges(o.file);
    const ipath::KernelOutcome kernel = ipath::kernelize(graph, o.k);
    const bool yes = ipath::decide_matching(graph, o.k);
    std::cout << (yes ? "YES" : "NO") << "\n";
    std::cout << "verdict=" << (kernel.verdict == ipath::KernelVerdict::Yes ? "yes" : "kernel")
              << " removed_high_degree=" << kernel.removed_high_degree
              << " k_prime=" << kernel.k_prime << " kernel_n=" << kernel.kernel.size()
              << " kernel_m=" << kernel.kernel.edge_count() << " passes=" << kernel.passes
              << " max_probes=" << kernel.max_probes << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Longest path on interval graphs, parameterized by the distance to a proper "
                 "interval graph"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance in the interval file format");
    gen_cmd->add_option("--kind", gen.kind, "random, proper or planted")
        ->check(CLI::IsMember({"random", "proper", "planted"}));
    gen_cmd->add_option("--n", gen.n, "Number of (staircase) intervals")->required();
    gen_cmd->add_option("--k", gen.k, "Number of wide intervals (planted)");
    gen_cmd->add_option("--seed", gen.seed, "PRNG seed");

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Compute a longest path");
    solve_cmd->add_option("file", solve.file, "Interval file, - for stdin")->required();
    solve_cmd->add_flag("--verify-oracle", solve.verify, "Compare with brute force (n <= 18)");
    solve_cmd->add_flag("--json", solve.json, "Print a JSON document");

    ReduceOptions reduce;
    auto* reduce_cmd = app.add_subcommand("reduce", "Dump the reduced graph of stage 1 or 2");
    reduce_cmd->add_option("file", reduce.file, "Interval file, - for stdin")->required();
    reduce_cmd->add_option("--stage", reduce.stage, "1 or 2")
        ->required()
        ->check(CLI::IsMember({1, 2}));

    BenchOptions bench;
    bench.k_list = {0};
    auto* bench_cmd = app.add_subcommand("bench", "Run the pipeline over a generated corpus");
    bench_cmd->add_option("--n-list", bench.n_list, "Comma-separated sizes")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--k-list", bench.k_list, "Comma-separated wide-interval counts")
        ->delimiter(',');
    bench_cmd->add_option("--reps", bench.reps, "Instances per (n, k)");
    bench_cmd->add_option("--csv", bench.csv, "Output file (default stdout)");
    bench_cmd->add_option("--seed", bench.seed, "Seed of the first instance");
    bench_cmd->add_option("--kind", bench.kind, "Generator kind")
        ->check(CLI::IsMember({"random", "proper", "planted"}));
    bench_cmd->add_flag("--verify-oracle", bench.verify, "Run brute force where n <= 18");

    MatchOptions match;
    auto* match_cmd = app.add_subcommand("match", "Decide whether a matching of size k exists");
    match_cmd->add_option("file", match.file, "Edge list, - for stdin")->required();
    match_cmd->add_option("--k", match.k, "Matching size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen_cmd) {
            return run_gen(gen);
        }
        if (*solve_cmd) {
            return run_solve(solve);
        }
        if (*reduce_cmd) {
            return run_reduce(reduce);
        }
        if (*bench_cmd) {
            return run_bench(bench);
        }
        if (*match_cmd) {
            return run_match(match);
        }
    } catch (const ipath::LiftFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerify;
    } catch (const ipath::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ipath::InvalidSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ipath::DegenerateInterval& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ipath::DuplicateEndpoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ipath::DuplicateVertexId& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ipath::InvalidGraph& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

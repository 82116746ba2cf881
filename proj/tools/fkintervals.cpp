// Command-line front end: solve instances from a file or a seeded random
// draw, run the randomized invariant checker, or benchmark scaling.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fk/analysis.hpp"
#include "fk/error.hpp"
#include "fk/extraction.hpp"
#include "fk/gen.hpp"
#include "fk/instance_io.hpp"
#include "fk/oracle.hpp"
#include "fk/reduction.hpp"

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct SolveOptions {
    std::string input_path;
    std::vector<int> random_mn;
    std::uint64_t seed = 0;
    bool mirror = false;
    bool selfcheck = false;
};

int run_solve(const SolveOptions& opt) {
    if (opt.input_path.empty() == opt.random_mn.empty()) {
        std::cerr << "solve: exactly one of --input FILE or --random M N is required\n";
        return kExitUsage;
    }

    fk::Family family;
    std::string source;
    if (!opt.input_path.empty()) {
        std::ifstream in(opt.input_path, std::ios::binary);
        if (!in) {
            std::cerr << "solve: cannot open '" << opt.input_path << "'\n";
            return kExitInput;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        try {
            family = fk::parse_instance(buffer.str());
        } catch (const fk::ParseError& e) {
            std::cerr << "solve: " << opt.input_path << ": " << e.what() << "\n";
            return kExitInput;
        }
        source = opt.input_path;
    } else {
        int m = opt.random_mn[0];
        int n = opt.random_mn[1];
        if (m < 0 || n < 1) {
            std::cerr << "solve: --random needs M >= 0 and N >= 1\n";
            return kExitUsage;
        }
        family = fk::random_family(static_cast<std::size_t>(m), n, opt.seed);
        source = "random(m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                 ",seed=" + std::to_string(opt.seed) + ")";
    }

    if (opt.mirror) {
        family = fk::mirror(family);
        source = "mirror(" + source + ")";
    }

    try {
        fk::Solution solution = fk::solve(family);
        std::cout << "Applying Franzblau/Kleitman to " << source << ":\n"
                  << fk::format_solution(solution);

        if (opt.selfcheck) {
            const fk::Family& generating = solution.reduction.generating;
            std::vector<fk::Interval> picked;
            for (const fk::TreeLabel& label : solution.order)
                picked.push_back(label.interval);
            fk::Family extracted(family.ground_size(), std::move(picked));
            bool ok = fk::is_irredundant(generating) && fk::generates(generating, family) &&
                      fk::is_irredundant(extracted) && extracted.size() == generating.size() &&
                      generating.size() + solution.reduction.reductions() == family.size();
            fk::ReductionResult mirrored = fk::fk_run(fk::mirror(family));
            ok = ok && fk::mirror(mirrored.generating) == generating;
            std::vector<fk::Interval> mirrored_back;
            for (const fk::Interval& s : mirrored.reduced)
                mirrored_back.push_back(fk::mirror_interval(s, family.ground_size()));
            ok = ok && fk::same_multiset(mirrored_back, solution.reduction.reduced);
            if (!ok) {
                std::cerr << "selfcheck failed\n";
                return kExitInternal;
            }
            std::cerr << "selfcheck passed\n";
        }
    } catch (const fk::InternalError& e) {
        std::cerr << "solve: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}

struct CheckOptions {
    int trials = 1000;
    int max_m = 8;
    int max_n = 10;
    std::uint64_t seed = 1;
};

int run_check(const CheckOptions& opt) {
    int oracle_passes = 0;
    int confluence_passes = 0;
    int mirror_passes = 0;
    int identity_passes = 0;

    for (int trial = 0; trial < opt.trials; ++trial) {
        fk::Family family = fk::random_family_up_to(opt.max_m, opt.max_n, opt.seed + static_cast<std::uint64_t>(trial));
        bool ok = true;
        std::string failed;
        try {
            fk::ReductionResult run = fk::fk_run(family);
            fk::Family extracted = fk::irredundant_subfamily(family);

            bool oracle_ok = run.generating.size() + run.reductions() == family.size() &&
                             fk::is_irredundant(run.generating) &&
                             fk::generates(run.generating, family) &&
                             run.generating.size() == fk::brute_max_irredundant(family).size &&
                             run.generating.size() == fk::brute_min_generating(family) &&
                             fk::is_irredundant(extracted) &&
                             extracted.size() == run.generating.size();
            oracle_passes += oracle_ok;

            fk::ReductionResult randomized = fk::randomized_fk(family, opt.seed ^ 0x5bd1e995u);
            bool confluence_ok = randomized.generating == run.generating &&
                                 fk::same_multiset(randomized.reduced, run.reduced);
            confluence_passes += confluence_ok;

            fk::ReductionResult mirrored = fk::fk_run(fk::mirror(family));
            std::vector<fk::Interval> mirrored_back;
            for (const fk::Interval& s : mirrored.reduced)
                mirrored_back.push_back(fk::mirror_interval(s, family.ground_size()));
            bool mirror_ok = fk::mirror(mirrored.generating) == run.generating &&
                             fk::same_multiset(mirrored_back, run.reduced);
            mirror_passes += mirror_ok;

            // The incidence identity is re-verified inside every reduction;
            // reaching this point means each step held.
            ++identity_passes;

            ok = oracle_ok && confluence_ok && mirror_ok;
            if (!oracle_ok)
                failed = "oracle agreement";
            else if (!confluence_ok)
                failed = "confluence";
            else if (!mirror_ok)
                failed = "mirror symmetry";
        } catch (const std::exception& e) {
            ok = false;
            failed = std::string("exception: ") + e.what();
        }

        if (!ok) {
            std::cerr << "trial " << trial << " failed (" << failed << "); instance:\n"
                      << fk::serialize(family);
            return kExitInternal;
        }
    }

    std::cout << "oracle agreement:  " << oracle_passes << "/" << opt.trials << "\n"
              << "confluence:        " << confluence_passes << "/" << opt.trials << "\n"
              << "mirror symmetry:   " << mirror_passes << "/" << opt.trials << "\n"
              << "coverage identity: " << identity_passes << "/" << opt.trials << "\n";
    return 0;
}

struct BenchOptions {
    std::string sizes = "500,1000,2000";
    std::uint64_t seed = 0;
};

int run_bench(const BenchOptions& opt) {
    std::vector<int> sizes;
    std::stringstream list(opt.sizes);
    std::string item;
    while (std::getline(list, item, ',')) {
        if (item.empty())
            continue;
        try {
            sizes.push_back(std::stoi(item));
        } catch (const std::exception&) {
            std::cerr << "bench: bad size '" << item << "'\n";
            return kExitUsage;
        }
    }

    std::cout << "k\tseconds\treduced\n";
    for (int k : sizes) {
        if (k < 1) {
            std::cerr << "bench: sizes must be positive\n";
            return kExitUsage;
        }
        fk::Family family = fk::random_family(static_cast<std::size_t>(k), k, opt.seed);
        auto start = std::chrono::steady_clock::now();
        fk::Solution solution = fk::solve(family);
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::cout << k << "\t" << elapsed.count() << "\t" << solution.reduction.reductions()
                  << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum generating families and maximum irredundant subfamilies "
                 "of half-open integer intervals"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "Solve one instance and print the result");
    solve->add_option("--input", solve_opt.input_path, "Instance file");
    solve->add_option("--random", solve_opt.random_mn, "Random instance with M members on N points")
        ->expected(2);
    solve->add_option("--seed", solve_opt.seed, "Seed for --random");
    solve->add_flag("--mirror", solve_opt.mirror, "Reflect the instance left to right first");
    solve->add_flag("--selfcheck", solve_opt.selfcheck, "Verify certification and mirror symmetry");

    CheckOptions check_opt;
    CLI::App* check = app.add_subcommand("check", "Run randomized invariant checks");
    check->add_option("--trials", check_opt.trials, "Number of random instances");
    check->add_option("--max-m", check_opt.max_m, "Largest member count");
    check->add_option("--max-n", check_opt.max_n, "Largest ground set size");
    check->add_option("--seed", check_opt.seed, "Base seed");

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand("bench", "Time square instances (m = n = k)");
    bench->add_option("--sizes", bench_opt.sizes, "Comma-separated list of k values");
    bench->add_option("--seed", bench_opt.seed, "Seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (solve->parsed())
        return run_solve(solve_opt);
    if (check->parsed())
        return run_check(check_opt);
    return run_bench(bench_opt);
}

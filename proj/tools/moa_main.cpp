// moa: command-line front end for the product kernel and benchmark harness.
//
//   moa bench   --mode moa-inner --threads 2 --ell 128 --n-min 1 --n-max 8 --out raw.csv
//   moa metrics --raw raw2.csv --baseline-raw raw1.csv --out metrics.csv
//   moa product --mode inner --a A.txt --b B.txt [--combine mul --reduce add] [--threads 4]

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "moa/array_io.hpp"
#include "moa/error.hpp"
#include "moa/harness.hpp"
#include "moa/parallel.hpp"

namespace {

struct BenchOptions {
    std::string mode = "moa-inner";
    moa::index_t threads = 1;
    std::optional<moa::index_t> rows;
    moa::index_t ell = 128;
    int n_min = 1;
    int n_max = 10;
    moa::index_t repeats = 3;
    std::uint64_t seed = 0;
    std::string combine = "mul";
    std::string reduce = "add";
    moa::index_t max_elements = moa::index_t{1} << 25;
    std::string out;
    bool keep_going = false;
};

struct MetricsOptions {
    std::string raw;
    std::string baseline_raw;
    std::string out;
};

struct ProductOptions {
    std::string mode = "inner";
    std::string a;
    std::string b;
    std::string combine = "mul";
    std::string reduce = "add";
    moa::index_t threads = 1;
    std::string out;
};

int run_bench(const BenchOptions& o) {
    moa::harness::ExperimentConfig cfg;
    cfg.mode = moa::harness::parse_mode(o.mode);
    cfg.threads = o.threads;
    cfg.rows = o.rows;
    cfg.ell = o.ell;
    cfg.n_list = moa::harness::power_of_two_sweep(o.n_min, o.n_max);
    cfg.repeats = o.repeats;
    cfg.seed = o.seed;
    cfg.ops = moa::OpPair{moa::parse_combine(o.combine), moa::parse_reduce(o.reduce)};
    cfg.max_result_elements = o.max_elements;

    const auto result = moa::harness::run_experiment(cfg);
    moa::harness::write_records_csv(o.out, result.records);
    for (const auto& f : result.failures) {
        std::cerr << "moa bench: n=" << f.n << " failed: " << f.message << "\n";
    }
    if (!result.failures.empty() && !o.keep_going) {
        return 2;
    }
    return 0;
}

int run_metrics(const MetricsOptions& o) {
    const auto records = moa::harness::read_records_csv(o.raw);
    std::vector<moa::harness::TimingRecord> baseline;
    if (!o.baseline_raw.empty()) {
        baseline = moa::harness::read_records_csv(o.baseline_raw);
    }
    const auto rows = moa::harness::derive_metrics(records, baseline);
    for (const auto& r : rows) {
        if (!r.ratio) {
            std::cerr << "moa metrics: warning: no one-thread run for " << moa::harness::to_string(r.mode)
                      << " n=" << r.n << "; ratio omitted\n";
        }
    }
    moa::harness::write_metrics_csv(o.out, rows);
    return 0;
}

int run_product(const ProductOptions& o) {
    const moa::MoaArray a = moa::read_array_file(o.a);
    const moa::MoaArray b = moa::read_array_file(o.b);
    const moa::OpPair ops{moa::parse_combine(o.combine), moa::parse_reduce(o.reduce)};
    moa::ProductMode mode = moa::ProductMode::Inner;
    if (o.mode == "outer") {
        mode = moa::ProductMode::Outer;
    } else if (o.mode != "inner") {
        throw moa::ArgumentError("--mode must be inner or outer");
    }
    const auto plan = moa::plan_product(mode, a.shape(), b.shape());
    const auto c = moa::execute_parallel(plan, a, b, ops, o.threads);
    if (o.out.empty()) {
        std::cout << moa::format_array(c);
    } else {
        moa::write_array_file(o.out, c);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MoA generalized inner/outer products and benchmark harness"};
    app.require_subcommand(1);

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time C = A*B over a power-of-two sweep of n");
    bench_cmd->add_option("--mode", bench.mode, "moa-inner | moa-outer | gemm-baseline")
        ->check(CLI::IsMember({"moa-inner", "moa-outer", "gemm-baseline"}));
    bench_cmd->add_option("--threads", bench.threads, "Worker count m")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--rows", bench.rows, "Rows of C (default: --threads)")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--ell", bench.ell, "Contraction length")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--n-min", bench.n_min, "Smallest n is 2^P")->check(CLI::Range(0, 62));
    bench_cmd->add_option("--n-max", bench.n_max, "Largest n is 2^Q")->check(CLI::Range(0, 62));
    bench_cmd->add_option("--repeats", bench.repeats, "Runs per size")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench.seed, "Operand generator seed");
    bench_cmd->add_option("--combine", bench.combine, "add | sub | mul | div | min | max");
    bench_cmd->add_option("--reduce", bench.reduce, "add | mul | min | max");
    bench_cmd->add_option("--max-elements", bench.max_elements, "Largest result attempted")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--out", bench.out, "Raw records CSV")->required();
    bench_cmd->add_flag("--keep-going", bench.keep_going, "Exit 0 even if some sizes failed");

    MetricsOptions metrics;
    auto* metrics_cmd = app.add_subcommand("metrics", "Derive time/thread, total-time and ratio tables");
    metrics_cmd->add_option("--raw", metrics.raw, "Raw records CSV")->required();
    metrics_cmd->add_option("--baseline-raw", metrics.baseline_raw, "Raw records CSV with one-thread runs");
    metrics_cmd->add_option("--out", metrics.out, "Metrics CSV")->required();

    ProductOptions product;
    auto* product_cmd = app.add_subcommand("product", "Inner or outer product of two array literal files");
    product_cmd->add_option("--mode", product.mode, "inner | outer")->check(CLI::IsMember({"inner", "outer"}));
    product_cmd->add_option("--a", product.a, "Left operand")->required();
    product_cmd->add_option("--b", product.b, "Right operand")->required();
    product_cmd->add_option("--combine", product.combine, "add | sub | mul | div | min | max");
    product_cmd->add_option("--reduce", product.reduce, "add | mul | min | max");
    product_cmd->add_option("--threads", product.threads, "Worker count")->check(CLI::PositiveNumber);
    product_cmd->add_option("--out", product.out, "Result file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bench_cmd) {
            return run_bench(bench);
        }
        if (*metrics_cmd) {
            return run_metrics(metrics);
        }
        return run_product(product);
    } catch (const moa::Error& e) {
        std::cerr << "moa: " << e.what() << "\n";
        return 1;
    }
}

#include "moa/harness.hpp"

#include <algorithm>
#include <chrono>
#include <new>
#include <random>
#include <system_error>

#include "moa/error.hpp"
#include "moa/gemm.hpp"
#include "moa/parallel.hpp"

namespace moa::harness {

std::string_view to_string(Mode mode) noexcept {
    switch (mode) {
    case Mode::MoaInner:
        return "moa-inner";
    case Mode::MoaOuter:
        return "moa-outer";
    case Mode::GemmBaseline:
        return "gemm-baseline";
    }
    return "?";
}

Mode parse_mode(std::string_view name) {
    if (name == "moa-inner") return Mode::MoaInner;
    if (name == "moa-outer") return Mode::MoaOuter;
    if (name == "gemm-baseline") return Mode::GemmBaseline;
    throw ArgumentError("unknown mode '" + std::string(name) + "' (expected moa-inner, moa-outer or gemm-baseline)");
}

void ExperimentConfig::validate() const {
    if (threads < 1) throw ArgumentError("threads must be >= 1");
    if (row_count() < 1) throw ArgumentError("rows must be >= 1");
    if (ell < 1) throw ArgumentError("ell must be >= 1");
    if (repeats < 1) throw ArgumentError("repeats must be >= 1");
    if (max_result_elements < 1) throw ArgumentError("max_result_elements must be >= 1");
    for (const index_t n : n_list) {
        if (n < 1) throw ArgumentError("every n must be >= 1, got " + std::to_string(n));
    }
    if (mode == Mode::GemmBaseline && ops != OpPair{}) {
        throw ArgumentError("gemm-baseline only computes the (mul,add) product, not " + moa::to_string(ops));
    }
}

std::vector<index_t> power_of_two_sweep(int p_min, int p_max) {
    if (p_min < 0 || p_max < p_min || p_max > 62) {
        throw ArgumentError("power-of-two sweep needs 0 <= n-min <= n-max <= 62, got " + std::to_string(p_min) +
                            ".." + std::to_string(p_max));
    }
    std::vector<index_t> out;
    for (int p = p_min; p <= p_max; ++p) {
        out.push_back(index_t{1} << p);
    }
    return out;
}

std::pair<MoaArray, MoaArray> make_operands(std::uint64_t seed, index_t rows, index_t ell, index_t n) {
    std::mt19937_64 gen(seed);
    auto draw = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
    auto fill = [&](Shape shape) {
        std::vector<double> data(static_cast<std::size_t>(shape.element_count()));
        for (auto& x : data) {
            x = draw();
        }
        return MoaArray(std::move(shape), std::move(data));
    };
    MoaArray a = fill(Shape{rows, ell});
    MoaArray b = fill(Shape{ell, n});
    return {std::move(a), std::move(b)};
}

double checksum(const MoaArray& a) {
    double sum = 0.0;
    for (const double x : a.data()) {
        sum += x;
    }
    return sum;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start, Clock::time_point stop) {
    // Clock resolution floor: a record never reports zero time.
    const auto ticks = std::max<Clock::duration::rep>((stop - start).count(), 1);
    return std::chrono::duration<double>(Clock::duration(ticks)).count();
}

index_t result_elements(const ExperimentConfig& cfg, index_t n) {
    const index_t rows = cfg.row_count();
    if (cfg.mode == Mode::MoaOuter) {
        return checked_mul(checked_mul(checked_mul(rows, cfg.ell), cfg.ell), n);
    }
    return checked_mul(rows, n);
}

void run_size(const ExperimentConfig& cfg, index_t n, std::vector<TimingRecord>& out) {
    const index_t elements = result_elements(cfg, n);
    if (elements > cfg.max_result_elements) {
        throw ShapeError("result of " + std::to_string(elements) + " elements exceeds the limit of " +
                         std::to_string(cfg.max_result_elements));
    }
    const auto [a, b] = make_operands(cfg.seed, cfg.row_count(), cfg.ell, n);

    auto record = [&](index_t repeat, double seconds, double sum) {
        out.push_back(TimingRecord{cfg.mode, cfg.threads, cfg.ell, n, repeat, seconds, sum});
    };

    if (cfg.mode == Mode::GemmBaseline) {
        const gemm::ColMajorMatrix lhs = gemm::from_row_major(a);
        const gemm::ColMajorMatrix rhs = gemm::from_row_major(b);
        gemm::GemmParams params;
        params.m = lhs.rows;
        params.k = lhs.cols;
        params.n = rhs.cols;
        gemm::ColMajorMatrix c(params.m, params.n);
        for (index_t r = 0; r < cfg.repeats; ++r) {
            const auto start = Clock::now();
            gemm::gemm_parallel(params, lhs, rhs, c, cfg.threads);
            const auto stop = Clock::now();
            record(r, elapsed_seconds(start, stop), checksum(gemm::to_row_major(c)));
        }
        return;
    }

    const KernelPlan plan = cfg.mode == Mode::MoaInner ? plan_inner(a.shape(), b.shape())
                                                        : plan_outer(a.shape(), b.shape());
    for (index_t r = 0; r < cfg.repeats; ++r) {
        const auto start = Clock::now();
        const MoaArray c = execute_parallel(plan, a, b, cfg.ops, cfg.threads);
        const auto stop = Clock::now();
        record(r, elapsed_seconds(start, stop), checksum(c));
    }
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    ExperimentResult result;
    for (const index_t n : config.n_list) {
        std::vector<TimingRecord> size_records;
        try {
            run_size(config, n, size_records);
        } catch (const std::bad_alloc&) {
            result.failures.push_back({n, "out of memory"});
            continue;
        } catch (const std::system_error& e) {
            result.failures.push_back({n, e.what()});
            continue;
        } catch (const Error& e) {
            result.failures.push_back({n, e.what()});
            continue;
        }
        result.records.insert(result.records.end(), size_records.begin(), size_records.end());
    }
    return result;
}

} // namespace moa::harness

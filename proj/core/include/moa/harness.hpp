#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moa/array.hpp"
#include "moa/op_pair.hpp"

namespace moa::harness {

enum class Mode { MoaInner, MoaOuter, GemmBaseline };

std::string_view to_string(Mode mode) noexcept;
/// "moa-inner", "moa-outer" or "gemm-baseline"; throws ArgumentError otherwise.
Mode parse_mode(std::string_view name);

/// One sweep of the C = A*B experiment: C is rows x n, A rows x ell,
/// B ell x n, and by default rows equals the worker count so that the
/// problem grows with the number of threads.
struct ExperimentConfig {
    Mode mode = Mode::MoaInner;
    index_t threads = 1;
    /// Decouples the row count of C from the worker count when set.
    std::optional<index_t> rows;
    index_t ell = 128;
    std::vector<index_t> n_list;
    index_t repeats = 3;
    std::uint64_t seed = 0;
    OpPair ops;
    /// Sizes whose result would exceed this many elements fail cleanly
    /// instead of being attempted.
    index_t max_result_elements = index_t{1} << 25;

    [[nodiscard]] index_t row_count() const noexcept { return rows.value_or(threads); }
    /// Throws ArgumentError for non-positive counts or an op pair the
    /// gemm baseline cannot run.
    void validate() const;
};

/// 2^p_min, 2^(p_min+1), ..., 2^p_max.
std::vector<index_t> power_of_two_sweep(int p_min, int p_max);

struct TimingRecord {
    Mode mode = Mode::MoaInner;
    index_t threads = 1;
    index_t ell = 0;
    index_t n = 0;
    index_t repeat = 0;
    double seconds = 0.0;
    /// Sum of the result elements in row-major order.
    double checksum = 0.0;

    friend bool operator==(const TimingRecord&, const TimingRecord&) = default;
};

struct SizeFailure {
    index_t n = 0;
    std::string message;
};

struct ExperimentResult {
    std::vector<TimingRecord> records;
    std::vector<SizeFailure> failures;
};

/// Seeded operands: A (rows x ell) then B (ell x n), uniform in [0, 1) from
/// mt19937_64 using the top 53 bits of each draw.
std::pair<MoaArray, MoaArray> make_operands(std::uint64_t seed, index_t rows, index_t ell, index_t n);

/// Sum of elements, row-major order.
double checksum(const MoaArray& a);

/// Runs every size in config.n_list `repeats` times, timing the product call
/// only. A size that cannot be run is recorded in `failures` and the sweep
/// moves on.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct MetricRow {
    Mode mode = Mode::MoaInner;
    index_t threads = 1;
    index_t n = 0;
    /// Mean wall time over repeats (time per thread).
    double mean_seconds = 0.0;
    /// n * threads: the x coordinate of the total-time plot.
    index_t total_x = 0;
    /// mean(threads) / mean(1) at equal n; empty without a one-thread run.
    std::optional<double> ratio;
    /// ratio > threads: adding workers did not pay for itself.
    std::optional<bool> no_net_benefit;
};

/// Groups records by (mode, threads, n) and averages repeats. One-thread
/// means for the ratio come from `baseline` first, then from one-thread rows
/// of `records`; a one-thread group's ratio is always its own, 1.0.
std::vector<MetricRow> derive_metrics(const std::vector<TimingRecord>& records,
                                      const std::vector<TimingRecord>& baseline = {});

inline constexpr std::string_view raw_csv_header = "mode,threads,ell,n,repeat,seconds,checksum";
inline constexpr std::string_view metrics_csv_header = "mode,threads,n,mean_seconds,total_x,ratio,no_net_benefit";

/// Rows sorted by (mode, threads, n, repeat).
void write_records_csv(std::ostream& os, std::vector<TimingRecord> records);
void write_records_csv(const std::filesystem::path& path, std::vector<TimingRecord> records);
std::vector<TimingRecord> read_records_csv(std::istream& is);
std::vector<TimingRecord> read_records_csv(const std::filesystem::path& path);

/// Missing ratios are written as "NA" with no_net_benefit "missing_baseline".
void write_metrics_csv(std::ostream& os, std::vector<MetricRow> rows);
void write_metrics_csv(const std::filesystem::path& path, std::vector<MetricRow> rows);

} // namespace moa::harness

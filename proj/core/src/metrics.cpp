#include <map>
#include <tuple>

#include "moa/harness.hpp"

namespace moa::harness {

namespace {

using GroupKey = std::tuple<Mode, index_t, index_t>; // mode, threads, n

std::map<GroupKey, double> group_means(const std::vector<TimingRecord>& records) {
    std::map<GroupKey, std::pair<double, index_t>> sums;
    for (const auto& r : records) {
        auto& [sum, count] = sums[{r.mode, r.threads, r.n}];
        sum += r.seconds;
        ++count;
    }
    std::map<GroupKey, double> means;
    for (const auto& [key, acc] : sums) {
        means[key] = acc.first / static_cast<double>(acc.second);
    }
    return means;
}

} // namespace

std::vector<MetricRow> derive_metrics(const std::vector<TimingRecord>& records,
                                      const std::vector<TimingRecord>& baseline) {
    const auto means = group_means(records);
    const auto baseline_means = group_means(baseline);

    auto one_thread_mean = [&](Mode mode, index_t n) -> std::optional<double> {
        if (auto it = baseline_means.find({mode, 1, n}); it != baseline_means.end()) {
            return it->second;
        }
        if (auto it = means.find({mode, 1, n}); it != means.end()) {
            return it->second;
        }
        return std::nullopt;
    };

    std::vector<MetricRow> rows;
    rows.reserve(means.size());
    for (const auto& [key, mean] : means) {
        const auto& [mode, threads, n] = key;
        MetricRow row;
        row.mode = mode;
        row.threads = threads;
        row.n = n;
        row.mean_seconds = mean;
        row.total_x = n * threads;
        const std::optional<double> reference = threads == 1 ? std::optional<double>(mean) : one_thread_mean(mode, n);
        if (reference) {
            row.ratio = mean / *reference;
            row.no_net_benefit = *row.ratio > static_cast<double>(threads);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace moa::harness

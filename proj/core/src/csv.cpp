#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <tuple>

#include "moa/array_io.hpp"
#include "moa/error.hpp"
#include "moa/harness.hpp"

namespace moa::harness {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    return out;
}

void check_written(const std::ostream& os, const std::filesystem::path& path) {
    if (!os) {
        throw IoError("write failed for " + path.string());
    }
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

index_t parse_int(std::string_view field, std::size_t line_no) {
    index_t value = 0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid integer '" + std::string(field) + "'");
    }
    return value;
}

} // namespace

void write_records_csv(std::ostream& os, std::vector<TimingRecord> records) {
    std::stable_sort(records.begin(), records.end(), [](const TimingRecord& x, const TimingRecord& y) {
        return std::tie(x.mode, x.threads, x.n, x.repeat) < std::tie(y.mode, y.threads, y.n, y.repeat);
    });
    os << raw_csv_header << '\n';
    for (const auto& r : records) {
        os << to_string(r.mode) << ',' << r.threads << ',' << r.ell << ',' << r.n << ',' << r.repeat << ','
           << format_double(r.seconds) << ',' << format_double(r.checksum) << '\n';
    }
}

void write_records_csv(const std::filesystem::path& path, std::vector<TimingRecord> records) {
    auto out = open_for_write(path);
    write_records_csv(out, std::move(records));
    check_written(out, path);
}

std::vector<TimingRecord> read_records_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) {
        throw ParseError("empty records file: missing header");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != raw_csv_header) {
        throw ParseError("unexpected records header '" + line + "'");
    }
    std::vector<TimingRecord> records;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 7) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 7 fields, got " +
                             std::to_string(fields.size()));
        }
        TimingRecord r;
        r.mode = parse_mode(fields[0]);
        r.threads = parse_int(fields[1], line_no);
        r.ell = parse_int(fields[2], line_no);
        r.n = parse_int(fields[3], line_no);
        r.repeat = parse_int(fields[4], line_no);
        r.seconds = parse_double(fields[5]);
        r.checksum = parse_double(fields[6]);
        records.push_back(r);
    }
    return records;
}

std::vector<TimingRecord> read_records_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    return read_records_csv(in);
}

void write_metrics_csv(std::ostream& os, std::vector<MetricRow> rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const MetricRow& x, const MetricRow& y) {
        return std::tie(x.mode, x.threads, x.n) < std::tie(y.mode, y.threads, y.n);
    });
    os << metrics_csv_header << '\n';
    for (const auto& r : rows) {
        os << to_string(r.mode) << ',' << r.threads << ',' << r.n << ',' << format_double(r.mean_seconds) << ','
           << r.total_x << ',';
        if (r.ratio) {
            os << format_double(*r.ratio) << ',' << (*r.no_net_benefit ? "true" : "false");
        } else {
            os << "NA,missing_baseline";
        }
        os << '\n';
    }
}

void write_metrics_csv(const std::filesystem::path& path, std::vector<MetricRow> rows) {
    auto out = open_for_write(path);
    write_metrics_csv(out, std::move(rows));
    check_written(out, path);
}

} // namespace moa::harness

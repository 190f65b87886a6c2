#include "moa/array_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "moa/error.hpp"

namespace moa {

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

double parse_double(std::string_view token) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    // from_chars rejects a leading '+'; accept it for hand-written literals.
    if (first != last && *first == '+') {
        ++first;
    }
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw ParseError("invalid number '" + std::string(token) + "'");
    }
    return value;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
            ++pos;
        }
        if (pos > start) {
            out.push_back(line.substr(start, pos - start));
        }
    }
    return out;
}

index_t parse_extent(std::string_view token) {
    index_t value = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        throw ParseError("invalid extent '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

std::string format_array(const MoaArray& a) {
    std::string out;
    const auto extents = a.shape().extents();
    for (std::size_t k = 0; k < extents.size(); ++k) {
        if (k != 0) {
            out += ' ';
        }
        out += std::to_string(extents[k]);
    }
    out += '\n';
    const auto data = a.data();
    for (std::size_t k = 0; k < data.size(); ++k) {
        if (k != 0) {
            out += ' ';
        }
        out += format_double(data[k]);
    }
    out += '\n';
    return out;
}

MoaArray parse_array(std::string_view text) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
        throw ParseError("array literal needs an extents line and an elements line");
    }
    const std::string_view extents_line = text.substr(0, nl);
    std::string_view rest = text.substr(nl + 1);
    const auto nl2 = rest.find('\n');
    const std::string_view data_line = nl2 == std::string_view::npos ? rest : rest.substr(0, nl2);
    if (nl2 != std::string_view::npos && !split_ws(rest.substr(nl2 + 1)).empty()) {
        throw ParseError("unexpected content after the elements line");
    }

    std::vector<index_t> extents;
    for (auto tok : split_ws(extents_line)) {
        extents.push_back(parse_extent(tok));
    }
    std::vector<double> data;
    for (auto tok : split_ws(data_line)) {
        data.push_back(parse_double(tok));
    }
    Shape shape(std::move(extents));
    if (static_cast<index_t>(data.size()) != shape.element_count()) {
        throw ParseError("shape " + to_string(shape) + " needs " + std::to_string(shape.element_count()) +
                         " elements, literal has " + std::to_string(data.size()));
    }
    return MoaArray(std::move(shape), std::move(data));
}

MoaArray read_array_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_array(ss.str());
}

void write_array_file(const std::filesystem::path& path, const MoaArray& a) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << format_array(a);
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

} // namespace moa

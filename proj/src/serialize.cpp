#include "heis/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace heis {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_trace_csv(const std::string& path, const Trace& trace) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_trace_csv: cannot open " + path);
    out << "t,x1,x2,x3\n";
    for (std::size_t j = 0; j < trace.times.size(); ++j)
        out << format_double(trace.times[j]) << ',' << format_double(trace.path[j].x1)
            << ',' << format_double(trace.path[j].x2) << ','
            << format_double(trace.path[j].x3) << '\n';
}

namespace {

std::vector<std::vector<double>> read_csv_rows(const std::string& path,
                                               const std::string& expect_header,
                                               std::size_t cols) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty file " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expect_header)
        throw std::runtime_error("read_csv: unexpected header in " + path);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != cols)
            throw std::runtime_error("read_csv: bad column count in " + path);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("read_csv: no data rows in " + path);
    return rows;
}

}  // namespace

Trace read_trace_csv(const std::string& path) {
    const auto rows = read_csv_rows(path, "t,x1,x2,x3", 4);
    Trace tr;
    for (const auto& r : rows) {
        tr.times.push_back(r[0]);
        tr.path.push_back({r[1], r[2], r[3]});
    }
    const std::size_t mid = tr.times.size() / 2;
    tr.start = tr.path[mid];
    tr.base_point = tr.start;
    tr.delta_used = 0.5 * (tr.times.back() - tr.times.front());
    return tr;
}

void write_sampled_csv(const std::string& path, const SampledFunction& f,
                       const std::string& value_header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_sampled_csv: cannot open " + path);
    out << "t," << value_header << "\n";
    for (std::size_t j = 0; j < f.times.size(); ++j)
        out << format_double(f.times[j]) << ',' << format_double(f.values[j]) << '\n';
}

SampledFunction read_sampled_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_sampled_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_sampled_csv: empty file");
    SampledFunction f;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
            throw std::runtime_error("read_sampled_csv: bad row");
        f.times.push_back(std::stod(a));
        f.values.push_back(std::stod(b));
    }
    return f;
}

}  // namespace heis

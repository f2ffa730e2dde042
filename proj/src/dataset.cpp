#include "bfaelm/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bfaelm/format.hpp"

namespace bfaelm {

namespace {

double parse_cell(const std::string& cell, std::size_t line_no) {
    double v = 0.0;
    const char* first = cell.data();
    const char* last = first + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v))
        throw std::runtime_error("line " + std::to_string(line_no) + ": non-numeric cell '" +
                                 cell + "'");
    return v;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

std::vector<std::vector<double>> load_numeric_csv(const std::string& path,
                                                  const std::string& expected_header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected_header)
        throw std::runtime_error(path + ": bad header '" + line + "', expected '" +
                                 expected_header + "'");
    const std::size_t width = split_line(expected_header).size();

    std::vector<std::vector<double>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split_line(line);
        if (cells.size() != width)
            throw std::runtime_error(path + ": line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(width) + " fields, got " +
                                     std::to_string(cells.size()));
        std::vector<double> row;
        row.reserve(width);
        for (const auto& c : cells) row.push_back(parse_cell(c, line_no));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

double compute_fpi(const FlightTrace& trace) {
    if (trace.actual.size() != trace.expected.size())
        throw std::invalid_argument("compute_fpi: trace length mismatch");
    if (trace.actual.empty()) throw std::invalid_argument("compute_fpi: empty trace");
    double sum = 0.0;
    for (std::size_t i = 0; i < trace.actual.size(); ++i) {
        if (!std::isfinite(trace.actual[i]) || !std::isfinite(trace.expected[i]))
            throw std::invalid_argument("compute_fpi: non-finite altitude");
        const double d = trace.actual[i] - trace.expected[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(trace.actual.size()));
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("pearson: need >= 2 samples");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) throw std::invalid_argument("pearson: zero variance input");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<std::pair<std::string, double>> correlation_screen(const Dataset& dataset) {
    if (dataset.size() < 2) throw std::invalid_argument("correlation_screen: need >= 2 records");
    std::vector<double> fpi;
    fpi.reserve(dataset.size());
    for (const auto& r : dataset.records) fpi.push_back(r.fpi);

    std::vector<std::pair<std::string, double>> out;
    for (std::size_t f = 0; f < kFeatureNames.size(); ++f) {
        std::vector<double> col;
        col.reserve(dataset.size());
        for (const auto& r : dataset.records) col.push_back(r.features()[f]);
        try {
            out.emplace_back(kFeatureNames[f], pearson(col, fpi));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument(std::string("correlation_screen: zero variance in column ") +
                                        kFeatureNames[f]);
        }
    }
    return out;
}

Dataset load_csv(const std::string& path) {
    const auto rows = load_numeric_csv(path, "HR,RA,RR,BI,FT,FPI");
    Dataset ds;
    ds.provenance = Provenance::File;
    ds.records.reserve(rows.size());
    for (const auto& r : rows)
        ds.records.push_back(Record{r[0], r[1], r[2], r[3], r[4], r[5]});
    return ds;
}

void save_csv(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "HR,RA,RR,BI,FT,FPI\n";
    for (const auto& r : dataset.records) {
        out << format_double(r.hr) << ',' << format_double(r.ra) << ',' << format_double(r.rr)
            << ',' << format_double(r.bi) << ',' << format_double(r.ft) << ','
            << format_double(r.fpi) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

FlightTrace load_trace_csv(const std::string& path) {
    const auto rows = load_numeric_csv(path, "h_ac,h_ex");
    if (rows.empty()) throw std::runtime_error(path + ": trace has no samples");
    FlightTrace trace;
    trace.actual.reserve(rows.size());
    trace.expected.reserve(rows.size());
    for (const auto& r : rows) {
        trace.actual.push_back(r[0]);
        trace.expected.push_back(r[1]);
    }
    return trace;
}

double synthetic_target(const Record& r) {
    // raw ranges over [0.14, 4.25] for features in [0,1]^5; the affine tail
    // maps that onto [0.1, 0.9].
    const double raw = 0.9 * std::sin(2.6 * r.hr) +
                       0.8 * std::exp(-4.0 * (r.ra - 0.35) * (r.ra - 0.35)) +
                       0.7 * r.rr * r.rr + 0.55 * r.bi + 0.5 * std::sin(2.3 * r.ft) +
                       0.8 * r.hr * r.rr;
    return 0.1 + 0.8 * (raw - 0.14) / (4.25 - 0.14);
}

Dataset generate_synthetic(std::size_t n, double noise_sd, RandomStream& stream) {
    if (n == 0) throw std::invalid_argument("generate_synthetic: n must be >= 1");
    if (noise_sd < 0.0) throw std::invalid_argument("generate_synthetic: noise_sd must be >= 0");
    Dataset ds;
    ds.provenance = Provenance::Synthetic;
    ds.records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Record r;
        r.hr = stream.uniform(0.0, 1.0);
        r.ra = stream.uniform(0.0, 1.0);
        r.rr = stream.uniform(0.0, 1.0);
        r.bi = stream.uniform(0.0, 1.0);
        r.ft = stream.uniform(0.0, 1.0);
        double fpi = synthetic_target(r);
        if (noise_sd > 0.0) fpi += stream.gaussian(0.0, noise_sd);
        r.fpi = std::clamp(fpi, 0.0, 1.0);
        ds.records.push_back(r);
    }
    return ds;
}

}  // namespace bfaelm

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bfaelm/random.hpp"

namespace bfaelm {

// One flight: five physiological features plus the flight performance index.
struct Record {
    double hr = 0.0;  // heart rate
    double ra = 0.0;  // respiration amplitude
    double rr = 0.0;  // respiration rate
    double bi = 0.0;  // blink interval
    double ft = 0.0;  // instrument fixation time
    double fpi = 0.0; // target

    std::array<double, 5> features() const { return {hr, ra, rr, bi, ft}; }

    bool operator==(const Record&) const = default;
};

enum class Provenance { Synthetic, File };

struct Dataset {
    std::vector<Record> records;
    Provenance provenance = Provenance::Synthetic;

    std::size_t size() const { return records.size(); }

    bool operator==(const Dataset& other) const { return records == other.records; }
};

inline constexpr std::array<const char*, 5> kFeatureNames = {"HR", "RA", "RR", "BI", "FT"};

struct FlightTrace {
    std::vector<double> actual;
    std::vector<double> expected;
};

// Root-mean-square deviation of actual altitude from planned altitude.
double compute_fpi(const FlightTrace& trace);

double pearson(const std::vector<double>& x, const std::vector<double>& y);

// Pearson r of each feature against fpi, in fixed order HR, RA, RR, BI, FT.
std::vector<std::pair<std::string, double>> correlation_screen(const Dataset& dataset);

// CSV with exact header HR,RA,RR,BI,FT,FPI. Values round-trip exactly.
Dataset load_csv(const std::string& path);
void save_csv(const Dataset& dataset, const std::string& path);

// CSV with exact header h_ac,h_ex.
FlightTrace load_trace_csv(const std::string& path);

// Ground truth of the synthetic generator: a smooth blend with nonzero
// dependence on every feature, mapping [0,1]^5 into roughly [0.10, 0.89].
double synthetic_target(const Record& r);

// Features uniform in [0,1]^5; fpi = clamp01(synthetic_target + gaussian noise).
Dataset generate_synthetic(std::size_t n, double noise_sd, RandomStream& stream);

}  // namespace bfaelm

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bfaelm {

struct MetricsReport {
    double mae = 0.0;
    double mse = 0.0;
    double mape = 0.0;      // percent
    double accuracy = 0.0;  // percent, 100 - mape
    std::size_t n = 0;
};

double mean_absolute_error(const std::vector<double>& truth, const std::vector<double>& pred);
double mean_squared_error(const std::vector<double>& truth, const std::vector<double>& pred);

// Percent error relative to the true value; throws if any true value is zero.
double mean_absolute_percentage_error(const std::vector<double>& truth,
                                      const std::vector<double>& pred);

MetricsReport metrics_report(const std::vector<double>& truth, const std::vector<double>& pred);

std::string metrics_to_json(const MetricsReport& report);

}  // namespace bfaelm

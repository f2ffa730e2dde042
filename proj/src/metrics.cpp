#include "bfaelm/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace bfaelm {

namespace {

void check_lengths(const std::vector<double>& truth, const std::vector<double>& pred) {
    if (truth.size() != pred.size())
        throw std::invalid_argument("metrics: true/predicted length mismatch");
    if (truth.empty()) throw std::invalid_argument("metrics: empty input");
}

}  // namespace

double mean_absolute_error(const std::vector<double>& truth, const std::vector<double>& pred) {
    check_lengths(truth, pred);
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) sum += std::abs(truth[i] - pred[i]);
    return sum / static_cast<double>(truth.size());
}

double mean_squared_error(const std::vector<double>& truth, const std::vector<double>& pred) {
    check_lengths(truth, pred);
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const double d = truth[i] - pred[i];
        sum += d * d;
    }
    return sum / static_cast<double>(truth.size());
}

double mean_absolute_percentage_error(const std::vector<double>& truth,
                                      const std::vector<double>& pred) {
    check_lengths(truth, pred);
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] == 0.0) throw std::invalid_argument("zero true value in MAPE");
        sum += std::abs(truth[i] - pred[i]) / std::abs(truth[i]);
    }
    return 100.0 * sum / static_cast<double>(truth.size());
}

MetricsReport metrics_report(const std::vector<double>& truth, const std::vector<double>& pred) {
    MetricsReport r;
    r.mae = mean_absolute_error(truth, pred);
    r.mse = mean_squared_error(truth, pred);
    r.mape = mean_absolute_percentage_error(truth, pred);
    r.accuracy = 100.0 - r.mape;
    r.n = truth.size();
    return r;
}

std::string metrics_to_json(const MetricsReport& report) {
    nlohmann::json j;
    j["mae"] = report.mae;
    j["mse"] = report.mse;
    j["mape"] = report.mape;
    j["accuracy"] = report.accuracy;
    j["n"] = report.n;
    return j.dump(2);
}

}  // namespace bfaelm

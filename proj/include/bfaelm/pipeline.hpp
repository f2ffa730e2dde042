#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bfaelm/bfa.hpp"
#include "bfaelm/dataset.hpp"
#include "bfaelm/elm.hpp"
#include "bfaelm/metrics.hpp"

namespace bfaelm {

struct MinMax {
    double min = 0.0;
    double max = 0.0;

    bool operator==(const MinMax&) const = default;
};

// Per-feature and target min/max, always computed from the training split.
struct NormStats {
    std::array<MinMax, 5> features{};
    MinMax target{};

    // Throws "degenerate feature" when any column is constant.
    static NormStats compute(const Dataset& dataset);

    bool operator==(const NormStats&) const = default;
};

double normalize(double x, double min, double max);
double denormalize(double x_norm, double min, double max);

// Normalized feature matrix / target vector under the given statistics.
Matrix feature_matrix(const Dataset& dataset, const NormStats& stats);
std::vector<double> target_vector(const Dataset& dataset, const NormStats& stats);

struct SplitResult {
    Dataset train;
    Dataset test;
};

// Random partition without replacement; train gets round(ratio * n) records.
SplitResult split(const Dataset& dataset, double train_ratio, RandomStream& stream);

struct PipelineConfig {
    std::vector<std::size_t> hidden_candidates = {5, 10, 15, 20};  // L sweep
    Activation activation = Activation::Sigmoid;
    double train_ratio = 0.75;
    double validation_ratio = 0.2;
    BfaConfig bfa{};  // dim is set per candidate L
    std::uint64_t seed = 0;

    void validate() const;
};

struct FitReport {
    std::string mode;  // "bfa-elm" or "elm"
    std::size_t chosen_L = 0;
    double best_fitness = 0.0;
    std::vector<double> bfa_trace;  // empty in plain mode
    NormStats norm_stats;
    ElmModel model;
};

// Bacterium position in [0,1]^(L*n+L) mapped affinely onto weights and
// offsets in [-1,1]: first L*n components row-major weights, last L offsets.
ElmParams decode_position(const std::vector<double>& position, std::size_t n, std::size_t L,
                          Activation activation);

// Decodes hidden parameters, solves output weights on the training portion,
// returns mean squared error on the validation portion.
double fitness_of_position(const std::vector<double>& position, const Matrix& train_X,
                           const std::vector<double>& train_t, const Matrix& val_X,
                           const std::vector<double>& val_t, std::size_t n, std::size_t L,
                           Activation activation);

FitReport fit_bfa_elm(const Dataset& train_set, const PipelineConfig& cfg, RandomStream& stream);
FitReport fit_bfa_elm(const Dataset& train_set, const PipelineConfig& cfg);

// Random hidden layer per candidate L, selection by the same validation MSE.
FitReport fit_plain_elm(const Dataset& train_set, const PipelineConfig& cfg,
                        RandomStream& stream);

// Predictions in denormalized target units.
std::vector<double> predict_dataset(const ElmModel& model, const NormStats& stats,
                                    const Dataset& dataset);

MetricsReport evaluate_model(const ElmModel& model, const NormStats& stats,
                             const Dataset& dataset);

struct ComparisonRow {
    std::uint64_t seed = 0;
    MetricsReport elm;
    MetricsReport bfa_elm;
};

struct MetricMedians {
    double mae = 0.0;
    double mse = 0.0;
    double mape = 0.0;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    MetricMedians elm_median;
    MetricMedians bfa_elm_median;
};

// Per seed: identical split, plain ELM vs BFA-ELM, test metrics in
// denormalized units. Dominance claims belong on the medians only.
ComparisonReport compare_models(const Dataset& dataset, const PipelineConfig& cfg,
                                std::size_t n_seeds);

std::string pipeline_config_to_json(const PipelineConfig& cfg);
PipelineConfig pipeline_config_from_json(const std::string& text);

std::string fit_report_to_json(const FitReport& report, const PipelineConfig& cfg);
std::string comparison_to_json(const ComparisonReport& report, const PipelineConfig& cfg);
std::string comparison_to_csv(const ComparisonReport& report);

}  // namespace bfaelm

#pragma once

#include <span>
#include <string>
#include <vector>

#include "bfaelm/activation.hpp"
#include "bfaelm/matrix.hpp"
#include "bfaelm/random.hpp"

namespace bfaelm {

// Random hidden-layer parameters of a single-hidden-layer network: one row of
// input_weights plus one offset per hidden node.
struct ElmParams {
    Matrix input_weights;  // L x n
    std::vector<double> offsets;  // length L
    Activation activation = Activation::Sigmoid;

    std::size_t hidden_nodes() const { return input_weights.rows(); }
    std::size_t input_dim() const { return input_weights.cols(); }

    void validate() const;

    bool operator==(const ElmParams&) const = default;
};

struct ElmModel {
    ElmParams params;
    std::vector<double> output_weights;  // length L

    void validate() const;

    bool operator==(const ElmModel&) const = default;
};

// Weights and offsets drawn uniformly from [-1, 1].
ElmParams init_params(std::size_t n, std::size_t L, Activation activation, RandomStream& stream);

// Hidden-layer response matrix: entry (j, i) = f(a_i . x_j + b_i).
Matrix hidden_matrix(const ElmParams& params, const Matrix& X);

// Random hidden layer, then analytic least-squares output weights.
ElmModel train(const Matrix& X, const std::vector<double>& targets, std::size_t L,
               Activation activation, RandomStream& stream);

// Same solve with caller-fixed hidden parameters (analytic tests, BFA decoding).
ElmModel train_with_params(const Matrix& X, const std::vector<double>& targets,
                           ElmParams params);

double predict(const ElmModel& model, std::span<const double> x);

std::vector<double> predict_all(const ElmModel& model, const Matrix& X);

// Sum of squared prediction errors (not the mean).
double loss(const ElmModel& model, const Matrix& X, const std::vector<double>& targets);

// Round-trip-exact JSON serialization.
std::string model_to_json(const ElmModel& model);
ElmModel model_from_json(const std::string& text);
void save_model(const ElmModel& model, const std::string& path);
ElmModel load_model(const std::string& path);

}  // namespace bfaelm

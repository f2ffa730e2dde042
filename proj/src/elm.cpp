#include "bfaelm/elm.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "bfaelm/linalg.hpp"

namespace bfaelm {

void ElmParams::validate() const {
    if (offsets.size() != hidden_nodes())
        throw std::invalid_argument("ElmParams: offsets length != hidden node count");
    input_weights.require_finite();
    for (double b : offsets)
        if (!std::isfinite(b)) throw std::invalid_argument("ElmParams: non-finite offset");
}

void ElmModel::validate() const {
    params.validate();
    if (output_weights.size() != params.hidden_nodes())
        throw std::invalid_argument("ElmModel: output_weights length != hidden node count");
    for (double b : output_weights)
        if (!std::isfinite(b)) throw std::invalid_argument("ElmModel: non-finite output weight");
}

ElmParams init_params(std::size_t n, std::size_t L, Activation activation, RandomStream& stream) {
    if (n == 0 || L == 0) throw std::invalid_argument("init_params: n and L must be >= 1");
    Matrix weights(L, n);
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = 0; j < n; ++j) weights.set(i, j, stream.uniform(-1.0, 1.0));
    std::vector<double> offsets(L);
    for (auto& b : offsets) b = stream.uniform(-1.0, 1.0);
    return ElmParams{std::move(weights), std::move(offsets), activation};
}

Matrix hidden_matrix(const ElmParams& params, const Matrix& X) {
    if (X.cols() != params.input_dim())
        throw std::invalid_argument("hidden_matrix: X column count != input dimension");
    const std::size_t k = X.rows();
    const std::size_t L = params.hidden_nodes();
    const std::size_t n = params.input_dim();
    Matrix H(k, L);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < L; ++i) {
            double dot = params.offsets[i];
            for (std::size_t c = 0; c < n; ++c) dot += params.input_weights(i, c) * X(j, c);
            H.set(j, i, apply_activation(params.activation, dot));
        }
    }
    return H;
}

ElmModel train_with_params(const Matrix& X, const std::vector<double>& targets,
                           ElmParams params) {
    params.validate();
    if (X.rows() != targets.size())
        throw std::invalid_argument("train: target length != sample count");
    const Matrix H = hidden_matrix(params, X);
    const Matrix T(targets.size(), 1, targets);
    const Matrix beta = least_squares_solve(H, T);
    return ElmModel{std::move(params), beta.data()};
}

ElmModel train(const Matrix& X, const std::vector<double>& targets, std::size_t L,
               Activation activation, RandomStream& stream) {
    if (X.rows() == 0 || targets.empty())
        throw std::invalid_argument("train: empty training data");
    return train_with_params(X, targets, init_params(X.cols(), L, activation, stream));
}

double predict(const ElmModel& model, std::span<const double> x) {
    const std::size_t n = model.params.input_dim();
    if (x.size() != n) throw std::invalid_argument("predict: input dimension mismatch");
    for (double v : x)
        if (!std::isfinite(v)) throw std::invalid_argument("predict: non-finite input");
    double y = 0.0;
    for (std::size_t i = 0; i < model.params.hidden_nodes(); ++i) {
        double dot = model.params.offsets[i];
        for (std::size_t c = 0; c < n; ++c) dot += model.params.input_weights(i, c) * x[c];
        y += model.output_weights[i] * apply_activation(model.params.activation, dot);
    }
    return y;
}

std::vector<double> predict_all(const ElmModel& model, const Matrix& X) {
    const Matrix H = hidden_matrix(model.params, X);
    std::vector<double> out(X.rows(), 0.0);
    for (std::size_t j = 0; j < X.rows(); ++j)
        for (std::size_t i = 0; i < H.cols(); ++i)
            out[j] += model.output_weights[i] * H(j, i);
    return out;
}

double loss(const ElmModel& model, const Matrix& X, const std::vector<double>& targets) {
    if (X.rows() != targets.size())
        throw std::invalid_argument("loss: target length != sample count");
    const std::vector<double> preds = predict_all(model, X);
    double e = 0.0;
    for (std::size_t j = 0; j < preds.size(); ++j) {
        const double r = preds[j] - targets[j];
        e += r * r;
    }
    return e;
}

std::string model_to_json(const ElmModel& model) {
    model.validate();
    nlohmann::json j;
    j["n"] = model.params.input_dim();
    j["L"] = model.params.hidden_nodes();
    j["activation"] = to_string(model.params.activation);
    j["input_weights"] = model.params.input_weights.data();  // row-major
    j["offsets"] = model.params.offsets;
    j["output_weights"] = model.output_weights;
    return j.dump(2);
}

ElmModel model_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const auto n = j.at("n").get<std::size_t>();
    const auto L = j.at("L").get<std::size_t>();
    Matrix weights(L, n, j.at("input_weights").get<std::vector<double>>());
    ElmModel model{
        ElmParams{std::move(weights), j.at("offsets").get<std::vector<double>>(),
                  activation_from_string(j.at("activation").get<std::string>())},
        j.at("output_weights").get<std::vector<double>>()};
    model.validate();
    return model;
}

void save_model(const ElmModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << model_to_json(model) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

ElmModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return model_from_json(text);
}

}  // namespace bfaelm

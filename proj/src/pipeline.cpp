#include "bfaelm/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "bfaelm/format.hpp"
#include "bfaelm/linalg.hpp"

namespace bfaelm {

namespace {

constexpr std::size_t kInputDim = 5;

std::vector<std::size_t> shuffled_indices(std::size_t n, RandomStream& stream) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(stream.below(i + 1));
        std::swap(idx[i], idx[j]);
    }
    return idx;
}

Dataset subset(const Dataset& dataset, const std::vector<std::size_t>& indices,
               std::size_t begin, std::size_t end) {
    Dataset out;
    out.provenance = dataset.provenance;
    out.records.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) out.records.push_back(dataset.records[indices[i]]);
    return out;
}

Matrix rows_of(const Matrix& X, const std::vector<std::size_t>& idx) {
    Matrix out(idx.size(), X.cols());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < X.cols(); ++c) out.set(r, c, X(idx[r], c));
    return out;
}

std::vector<double> elems_of(const std::vector<double>& t, const std::vector<std::size_t>& idx) {
    std::vector<double> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(t[i]);
    return out;
}

double validation_mse(const ElmModel& model, const Matrix& val_X,
                      const std::vector<double>& val_t) {
    const std::vector<double> pred = predict_all(model, val_X);
    double sum = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const double d = pred[i] - val_t[i];
        sum += d * d;
    }
    return sum / static_cast<double>(pred.size());
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

nlohmann::json metrics_json(const MetricsReport& m) {
    return {{"mae", m.mae}, {"mse", m.mse}, {"mape", m.mape},
            {"accuracy", m.accuracy}, {"n", m.n}};
}

// Internal train/validation partition of the training split. An empty second
// half means the caller must fall back to training MSE.
struct InternalSplit {
    std::vector<std::size_t> fit;
    std::vector<std::size_t> val;
};

InternalSplit internal_split(std::size_t k, double validation_ratio, RandomStream& stream) {
    const auto idx = shuffled_indices(k, stream);
    auto val_k = static_cast<std::size_t>(std::llround(validation_ratio * static_cast<double>(k)));
    if (val_k >= k) val_k = 0;  // too small to hold anything out
    InternalSplit s;
    s.fit.assign(idx.begin(), idx.end() - static_cast<std::ptrdiff_t>(val_k));
    s.val.assign(idx.end() - static_cast<std::ptrdiff_t>(val_k), idx.end());
    return s;
}

}  // namespace

NormStats NormStats::compute(const Dataset& dataset) {
    if (dataset.records.empty()) throw std::invalid_argument("NormStats: empty dataset");
    NormStats s;
    for (std::size_t f = 0; f < kInputDim; ++f)
        s.features[f] = {dataset.records[0].features()[f], dataset.records[0].features()[f]};
    s.target = {dataset.records[0].fpi, dataset.records[0].fpi};
    for (const auto& r : dataset.records) {
        const auto feats = r.features();
        for (std::size_t f = 0; f < kInputDim; ++f) {
            s.features[f].min = std::min(s.features[f].min, feats[f]);
            s.features[f].max = std::max(s.features[f].max, feats[f]);
        }
        s.target.min = std::min(s.target.min, r.fpi);
        s.target.max = std::max(s.target.max, r.fpi);
    }
    for (std::size_t f = 0; f < kInputDim; ++f)
        if (s.features[f].min == s.features[f].max)
            throw std::invalid_argument(std::string("degenerate feature: ") + kFeatureNames[f]);
    // A constant target is allowed: it maps to 0 and denormalizes back to the
    // constant, so such datasets still train.
    return s;
}

double normalize(double x, double min, double max) {
    if (!(min < max)) throw std::invalid_argument("normalize: degenerate feature (min >= max)");
    return (x - min) / (max - min);
}

double denormalize(double x_norm, double min, double max) {
    if (!(min < max)) throw std::invalid_argument("denormalize: degenerate feature (min >= max)");
    return x_norm * (max - min) + min;
}

Matrix feature_matrix(const Dataset& dataset, const NormStats& stats) {
    Matrix X(dataset.size(), kInputDim);
    for (std::size_t r = 0; r < dataset.size(); ++r) {
        const auto feats = dataset.records[r].features();
        for (std::size_t f = 0; f < kInputDim; ++f)
            X.set(r, f, normalize(feats[f], stats.features[f].min, stats.features[f].max));
    }
    return X;
}

std::vector<double> target_vector(const Dataset& dataset, const NormStats& stats) {
    std::vector<double> t;
    t.reserve(dataset.size());
    const bool constant = stats.target.min == stats.target.max;
    for (const auto& r : dataset.records)
        t.push_back(constant ? r.fpi - stats.target.min
                             : normalize(r.fpi, stats.target.min, stats.target.max));
    return t;
}

SplitResult split(const Dataset& dataset, double train_ratio, RandomStream& stream) {
    const std::size_t n = dataset.size();
    if (n < 2) throw std::invalid_argument("split: need >= 2 records");
    if (!(train_ratio > 0.0 && train_ratio < 1.0))
        throw std::invalid_argument("split: train_ratio must be in (0,1)");
    const auto train_n =
        static_cast<std::size_t>(std::llround(train_ratio * static_cast<double>(n)));
    if (train_n == 0 || train_n == n)
        throw std::invalid_argument("split: both splits must be non-empty");
    const auto idx = shuffled_indices(n, stream);
    return SplitResult{subset(dataset, idx, 0, train_n), subset(dataset, idx, train_n, n)};
}

void PipelineConfig::validate() const {
    if (hidden_candidates.empty())
        throw std::invalid_argument("PipelineConfig: hidden_candidates must be non-empty");
    for (std::size_t L : hidden_candidates)
        if (L == 0) throw std::invalid_argument("PipelineConfig: hidden node counts must be >= 1");
    if (!(train_ratio > 0.0 && train_ratio < 1.0))
        throw std::invalid_argument("PipelineConfig: train_ratio must be in (0,1)");
    if (!(validation_ratio >= 0.0 && validation_ratio < 1.0))
        throw std::invalid_argument("PipelineConfig: validation_ratio must be in [0,1)");
    BfaConfig b = bfa;
    b.dim = 1;
    b.validate();
}

ElmParams decode_position(const std::vector<double>& position, std::size_t n, std::size_t L,
                          Activation activation) {
    if (position.size() != L * n + L)
        throw std::invalid_argument("decode_position: position dimension != L*n + L");
    Matrix weights(L, n);
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t c = 0; c < n; ++c)
            weights.set(i, c, 2.0 * position[i * n + c] - 1.0);
    std::vector<double> offsets(L);
    for (std::size_t i = 0; i < L; ++i) offsets[i] = 2.0 * position[L * n + i] - 1.0;
    return ElmParams{std::move(weights), std::move(offsets), activation};
}

double fitness_of_position(const std::vector<double>& position, const Matrix& train_X,
                           const std::vector<double>& train_t, const Matrix& val_X,
                           const std::vector<double>& val_t, std::size_t n, std::size_t L,
                           Activation activation) {
    if (val_t.empty()) throw std::invalid_argument("fitness_of_position: empty validation set");
    const ElmModel model =
        train_with_params(train_X, train_t, decode_position(position, n, L, activation));
    return validation_mse(model, val_X, val_t);
}

namespace {

struct Prepared {
    NormStats stats;
    Matrix X;                   // full training split, normalized
    std::vector<double> t;
    Matrix fit_X;               // internal fitting portion
    std::vector<double> fit_t;
    Matrix val_X;               // internal validation portion (falls back to fit)
    std::vector<double> val_t;
};

Prepared prepare(const Dataset& train_set, const PipelineConfig& cfg, RandomStream& stream) {
    const NormStats stats = NormStats::compute(train_set);
    Matrix X = feature_matrix(train_set, stats);
    std::vector<double> t = target_vector(train_set, stats);

    RandomStream vs = stream.child("valsplit");
    const InternalSplit is = internal_split(train_set.size(), cfg.validation_ratio, vs);
    Matrix fit_X = rows_of(X, is.fit);
    std::vector<double> fit_t = elems_of(t, is.fit);
    Matrix val_X = is.val.empty() ? fit_X : rows_of(X, is.val);
    std::vector<double> val_t = is.val.empty() ? fit_t : elems_of(t, is.val);
    return Prepared{stats, std::move(X), std::move(t), std::move(fit_X), std::move(fit_t),
                    std::move(val_X), std::move(val_t)};
}

std::vector<std::size_t> sorted_candidates(const PipelineConfig& cfg) {
    std::vector<std::size_t> ls = cfg.hidden_candidates;
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    return ls;
}

}  // namespace

FitReport fit_bfa_elm(const Dataset& train_set, const PipelineConfig& cfg, RandomStream& stream) {
    cfg.validate();
    const Prepared p = prepare(train_set, cfg, stream);

    bool have = false;
    std::size_t best_L = 0;
    BfaResult best;
    // Ascending L with strictly-better acceptance: ties go to the smaller L.
    for (std::size_t L : sorted_candidates(cfg)) {
        BfaConfig bfa_cfg = cfg.bfa;
        bfa_cfg.dim = L * kInputDim + L;
        const FitnessFn fitness = [&, L](const std::vector<double>& position) {
            return fitness_of_position(position, p.fit_X, p.fit_t, p.val_X, p.val_t, kInputDim,
                                       L, cfg.activation);
        };
        RandomStream run = stream.child("bfa", L);
        BfaResult res = optimize(fitness, bfa_cfg, run);
        if (!have || res.best_fitness < best.best_fitness) {
            have = true;
            best_L = L;
            best = std::move(res);
        }
    }

    ElmParams params = decode_position(best.best_position, kInputDim, best_L, cfg.activation);
    ElmModel model = train_with_params(p.X, p.t, std::move(params));
    return FitReport{"bfa-elm", best_L, best.best_fitness, std::move(best.trace), p.stats,
                     std::move(model)};
}

FitReport fit_bfa_elm(const Dataset& train_set, const PipelineConfig& cfg) {
    RandomStream stream(cfg.seed);
    return fit_bfa_elm(train_set, cfg, stream);
}

FitReport fit_plain_elm(const Dataset& train_set, const PipelineConfig& cfg,
                        RandomStream& stream) {
    cfg.validate();
    const Prepared p = prepare(train_set, cfg, stream);

    bool have = false;
    std::size_t best_L = 0;
    double best_fitness = 0.0;
    ElmParams best_params{Matrix(1, 1), {0.0}, cfg.activation};
    for (std::size_t L : sorted_candidates(cfg)) {
        RandomStream init = stream.child("elm-init", L);
        ElmParams params = init_params(kInputDim, L, cfg.activation, init);
        const ElmModel candidate = train_with_params(p.fit_X, p.fit_t, params);
        const double fitness = validation_mse(candidate, p.val_X, p.val_t);
        if (!have || fitness < best_fitness) {
            have = true;
            best_L = L;
            best_fitness = fitness;
            best_params = std::move(params);
        }
    }

    ElmModel model = train_with_params(p.X, p.t, std::move(best_params));
    return FitReport{"elm", best_L, best_fitness, {}, p.stats, std::move(model)};
}

std::vector<double> predict_dataset(const ElmModel& model, const NormStats& stats,
                                    const Dataset& dataset) {
    const Matrix X = feature_matrix(dataset, stats);
    std::vector<double> pred = predict_all(model, X);
    const bool constant = stats.target.min == stats.target.max;
    for (double& v : pred)
        v = constant ? v + stats.target.min
                     : denormalize(v, stats.target.min, stats.target.max);
    return pred;
}

MetricsReport evaluate_model(const ElmModel& model, const NormStats& stats,
                             const Dataset& dataset) {
    std::vector<double> truth;
    truth.reserve(dataset.size());
    for (const auto& r : dataset.records) truth.push_back(r.fpi);
    return metrics_report(truth, predict_dataset(model, stats, dataset));
}

ComparisonReport compare_models(const Dataset& dataset, const PipelineConfig& cfg,
                                std::size_t n_seeds) {
    cfg.validate();
    if (n_seeds == 0) throw std::invalid_argument("compare_models: n_seeds must be >= 1");

    RandomStream root(cfg.seed);
    ComparisonReport report;
    for (std::size_t s = 0; s < n_seeds; ++s) {
        RandomStream split_stream = root.child("split", s);
        const SplitResult parts = split(dataset, cfg.train_ratio, split_stream);

        RandomStream elm_stream = root.child("elm-fit", s);
        const FitReport plain = fit_plain_elm(parts.train, cfg, elm_stream);

        RandomStream bfa_stream = root.child("bfa-fit", s);
        const FitReport tuned = fit_bfa_elm(parts.train, cfg, bfa_stream);

        ComparisonRow row;
        row.seed = s;
        row.elm = evaluate_model(plain.model, plain.norm_stats, parts.test);
        row.bfa_elm = evaluate_model(tuned.model, tuned.norm_stats, parts.test);
        report.rows.push_back(row);
    }

    const auto collect = [&](auto getter) {
        std::vector<double> v;
        v.reserve(report.rows.size());
        for (const auto& r : report.rows) v.push_back(getter(r));
        return median(std::move(v));
    };
    report.elm_median = {collect([](const ComparisonRow& r) { return r.elm.mae; }),
                         collect([](const ComparisonRow& r) { return r.elm.mse; }),
                         collect([](const ComparisonRow& r) { return r.elm.mape; })};
    report.bfa_elm_median = {collect([](const ComparisonRow& r) { return r.bfa_elm.mae; }),
                             collect([](const ComparisonRow& r) { return r.bfa_elm.mse; }),
                             collect([](const ComparisonRow& r) { return r.bfa_elm.mape; })};
    return report;
}

std::string pipeline_config_to_json(const PipelineConfig& cfg) {
    nlohmann::json j;
    j["seed"] = cfg.seed;
    j["activation"] = to_string(cfg.activation);
    j["L_candidates"] = cfg.hidden_candidates;
    j["train_ratio"] = cfg.train_ratio;
    j["validation_ratio"] = cfg.validation_ratio;
    j["bfa"] = {{"S", cfg.bfa.population},      {"N_c", cfg.bfa.chemotaxis_steps},
                {"N_re", cfg.bfa.reproductions}, {"N_ed", cfg.bfa.dispersals},
                {"N_s", cfg.bfa.max_swim},       {"s_p", cfg.bfa.step_length},
                {"P_ed", cfg.bfa.dispersal_prob}};
    return j.dump(2);
}

PipelineConfig pipeline_config_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    PipelineConfig cfg;
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("activation"))
        cfg.activation = activation_from_string(j["activation"].get<std::string>());
    if (j.contains("L_candidates"))
        cfg.hidden_candidates = j["L_candidates"].get<std::vector<std::size_t>>();
    if (j.contains("train_ratio")) cfg.train_ratio = j["train_ratio"].get<double>();
    if (j.contains("validation_ratio"))
        cfg.validation_ratio = j["validation_ratio"].get<double>();
    if (j.contains("bfa")) {
        const auto& b = j["bfa"];
        if (b.contains("S")) cfg.bfa.population = b["S"].get<std::size_t>();
        if (b.contains("N_c")) cfg.bfa.chemotaxis_steps = b["N_c"].get<std::size_t>();
        if (b.contains("N_re")) cfg.bfa.reproductions = b["N_re"].get<std::size_t>();
        if (b.contains("N_ed")) cfg.bfa.dispersals = b["N_ed"].get<std::size_t>();
        if (b.contains("N_s")) cfg.bfa.max_swim = b["N_s"].get<std::size_t>();
        if (b.contains("s_p")) cfg.bfa.step_length = b["s_p"].get<double>();
        if (b.contains("P_ed")) cfg.bfa.dispersal_prob = b["P_ed"].get<double>();
    }
    cfg.validate();
    return cfg;
}

namespace {

nlohmann::json norm_stats_json(const NormStats& stats) {
    nlohmann::json features = nlohmann::json::array();
    for (std::size_t f = 0; f < kFeatureNames.size(); ++f)
        features.push_back({{"name", kFeatureNames[f]},
                            {"min", stats.features[f].min},
                            {"max", stats.features[f].max}});
    return {{"source", "train"},
            {"features", features},
            {"target", {{"min", stats.target.min}, {"max", stats.target.max}}}};
}

}  // namespace

std::string fit_report_to_json(const FitReport& report, const PipelineConfig& cfg) {
    nlohmann::json j;
    j["config"] = nlohmann::json::parse(pipeline_config_to_json(cfg));
    j["mode"] = report.mode;
    j["chosen_L"] = report.chosen_L;
    j["best_fitness"] = report.best_fitness;
    j["bfa_trace"] = report.bfa_trace;
    j["norm_stats"] = norm_stats_json(report.norm_stats);
    return j.dump(2);
}

std::string comparison_to_json(const ComparisonReport& report, const PipelineConfig& cfg) {
    nlohmann::json j;
    j["config"] = nlohmann::json::parse(pipeline_config_to_json(cfg));
    j["n_seeds"] = report.rows.size();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows)
        rows.push_back(
            {{"seed", r.seed}, {"elm", metrics_json(r.elm)}, {"bfa_elm", metrics_json(r.bfa_elm)}});
    j["rows"] = rows;
    j["medians"] = {{"elm",
                     {{"mae", report.elm_median.mae},
                      {"mse", report.elm_median.mse},
                      {"mape", report.elm_median.mape}}},
                    {"bfa_elm",
                     {{"mae", report.bfa_elm_median.mae},
                      {"mse", report.bfa_elm_median.mse},
                      {"mape", report.bfa_elm_median.mape}}}};
    return j.dump(2);
}

std::string comparison_to_csv(const ComparisonReport& report) {
    std::string out = "seed,model,MAE,MSE,MAPE\n";
    for (const auto& r : report.rows) {
        out += std::to_string(r.seed) + ",elm," + format_double(r.elm.mae) + ',' +
               format_double(r.elm.mse) + ',' + format_double(r.elm.mape) + '\n';
        out += std::to_string(r.seed) + ",bfa-elm," + format_double(r.bfa_elm.mae) + ',' +
               format_double(r.bfa_elm.mse) + ',' + format_double(r.bfa_elm.mape) + '\n';
    }
    return out;
}

}  // namespace bfaelm

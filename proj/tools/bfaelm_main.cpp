#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfaelm/dataset.hpp"
#include "bfaelm/elm.hpp"
#include "bfaelm/format.hpp"
#include "bfaelm/metrics.hpp"
#include "bfaelm/pipeline.hpp"

namespace {

using namespace bfaelm;

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

// Precedence: flags > config file > built-in defaults.
PipelineConfig resolve_config(const std::string& config_path, const CLI::App* cmd,
                              std::uint64_t seed_flag, const std::string& activation_flag,
                              const std::vector<std::size_t>& l_flag) {
    PipelineConfig cfg;
    if (!config_path.empty()) cfg = pipeline_config_from_json(read_file(config_path));
    if (cmd->count("--seed") > 0) cfg.seed = seed_flag;
    if (cmd->count("--activation") > 0) cfg.activation = activation_from_string(activation_flag);
    if (cmd->count("--hidden") > 0) cfg.hidden_candidates = l_flag;
    cfg.validate();
    return cfg;
}

int cmd_generate(std::size_t n, double noise, std::uint64_t seed, const std::string& out) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    if (noise < 0.0) throw std::invalid_argument("noise must be >= 0");
    RandomStream stream(seed);
    const Dataset ds = generate_synthetic(n, noise, stream);
    save_csv(ds, out);
    std::cout << ds.size() << " records written to " << out << "\n";
    return 0;
}

int cmd_train(const std::string& data_path, const PipelineConfig& cfg, const std::string& mode,
              const std::string& model_path, const std::string& report_path) {
    const Dataset ds = load_csv(data_path);
    RandomStream stream(cfg.seed);
    const FitReport report =
        mode == "elm" ? fit_plain_elm(ds, cfg, stream) : fit_bfa_elm(ds, cfg, stream);
    save_model(report.model, model_path);
    write_file(report_path, fit_report_to_json(report, cfg) + "\n");
    std::cout << "chosen_L=" << report.chosen_L
              << " best_fitness=" << format_double(report.best_fitness) << "\n";
    return 0;
}

int cmd_evaluate(const std::string& model_path, const std::string& data_path,
                 const std::string& predictions_path) {
    const ElmModel model = load_model(model_path);
    const Dataset ds = load_csv(data_path);
    // The model file stores network parameters only; scaling statistics are
    // recomputed from the evaluation dataset.
    const NormStats stats = NormStats::compute(ds);
    const std::vector<double> pred = predict_dataset(model, stats, ds);
    std::vector<double> truth;
    truth.reserve(ds.size());
    for (const auto& r : ds.records) truth.push_back(r.fpi);
    const MetricsReport m = metrics_report(truth, pred);

    std::string csv = "index,true,predicted\n";
    for (std::size_t i = 0; i < ds.size(); ++i)
        csv += std::to_string(i) + ',' + format_double(truth[i]) + ',' + format_double(pred[i]) +
               '\n';
    write_file(predictions_path, csv);
    std::cout << metrics_to_json(m) << "\n";
    return 0;
}

int cmd_compare(const std::string& data_path, const PipelineConfig& cfg, std::size_t n_seeds,
                const std::string& out_dir) {
    if (n_seeds == 0) throw std::invalid_argument("seeds must be >= 1");
    const Dataset ds = load_csv(data_path);
    const ComparisonReport report = compare_models(ds, cfg, n_seeds);
    std::filesystem::create_directories(out_dir);
    const auto dir = std::filesystem::path(out_dir);
    write_file((dir / "comparison.csv").string(), comparison_to_csv(report));
    write_file((dir / "summary.json").string(), comparison_to_json(report, cfg) + "\n");
    std::cout << "median MSE elm=" << format_double(report.elm_median.mse)
              << " bfa-elm=" << format_double(report.bfa_elm_median.mse) << "\n";
    return 0;
}

int cmd_fpi(const std::string& trace_path) {
    const FlightTrace trace = load_trace_csv(trace_path);
    std::cout << format_double(compute_fpi(trace)) << "\n";
    return 0;
}

int cmd_correlate(const std::string& data_path) {
    const Dataset ds = load_csv(data_path);
    const auto screen = correlation_screen(ds);
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [name, r] : screen) j.push_back({{"feature", name}, {"r", r}});
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flight-performance prediction: ELM regression with BFA parameter tuning"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "Write a synthetic dataset CSV");
    std::size_t gen_n = 200;
    double gen_noise = 0.02;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    generate->add_option("--n", gen_n, "record count");
    generate->add_option("--noise", gen_noise, "gaussian noise sd on the target");
    generate->add_option("--seed", gen_seed, "generator seed");
    generate->add_option("--out", gen_out, "output CSV path")->required();

    // shared train/compare options
    std::string config_path;
    std::uint64_t seed_flag = 0;
    std::string activation_flag = "sigmoid";
    std::vector<std::size_t> hidden_flag;

    auto add_pipeline_flags = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file (flags override it)");
        cmd->add_option("--seed", seed_flag, "run seed");
        cmd->add_option("--activation", activation_flag, "sigmoid|tanh|sine|identity");
        cmd->add_option("--hidden", hidden_flag, "hidden-node candidates");
    };

    // train
    auto* train = app.add_subcommand("train", "Fit a model on a dataset CSV");
    std::string train_data, train_mode = "bfa", out_model = "model.json",
                out_report = "report.json";
    train->add_option("--data", train_data, "dataset CSV")->required();
    train->add_option("--mode", train_mode, "bfa (default) or elm")
        ->check(CLI::IsMember({"bfa", "elm"}));
    train->add_option("--out-model", out_model, "model JSON path");
    train->add_option("--out-report", out_report, "fit report JSON path");
    add_pipeline_flags(train);

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "Score a saved model on a dataset CSV");
    std::string eval_model, eval_data, eval_pred = "predictions.csv";
    evaluate->add_option("--model", eval_model, "model JSON")->required();
    evaluate->add_option("--data", eval_data, "dataset CSV")->required();
    evaluate->add_option("--out-predictions", eval_pred, "predictions CSV path");

    // compare
    auto* compare = app.add_subcommand("compare", "Paired ELM vs BFA-ELM experiment");
    std::string cmp_data, cmp_out = ".";
    std::size_t cmp_seeds = 20;
    compare->add_option("--data", cmp_data, "dataset CSV")->required();
    compare->add_option("--seeds", cmp_seeds, "number of paired seeds");
    compare->add_option("--out-dir", cmp_out, "output directory");
    add_pipeline_flags(compare);

    // fpi
    auto* fpi = app.add_subcommand("fpi", "Flight performance index of an altitude trace CSV");
    std::string fpi_trace;
    fpi->add_option("--trace", fpi_trace, "trace CSV with header h_ac,h_ex")->required();

    // correlate
    auto* correlate = app.add_subcommand("correlate", "Per-feature Pearson r against FPI");
    std::string corr_data;
    correlate->add_option("--data", corr_data, "dataset CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return cmd_generate(gen_n, gen_noise, gen_seed, gen_out);
        if (train->parsed()) {
            const PipelineConfig cfg =
                resolve_config(config_path, train, seed_flag, activation_flag, hidden_flag);
            return cmd_train(train_data, cfg, train_mode, out_model, out_report);
        }
        if (evaluate->parsed()) return cmd_evaluate(eval_model, eval_data, eval_pred);
        if (compare->parsed()) {
            const PipelineConfig cfg =
                resolve_config(config_path, compare, seed_flag, activation_flag, hidden_flag);
            return cmd_compare(cmp_data, cfg, cmp_seeds, cmp_out);
        }
        if (fpi->parsed()) return cmd_fpi(fpi_trace);
        if (correlate->parsed()) return cmd_correlate(corr_data);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
    const char* p = std::getenv("BFAELM_CLI");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exit_code = 0;
    std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
    const fs::path capture = fs::temp_directory_path() / "bfaelm_cli_capture.txt";
    const std::string cmd = cli_path() + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(capture);
    std::string output((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    fs::remove(capture);
#ifdef _WIN32
    return {status, output};
#else
    return {WEXITSTATUS(status), output};
#endif
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

// Work area for one test case; removed on destruction.
struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path operator/(const std::string& leaf) const { return path / leaf; }
};

// Tiny optimization budget so CLI runs stay fast.
const char* kSmallConfig =
    R"({"seed": 3, "L_candidates": [3, 5], "bfa": {"N_c": 4, "N_re": 2, "N_ed": 1}})";

}  // namespace

TEST_CASE("generate writes the expected shape and is deterministic") {
    TempDir dir("bfaelm_cli_generate");
    const fs::path a = dir / "a.csv";
    const fs::path b = dir / "b.csv";

    const RunResult r1 = run("generate --n 25 --seed 9 --out " + a.string());
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("25 records") != std::string::npos);
    const std::string text = read_file(a);
    CHECK(text.rfind("HR,RA,RR,BI,FT,FPI\n", 0) == 0);
    CHECK(count_lines(text) == 26);  // header + 25 rows

    const RunResult r2 = run("generate --n 25 --seed 9 --out " + b.string());
    CHECK(r2.exit_code == 0);
    CHECK(read_file(b) == text);

    const RunResult r3 = run("generate --n 25 --seed 10 --out " + b.string());
    CHECK(r3.exit_code == 0);
    CHECK(read_file(b) != text);
}

TEST_CASE("generate rejects an empty request") {
    TempDir dir("bfaelm_cli_generate_bad");
    const RunResult r = run("generate --n 0 --out " + (dir / "x.csv").string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("error: n must be >= 1") != std::string::npos);
}

TEST_CASE("train produces a model and a byte-stable report") {
    TempDir dir("bfaelm_cli_train");
    const fs::path data = dir / "data.csv";
    const fs::path config = dir / "config.json";
    write_file(config, kSmallConfig);
    REQUIRE(run("generate --n 60 --seed 1 --out " + data.string()).exit_code == 0);

    const std::string train_args = "train --data " + data.string() + " --config " +
                                   config.string() + " --out-model " +
                                   (dir / "model.json").string() + " --out-report " +
                                   (dir / "report.json").string();
    const RunResult r1 = run(train_args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("chosen_L=") != std::string::npos);
    CHECK(r1.output.find("best_fitness=") != std::string::npos);

    const std::string model = read_file(dir / "model.json");
    const std::string report = read_file(dir / "report.json");
    CHECK(report.find("\"mode\": \"bfa-elm\"") != std::string::npos);

    const RunResult r2 = run(train_args);
    CHECK(r2.exit_code == 0);
    CHECK(read_file(dir / "model.json") == model);
    CHECK(read_file(dir / "report.json") == report);

    const RunResult r3 = run(train_args + " --mode elm");
    CHECK(r3.exit_code == 0);
    CHECK(read_file(dir / "report.json").find("\"mode\": \"elm\"") != std::string::npos);
}

TEST_CASE("evaluate reports metrics and one prediction per record") {
    TempDir dir("bfaelm_cli_evaluate");
    const fs::path data = dir / "data.csv";
    const fs::path config = dir / "config.json";
    write_file(config, kSmallConfig);
    REQUIRE(run("generate --n 60 --seed 2 --out " + data.string()).exit_code == 0);
    REQUIRE(run("train --data " + data.string() + " --config " + config.string() +
                " --out-model " + (dir / "model.json").string() + " --out-report " +
                (dir / "report.json").string())
                .exit_code == 0);

    const RunResult r = run("evaluate --model " + (dir / "model.json").string() + " --data " +
                            data.string() + " --out-predictions " +
                            (dir / "pred.csv").string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"mse\"") != std::string::npos);
    CHECK(r.output.find("\"accuracy\"") != std::string::npos);

    const std::string pred = read_file(dir / "pred.csv");
    CHECK(pred.rfind("index,true,predicted\n", 0) == 0);
    CHECK(count_lines(pred) == 61);
}

TEST_CASE("evaluate surfaces a zero true value as an error") {
    TempDir dir("bfaelm_cli_evaluate_zero");
    const fs::path data = dir / "data.csv";
    const fs::path config = dir / "config.json";
    write_file(config, kSmallConfig);
    REQUIRE(run("generate --n 60 --seed 4 --out " + data.string()).exit_code == 0);
    REQUIRE(run("train --data " + data.string() + " --config " + config.string() +
                " --out-model " + (dir / "model.json").string() + " --out-report " +
                (dir / "report.json").string())
                .exit_code == 0);

    // Append a record whose target is exactly zero; MAPE is then undefined.
    std::ofstream append(data, std::ios::app);
    append << "0.5,0.5,0.51,0.52,0.53,0\n";
    append.close();
    const RunResult r = run("evaluate --model " + (dir / "model.json").string() + " --data " +
                            data.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("zero true value in MAPE") != std::string::npos);
}

TEST_CASE("compare writes two csv rows per seed plus a summary") {
    TempDir dir("bfaelm_cli_compare");
    const fs::path data = dir / "data.csv";
    const fs::path config = dir / "config.json";
    write_file(config, kSmallConfig);
    REQUIRE(run("generate --n 60 --seed 5 --out " + data.string()).exit_code == 0);

    const RunResult r = run("compare --data " + data.string() + " --config " + config.string() +
                            " --seeds 1 --out-dir " + (dir / "out").string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("median MSE elm=") != std::string::npos);

    const std::string csv = read_file(dir / "out" / "comparison.csv");
    CHECK(csv.rfind("seed,model,MAE,MSE,MAPE\n", 0) == 0);
    CHECK(count_lines(csv) == 3);  // header + elm row + bfa-elm row
    const std::string summary = read_file(dir / "out" / "summary.json");
    CHECK(summary.find("\"medians\"") != std::string::npos);
}

TEST_CASE("fpi prints the index for a trace") {
    TempDir dir("bfaelm_cli_fpi");
    const fs::path trace = dir / "trace.csv";

    write_file(trace, "h_ac,h_ex\n100,100\n200,200\n");
    const RunResult zero = run("fpi --trace " + trace.string());
    CHECK(zero.exit_code == 0);
    CHECK(zero.output == "0\n");

    write_file(trace, "h_ac,h_ex\n3,0\n4,0\n");
    const RunResult rms = run("fpi --trace " + trace.string());
    CHECK(rms.exit_code == 0);
    CHECK(rms.output.rfind("3.5355339059327", 0) == 0);

    write_file(trace, "alt,plan\n1,1\n");
    const RunResult bad = run("fpi --trace " + trace.string());
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("h_ac,h_ex") != std::string::npos);
}

TEST_CASE("correlate prints one entry per feature") {
    TempDir dir("bfaelm_cli_correlate");
    const fs::path data = dir / "data.csv";
    write_file(data,
               "HR,RA,RR,BI,FT,FPI\n"
               "0.1,0.9,0.2,0.8,0.3,0.1\n"
               "0.2,0.8,0.4,0.6,0.5,0.2\n"
               "0.3,0.7,0.6,0.4,0.7,0.3\n"
               "0.4,0.6,0.8,0.2,0.9,0.4\n");
    const RunResult r = run("correlate --data " + data.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"HR\"") != std::string::npos);
    CHECK(r.output.find("\"FT\"") != std::string::npos);
    CHECK(r.output.find("\"r\": 1.0") != std::string::npos);  // HR column equals FPI

    write_file(data, "HR,RA,RR,BI,FT,FPI\n0.1,0.9,0.2,0.8,0.3,0.1\n");
    const RunResult bad = run("correlate --data " + data.string());
    CHECK(bad.exit_code == 1);
}

TEST_CASE("an unknown subcommand fails") {
    const RunResult r = run("frobnicate");
    CHECK(r.exit_code != 0);
}

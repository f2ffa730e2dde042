#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "bfaelm/dataset.hpp"
#include "test_helpers.hpp"

using namespace bfaelm;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string fixture_path() {
    const char* p = std::getenv("BFAELM_FIXTURE");
    REQUIRE(p != nullptr);
    return p;
}

}  // namespace

TEST_CASE("fpi of a perfect trace is zero") {
    FlightTrace trace{{100.0, 200.0, 300.0}, {100.0, 200.0, 300.0}};
    CHECK(compute_fpi(trace) == 0.0);
}

TEST_CASE("fpi of a constant offset is the offset magnitude") {
    FlightTrace trace{{103.0, 203.0, 303.0, 403.0}, {100.0, 200.0, 300.0, 400.0}};
    CHECK(compute_fpi(trace) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("fpi hand value for deviations 3 and 4") {
    FlightTrace trace{{3.0, 4.0}, {0.0, 0.0}};
    CHECK(compute_fpi(trace) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-12));
}

TEST_CASE("fpi rejects mismatched or empty traces") {
    CHECK_THROWS_AS(compute_fpi(FlightTrace{{1.0}, {1.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(compute_fpi(FlightTrace{{}, {}}), std::invalid_argument);
}

TEST_CASE("fpi is scale equivariant") {
    RandomStream stream(1);
    FlightTrace trace;
    for (int i = 0; i < 50; ++i) {
        trace.actual.push_back(stream.uniform(0.0, 1000.0));
        trace.expected.push_back(stream.uniform(0.0, 1000.0));
    }
    const double base = compute_fpi(trace);
    for (double c : {0.0, 0.5, 2.0, 17.0}) {
        FlightTrace scaled = trace;
        for (double& v : scaled.actual) v *= c;
        for (double& v : scaled.expected) v *= c;
        CHECK(compute_fpi(scaled) == doctest::Approx(c * base).epsilon(1e-9));
    }
}

TEST_CASE("pearson closed forms") {
    const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
    std::vector<double> y;
    for (double v : x) y.push_back(2.0 * v + 1.0);
    CHECK(pearson(x, y) == doctest::Approx(1.0).epsilon(1e-12));

    y.clear();
    for (double v : x) y.push_back(-v);
    CHECK(pearson(x, y) == doctest::Approx(-1.0).epsilon(1e-12));

    CHECK(pearson({1.0, 2.0, 3.0}, {1.0, 3.0, 2.0}) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pearson rejects degenerate inputs") {
    CHECK_THROWS_AS(pearson({1.0, 1.0, 1.0}, {1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(pearson({1.0, 2.0}, {1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(pearson({1.0}, {2.0}), std::invalid_argument);
}

TEST_CASE("pearson affine invariance") {
    RandomStream stream(2);
    std::vector<double> x(100), y(100);
    for (auto& v : x) v = stream.uniform(0.0, 1.0);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = 0.3 * x[i] + stream.uniform(0.0, 0.5);
    const double base = pearson(x, y);

    std::vector<double> shifted = x;
    for (double& v : shifted) v = 3.0 * v + 11.0;
    CHECK(pearson(shifted, y) == doctest::Approx(base).epsilon(1e-10));

    std::vector<double> negated = x;
    for (double& v : negated) v = -2.0 * v;
    CHECK(pearson(negated, y) == doctest::Approx(-base).epsilon(1e-10));
}

TEST_CASE("correlation screen returns all five features in order") {
    RandomStream stream(3);
    Dataset ds = generate_synthetic(50, 0.0, stream);
    for (auto& r : ds.records) r.fpi = r.hr;  // copy column
    const auto screen = correlation_screen(ds);
    REQUIRE(screen.size() == 5);
    CHECK(screen[0].first == "HR");
    CHECK(screen[1].first == "RA");
    CHECK(screen[2].first == "RR");
    CHECK(screen[3].first == "BI");
    CHECK(screen[4].first == "FT");
    CHECK(screen[0].second == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("correlation screen names a zero-variance column") {
    RandomStream stream(4);
    Dataset ds = generate_synthetic(5, 0.0, stream);
    for (auto& r : ds.records) r.ra = 0.7;
    CHECK_THROWS_WITH_AS(correlation_screen(ds),
                         "correlation_screen: zero variance in column RA", std::invalid_argument);
}

TEST_CASE("the printed excerpt fixture loads and round-trips") {
    const Dataset ds = load_csv(fixture_path());
    REQUIRE(ds.size() == 13);
    CHECK(ds.records[0] == Record{0.876, 0.783, 0.949, 0.867, 0.810, 0.571});
    for (const auto& r : ds.records) {
        for (double v : r.features()) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        CHECK(r.fpi >= 0.0);
        CHECK(r.fpi <= 1.0);
    }

    const auto copy = temp_file("bfaelm_fixture_copy.csv");
    save_csv(ds, copy.string());
    CHECK(load_csv(copy.string()) == ds);
    std::filesystem::remove(copy);
}

TEST_CASE("csv round trip preserves random datasets exactly") {
    RandomStream stream(5);
    const auto path = temp_file("bfaelm_roundtrip.csv");
    for (int trial = 0; trial < 20; ++trial) {
        RandomStream run = stream.child("trial", trial);
        const Dataset ds = generate_synthetic(100, 0.02, run);
        save_csv(ds, path.string());
        CHECK(load_csv(path.string()) == ds);
    }
    std::filesystem::remove(path);
}

TEST_CASE("csv schema violations carry context") {
    const auto path = temp_file("bfaelm_bad.csv");

    write_text(path, "HR,RA,RR,BI,FT\n0.1,0.2,0.3,0.4,0.5\n");
    CHECK_THROWS_WITH_AS(load_csv(path.string()),
                         doctest::Contains("expected 'HR,RA,RR,BI,FT,FPI'"), std::runtime_error);

    write_text(path, "HR,RA,RR,BI,FT,FPI\n0.1,0.2,0.3\n");
    CHECK_THROWS_WITH_AS(load_csv(path.string()), doctest::Contains("line 2"), std::runtime_error);

    write_text(path, "HR,RA,RR,BI,FT,FPI\n0.1,0.2,0.3,0.4,0.5,0.6\n0.1,x,0.3,0.4,0.5,0.6\n");
    CHECK_THROWS_WITH_AS(load_csv(path.string()), doctest::Contains("line 3"), std::runtime_error);

    CHECK_THROWS_AS(load_csv("/nonexistent/definitely_missing.csv"), std::runtime_error);
    std::filesystem::remove(path);
}

TEST_CASE("trace csv loads both columns") {
    const auto path = temp_file("bfaelm_trace.csv");
    write_text(path, "h_ac,h_ex\n3,0\n4,0\n");
    const FlightTrace trace = load_trace_csv(path.string());
    CHECK(compute_fpi(trace) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-12));

    write_text(path, "alt,exp\n1,1\n");
    CHECK_THROWS_WITH_AS(load_trace_csv(path.string()), doctest::Contains("h_ac,h_ex"),
                         std::runtime_error);
    std::filesystem::remove(path);
}

TEST_CASE("noiseless generation equals the documented ground truth") {
    RandomStream stream(6);
    const Dataset ds = generate_synthetic(200, 0.0, stream);
    for (const auto& r : ds.records) CHECK(r.fpi == synthetic_target(r));
}

TEST_CASE("generation is deterministic per seed") {
    RandomStream s1(7), s2(7);
    CHECK(generate_synthetic(100, 0.02, s1) == generate_synthetic(100, 0.02, s2));
    RandomStream s3(8);
    CHECK_FALSE(generate_synthetic(100, 0.02, s3) == generate_synthetic(100, 0.02, s1));
    CHECK_THROWS_AS(generate_synthetic(0, 0.0, s3), std::invalid_argument);
    CHECK_THROWS_AS(generate_synthetic(5, -0.1, s3), std::invalid_argument);
}

TEST_CASE("every feature influences the generated target") {
    for (std::uint64_t seed : {10u, 11u, 12u}) {
        RandomStream stream(seed);
        const Dataset ds = generate_synthetic(2000, 0.0, stream);
        for (const auto& [name, r] : correlation_screen(ds)) {
            INFO(name);
            CHECK(std::abs(r) > 0.1);
        }
    }
}

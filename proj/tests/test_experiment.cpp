#include <unistd.h>
#include <algorithm>
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "qnmc/experiment.hpp"
#include "qnmc/generators.hpp"
#include "qnmc/manifest.hpp"
#include "qnmc/rng.hpp"

using namespace qnmc;

namespace {

Dataset two_blobs(std::size_t per_class = 40) {
    Rng rng(5);
    std::vector<Pattern> patterns;
    for (std::size_t i = 0; i < per_class; ++i)
        patterns.push_back({{1.0 + 0.1 * rng.next_gaussian(), 1.0 + 0.1 * rng.next_gaussian()},
                            1});
    for (std::size_t i = 0; i < per_class; ++i)
        patterns.push_back({{8.0 + 0.1 * rng.next_gaussian(), 8.0 + 0.1 * rng.next_gaussian()},
                            2});
    return Dataset::make("blobs", std::move(patterns));
}

}  // namespace

TEST_CASE("well separated blobs are classified perfectly by both rules") {
    const auto result = run_experiment(two_blobs(), ExperimentConfig{});
    for (const auto& [kind, report] : result.reports) {
        CHECK(report.summary.runs == 10);
        CHECK(*report.summary.error.mean == 0.0);
        CHECK(*report.summary.error.stddev == 0.0);
    }
}

TEST_CASE("identical configs give byte-identical results") {
    const auto ds = gen_moon(60, 0.15, 9);
    ExperimentConfig config;
    config.split.runs = 4;
    const auto a = run_experiment(ds, config);
    const auto b = run_experiment(ds, config);
    const ExperimentResult one[] = {a};
    const ExperimentResult two[] = {b};
    CHECK(format_csv(one) == format_csv(two));
}

TEST_CASE("a single-point sweep equals the plain experiment") {
    const auto ds = gen_moon(60, 0.15, 10);
    ExperimentConfig config;
    config.split.runs = 3;
    config.rescale = RescaleGrid{1.0, 1.0, 1.0};

    const auto sweep = run_sweep(ds, config);
    REQUIRE(sweep.t_values == std::vector<double>{1.0});
    const auto plain = run_experiment(ds, config);

    const ExperimentResult a[] = {sweep.cells[0]};
    const ExperimentResult b[] = {plain};
    CHECK(format_csv(a) == format_csv(b));
}

TEST_CASE("sweep cells share split partitions and NMC labels") {
    const auto ds = gen_moon(50, 0.2, 11);
    ExperimentConfig config;
    config.split.runs = 3;
    config.rescale = RescaleGrid{0.5, 2.0, 0.5};

    const auto sweep = run_sweep(ds, config);
    REQUIRE(sweep.cells.size() == 4);
    const auto* base_nmc = sweep.cells[0].find(ClassifierKind::Nmc);
    REQUIRE(base_nmc != nullptr);
    for (const auto& cell : sweep.cells) {
        const auto* nmc = cell.find(ClassifierKind::Nmc);
        REQUIRE(nmc != nullptr);
        for (std::size_t run = 0; run < nmc->runs.size(); ++run) {
            CHECK(nmc->runs[run].truth == base_nmc->runs[run].truth);
            CHECK(nmc->runs[run].predicted == base_nmc->runs[run].predicted);
        }
    }

    // the quantum rule reacts to rescaling somewhere on this grid
    const auto* q0 = sweep.cells[0].find(ClassifierKind::Qnmc);
    bool any_difference = false;
    for (const auto& cell : sweep.cells) {
        const auto* q = cell.find(ClassifierKind::Qnmc);
        for (std::size_t run = 0; run < q->runs.size(); ++run)
            any_difference |= q->runs[run].predicted != q0->runs[run].predicted;
    }
    CHECK(any_difference);
}

TEST_CASE("CSV output round-trips bit-exactly") {
    const auto ds = gen_moon(40, 0.25, 12);
    ExperimentConfig config;
    config.split.runs = 5;
    const auto result = run_experiment(ds, config);
    const ExperimentResult results[] = {result};
    const std::string csv = format_csv(results);

    const auto rows = parse_results_csv(csv);
    REQUIRE(rows.size() == 10);  // 2 classifiers x 5 runs
    std::size_t r = 0;
    for (const auto& [kind, report] : result.reports) {
        for (std::size_t run = 0; run < report.runs.size(); ++run, ++r) {
            CHECK(rows[r].dataset == "moon");
            CHECK(rows[r].classifier == to_string(kind));
            CHECK(rows[r].run == static_cast<int>(run));
            CHECK(rows[r].t == 1.0);
            const auto& want = report.runs[run].aggregate;
            CHECK(rows[r].indices.error == want.error);
            CHECK(rows[r].indices.tpr == want.tpr);
            CHECK(rows[r].indices.tnr == want.tnr);
            CHECK(rows[r].indices.fpr == want.fpr);
            CHECK(rows[r].indices.fnr == want.fnr);
            CHECK(rows[r].indices.precision == want.precision);
            CHECK(rows[r].indices.kappa == want.kappa);
        }
    }
}

TEST_CASE("emitting degenerate results") {
    const SweepResult empty{.dataset = "none", .encoding = EncodingKind::NormAugmented};
    const std::string csv = format_sweep_csv(empty);
    CHECK(csv == "dataset,classifier,encoding,run,t,E,TPR,TNR,FPR,FNR,P,K\n");

    ExperimentConfig config;
    config.split.runs = 1;
    config.classifiers = {ClassifierKind::Nmc};
    const auto result = run_experiment(two_blobs(), config);
    const ExperimentResult results[] = {result};
    const auto rows = parse_results_csv(format_csv(results));
    CHECK(rows.size() == 1);

    const std::string table = format_table(results);
    CHECK(table.find("blobs") != std::string::npos);
    CHECK(table.find("NMC") != std::string::npos);
}

TEST_CASE("a full comparison table has one row per dataset and classifier") {
    ExperimentConfig config;
    config.split.runs = 2;
    auto base = run_experiment(two_blobs(), config);
    std::vector<ExperimentResult> results;
    for (int i = 0; i < 14; ++i) {
        auto copy = base;
        copy.dataset = "set-" + std::to_string(i);
        results.push_back(std::move(copy));
    }
    const std::string table = format_table(results);
    const auto lines = std::count(table.begin(), table.end(), '\n');
    CHECK(lines == 1 + 14 * 2);  // header + 28 data rows
}

TEST_CASE("encoding failures name the offending dataset row") {
    std::vector<Pattern> patterns{{{1.0, 1.0}, 1}, {{0.0, 0.0}, 2}, {{2.0, 2.0}, 2}};
    const auto ds = Dataset::make("withzero", std::move(patterns));
    ExperimentConfig config;
    config.split.runs = 2;
    CHECK_THROWS_WITH_AS(run_experiment(ds, config), doctest::Contains("pattern 1"),
                         EncodingError);
}

TEST_CASE("manifest loading and dataset realization") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto csv_path = dir / ("qnmc_manifest_data_" + std::to_string(::getpid()) + ".csv");
    const auto manifest_path = dir / ("qnmc_manifest_" + std::to_string(::getpid()) + ".json");
    {
        std::ofstream csv(csv_path);
        csv << "g,1.0,2.0\nb,3.0,4.0\ng,5.0,6.0\n";
        std::ofstream mf(manifest_path);
        mf << R"({"datasets": [
              {"name": "tiny", "path": ")"
           << csv_path.filename().string() << R"(", "label_column": 0},
              {"name": "moon", "generator": "moon"}
            ]})";
    }

    const auto entries = load_manifest(manifest_path);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "tiny");
    CHECK(entries[0].label_column == 0);
    CHECK(entries[1].generator == "moon");

    const auto tiny = realize_dataset(entries[0], dir, 1);
    CHECK(tiny.name == "tiny");
    CHECK(tiny.patterns.size() == 3);
    CHECK(tiny.d == 2);

    const auto moon = realize_dataset(entries[1], dir, 1);
    CHECK(moon.patterns.size() == 200);

    std::filesystem::remove(csv_path);
    std::filesystem::remove(manifest_path);

    CHECK_THROWS_AS(load_manifest(dir / "missing.json"), std::runtime_error);
}

#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <set>

#include <doctest.h>

#include "qnmc/dataset.hpp"
#include "qnmc/classifier.hpp"

using namespace qnmc;

namespace {

struct TempCsv {
    std::filesystem::path path;
    explicit TempCsv(const std::string& content) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("qnmc_test_" + std::to_string(++counter) + "_" +
                std::to_string(::getpid()) + ".csv");
        std::ofstream out(path);
        out << content;
    }
    ~TempCsv() { std::filesystem::remove(path); }
};

std::multiset<std::vector<double>> feature_multiset(const Dataset& ds) {
    std::multiset<std::vector<double>> out;
    for (const auto& p : ds.patterns) out.insert(p.features);
    return out;
}

Dataset dummy_dataset(std::size_t n) {
    std::vector<Pattern> patterns;
    for (std::size_t i = 0; i < n; ++i)
        patterns.push_back({{static_cast<double>(i), static_cast<double>(i % 7)},
                            1 + static_cast<int>(i % 3)});
    return Dataset::make("dummy", std::move(patterns));
}

}  // namespace

TEST_CASE("CSV loading with label remapping") {
    TempCsv file("1.5,2.0,yes\n0.5,1.0,no\n2.5,3.0,yes\n");
    const auto ds = load_csv(file.path);
    CHECK(ds.patterns.size() == 3);
    CHECK(ds.d == 2);
    CHECK(ds.class_counts.at(1) == 2);  // "yes" seen first
    CHECK(ds.class_counts.at(2) == 1);
    CHECK(ds.label_names == std::vector<std::string>{"yes", "no"});
    CHECK(ds.patterns[1].features == std::vector<double>{0.5, 1.0});
    CHECK(ds.patterns[1].label == 2);
}

TEST_CASE("CSV header, label column and alphabet options") {
    TempCsv file("class,a,b\nB,1,2\nR,3,4\nB,5,6\n");
    CsvSchema schema;
    schema.header = true;
    schema.label_column = 0;
    const auto ds = load_csv(file.path, schema);
    CHECK(ds.patterns.size() == 3);
    CHECK(ds.d == 2);
    CHECK(ds.class_counts.at(1) == 2);
    CHECK(ds.patterns[1].features == std::vector<double>{3.0, 4.0});

    schema.label_alphabet = {"B", "L"};
    CHECK_THROWS_WITH_AS(load_csv(file.path, schema), doctest::Contains("unknown label \"R\""),
                         std::runtime_error);
}

TEST_CASE("CSV parse errors carry the position") {
    TempCsv bad_cell("1.0,2.0,1\n1.0,oops,2\n");
    CHECK_THROWS_WITH_AS(load_csv(bad_cell.path), doctest::Contains("line 2 column 2"),
                         std::runtime_error);

    TempCsv ragged("1.0,2.0,1\n1.0,1\n");
    CHECK_THROWS_WITH_AS(load_csv(ragged.path), doctest::Contains("ragged"), std::runtime_error);

    TempCsv empty("\n\n");
    CHECK_THROWS_AS(load_csv(empty.path), std::runtime_error);
    CHECK_THROWS_AS(load_csv("/nonexistent/file.csv"), std::runtime_error);
}

TEST_CASE("splits partition the dataset deterministically") {
    const auto ds = dummy_dataset(10);
    SplitSpec spec;  // 0.8, 10 runs, seed 1
    const auto [train, test] = split(ds, spec, 0);
    CHECK(train.patterns.size() == 8);
    CHECK(test.patterns.size() == 2);

    auto all = feature_multiset(train);
    for (const auto& p : test.patterns) all.insert(p.features);
    CHECK(all == feature_multiset(ds));

    const auto [train2, test2] = split(ds, spec, 0);
    CHECK(feature_multiset(train2) == feature_multiset(train));
    CHECK(train2.patterns[0].features == train.patterns[0].features);

    const auto [train3, test3] = split(ds, spec, 1);
    CHECK(feature_multiset(train3) != feature_multiset(train));  // overwhelmingly likely

    CHECK_THROWS_AS(split(ds, spec, 10), std::invalid_argument);
    CHECK_THROWS_AS(split(dummy_dataset(1), spec, 0), std::invalid_argument);
}

TEST_CASE("a 625-pattern set splits 500/125") {
    const auto ds = dummy_dataset(625);
    const auto [train, test] = split(ds, SplitSpec{}, 3);
    CHECK(train.patterns.size() == 500);
    CHECK(test.patterns.size() == 125);
}

TEST_CASE("rescaling features") {
    const auto ds = dummy_dataset(20);
    const auto same = rescale(ds, 1.0);
    for (std::size_t i = 0; i < ds.patterns.size(); ++i)
        CHECK(same.patterns[i].features == ds.patterns[i].features);

    const auto twice = rescale(ds, 2.0);
    CHECK(twice.patterns[1].features == std::vector<double>{2.0, 2.0});
    CHECK(twice.class_counts == ds.class_counts);

    // mean commutes with rescaling
    const auto m1 = train_nmc(ds.patterns);
    const auto m2 = train_nmc(rescale(ds, 3.5).patterns);
    for (std::size_t k = 0; k < m1.centroids.size(); ++k)
        for (std::size_t i = 0; i < ds.d; ++i)
            CHECK(m2.centroids[k].second[i] ==
                  doctest::Approx(3.5 * m1.centroids[k].second[i]).epsilon(1e-12));

    // composition within rounding
    const auto ab = rescale(rescale(ds, 0.3), 7.0);
    const auto once = rescale(ds, 0.3 * 7.0);
    for (std::size_t i = 0; i < ds.patterns.size(); ++i)
        for (std::size_t j = 0; j < ds.d; ++j)
            CHECK(ab.patterns[i].features[j] ==
                  doctest::Approx(once.patterns[i].features[j]).epsilon(1e-12));
}

TEST_CASE("rescale grids are inclusive and validated") {
    CHECK(RescaleGrid{1.0, 1.0, 0.5}.values() == std::vector<double>{1.0});

    const auto grid = RescaleGrid{0.1, 1.9, 0.1}.values();
    CHECK(grid.size() == 19);
    CHECK(grid.front() == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(grid.back() == doctest::Approx(1.9).epsilon(1e-12));

    const auto fine = RescaleGrid{0.001, 0.019, 0.001}.values();
    CHECK(fine.size() == 19);

    CHECK_THROWS_AS((RescaleGrid{1.0, 2.0, 0.0}.values()), std::invalid_argument);
    CHECK_THROWS_AS((RescaleGrid{2.0, 1.0, 0.5}.values()), std::invalid_argument);
}

TEST_CASE("dataset construction validates shape") {
    CHECK_THROWS_AS(Dataset::make("x", {{{1.0, 2.0}, 1}, {{1.0}, 2}}), std::invalid_argument);
    const auto ds = Dataset::make("x", {{{1.0, 2.0}, 5}, {{0.0, 0.5}, 5}});
    CHECK(ds.class_counts.at(5) == 2);
    CHECK(ds.d == 2);
}

TEST_CASE("benchmark files load to their catalogue shapes") {
    const std::filesystem::path data_dir(QNMC_DATA_DIR);

    const auto balance_path = data_dir / "uci" / "balance.csv";
    if (std::filesystem::exists(balance_path)) {
        CsvSchema schema;
        schema.label_column = 0;
        const auto balance = load_csv(balance_path, schema);
        CHECK(balance.patterns.size() == 625);
        CHECK(balance.d == 4);
        std::multiset<std::size_t> counts;
        for (const auto& [label, n] : balance.class_counts) counts.insert(n);
        CHECK(counts == std::multiset<std::size_t>{49, 288, 288});

        const auto enc = encode_dataset(balance.patterns, EncodingKind::NormAugmented);
        CHECK(enc.size() == 625);
        CHECK(enc.front().state.dim() == 5);
    } else {
        MESSAGE("balance.csv absent, skipping");
    }

    const auto iono_path = data_dir / "uci" / "ionosphere.csv";
    if (std::filesystem::exists(iono_path)) {
        const auto iono = load_csv(iono_path);
        CHECK(iono.patterns.size() == 351);
        CHECK(iono.d == 34);
        std::multiset<std::size_t> counts;
        for (const auto& [label, n] : iono.class_counts) counts.insert(n);
        CHECK(counts == std::multiset<std::size_t>{225, 126});
    } else {
        MESSAGE("ionosphere.csv absent, skipping");
    }
}

#include "qnmc/metrics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qnmc {

ConfusionCounts confusion(std::span<const int> truth, std::span<const int> predicted,
                          const std::set<int>& classes) {
    if (truth.size() != predicted.size()) {
        std::ostringstream msg;
        msg << "label lists differ in length: " << truth.size() << " vs " << predicted.size();
        throw std::invalid_argument(msg.str());
    }
    if (truth.empty()) throw std::invalid_argument("cannot score an empty test set");
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (!classes.contains(truth[i]) || !classes.contains(predicted[i])) {
            std::ostringstream msg;
            msg << "label at position " << i << " is outside the class alphabet";
            throw std::invalid_argument(msg.str());
        }
    }

    ConfusionCounts out;
    out.test_size = truth.size();
    for (int l : classes) out.per_class[l] = {};
    for (std::size_t i = 0; i < truth.size(); ++i) {
        for (int l : classes) {
            ClassCounts& c = out.per_class[l];
            const bool actual = truth[i] == l;
            const bool called = predicted[i] == l;
            if (actual && called) ++c.tp;
            else if (actual) ++c.fn;
            else if (called) ++c.fp;
            else ++c.tn;
        }
    }
    return out;
}

ClassIndices class_indices(const ConfusionCounts& counts, int label) {
    const auto it = counts.per_class.find(label);
    if (it == counts.per_class.end()) throw std::invalid_argument("label not in confusion counts");
    const ClassCounts& c = it->second;
    const double total = static_cast<double>(counts.test_size);

    auto ratio = [](double num, double den) -> std::optional<double> {
        if (den == 0.0) return std::nullopt;
        return num / den;
    };

    ClassIndices ix;
    ix.tpr = ratio(static_cast<double>(c.tp), static_cast<double>(c.tp + c.fn));
    ix.tnr = ratio(static_cast<double>(c.tn), static_cast<double>(c.tn + c.fp));
    if (ix.tpr) ix.fnr = 1.0 - *ix.tpr;
    if (ix.tnr) ix.fpr = 1.0 - *ix.tnr;
    ix.precision = ratio(static_cast<double>(c.tp), static_cast<double>(c.tp + c.fp));
    ix.error = 1.0 - static_cast<double>(c.tp) / total;

    const double pr_a = static_cast<double>(c.tp + c.tn) / total;
    const double pr_e = (static_cast<double>(c.tp + c.fp) * static_cast<double>(c.tp + c.fn) +
                         static_cast<double>(c.fp + c.tn) * static_cast<double>(c.tn + c.fn)) /
                        (total * total);
    if (pr_e != 1.0) ix.kappa = (pr_a - pr_e) / (1.0 - pr_e);
    return ix;
}

namespace {

struct WeightedMean {
    double sum = 0.0;
    double weight = 0.0;
    void add(std::optional<double> value, double w) {
        if (value) {
            sum += *value * w;
            weight += w;
        }
    }
    std::optional<double> get() const {
        if (weight == 0.0) return std::nullopt;
        return sum / weight;
    }
};

}  // namespace

ClassIndices aggregate(const std::map<int, ClassIndices>& per_class,
                       const std::map<int, std::size_t>& test_class_sizes) {
    if (per_class.size() != test_class_sizes.size())
        throw std::invalid_argument("per-class indices and class sizes disagree");

    WeightedMean tpr, tnr, fpr, fnr, precision, kappa;
    double correct = 0.0, total = 0.0;
    for (const auto& [label, ix] : per_class) {
        const auto it = test_class_sizes.find(label);
        if (it == test_class_sizes.end())
            throw std::invalid_argument("missing test size for a class");
        const double w = static_cast<double>(it->second);
        tpr.add(ix.tpr, w);
        tnr.add(ix.tnr, w);
        fpr.add(ix.fpr, w);
        fnr.add(ix.fnr, w);
        precision.add(ix.precision, w);
        kappa.add(ix.kappa, w);
        if (ix.tpr) correct += *ix.tpr * w;
        total += w;
    }

    ClassIndices out;
    out.tpr = tpr.get();
    out.tnr = tnr.get();
    out.fpr = fpr.get();
    out.fnr = fnr.get();
    out.precision = precision.get();
    out.kappa = kappa.get();
    if (total > 0.0) out.error = 1.0 - correct / total;
    return out;
}

RunScore score_run(std::vector<int> truth, std::vector<int> predicted,
                   const std::set<int>& classes) {
    RunScore run;
    run.counts = confusion(truth, predicted, classes);
    std::map<int, std::size_t> sizes;
    for (const auto& [label, c] : run.counts.per_class) {
        run.per_class[label] = class_indices(run.counts, label);
        sizes[label] = static_cast<std::size_t>(c.tp + c.fn);
    }
    run.aggregate = aggregate(run.per_class, sizes);
    run.truth = std::move(truth);
    run.predicted = std::move(predicted);
    return run;
}

namespace {

IndexStats stats_over_runs(const std::vector<RunScore>& runs,
                           std::optional<double> ClassIndices::*index) {
    IndexStats st;
    double sum = 0.0;
    for (const RunScore& r : runs) {
        if (const auto v = r.aggregate.*index) {
            sum += *v;
            ++st.n;
        }
    }
    if (st.n == 0) return st;
    const double mean = sum / static_cast<double>(st.n);
    st.mean = mean;
    if (st.n == 1) {
        st.stddev = 0.0;  // single run: no dispersion estimate, flagged by n
        return st;
    }
    double ss = 0.0;
    for (const RunScore& r : runs) {
        if (const auto v = r.aggregate.*index) {
            const double d = *v - mean;
            ss += d * d;
        }
    }
    st.stddev = std::sqrt(ss / static_cast<double>(st.n - 1));
    return st;
}

}  // namespace

EvaluationReport summarize_runs(std::vector<RunScore> runs) {
    if (runs.empty()) throw std::invalid_argument("no runs to summarize");
    EvaluationReport report;
    report.summary.runs = runs.size();
    report.summary.error = stats_over_runs(runs, &ClassIndices::error);
    report.summary.tpr = stats_over_runs(runs, &ClassIndices::tpr);
    report.summary.tnr = stats_over_runs(runs, &ClassIndices::tnr);
    report.summary.fpr = stats_over_runs(runs, &ClassIndices::fpr);
    report.summary.fnr = stats_over_runs(runs, &ClassIndices::fnr);
    report.summary.precision = stats_over_runs(runs, &ClassIndices::precision);
    report.summary.kappa = stats_over_runs(runs, &ClassIndices::kappa);
    report.runs = std::move(runs);
    return report;
}

}  // namespace qnmc

#include "dctfuse/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "dctfuse/quality.hpp"

namespace dctfuse {

std::string metric_name(FusionMetric metric) {
    switch (metric) {
        case FusionMetric::kEol: return "eol";
        case FusionMetric::kVol: return "vol";
        case FusionMetric::kVariance: return "variance";
        case FusionMetric::kAverage: return "average";
    }
    throw std::invalid_argument("metric_name: unknown metric");
}

std::vector<FusionConfig> benchmark_method_grid() {
    std::vector<FusionConfig> grid;
    for (const FusionMetric metric : {FusionMetric::kEol, FusionMetric::kVol,
                                      FusionMetric::kVariance, FusionMetric::kAverage}) {
        for (const bool cv : {false, true}) {
            FusionConfig cfg;
            cfg.metric = metric;
            cfg.cv_enabled = cv;
            grid.push_back(cfg);
        }
    }
    return grid;
}

std::vector<MethodScore> run_benchmark(const std::vector<MultiFocusPair>& pairs,
                                       const std::vector<FusionConfig>& methods) {
    if (pairs.empty())
        throw std::invalid_argument("run_benchmark: no pairs");

    std::vector<MethodScore> rows;
    rows.reserve(methods.size());
    for (const FusionConfig& cfg : methods) {
        MethodScore row;
        row.method = metric_name(cfg.metric);
        row.cv = cfg.cv_enabled;
        row.pairs = static_cast<int>(pairs.size());
        for (const MultiFocusPair& pair : pairs) {
            const FusionResult fused = fuse({pair.left_blurred, pair.right_blurred}, cfg);
            row.pair_ssim.push_back(ssim(pair.source, fused.image));
            row.pair_mse.push_back(mse(pair.source, fused.image));
        }
        for (const double s : row.pair_ssim) row.avg_ssim += s;
        for (const double m : row.pair_mse) row.avg_mse += m;
        row.avg_ssim /= static_cast<double>(pairs.size());
        row.avg_mse /= static_cast<double>(pairs.size());
        rows.push_back(std::move(row));
    }

    std::sort(rows.begin(), rows.end(), [](const MethodScore& a, const MethodScore& b) {
        if (a.method != b.method) return a.method < b.method;
        return a.cv < b.cv;
    });
    return rows;
}

std::string benchmark_csv(const std::vector<MethodScore>& rows) {
    std::string out = "method,cv,avg_ssim,avg_mse,pairs\n";
    char line[128];
    for (const MethodScore& row : rows) {
        std::snprintf(line, sizeof(line), "%s,%s,%.6g,%.6g,%d\n", row.method.c_str(),
                      row.cv ? "on" : "off", row.avg_ssim, row.avg_mse, row.pairs);
        out += line;
    }
    return out;
}

}  // namespace dctfuse

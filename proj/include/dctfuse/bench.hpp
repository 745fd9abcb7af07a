#pragma once

#include <string>
#include <vector>

#include "dctfuse/blur.hpp"
#include "dctfuse/fusion.hpp"

namespace dctfuse {

// Averaged quality of one fusion configuration across a pair set.
struct MethodScore {
    std::string method;  // "average", "eol", "variance", "vol"
    bool cv = false;
    double avg_ssim = 0.0;
    double avg_mse = 0.0;
    int pairs = 0;
    std::vector<double> pair_ssim;
    std::vector<double> pair_mse;
};

std::string metric_name(FusionMetric metric);

// All four metrics crossed with CV off/on: eight configurations.
std::vector<FusionConfig> benchmark_method_grid();

// Fuse every pair with every configuration and score against the
// unblurred source. Rows come back sorted by (method name, cv).
std::vector<MethodScore> run_benchmark(const std::vector<MultiFocusPair>& pairs,
                                       const std::vector<FusionConfig>& methods);

// CSV with header method,cv,avg_ssim,avg_mse,pairs; floats printed with
// six significant digits.
std::string benchmark_csv(const std::vector<MethodScore>& rows);

}  // namespace dctfuse

#include "dctfuse/selfcheck.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "dctfuse/dct.hpp"
#include "dctfuse/focus.hpp"
#include "dctfuse/laplacian.hpp"

namespace dctfuse {

namespace {

constexpr double kExactTol = 1e-9;

double rel_dev(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

SelfCheckReport run_selfcheck(const SelfCheckOptions& options) {
    SelfCheckReport report;
    report.blocks = options.blocks;

    const DctBasis basis = make_dct_basis();
    const OperatorSet ops = make_operator_set(basis);
    std::mt19937_64 rng(options.seed);

    auto note_failure = [&](const char* identity, int index) {
        if (report.failed_identity.empty()) {
            report.failed_identity = identity;
            report.failed_index = index;
        }
    };

    for (int i = 0; i < options.blocks; ++i) {
        SpatialBlock b;
        for (int r = 0; r < Mat8::kN; ++r)
            for (int c = 0; c < Mat8::kN; ++c)
                b.values(r, c) = static_cast<double>(rng() % 256);

        const CoeffBlock B = dct_forward(b, basis);

        const double eol_dev = rel_dev(eol_dct(B, ops).value, eol_spatial(b).value);
        report.max_eol_dev = std::max(report.max_eol_dev, eol_dev);
        if (eol_dev > options.tol) note_failure("eol", i);

        const double vol_dev = rel_dev(vol_dct(B, ops).value, vol_spatial(b).value);
        report.max_vol_dev = std::max(report.max_vol_dev, vol_dev);
        if (vol_dev > options.tol) note_failure("vol", i);

        // Spatial variance straight from the pixel field.
        double mean = 0.0;
        for (int r = 0; r < Mat8::kN; ++r)
            for (int c = 0; c < Mat8::kN; ++c) mean += b.values(r, c);
        mean /= 64.0;
        const double spatial_var = frobenius_trace(b.values) / 64.0 - mean * mean;
        const double var_dev = rel_dev(variance_dct(B).value, spatial_var);
        report.max_variance_dev = std::max(report.max_variance_dev, var_dev);
        if (var_dev > options.tol) note_failure("variance", i);

        const double parseval_dev =
            rel_dev(frobenius_trace(B.coeffs), frobenius_trace(b.values));
        report.max_parseval_dev = std::max(report.max_parseval_dev, parseval_dev);
        if (parseval_dev > kExactTol) note_failure("parseval", i);

        const SpatialBlock rt = dct_inverse(B, basis);
        const double rt_err = max_abs_diff(rt.values, b.values);
        report.max_roundtrip_err = std::max(report.max_roundtrip_err, rt_err);
        if (rt_err > kExactTol) note_failure("roundtrip", i);

        // Spatial-path Laplacian pushed through the transform must match
        // the coefficient-path Laplacian.
        const CoeffBlock lap_via_spatial =
            dct_forward(SpatialBlock{laplacian_spatial(b)}, basis);
        const double lift_err =
            max_abs_diff(lap_via_spatial.coeffs, laplacian_dct(B, ops).coeffs);
        report.max_lift_err = std::max(report.max_lift_err, lift_err);
        if (lift_err > kExactTol) note_failure("operator-lift", i);
    }

    report.passed = report.failed_identity.empty();
    return report;
}

std::string describe(const SelfCheckReport& report) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "blocks checked      : %d\n"
                  "max eol deviation   : %.3e (relative)\n"
                  "max vol deviation   : %.3e (relative)\n"
                  "max var deviation   : %.3e (relative)\n"
                  "max parseval dev    : %.3e (relative)\n"
                  "max roundtrip error : %.3e (per entry)\n"
                  "max lift error      : %.3e (per entry)\n",
                  report.blocks, report.max_eol_dev, report.max_vol_dev,
                  report.max_variance_dev, report.max_parseval_dev,
                  report.max_roundtrip_err, report.max_lift_err);
    std::string out = buf;
    if (!report.passed) {
        std::snprintf(buf, sizeof(buf), "FAILED: identity '%s' at block index %d\n",
                      report.failed_identity.c_str(), report.failed_index);
        out += buf;
    }
    return out;
}

}  // namespace dctfuse

#pragma once

#include <cstdint>
#include <string>

namespace dctfuse {

struct SelfCheckOptions {
    int blocks = 10000;
    std::uint64_t seed = 42;
    // Relative tolerance for the DCT-vs-spatial focus measure identities.
    double tol = 1e-6;
};

struct SelfCheckReport {
    bool passed = false;
    int blocks = 0;
    // Relative deviations, denominator max(1, |spatial value|).
    double max_eol_dev = 0.0;
    double max_vol_dev = 0.0;
    double max_variance_dev = 0.0;
    double max_parseval_dev = 0.0;
    // Absolute per-entry errors.
    double max_roundtrip_err = 0.0;
    double max_lift_err = 0.0;
    // First failure, if any.
    std::string failed_identity;
    int failed_index = -1;
};

// Runs every cross-domain identity on seeded random pixel blocks
// (uniform integers 0..255): EOL, VOL and variance DCT-vs-spatial within
// tol relative; Parseval within 1e-9 relative; round trip and operator
// lift within 1e-9 per entry.
SelfCheckReport run_selfcheck(const SelfCheckOptions& options);

// Human-readable multi-line summary, one line per identity.
std::string describe(const SelfCheckReport& report);

}  // namespace dctfuse

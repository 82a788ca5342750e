#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "twobridge/arith.hpp"

namespace twobridge {

struct CensusOptions {
    std::int64_t max_alpha = 99;
    int jobs = 1;
    // Seminorm laws are exercised on the lattice square |p|,|q| <= grid.
    std::int64_t seminorm_grid = 20;
};

struct CensusViolation {
    Fraction knot;
    std::string invariant;
    std::string detail;
};

struct CensusReport {
    std::int64_t knots = 0;
    std::int64_t surfaces = 0;
    std::int64_t actions = 0;
    std::vector<CensusViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Verifies, for every knot class with odd alpha <= max_alpha:
///   - equality of the three weight computations and the action count,
///     with the reflection pairing free of stray fixed points;
///   - agreement of the smoothing-generated expansion set with the
///     brute-force depth-first enumeration;
///   - orientable surfaces at boundary slope 0, exactly one per knot
///     (non-orientable slope-0 surfaces exist and are not flagged);
///   - mirror knots negate the slope multiset and keep the weight multiset;
///   - inverse representatives keep both multisets;
///   - seminorm homogeneity and triangle inequality on the sample grid.
/// One canonical representative per class is checked; the mirror and the
/// inverse are derived from it on the fly.
CensusReport run_census(const CensusOptions& options);

/// Runs every per-knot check against one knot fraction, appending findings.
void check_knot(const Fraction& knot, const CensusOptions& options, CensusReport& report);

void print_report(const CensusReport& report, std::ostream& out);

}  // namespace twobridge

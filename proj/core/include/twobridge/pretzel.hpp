#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twobridge/arith.hpp"

namespace twobridge {

enum class PretzelSurfaceType { TypeII, TypeIII };

/// One row of the conjectural weight table for (p,q,r) pretzel knots.
/// These values are conjectural and every record says so; slopes are known
/// only for (3,5,7).
struct PretzelSurfaceRecord {
    PretzelSurfaceType surface_type = PretzelSurfaceType::TypeIII;
    std::string weight_formula_id;
    Int weight;
    std::optional<Int> slope;
    bool conjectural = true;
};

/// The nine records, five Type III then four Type II, in the conjecture's
/// listed order. Requires p, q, r odd and > 1 (throws DomainError).
std::vector<PretzelSurfaceRecord> pretzel_surface_table(const Int& p, const Int& q, const Int& r);

}  // namespace twobridge

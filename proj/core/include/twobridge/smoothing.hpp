#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/arith.hpp"

namespace twobridge {

/// A choice of smoothing per twist of the alternating diagram:
/// 0 = horizontal, 1 = vertical. Positions outside [1,k] read as the
/// implicit horizontal sentinels.
struct Smoothing {
    std::vector<std::uint8_t> eps;

    Smoothing() = default;
    explicit Smoothing(std::vector<std::uint8_t> bits);

    std::size_t size() const { return eps.size(); }

    /// 1-based access with sentinel values: at(0) == at(k+1) == 0.
    int at(std::size_t i) const {
        if (i == 0 || i > eps.size()) return 0;
        return eps[i - 1];
    }

    /// Parses a bitstring such as "0100".
    static Smoothing parse(std::string_view bits);
    std::string str() const;

    friend bool operator==(const Smoothing& a, const Smoothing& b) { return a.eps == b.eps; }
    friend bool operator!=(const Smoothing& a, const Smoothing& b) { return !(a == b); }
    friend bool operator<(const Smoothing& a, const Smoothing& b) { return a.eps < b.eps; }
};

/// True iff s satisfies both admissibility conditions over the positive
/// expansion n: no two adjacent vertical twists, and every single-crossing
/// twist smoothed horizontally has a vertical neighbor.
/// Throws LengthMismatch when sizes differ, DomainError when n is not a
/// positive expansion.
bool is_allowable(const Expansion& n, const Smoothing& s);

/// All allowable smoothings of n, in lexicographic order with 0 < 1.
std::vector<Smoothing> enumerate_allowable(const Expansion& n);

/// The expansion generated from n by the smoothing s:
///   1. each vertical twist's term n_j becomes the alternating run
///      -2, 2, -2, ... of length n_j - 1 (deleted when n_j = 1);
///   2. each neighbor of a vertical twist gains +1;
///   3. the group replacing n_i is scaled by prod_{j<i, eps_j=1} (-1)^{n_j}.
/// Every resulting term has |m_i| >= 2. Throws NotAllowable.
Expansion generate_expansion(const Expansion& n, const Smoothing& s);

}  // namespace twobridge

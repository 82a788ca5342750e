#include "twobridge/smoothing.hpp"

#include <utility>

namespace twobridge {

Smoothing::Smoothing(std::vector<std::uint8_t> bits) : eps(std::move(bits)) {
    for (auto b : eps) {
        if (b > 1) throw DomainError("smoothing bits must be 0 or 1");
    }
}

Smoothing Smoothing::parse(std::string_view bits) {
    std::vector<std::uint8_t> out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c == '0') out.push_back(0);
        else if (c == '1') out.push_back(1);
        else throw DomainError("bad smoothing bitstring \"" + std::string(bits) + "\"");
    }
    return Smoothing(std::move(out));
}

std::string Smoothing::str() const {
    std::string out;
    out.reserve(eps.size());
    for (auto b : eps) out += b ? '1' : '0';
    return out;
}

namespace {

void require_positive(const Expansion& n) {
    if (!n.is_positive())
        throw DomainError("expected a positive expansion with final term >= 2, got " + n.str());
}

}  // namespace

bool is_allowable(const Expansion& n, const Smoothing& s) {
    require_positive(n);
    const std::size_t k = n.length();
    if (s.size() != k)
        throw LengthMismatch("smoothing has " + std::to_string(s.size()) + " bits, expansion has " +
                             std::to_string(k) + " twists");
    for (std::size_t i = 1; i <= k; ++i) {
        if (s.at(i) == 1 && s.at(i + 1) == 1) return false;
        if (n.terms[i - 1] == 1 && s.at(i) == 0 && s.at(i - 1) == 0 && s.at(i + 1) == 0)
            return false;
    }
    return true;
}

namespace {

// Backtracking enumeration, bit by bit. Choosing eps_i settles the
// single-crossing condition for twist i-1, so invalid prefixes are cut as
// early as possible and the cost stays proportional to the output.
void allowable_dfs(const Expansion& n, std::vector<std::uint8_t>& bits, std::size_t i,
                   std::vector<Smoothing>& out) {
    const std::size_t k = n.length();
    auto bit = [&](std::size_t pos) -> int {  // 1-based with horizontal sentinels
        if (pos == 0 || pos > i) return 0;
        return bits[pos - 1];
    };
    if (i == k) {
        if (!(n.terms[k - 1] == 1 && bit(k) == 0 && bit(k - 1) == 0))
            out.push_back(Smoothing(bits));
        return;
    }
    for (std::uint8_t choice = 0; choice <= 1; ++choice) {
        if (choice == 1 && i >= 1 && bit(i) == 1) continue;
        if (choice == 0 && i >= 1 && n.terms[i - 1] == 1 && bit(i) == 0 && bit(i - 1) == 0)
            continue;
        bits[i] = choice;
        allowable_dfs(n, bits, i + 1, out);
    }
    bits[i] = 0;
}

}  // namespace

std::vector<Smoothing> enumerate_allowable(const Expansion& n) {
    require_positive(n);
    std::vector<std::uint8_t> bits(n.length(), 0);
    std::vector<Smoothing> out;
    allowable_dfs(n, bits, 0, out);
    return out;
}

Expansion generate_expansion(const Expansion& n, const Smoothing& s) {
    if (!is_allowable(n, s))
        throw NotAllowable("smoothing " + s.str() + " is not allowable for " + n.str());
    const std::size_t k = n.length();
    std::vector<Int> result;
    Int sign = 1;  // running prod_{j<i, eps_j=1} (-1)^{n_j}
    for (std::size_t i = 1; i <= k; ++i) {
        const Int& ni = n.terms[i - 1];
        if (s.at(i) == 1) {
            // Alternating -2, 2, ... of length n_i - 1, then the sign factor.
            Int flip = -1;
            for (Int c = 1; c < ni; ++c) {
                result.push_back(sign * flip * 2);
                flip = -flip;
            }
            if (ni % 2 != 0) sign = -sign;
        } else {
            result.push_back(sign * (ni + s.at(i - 1) + s.at(i + 1)));
        }
    }
    return Expansion(std::move(result));
}

}  // namespace twobridge

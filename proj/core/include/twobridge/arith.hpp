#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/errors.hpp"

namespace twobridge {

using Int = boost::multiprecision::cpp_int;

/// Reduced rational with positive denominator. All arithmetic is exact.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}

    /// Reduces to lowest terms and normalizes the denominator sign.
    /// Throws DivisionByZero if den == 0.
    Fraction(Int num, Int den);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    /// Throws DivisionByZero on 0.
    Fraction reciprocal() const;

    Fraction operator-() const;

    /// Parses "beta/alpha", e.g. "82/429" or "-3/5".
    static Fraction parse(std::string_view text);
    std::string str() const;

    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a, const Fraction& b);
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

private:
    Int num_;
    Int den_;
};

/// Continued fraction r0 + 1/(b1 + 1/(b2 + ... + 1/bj)).
/// Terms are always nonzero; an empty term list denotes the integer r0.
struct Expansion {
    Int integer_part;
    std::vector<Int> terms;

    Expansion() : integer_part(0) {}
    explicit Expansion(std::vector<Int> t, Int r0 = 0);

    std::size_t length() const { return terms.size(); }

    /// True when this is a positive expansion [n1,...,nk]: r0 = 0, every
    /// term >= 1, and the final term >= 2.
    bool is_positive() const;

    /// Parses "[5,4,3,6]" or "r0+[...]", e.g. "1+[-2,2]".
    static Expansion parse(std::string_view text);
    std::string str() const;

    friend bool operator==(const Expansion& a, const Expansion& b) {
        return a.integer_part == b.integer_part && a.terms == b.terms;
    }
    friend bool operator!=(const Expansion& a, const Expansion& b) { return !(a == b); }
    friend bool operator<(const Expansion& a, const Expansion& b);
};

/// Exact value of the nested fraction. Throws DivisionByZero if an
/// intermediate denominator vanishes. An empty term list yields r0.
Fraction cf_value(const Expansion& e);

/// The unique expansion of f in (0,1) with all terms positive and the final
/// term >= 2. Throws DomainError outside (0,1).
Expansion positive_expansion(const Fraction& f);

/// The unique expansion of f with every term even (and hence |term| >= 2).
/// Requires f in (-1,1), f != 0, and an even numerator; throws DomainError
/// otherwise (an odd numerator admits no all-even expansion).
Expansion even_expansion(const Fraction& f);

/// True iff the two values differ by an integer. Requires equal
/// denominators (throws DomainError), which both fractions carry positive.
bool same_knot_class(const Fraction& a, const Fraction& b);

/// Every expansion [b1,...,bj] with all |bi| >= 2, j <= max_len, whose value
/// is congruent to f mod 1 (the bracket value lands on f or f-1). Found by
/// depth-first search with exact interval pruning on the residual tail.
/// Returned expansions carry integer_part = 0.
std::set<Expansion> enumerate_ht_expansions(const Fraction& f, std::size_t max_len);

/// Default DFS bound for enumerate_ht_expansions: sum(n_i) + k over the
/// positive expansion. Generated expansions are never longer.
std::size_t default_search_depth(const Expansion& positive);

/// Reduces an arbitrary representative to the canonical knot form
/// 0 < beta < alpha with alpha odd and >= 3. Throws DomainError if the
/// reduced denominator is even or < 3.
Fraction normalize_knot_fraction(const Fraction& f);

/// The mirror knot fraction (alpha - beta)/alpha, in canonical form.
Fraction mirror_fraction(const Fraction& f);

/// The partner representative beta^{-1} mod alpha over the same alpha.
Fraction inverse_representative(const Fraction& f);

/// Canonical representative of the knot class: beta' = min(beta, beta^{-1}).
Fraction canonical_class_representative(const Fraction& f);

}  // namespace twobridge
